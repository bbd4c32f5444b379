#include <doctest.h>

#include <cmath>
#include <numbers>

#include "jct/ed_oracle.hpp"
#include "jct/normal_phase.hpp"
#include "oracles.hpp"

using namespace jct;
constexpr double pi = std::numbers::pi;

TEST_CASE("basis enumeration and the dimension cap") {
    FockConfig cfg;
    cfg.n_max = 2;
    CHECK(make_basis(cfg).dim() == 27 * 8);
    cfg.sector = 0;
    CHECK(make_basis(cfg).dim() == 1);
    cfg.sector = 1;
    CHECK(make_basis(cfg).dim() == 6);

    FockConfig big;
    big.n_max = 13;
    CHECK_THROWS_AS(make_basis(big), error);
}

TEST_CASE("decoupled limit: spectrum is a sum of free energies") {
    auto p = make_params(1000.0, 0.0, 0.0, 0.0);
    FockConfig cfg;
    cfg.n_max = 1;
    EdResult r = ed_ground(p, cfg);
    CHECK(r.eigenvalues.front() == doctest::Approx(-1500.0).epsilon(1e-14));
    // first excited multiplet: one photon (or nothing cheaper at omega_c = 1)
    CHECK(r.eigenvalues[1] == doctest::Approx(-1499.0).epsilon(1e-13));
    CHECK(r.n_tot_expect == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("N_tot = 0 sector is the bare ground state") {
    auto p = make_params(1000.0, 0.5, 0.05, 0.7);
    FockConfig cfg;
    cfg.n_max = 2;
    cfg.sector = 0;
    EdResult r = ed_ground(p, cfg);
    CHECK(r.eigenvalues.size() == 1);
    CHECK(r.eigenvalues.front() == doctest::Approx(-1500.0).epsilon(1e-14));
}

TEST_CASE("H conserves N_tot on the truncated space") {
    for (double th : {0.0, 0.9, pi}) {
        auto p = make_params(1000.0, 0.8, 0.05, th);
        FockConfig cfg;
        cfg.n_max = 2;
        CHECK(commutator_norm(p, cfg) < 1e-10);
    }
}

TEST_CASE("full truncated H is block diagonal when sorted by N_tot") {
    auto p = make_params(1000.0, 0.8, 0.05, 0.4);
    FockConfig cfg;
    cfg.n_max = 2;
    FockBasis basis = make_basis(cfg);
    Eigen::MatrixXcd h = build_hamiltonian(p, basis);
    double off = 0.0;
    for (long i = 0; i < h.rows(); ++i)
        for (long j = 0; j < h.cols(); ++j)
            if (basis.n_tot(static_cast<size_t>(i)) != basis.n_tot(static_cast<size_t>(j)))
                off = std::max(off, std::abs(h(i, j)));
    CHECK(off < 1e-14);
    CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("NP ground state has zero displacement and current") {
    auto p = make_params(1000.0, 0.5, 0.05, 0.4);
    FockConfig cfg;
    cfg.n_max = 2;
    EdResult r = ed_ground(p, cfg);
    CHECK(r.eigenvalues.front() == doctest::Approx(-1500.0).epsilon(1e-12));
    for (const auto& a : r.a_expect) CHECK(std::abs(a) < 1e-10);
    CHECK(std::abs(r.current_expect) < 1e-10);
}

TEST_CASE("photon branch matches the effective dispersion at weak coupling") {
    auto p = make_params(1000.0, 0.5, 0.05, 0.0);
    auto ed = photon_branch_excitations(p, 2);
    std::array<double, 3> eff{};
    auto qs = momenta();
    for (size_t i = 0; i < 3; ++i) eff[i] = np_dispersion(p, qs[i]);
    std::sort(eff.begin(), eff.end());
    double rel = 0.0;
    for (size_t i = 0; i < 3; ++i) rel = std::max(rel, std::abs(ed[i] - eff[i]) / eff[i]);
    CHECK(rel < 1e-2);

    // eta scaling: an order of magnitude in eta buys an order in accuracy
    auto p4 = make_params(1e4, 0.5, 0.05, 0.0);
    auto ed4 = photon_branch_excitations(p4, 2);
    std::array<double, 3> eff4{};
    for (size_t i = 0; i < 3; ++i) eff4[i] = np_dispersion(p4, qs[i]);
    std::sort(eff4.begin(), eff4.end());
    double rel4 = 0.0;
    for (size_t i = 0; i < 3; ++i) rel4 = std::max(rel4, std::abs(ed4[i] - eff4[i]) / eff4[i]);
    CHECK(rel4 < 1e-3);
    CHECK(rel4 < rel);
}

TEST_CASE("brute force agrees with the closed forms") {
    BruteForceOptions bf;
    bf.n_samples = 40000;
    SUBCASE("uniform phase at theta = pi") {
        auto p = make_params(1000.0, 1.2, 0.05, pi);
        MeanFieldSolution s = brute_force_minimize(p, bf);
        CHECK(s.classical_energy == doctest::Approx(-1668.75).epsilon(1e-10));
    }
    SUBCASE("plane wave at theta = pi/2") {
        auto p = make_params(1000.0, 1.2, 0.05, 0.5 * pi);
        MeanFieldSolution s = brute_force_minimize(p, bf);
        CHECK(s.classical_energy ==
              doctest::Approx(oracle::plane_wave(p, -2.0 * pi / 3.0).e_cl).epsilon(1e-10));
    }
    SUBCASE("normal phase converges to zero") {
        auto p = make_params(1000.0, 0.5, 0.05, 0.3);
        MeanFieldSolution s = brute_force_minimize(p, bf);
        CHECK(s.amplitudes.max_abs() == 0.0);
        CHECK(s.phase == PhaseLabel::NP);
    }
}

TEST_CASE("finite differences: stationarity and convergence order") {
    auto p = make_params(1000.0, 1.2, 0.05, pi);
    Amplitudes usp = usp_amplitude(p, +1);
    CHECK(finite_diff_gradient(usp, p, 1e-5 * std::sqrt(p.eta())).max_abs() < 1e-5);

    std::mt19937_64 rng(77);
    Amplitudes a = oracle::random_amplitudes(rng, 15.0);
    Amplitudes ex = gradient(a, p);
    const double h = 1e-2 * std::sqrt(p.eta());
    auto mismatch = [&](double step) {
        Amplitudes fd = finite_diff_gradient(a, p, step);
        double m = 0.0;
        for (int n = 0; n < 3; ++n) m = std::max(m, std::abs(fd[n] - ex[n]));
        return m;
    };
    double ratio = mismatch(h) / mismatch(0.5 * h);
    CHECK(ratio > 3.0);
    CHECK(ratio < 5.0);
    CHECK_THROWS_AS(finite_diff_gradient(a, p, 0.0), error);
}
