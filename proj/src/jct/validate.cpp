#include "jct/validate.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "jct/ed_oracle.hpp"
#include "jct/normal_phase.hpp"
#include "jct/observables.hpp"

namespace jct {

namespace {

void add_check(Table& t, const std::string& name, double measured, double threshold, bool pass) {
    t.row_labels.push_back(name);
    t.rows.push_back({measured, threshold, pass ? 1.0 : 0.0});
}

double photon_branch_rel_error(const SystemParams& weak, int n_max) {
    auto ed = photon_branch_excitations(weak, n_max);
    std::array<double, 3> eff{};
    auto qs = momenta();
    for (size_t i = 0; i < 3; ++i) eff[i] = np_dispersion(weak, qs[i]);
    std::sort(eff.begin(), eff.end());
    double rel = 0.0;
    for (size_t i = 0; i < 3; ++i) rel = std::max(rel, std::abs(ed[i] - eff[i]) / std::abs(eff[i]));
    return rel;
}

} // namespace

Table validate_suite(const SystemParams& base, const SolverOptions& opts, int n_max,
                     std::optional<int> sector) {
    Table t;
    t.columns = {"measured", "threshold", "pass"};
    const double w0 = base.omega0();
    const double root_eta = std::sqrt(base.eta());

    // [H, N_tot] on the truncated space
    FockConfig cfg;
    cfg.n_max = n_max;
    double comm = commutator_norm(base, cfg);
    add_check(t, "commutator_norm", comm, 1e-10, comm < 1e-10);

    // exact N_tot block structure
    {
        FockBasis basis = make_basis(cfg);
        Eigen::MatrixXcd h = build_hamiltonian(base, basis);
        double off = 0.0;
        for (long i = 0; i < h.rows(); ++i)
            for (long j = 0; j < h.cols(); ++j)
                if (basis.n_tot(static_cast<size_t>(i)) != basis.n_tot(static_cast<size_t>(j)))
                    off = std::max(off, std::abs(h(i, j)));
        add_check(t, "ntot_block_offdiag", off, 1e-14, off < 1e-14);
    }

    // weak-coupling photon branch vs the effective dispersion, and its
    // improvement with eta
    {
        SystemParams weak(base.omega0(), 0.5, base.j(), base.theta());
        double rel = photon_branch_rel_error(weak, n_max);
        add_check(t, "np_photon_branch", rel, 1e-2, rel < 1e-2);
        SystemParams weak4(1e4, 0.5, base.j(), base.theta());
        double rel4 = photon_branch_rel_error(weak4, n_max);
        add_check(t, "np_photon_branch_eta1e4", rel4, 1e-3, rel4 < 1e-3);
    }

    // ED ground-state expectations in the NP
    {
        SystemParams weak(base.omega0(), 0.5, base.j(), base.theta());
        FockConfig c2 = cfg;
        c2.sector = sector;
        EdResult r = ed_ground(weak, c2);
        double m = std::abs(r.current_expect);
        for (const auto& a : r.a_expect) m = std::max(m, std::abs(a));
        add_check(t, "ed_np_ground", m, 1e-10, m < 1e-10);
    }

    // finite-difference gradient agreement and convergence order
    {
        std::mt19937_64 rng(opts.seed + 17);
        auto uniform = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
        double rel = 0.0;
        double mm_h = 0.0, mm_h2 = 0.0;
        const double h = 1e-2 * root_eta;
        for (int k = 0; k < 20; ++k) {
            Amplitudes a;
            for (int n = 0; n < 3; ++n)
                a[n] = std::polar(root_eta * (0.2 + uniform()), 2.0 * std::numbers::pi * uniform());
            Amplitudes ex = gradient(a, base);
            Amplitudes fd = finite_diff_gradient(a, base, 1e-5 * root_eta);
            double scale = std::max(ex.max_abs(), 1e-12);
            for (int n = 0; n < 3; ++n) rel = std::max(rel, std::abs(fd[n] - ex[n]) / scale);
            Amplitudes f1 = finite_diff_gradient(a, base, h);
            Amplitudes f2 = finite_diff_gradient(a, base, 0.5 * h);
            for (int n = 0; n < 3; ++n) {
                mm_h += std::norm(f1[n] - ex[n]);
                mm_h2 += std::norm(f2[n] - ex[n]);
            }
        }
        add_check(t, "fd_gradient_rel", rel, 1e-6, rel < 1e-6);
        // second-order accuracy: halving the step shrinks the mismatch ~4x
        double ratio = std::sqrt(mm_h / std::max(mm_h2, 1e-300));
        add_check(t, "fd_order_ratio", ratio, 4.0, ratio > 3.0 && ratio < 5.0);
    }

    // uniform closed form is stationary where it exists
    {
        SystemParams up = base.with_theta(std::numbers::pi).with_g1(std::max(base.g1(), 1.2));
        double res = max_residual(usp_amplitude(up, +1), up);
        add_check(t, "usp_stationarity", res, 1e-12 * w0, res < 1e-12 * w0);
    }

    // global search agreement with the dense random oracle
    {
        MeanFieldSolution s = solve(base, opts);
        BruteForceOptions bf;
        bf.seed = opts.seed + 101;
        MeanFieldSolution b = brute_force_minimize(base, bf);
        double de = std::abs(s.classical_energy - b.classical_energy);
        add_check(t, "brute_vs_solve", de, 1e-9 * w0, de < 1e-9 * w0);
    }

    // physical results are seed independent
    {
        SolverOptions o7 = opts, o8 = opts;
        o7.seed = 7;
        o8.seed = 8;
        MeanFieldSolution a = solve(base, o7), b = solve(base, o8);
        std::array<double, 3> ma{}, mb{};
        for (int n = 0; n < 3; ++n) {
            ma[static_cast<size_t>(n)] = std::abs(a.amplitudes[n]);
            mb[static_cast<size_t>(n)] = std::abs(b.amplitudes[n]);
        }
        std::sort(ma.begin(), ma.end());
        std::sort(mb.begin(), mb.end());
        double dev = std::abs(a.classical_energy - b.classical_energy) / (1e-9 * w0);
        for (size_t n = 0; n < 3; ++n)
            dev = std::max(dev, std::abs(ma[n] - mb[n]) / (1e-9 * root_eta));
        dev = std::max(dev, std::abs(std::abs(current(a.amplitudes, base)) -
                                     std::abs(current(b.amplitudes, base))) /
                                1e-9);
        add_check(t, "seed_independence", dev, 1.0, dev < 1.0);
    }

    return t;
}

bool all_checks_pass(const Table& report) {
    for (const auto& r : report.rows)
        if (r.at(2) == 0.0) return false;
    return true;
}

} // namespace jct
