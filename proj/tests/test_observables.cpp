#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "jct/meanfield.hpp"
#include "jct/observables.hpp"
#include "oracles.hpp"

using namespace jct;
constexpr double pi = std::numbers::pi;

namespace {
const SystemParams base = make_params(1000.0, 1.2, 0.05, 0.5 * pi);
}

TEST_CASE("current vanishes for real and for uniform displacements") {
    CHECK(current(Amplitudes{{cplx(1.5), cplx(-0.3), cplx(4.0)}}, base) == 0.0);
    Amplitudes uniform{{std::polar(3.0, 0.8), std::polar(3.0, 0.8), std::polar(3.0, 0.8)}};
    CHECK(std::abs(current(uniform, base)) < 1e-15);
}

TEST_CASE("plane-wave current and chirality match the closed form") {
    auto pw = oracle::plane_wave(base, -2.0 * pi / 3.0);
    Amplitudes a = plane_wave_amplitude(base, -2.0 * pi / 3.0, +1);
    CHECK(current(a, base) == doctest::Approx(pw.current_scaled).epsilon(1e-12));
    CHECK(chirality(a, base) == doctest::Approx(pw.chirality_scaled).epsilon(1e-12));
    // frozen oracle values at g1 = 1.2, theta = pi/2, eta = 1000, J = 0.05
    CHECK(pw.current_scaled == doctest::Approx(-1.3400408264655281).epsilon(1e-12));
    CHECK(pw.chirality_scaled == doctest::Approx(-0.689828835878289).epsilon(1e-11));
}

TEST_CASE("chirality vanishes on real and uniform configurations") {
    CHECK(chirality(Amplitudes{{cplx(1.5), cplx(-0.3), cplx(4.0)}}, base) == 0.0);
    auto p_usp = make_params(1000.0, 1.2, 0.05, pi);
    CHECK(std::abs(chirality(usp_amplitude(p_usp, +1), p_usp)) < 1e-15);
}

TEST_CASE("chirality is a real contraction") {
    // recompute the Levi-Civita contraction independently and check the
    // imaginary residue before the real cast
    std::mt19937_64 rng(3);
    for (int k = 0; k < 50; ++k) {
        Amplitudes a = oracle::random_amplitudes(rng, 5.0);
        cplx sum = 0.0;
        const int perm[6][4] = {{0, 1, 2, 1}, {1, 2, 0, 1},  {2, 0, 1, 1},
                                {2, 1, 0, -1}, {0, 2, 1, -1}, {1, 0, 2, -1}};
        for (const auto& t : perm)
            sum += static_cast<double>(t[3]) * a[t[0]] * std::conj(a[t[1]]) *
                   (std::norm(a[t[2]]) - 0.5);
        cplx c = cplx(0.0, -2.0) * sum;
        CHECK(std::abs(c.imag()) < 1e-12 * std::max(1.0, std::abs(c.real())));
        CHECK(chirality(a, base) == doctest::Approx(c.real() / 1e6).epsilon(1e-10));
    }
}

TEST_CASE("chiral transform flips the chirality sign") {
    Amplitudes a{{cplx(1.0), cplx(0.0, 2.0), cplx(3.0)}};
    Amplitudes r = chiral_transform(a);
    CHECK(r[0] == a[2]);
    CHECK(r[1] == a[1]);
    CHECK(r[2] == a[0]);
    CHECK(chiral_transform(chiral_transform(a)) == a);

    std::mt19937_64 rng(7);
    for (int k = 0; k < 50; ++k) {
        Amplitudes x = oracle::random_amplitudes(rng, 8.0);
        CHECK(chirality(chiral_transform(x), base) ==
              doctest::Approx(-chirality(x, base)).epsilon(1e-10).scale(1e-6));
        CHECK(current(chiral_transform(x), base) ==
              doctest::Approx(-current(x, base)).epsilon(1e-10).scale(1e-6));
    }
}

TEST_CASE("time reversal conjugates and flips theta, current and chirality") {
    std::mt19937_64 rng(9);
    for (int k = 0; k < 50; ++k) {
        Amplitudes x = oracle::random_amplitudes(rng, 8.0);
        auto [xr, pr] = time_reversal(x, base);
        CHECK(pr.theta() == doctest::Approx(-base.theta()).epsilon(1e-15));
        CHECK(current(xr, pr) == doctest::Approx(-current(x, base)).epsilon(1e-10).scale(1e-6));
        CHECK(chirality(xr, pr) == doctest::Approx(-chirality(x, base)).epsilon(1e-10).scale(1e-6));
    }
    // real configuration at theta = 0 is a fixed point
    auto p0 = base.with_theta(0.0);
    Amplitudes real_a{{cplx(2.0), cplx(2.0), cplx(-1.0)}};
    auto [ar, pr] = time_reversal(real_a, p0);
    CHECK(ar == real_a);
    CHECK(pr.theta() == 0.0);
}

TEST_CASE("current and chirality are U(1) invariant") {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 30; ++k) {
        Amplitudes x = oracle::random_amplitudes(rng, 8.0);
        cplx ph = std::polar(1.0, 2.0 * pi * static_cast<double>(rng() >> 11) * 0x1.0p-53);
        CHECK(current(ph * x, base) == doctest::Approx(current(x, base)).epsilon(1e-11).scale(1e-6));
        CHECK(chirality(ph * x, base) ==
              doctest::Approx(chirality(x, base)).epsilon(1e-11).scale(1e-6));
    }
}

TEST_CASE("order parameters are reported in the alpha_3-real gauge") {
    auto p = make_params(1000.0, 1.2, 0.05, pi);
    Amplitudes a = std::polar(1.0, 1.2) * usp_amplitude(p, +1);
    auto ops = order_parameters(a, p);
    CHECK(ops[2].imag() == 0.0);
    for (const auto& o : ops)
        CHECK(std::abs(o) == doctest::Approx(std::sqrt(1625.0 / 6.0 / 1000.0)).epsilon(1e-12));
    CHECK(ops[0].real() == doctest::Approx(0.5204164998665333).epsilon(1e-12));
}
