#include <doctest.h>

#include <cmath>
#include <numbers>

#include "jct/params.hpp"

using namespace jct;
constexpr double pi = std::numbers::pi;

TEST_CASE("make_params derives g and eta") {
    auto p = make_params(1000.0, 1.2, 0.05, pi);
    CHECK(p.g() == doctest::Approx(37.94733192202055).epsilon(1e-14));
    CHECK(p.eta() == 1000.0);
    CHECK(p.g1() == doctest::Approx(p.g() / std::sqrt(p.omega0())).epsilon(1e-15));
}

TEST_CASE("zero coupling is valid") {
    auto p = make_params(1000.0, 0.0, 0.05, 0.0);
    CHECK(p.g() == 0.0);
}

TEST_CASE("theta wraps into (-pi, pi]") {
    CHECK(make_params(1000.0, 1.0, 0.05, 3.0 * pi).theta() == doctest::Approx(pi).epsilon(1e-14));
    CHECK(make_params(1000.0, 1.0, 0.05, -pi).theta() == doctest::Approx(pi).epsilon(1e-14));
    CHECK(make_params(1000.0, 1.0, 0.05, 2.0 * pi).theta() == doctest::Approx(0.0).scale(1.0));
    // idempotent: re-wrapping changes nothing, bit for bit
    for (double t : {-3.1, -1.0, 0.0, 0.5, pi}) {
        double w = wrap_angle(t);
        CHECK(wrap_angle(w) == w);
    }
}

TEST_CASE("validation errors name the field") {
    CHECK_THROWS_WITH_AS(make_params(-1.0, 1.0, 0.05, 0.0),
                         doctest::Contains("omega0"), error);
    CHECK_THROWS_WITH_AS(make_params(1000.0, -0.1, 0.05, 0.0),
                         doctest::Contains("g1"), error);
    CHECK_THROWS_WITH_AS(make_params(1000.0, 1.0, -0.05, 0.0),
                         doctest::Contains("j"), error);
    CHECK_THROWS_AS(make_params(1000.0, 1.0, 0.05, std::nan("")), error);
}

TEST_CASE("delta_of") {
    auto p = make_params(1000.0, 1.2, 0.05, pi);

    SUBCASE("zero displacement gives omega0") {
        CHECK(delta_of(0.0, p).delta == doctest::Approx(1000.0).epsilon(1e-15));
    }
    SUBCASE("USP closed-form value gives g^2/(omega_c + 2J cos theta)") {
        double a = std::sqrt(1625.0 / 6.0); // |alpha|^2 = 1625/6 at these parameters
        CHECK(delta_of(a, p).delta == doctest::Approx(1600.0).epsilon(1e-13));
    }
    SUBCASE("depends on |alpha|^2 only") {
        double a = 7.25;
        CHECK(delta_of(cplx(0.0, a), p).delta == doctest::Approx(delta_of(a, p).delta).epsilon(1e-15));
        CHECK(delta_of(std::polar(a, 1.1), p).delta ==
              doctest::Approx(delta_of(a, p).delta).epsilon(1e-14));
        CHECK(delta_of(a, p).delta >= p.omega0());
    }
}

TEST_CASE("amplitudes cyclic indexing and gauge fixing") {
    Amplitudes a{{cplx(1.0, 0.0), cplx(0.0, 2.0), cplx(3.0, 0.0)}};
    CHECK(a.site(3) == a[0]);
    CHECK(a.site(-1) == a[2]);
    CHECK(a.site(4) == a[1]);

    Amplitudes rotated = std::polar(1.0, 0.7) * a;
    Amplitudes fixed = gauge_fix(rotated);
    CHECK(fixed[2].imag() == 0.0);
    CHECK(fixed[2].real() == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(std::abs(fixed[0] - a[0]) < 1e-13);
    CHECK(std::abs(fixed[1] - a[1]) < 1e-13);

    CHECK(translate(a, 1)[0] == a[1]);
    CHECK(translate(a, 2)[0] == a[2]);
}
