#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "jct/normal_phase.hpp"
#include "jct/phase_diagram.hpp"

using namespace jct;
constexpr double pi = std::numbers::pi;

namespace {
const SystemParams base = make_params(1000.0, 1.0, 0.05, 0.0);
}

TEST_CASE("3x3 grid reproduces the reference points") {
    SweepGrid g = sweep(base, {0.5, 1.0, 1.2}, {0.0, 0.5 * pi, pi});
    CHECK(g.failed_cells() == 0);
    for (size_t it = 0; it < 3; ++it) CHECK(g.cell(it, 0).phase == PhaseLabel::NP);
    CHECK(g.cell(2, 2).phase == PhaseLabel::USP);      // theta = pi, g1 = 1.2
    CHECK(g.cell(1, 2).phase == PhaseLabel::CFSP);     // theta = pi/2, g1 = 1.2
    CHECK(g.cell(0, 2).phase == PhaseLabel::CFSP);     // theta = 0: chiral ground state
    CHECK(g.cell(1, 2).current < -1.0);
}

TEST_CASE("single-point grid") {
    SweepGrid g = sweep(make_params(1000.0, 1.2, 0.05, pi), {1.2}, {pi});
    REQUIRE(g.cells.size() == 1);
    CHECK(g.cell(0, 0).phase == PhaseLabel::USP);
}

TEST_CASE("grid straddling theta_c = 2pi/3 at g1 = 1.2") {
    SweepGrid g = sweep(base, {1.2}, {2.0 * pi / 3.0 - 0.05, 2.0 * pi / 3.0 + 0.05});
    CHECK(g.cell(0, 0).phase == PhaseLabel::CFSP);
    CHECK(g.cell(1, 0).phase == PhaseLabel::USP);
}

TEST_CASE("mirror symmetry of cells in theta") {
    SweepGrid g = sweep(base, {1.1, 1.25}, {-0.5 * pi - 0.2, 0.5 * pi + 0.2});
    for (size_t ig = 0; ig < 2; ++ig) {
        CHECK(g.cell(0, ig).phase == g.cell(1, ig).phase);
        CHECK(g.cell(0, ig).current ==
              doctest::Approx(-g.cell(1, ig).current).epsilon(1e-8).scale(1.0));
        CHECK(g.cell(0, ig).e_g == doctest::Approx(g.cell(1, ig).e_g).epsilon(1e-10));
    }
}

TEST_CASE("NP boundary from a coarse sweep tracks the critical-coupling formula") {
    auto g1s = linspace(0.9, 1.05, 31);
    auto thetas = linspace(-3.0, 3.1, 13);
    SweepGrid g = sweep(base, g1s, thetas);
    const double step = g1s[1] - g1s[0];
    for (size_t it = 0; it < thetas.size(); ++it) {
        double boundary = g1s.back() + step;
        for (size_t ig = 0; ig < g1s.size(); ++ig) {
            if (g.cell(it, ig).phase != PhaseLabel::NP) {
                boundary = g1s[ig];
                break;
            }
        }
        double g1c = critical_coupling(base.with_theta(thetas[it]));
        CHECK(std::abs(boundary - g1c) <= step + 1e-12);
    }
}

TEST_CASE("warm start gives the same classification as the parallel path") {
    auto g1s = linspace(1.0, 1.25, 6);
    auto thetas = linspace(0.2, 2.8, 5);
    SweepOptions seq;
    seq.warm_start = true;
    SweepGrid a = sweep(base, g1s, thetas, {}, seq);
    SweepGrid b = sweep(base, g1s, thetas, {}, {});
    for (size_t i = 0; i < a.cells.size(); ++i) {
        CHECK(a.cells[i].phase == b.cells[i].phase);
        CHECK(a.cells[i].e_g == doctest::Approx(b.cells[i].e_g).epsilon(1e-10));
    }
}

TEST_CASE("boundary scans") {
    SUBCASE("theta_c at g1 = 1.2") {
        double tc = boundary_scan_theta(base, 1.2, 0.6 * pi, 0.75 * pi, 1e-5);
        CHECK(std::abs(tc - 2.0 * pi / 3.0) < 1e-4);
    }
    SUBCASE("no crossing in a pure-USP window") {
        CHECK_THROWS_AS(boundary_scan_theta(base, 1.2, 0.8 * pi, pi, 1e-4), error);
    }
    SUBCASE("NP -> USP crossing along g1 at theta = pi") {
        double gc = boundary_scan_g1(base.with_theta(pi), pi, 0.9, 1.0, 1e-6);
        CHECK(std::abs(gc - std::sqrt(0.9)) < 1e-4);
    }
    SUBCASE("invalid window") {
        CHECK_THROWS_AS(boundary_scan_theta(base, 1.2, 1.0, 0.5, 1e-4), error);
    }
}

TEST_CASE("axis validation") {
    CHECK_THROWS_AS(sweep(base, {}, {0.0}), error);
    CHECK_THROWS_AS(sweep(base, {1.2, 1.0}, {0.0}), error);
}

TEST_CASE("figure tables") {
    SolverOptions fast;
    fast.n_random = 4;
    SUBCASE("fig2: gap touches zero at the critical point and stays zero in the USP") {
        FigureSpec spec;
        spec.thetas = {pi};
        spec.g1s = linspace(0.9, 1.1, 21);
        Table t = figure_data(FigureKind::fig2, base, spec, fast);
        REQUIRE(t.rows.size() == 21);
        CHECK(t.columns.size() == 7);
        for (const auto& row : t.rows) {
            double g1 = row[1], eps_min = row[6];
            if (g1 > std::sqrt(0.9) + 1e-9)
                CHECK(std::abs(eps_min) < 1e-6); // Goldstone branch
            else
                CHECK(eps_min >= -1e-9);
        }
    }
    SUBCASE("fig3: both sign branches, zero below the critical coupling") {
        FigureSpec spec;
        spec.thetas = {pi};
        spec.g1s = {0.9, 1.2};
        Table t = figure_data(FigureKind::fig3, base, spec, fast);
        REQUIRE(t.rows.size() == 4);
        // below threshold both branches vanish
        CHECK(t.rows[0][4] == doctest::Approx(0.0).scale(1.0));
        // above threshold the two branches mirror each other
        CHECK(t.rows[2][4] == doctest::Approx(-t.rows[3][4]).epsilon(1e-12));
        CHECK(std::abs(t.rows[2][4]) ==
              doctest::Approx(std::sqrt(1625.0 / 6.0 / 1000.0)).epsilon(1e-9));
    }
    SUBCASE("fig4: observables vanish in the uniform region") {
        FigureSpec spec;
        spec.g1s = {1.2};
        spec.thetas = linspace(-pi + 0.01, pi, 15);
        Table t = figure_data(FigureKind::fig4, base, spec, fast);
        REQUIRE(t.rows.size() == 15);
        for (const auto& row : t.rows) {
            if (std::abs(row[0]) > 2.0 * pi / 3.0 + 0.02) {
                CHECK(std::abs(row[3]) < 1e-8);
                CHECK(std::abs(row[4]) < 1e-8);
            }
        }
    }
}

TEST_CASE("thread count resolution respects the environment cap") {
    setenv("JCTRIMER_THREADS", "2", 1);
    CHECK(resolve_thread_count(0) <= 2);
    CHECK(resolve_thread_count(8) <= 2);
    unsetenv("JCTRIMER_THREADS");
    CHECK(resolve_thread_count(1) == 1);
}
