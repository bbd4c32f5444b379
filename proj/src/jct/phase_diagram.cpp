#include "jct/phase_diagram.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numbers>
#include <thread>

#include "jct/normal_phase.hpp"
#include "jct/observables.hpp"

namespace jct {

size_t SweepGrid::failed_cells() const {
    size_t n = 0;
    for (const auto& c : cells)
        if (!c.ok) ++n;
    return n;
}

std::vector<double> linspace(double a, double b, int n) {
    if (n < 1) throw error(errc::invalid_argument, "linspace needs n >= 1");
    std::vector<double> v(static_cast<size_t>(n));
    if (n == 1) {
        v[0] = a;
        return v;
    }
    for (int i = 0; i < n; ++i)
        v[static_cast<size_t>(i)] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    return v;
}

int resolve_thread_count(int requested) {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    int n = requested > 0 ? requested : hw;
    if (const char* env = std::getenv("JCTRIMER_THREADS")) {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end != env && cap > 0) n = std::min<long>(n, cap);
    }
    return std::max(1, std::min(n, hw));
}

namespace {

SweepCell solve_cell(const SystemParams& p, const SolverOptions& opts,
                     std::span<const Amplitudes> extra_seeds) {
    SweepCell c;
    try {
        MeanFieldSolution sol = solve(p, opts, extra_seeds);
        c.phase = sol.phase;
        c.e_g = sol.ground_energy;
        c.e_cl = sol.classical_energy;
        c.eps = sol.spectrum.eps;
        c.eps_min = sol.spectrum.min_eps();
        c.alpha = sol.amplitudes;
        c.current = current(sol.amplitudes, p);
        c.chirality = chirality(sol.amplitudes, p);
        c.residual = sol.residual;
        c.ok = true;
    } catch (const error&) {
        c.ok = false;
    }
    return c;
}

} // namespace

SweepGrid sweep(const SystemParams& base, const std::vector<double>& g1_axis,
                const std::vector<double>& theta_axis, const SolverOptions& opts,
                const SweepOptions& sopts) {
    if (g1_axis.empty() || theta_axis.empty())
        throw error(errc::invalid_argument, "sweep axes must be nonempty");
    if (!std::is_sorted(g1_axis.begin(), g1_axis.end()) ||
        !std::is_sorted(theta_axis.begin(), theta_axis.end()))
        throw error(errc::invalid_argument, "sweep axes must be ascending");

    SweepGrid grid;
    grid.g1_axis = g1_axis;
    grid.theta_axis = theta_axis;
    const size_t ng = g1_axis.size(), nt = theta_axis.size();
    grid.cells.resize(ng * nt);

    auto params_at = [&](size_t it, size_t ig) {
        return SystemParams(base.omega0(), g1_axis[ig], base.j(), theta_axis[it]);
    };
    auto seed_at = [&](size_t it, size_t ig) {
        SolverOptions o = opts;
        // decorrelate the random starts per cell, deterministically
        o.seed = opts.seed ^ (0x9e3779b97f4a7c15ULL * (it * ng + ig + 1));
        return o;
    };

    if (sopts.warm_start) {
        for (size_t it = 0; it < nt; ++it) {
            for (size_t ig = 0; ig < ng; ++ig) {
                std::vector<Amplitudes> extra;
                if (ig > 0 && grid.cell(it, ig - 1).ok) extra.push_back(grid.cell(it, ig - 1).alpha);
                if (it > 0 && grid.cell(it - 1, ig).ok) extra.push_back(grid.cell(it - 1, ig).alpha);
                grid.cells[it * ng + ig] = solve_cell(params_at(it, ig), seed_at(it, ig), extra);
            }
        }
    } else {
        const int workers = resolve_thread_count(sopts.threads);
        std::atomic<size_t> next{0};
        auto run = [&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= grid.cells.size()) return;
                size_t it = i / ng, ig = i % ng;
                grid.cells[i] = solve_cell(params_at(it, ig), seed_at(it, ig), {});
            }
        };
        if (workers == 1) {
            run();
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) pool.emplace_back(run);
            for (auto& t : pool) t.join();
        }
    }

    if (100 * grid.failed_cells() > grid.cells.size())
        throw error(errc::no_convergence, "more than 1% of sweep cells failed");
    return grid;
}

namespace {

PhaseLabel label_at(const SystemParams& base, double g1, double theta, const SolverOptions& opts) {
    SystemParams p(base.omega0(), g1, base.j(), theta);
    return solve(p, opts).phase;
}

} // namespace

double boundary_scan_theta(const SystemParams& base, double g1_fixed, double theta_lo,
                           double theta_hi, double tol, const SolverOptions& opts) {
    if (!(theta_lo < theta_hi) || tol <= 0.0)
        throw error(errc::invalid_argument, "invalid scan window");
    PhaseLabel lo = label_at(base, g1_fixed, theta_lo, opts);
    PhaseLabel hi = label_at(base, g1_fixed, theta_hi, opts);
    if (lo == hi) throw error(errc::no_crossing, "window does not bracket a phase boundary");
    double a = theta_lo, b = theta_hi;
    while (b - a > tol) {
        double mid = 0.5 * (a + b);
        if (label_at(base, g1_fixed, mid, opts) == lo)
            a = mid;
        else
            b = mid;
    }
    return 0.5 * (a + b);
}

double boundary_scan_g1(const SystemParams& base, double theta_fixed, double g1_lo, double g1_hi,
                        double tol, const SolverOptions& opts) {
    if (!(g1_lo < g1_hi) || tol <= 0.0)
        throw error(errc::invalid_argument, "invalid scan window");
    PhaseLabel lo = label_at(base, g1_lo, theta_fixed, opts);
    PhaseLabel hi = label_at(base, g1_hi, theta_fixed, opts);
    if (lo == hi) throw error(errc::no_crossing, "window does not bracket a phase boundary");
    double a = g1_lo, b = g1_hi;
    while (b - a > tol) {
        double mid = 0.5 * (a + b);
        if (label_at(base, mid, theta_fixed, opts) == lo)
            a = mid;
        else
            b = mid;
    }
    return 0.5 * (a + b);
}

FigureSpec default_figure_spec(FigureKind kind, int n_points) {
    FigureSpec s;
    const double pi = std::numbers::pi;
    switch (kind) {
    case FigureKind::fig2:
    case FigureKind::fig3:
        s.thetas = {0.0, 0.5 * pi, pi};
        s.g1s = linspace(0.8, 1.3, n_points);
        break;
    case FigureKind::fig4:
        s.g1s = {1.2};
        s.thetas.resize(static_cast<size_t>(n_points));
        for (int k = 1; k <= n_points; ++k)
            s.thetas[static_cast<size_t>(k - 1)] =
                -pi + 2.0 * pi * static_cast<double>(k) / static_cast<double>(n_points);
        break;
    }
    return s;
}

Table figure_data(FigureKind kind, const SystemParams& base, const FigureSpec& spec,
                  const SolverOptions& opts, const SweepOptions& sopts) {
    Table t;
    const double sc = std::sqrt(base.eta());
    switch (kind) {
    case FigureKind::fig2: {
        t.columns = {"theta", "g1", "phase", "eps_1", "eps_2", "eps_3", "eps_min"};
        for (double th : spec.thetas) {
            SweepGrid g = sweep(base, spec.g1s, {th}, opts, sopts);
            for (size_t ig = 0; ig < spec.g1s.size(); ++ig) {
                const SweepCell& c = g.cell(0, ig);
                t.rows.push_back({th, spec.g1s[ig], static_cast<double>(c.phase), c.eps[0],
                                  c.eps[1], c.eps[2], c.eps_min});
            }
        }
        break;
    }
    case FigureKind::fig3: {
        t.columns = {"theta", "g1", "branch", "phase",
                     "alpha1_re", "alpha1_im", "alpha2_re", "alpha2_im", "alpha3_re", "alpha3_im"};
        for (double th : spec.thetas) {
            SweepGrid g = sweep(base, spec.g1s, {th}, opts, sopts);
            for (size_t ig = 0; ig < spec.g1s.size(); ++ig) {
                const SweepCell& c = g.cell(0, ig);
                for (int branch : {+1, -1}) {
                    Amplitudes a = branch > 0 ? c.alpha : -c.alpha;
                    t.rows.push_back({th, spec.g1s[ig], static_cast<double>(branch),
                                      static_cast<double>(c.phase), a[0].real() / sc,
                                      a[0].imag() / sc, a[1].real() / sc, a[1].imag() / sc,
                                      a[2].real() / sc, a[2].imag() / sc});
                }
            }
        }
        break;
    }
    case FigureKind::fig4: {
        t.columns = {"theta", "g1", "phase", "current_scaled", "chirality_scaled"};
        const double g1 = spec.g1s.at(0);
        SweepGrid g = sweep(base, {g1}, spec.thetas, opts, sopts);
        for (size_t it = 0; it < spec.thetas.size(); ++it) {
            const SweepCell& c = g.cell(it, 0);
            t.rows.push_back({spec.thetas[it], g1, static_cast<double>(c.phase), c.current,
                              c.chirality});
        }
        break;
    }
    }
    return t;
}

} // namespace jct
