#pragma once

#include <string>
#include <vector>

#include "jct/meanfield.hpp"

namespace jct {

struct SweepCell {
    PhaseLabel phase = PhaseLabel::NP;
    double e_g = 0.0;
    double e_cl = 0.0;
    double eps_min = 0.0;
    std::array<double, 3> eps{};
    Amplitudes alpha;
    double current = 0.0;   // scaled by eta
    double chirality = 0.0; // scaled by eta^2
    double residual = 0.0;
    bool ok = false;
};

struct SweepGrid {
    std::vector<double> g1_axis;
    std::vector<double> theta_axis;
    std::vector<SweepCell> cells; // theta-major: cells[it * n_g1 + ig]

    const SweepCell& cell(size_t i_theta, size_t i_g1) const {
        return cells[i_theta * g1_axis.size() + i_g1];
    }
    size_t failed_cells() const;
};

struct SweepOptions {
    bool warm_start = false; // row-major neighbor seeding (sequential)
    int threads = 0;         // 0 = auto, capped by JCTRIMER_THREADS
};

/// Resolved worker count: min(hardware, JCTRIMER_THREADS if set and > 0).
int resolve_thread_count(int requested);

/// Classifies every (theta, g1) grid point. Cells are solved independently;
/// assembly is deterministic by index. Throws if more than 1% of cells fail.
SweepGrid sweep(const SystemParams& base, const std::vector<double>& g1_axis,
                const std::vector<double>& theta_axis, const SolverOptions& opts = {},
                const SweepOptions& sopts = {});

/// Bisection on the phase-label change along theta at fixed g1.
/// Throws no_crossing when the window endpoints carry the same label.
double boundary_scan_theta(const SystemParams& base, double g1_fixed, double theta_lo,
                           double theta_hi, double tol, const SolverOptions& opts = {});

/// Bisection on the phase-label change along g1 at fixed theta.
double boundary_scan_g1(const SystemParams& base, double theta_fixed, double g1_lo, double g1_hi,
                        double tol, const SolverOptions& opts = {});

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> row_labels; // empty unless rows are named (validation report)
};

enum class FigureKind { fig2, fig3, fig4 };

struct FigureSpec {
    std::vector<double> thetas; // fig2/fig3: curves per theta; fig4: the sweep axis
    std::vector<double> g1s;    // fig2/fig3: the sweep axis; fig4: fixed g1 (first entry)
};

/// Default axes matching the published figures (theta in {0, pi/2, pi} over
/// g1 in [0.8, 1.3] for fig2/fig3; theta over (-pi, pi] at g1 = 1.2 for fig4).
FigureSpec default_figure_spec(FigureKind kind, int n_points = 400);

/// Columnar data behind the figures. Phase labels are encoded by their enum
/// value in a `phase` column.
Table figure_data(FigureKind kind, const SystemParams& base, const FigureSpec& spec,
                  const SolverOptions& opts = {}, const SweepOptions& sopts = {});

std::vector<double> linspace(double a, double b, int n);

} // namespace jct
