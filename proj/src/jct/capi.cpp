#include "jctrimer.h"

#include <cstring>
#include <string>

#include "jct/config.hpp"
#include "jct/ed_oracle.hpp"
#include "jct/meanfield.hpp"
#include "jct/normal_phase.hpp"
#include "jct/observables.hpp"
#include "jct/phase_diagram.hpp"
#include "jct/validate.hpp"
#include "jct/version.hpp"

namespace {

thread_local std::string g_last_error;

int code_of(const jct::error& e) {
    switch (e.code()) {
    case jct::errc::invalid_argument: return JCT_ERR_INVALID_ARGUMENT;
    case jct::errc::below_critical: return JCT_ERR_BELOW_CRITICAL;
    case jct::errc::degenerate_site: return JCT_ERR_DEGENERATE_SITE;
    case jct::errc::no_convergence: return JCT_ERR_NO_CONVERGENCE;
    case jct::errc::dimension_cap: return JCT_ERR_DIMENSION_CAP;
    case jct::errc::no_crossing: return JCT_ERR_NO_CROSSING;
    case jct::errc::unstable_form: return JCT_ERR_UNSTABLE_FORM;
    case jct::errc::io_error: return JCT_ERR_IO;
    }
    return JCT_ERR_INTERNAL;
}

template <typename F>
int guarded(F&& f) {
    try {
        f();
        g_last_error.clear();
        return JCT_OK;
    } catch (const jct::error& e) {
        g_last_error = e.what();
        return code_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return JCT_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return JCT_ERR_INTERNAL;
    }
}

jct::Amplitudes unpack(const double a[6]) {
    jct::Amplitudes out;
    for (int n = 0; n < 3; ++n) out[n] = jct::cplx(a[2 * n], a[2 * n + 1]);
    return out;
}

void pack(const jct::Amplitudes& a, double out[6]) {
    for (int n = 0; n < 3; ++n) {
        out[2 * n] = a[n].real();
        out[2 * n + 1] = a[n].imag();
    }
}

jct::SolverOptions to_cpp(const jct_solver_options* o) {
    jct::SolverOptions opts;
    if (o) {
        opts.n_random = o->n_random;
        opts.max_iter = o->max_iter;
        opts.tol_residual = o->tol_residual;
        opts.seed = o->seed;
    }
    return opts;
}

} // namespace

struct jct_params {
    jct::SystemParams p;
};

struct jct_solution {
    jct::MeanFieldSolution sol;
    jct::SystemParams p;
};

struct jct_sweep {
    jct::SweepGrid grid;
};

struct jct_table {
    jct::Table t;
};

extern "C" {

const char* jct_version(void) { return jct::version; }

const char* jct_status_name(int status) {
    switch (status) {
    case JCT_OK: return "ok";
    case JCT_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case JCT_ERR_BELOW_CRITICAL: return "below_critical";
    case JCT_ERR_DEGENERATE_SITE: return "degenerate_site";
    case JCT_ERR_NO_CONVERGENCE: return "no_convergence";
    case JCT_ERR_DIMENSION_CAP: return "dimension_cap";
    case JCT_ERR_NO_CROSSING: return "no_crossing";
    case JCT_ERR_UNSTABLE_FORM: return "unstable_form";
    case JCT_ERR_IO: return "io_error";
    default: return "internal_error";
    }
}

const char* jct_last_error(void) { return g_last_error.c_str(); }

int jct_params_create(double omega0, double g1, double j, double theta, jct_params** out) {
    if (!out) return JCT_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = new jct_params{jct::make_params(omega0, g1, j, theta)}; });
}

void jct_params_destroy(jct_params* p) { delete p; }

double jct_params_omega0(const jct_params* p) { return p->p.omega0(); }
double jct_params_g1(const jct_params* p) { return p->p.g1(); }
double jct_params_j(const jct_params* p) { return p->p.j(); }
double jct_params_theta(const jct_params* p) { return p->p.theta(); }
double jct_params_g(const jct_params* p) { return p->p.g(); }
double jct_params_eta(const jct_params* p) { return p->p.eta(); }

void jct_solver_options_init(jct_solver_options* opts) {
    if (!opts) return;
    jct::SolverOptions d;
    opts->n_random = d.n_random;
    opts->max_iter = d.max_iter;
    opts->tol_residual = d.tol_residual;
    opts->seed = d.seed;
}

int jct_config_load(const char* path, jct_params** params_out, jct_solver_options* opts_out) {
    if (!path) return JCT_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        jct::Config cfg = jct::load_config(path);
        if (params_out) *params_out = new jct_params{jct::params_from_config(cfg)};
        if (opts_out) {
            jct::SolverOptions o = jct::solver_options_from_config(cfg);
            opts_out->n_random = o.n_random;
            opts_out->max_iter = o.max_iter;
            opts_out->tol_residual = o.tol_residual;
            opts_out->seed = o.seed;
        }
    });
}

int jct_np_dispersion(const jct_params* p, double q, double* eps_out) {
    if (!p || !eps_out) return JCT_ERR_INVALID_ARGUMENT;
    return guarded([&] { *eps_out = jct::np_dispersion(p->p, q); });
}

int jct_critical_coupling(const jct_params* p, double* g1c_out) {
    if (!p || !g1c_out) return JCT_ERR_INVALID_ARGUMENT;
    return guarded([&] { *g1c_out = jct::critical_coupling(p->p); });
}

int jct_np_ground_energy(const jct_params* p, double* e_out) {
    if (!p || !e_out) return JCT_ERR_INVALID_ARGUMENT;
    return guarded([&] { *e_out = jct::np_ground_energy(p->p); });
}

int jct_np_spectrum(const jct_params* p, double eps_out[3], double* ground_energy_out,
                    int* stable_out) {
    if (!p || !eps_out) return JCT_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        jct::BogoliubovSpectrum s = jct::np_branch_spectrum(p->p);
        for (int i = 0; i < 3; ++i) eps_out[i] = s.eps[static_cast<size_t>(i)];
        if (ground_energy_out) *ground_energy_out = s.ground_energy;
        if (stable_out) *stable_out = s.stable ? 1 : 0;
    });
}

int jct_classical_energy(const jct_params* p, const double alpha[6], double* e_out) {
    if (!p || !alpha || !e_out) return JCT_ERR_INVALID_ARGUMENT;
    return guarded([&] { *e_out = jct::classical_energy(unpack(alpha), p->p); });
}

int jct_gradient(const jct_params* p, const double alpha[6], double d_out[6]) {
    if (!p || !alpha || !d_out) return JCT_ERR_INVALID_ARGUMENT;
    return guarded([&] { pack(jct::gradient(unpack(alpha), p->p), d_out); });
}

int jct_usp_amplitude(const jct_params* p, int sign, double alpha_out[6]) {
    if (!p || !alpha_out) return JCT_ERR_INVALID_ARGUMENT;
    return guarded([&] { pack(jct::usp_amplitude(p->p, sign), alpha_out); });
}

int jct_usp_spectrum(const jct_params* p, double eps_out[3], double* omega_q0_out,
                     double* nu0_out) {
    if (!p) return JCT_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        jct::UspSpectrum s = jct::usp_spectrum(p->p);
        if (eps_out)
            for (int i = 0; i < 3; ++i) eps_out[i] = s.eps_q[static_cast<size_t>(i)];
        if (omega_q0_out) *omega_q0_out = s.omega_q[0];
        if (nu0_out) *nu0_out = s.nu0;
    });
}

int jct_bogoliubov(const jct_params* p, const double alpha[6], double eps_out[3], int* stable_out,
                   double* ground_energy_out) {
    if (!p || !alpha || !eps_out) return JCT_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        jct::BogoliubovSpectrum s = jct::diagonalize(jct::build_form(unpack(alpha), p->p));
        for (int i = 0; i < 3; ++i) eps_out[i] = s.eps[static_cast<size_t>(i)];
        if (stable_out) *stable_out = s.stable ? 1 : 0;
        if (ground_energy_out) *ground_energy_out = s.ground_energy;
    });
}

int jct_observables(const jct_params* p, const double alpha[6], double* current_scaled_out,
                    double* chirality_scaled_out) {
    if (!p || !alpha) return JCT_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        jct::Amplitudes a = unpack(alpha);
        if (current_scaled_out) *current_scaled_out = jct::current(a, p->p);
        if (chirality_scaled_out) *chirality_scaled_out = jct::chirality(a, p->p);
    });
}

int jct_solve(const jct_params* p, const jct_solver_options* opts, jct_solution** out) {
    if (!p || !out) return JCT_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = new jct_solution{jct::solve(p->p, to_cpp(opts)), p->p}; });
}

void jct_solution_destroy(jct_solution* s) { delete s; }

int jct_solution_amplitudes(const jct_solution* s, double alpha_out[6]) {
    if (!s || !alpha_out) return JCT_ERR_INVALID_ARGUMENT;
    pack(s->sol.amplitudes, alpha_out);
    return JCT_OK;
}

int jct_solution_phase(const jct_solution* s) {
    if (!s) return -JCT_ERR_INVALID_ARGUMENT;
    return static_cast<int>(s->sol.phase);
}

double jct_solution_classical_energy(const jct_solution* s) { return s->sol.classical_energy; }
double jct_solution_ground_energy(const jct_solution* s) { return s->sol.ground_energy; }
double jct_solution_residual(const jct_solution* s) { return s->sol.residual; }

int jct_solution_epsilons(const jct_solution* s, double eps_out[3]) {
    if (!s || !eps_out) return JCT_ERR_INVALID_ARGUMENT;
    for (int i = 0; i < 3; ++i) eps_out[i] = s->sol.spectrum.eps[static_cast<size_t>(i)];
    return JCT_OK;
}

int jct_solution_stable(const jct_solution* s) { return s && s->sol.spectrum.stable ? 1 : 0; }
int jct_solution_restarts(const jct_solution* s) { return s ? s->sol.n_restarts_used : 0; }

int jct_solution_observables(const jct_solution* s, double* current_scaled_out,
                             double* chirality_scaled_out) {
    if (!s) return JCT_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        if (current_scaled_out) *current_scaled_out = jct::current(s->sol.amplitudes, s->p);
        if (chirality_scaled_out) *chirality_scaled_out = jct::chirality(s->sol.amplitudes, s->p);
    });
}

int jct_solution_order_parameters(const jct_solution* s, double out[6]) {
    if (!s || !out) return JCT_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        auto ops = jct::order_parameters(s->sol.amplitudes, s->p);
        for (int n = 0; n < 3; ++n) {
            out[2 * n] = ops[static_cast<size_t>(n)].real();
            out[2 * n + 1] = ops[static_cast<size_t>(n)].imag();
        }
    });
}

int jct_degenerate_orbit(const jct_solution* s, double* alphas_out, int cap, int* count_out) {
    if (!s || !count_out || (cap > 0 && !alphas_out)) return JCT_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        auto orbit = jct::degenerate_orbit(s->sol, s->p);
        *count_out = static_cast<int>(orbit.size());
        for (int i = 0; i < cap && i < static_cast<int>(orbit.size()); ++i)
            pack(orbit[static_cast<size_t>(i)].amplitudes, alphas_out + 6 * i);
    });
}

int jct_sweep_run(const jct_params* base, const jct_solver_options* opts, const double* g1_axis,
                  int n_g1, const double* theta_axis, int n_theta, int threads, jct_sweep** out) {
    if (!base || !g1_axis || !theta_axis || n_g1 < 1 || n_theta < 1 || !out)
        return JCT_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        std::vector<double> g1(g1_axis, g1_axis + n_g1);
        std::vector<double> th(theta_axis, theta_axis + n_theta);
        jct::SweepOptions so;
        so.threads = threads;
        *out = new jct_sweep{jct::sweep(base->p, g1, th, to_cpp(opts), so)};
    });
}

void jct_sweep_destroy(jct_sweep* s) { delete s; }

int jct_sweep_shape(const jct_sweep* s, int* n_theta_out, int* n_g1_out) {
    if (!s) return JCT_ERR_INVALID_ARGUMENT;
    if (n_theta_out) *n_theta_out = static_cast<int>(s->grid.theta_axis.size());
    if (n_g1_out) *n_g1_out = static_cast<int>(s->grid.g1_axis.size());
    return JCT_OK;
}

int jct_sweep_cell(const jct_sweep* s, int i_theta, int i_g1, jct_cell* out) {
    if (!s || !out) return JCT_ERR_INVALID_ARGUMENT;
    if (i_theta < 0 || i_g1 < 0 || i_theta >= static_cast<int>(s->grid.theta_axis.size()) ||
        i_g1 >= static_cast<int>(s->grid.g1_axis.size()))
        return JCT_ERR_INVALID_ARGUMENT;
    const jct::SweepCell& c = s->grid.cell(static_cast<size_t>(i_theta), static_cast<size_t>(i_g1));
    out->theta = s->grid.theta_axis[static_cast<size_t>(i_theta)];
    out->g1 = s->grid.g1_axis[static_cast<size_t>(i_g1)];
    out->phase = static_cast<int>(c.phase);
    out->ok = c.ok ? 1 : 0;
    out->e_g = c.e_g;
    out->eps_min = c.eps_min;
    for (int i = 0; i < 3; ++i) out->eps[i] = c.eps[static_cast<size_t>(i)];
    out->current_scaled = c.current;
    out->chirality_scaled = c.chirality;
    pack(c.alpha, out->alpha);
    return JCT_OK;
}

int jct_boundary_scan_theta(const jct_params* base, const jct_solver_options* opts,
                            double g1_fixed, double theta_lo, double theta_hi, double tol,
                            double* theta_c_out) {
    if (!base || !theta_c_out) return JCT_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *theta_c_out = jct::boundary_scan_theta(base->p, g1_fixed, theta_lo, theta_hi, tol,
                                                to_cpp(opts));
    });
}

int jct_boundary_scan_g1(const jct_params* base, const jct_solver_options* opts,
                         double theta_fixed, double g1_lo, double g1_hi, double tol,
                         double* g1_c_out) {
    if (!base || !g1_c_out) return JCT_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *g1_c_out = jct::boundary_scan_g1(base->p, theta_fixed, g1_lo, g1_hi, tol, to_cpp(opts));
    });
}

int jct_figure_table(const jct_params* base, const jct_solver_options* opts, int fig,
                     const double* thetas, int n_thetas, const double* g1s, int n_g1s,
                     jct_table** out) {
    if (!base || !out) return JCT_ERR_INVALID_ARGUMENT;
    if (fig < 2 || fig > 4) return JCT_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        jct::FigureKind kind = fig == 2   ? jct::FigureKind::fig2
                               : fig == 3 ? jct::FigureKind::fig3
                                          : jct::FigureKind::fig4;
        jct::FigureSpec spec = jct::default_figure_spec(kind);
        if (thetas && n_thetas > 0) spec.thetas.assign(thetas, thetas + n_thetas);
        if (g1s && n_g1s > 0) spec.g1s.assign(g1s, g1s + n_g1s);
        *out = new jct_table{jct::figure_data(kind, base->p, spec, to_cpp(opts))};
    });
}

void jct_table_destroy(jct_table* t) { delete t; }

int jct_table_shape(const jct_table* t, int* rows_out, int* cols_out) {
    if (!t) return JCT_ERR_INVALID_ARGUMENT;
    if (rows_out) *rows_out = static_cast<int>(t->t.rows.size());
    if (cols_out) *cols_out = static_cast<int>(t->t.columns.size());
    return JCT_OK;
}

const char* jct_table_column(const jct_table* t, int col) {
    if (!t || col < 0 || col >= static_cast<int>(t->t.columns.size())) return nullptr;
    return t->t.columns[static_cast<size_t>(col)].c_str();
}

const char* jct_table_row_label(const jct_table* t, int row) {
    if (!t || row < 0 || row >= static_cast<int>(t->t.row_labels.size())) return nullptr;
    return t->t.row_labels[static_cast<size_t>(row)].c_str();
}

int jct_table_get(const jct_table* t, int row, int col, double* out) {
    if (!t || !out || row < 0 || col < 0 || row >= static_cast<int>(t->t.rows.size()) ||
        col >= static_cast<int>(t->t.columns.size()))
        return JCT_ERR_INVALID_ARGUMENT;
    *out = t->t.rows[static_cast<size_t>(row)][static_cast<size_t>(col)];
    return JCT_OK;
}

int jct_ed_commutator_norm(const jct_params* p, int n_max, double* out) {
    if (!p || !out) return JCT_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        jct::FockConfig cfg;
        cfg.n_max = n_max;
        *out = jct::commutator_norm(p->p, cfg);
    });
}

int jct_ed_ground(const jct_params* p, int n_max, int sector, double* energy_out,
                  double* max_abs_a_out, double* current_out) {
    if (!p) return JCT_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        jct::FockConfig cfg;
        cfg.n_max = n_max;
        if (sector >= 0) cfg.sector = sector;
        jct::EdResult r = jct::ed_ground(p->p, cfg);
        if (energy_out) *energy_out = r.eigenvalues.front();
        if (max_abs_a_out) {
            double m = 0.0;
            for (const auto& a : r.a_expect) m = std::max(m, std::abs(a));
            *max_abs_a_out = m;
        }
        if (current_out) *current_out = r.current_expect;
    });
}

int jct_ed_photon_branch(const jct_params* p, int n_max, double eps_out[3]) {
    if (!p || !eps_out) return JCT_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        auto e = jct::photon_branch_excitations(p->p, n_max);
        for (int i = 0; i < 3; ++i) eps_out[i] = e[static_cast<size_t>(i)];
    });
}

int jct_brute_force_minimize(const jct_params* p, long n_samples, uint64_t seed,
                             jct_solution** out) {
    if (!p || !out) return JCT_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        jct::BruteForceOptions b;
        if (n_samples > 0) b.n_samples = n_samples;
        b.seed = seed;
        *out = new jct_solution{jct::brute_force_minimize(p->p, b), p->p};
    });
}

int jct_validate(const jct_params* p, const jct_solver_options* opts, int n_max, int sector,
                 jct_table** report_out) {
    if (!p || !report_out) return JCT_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        std::optional<int> sec;
        if (sector >= 0) sec = sector;
        *report_out = new jct_table{jct::validate_suite(p->p, to_cpp(opts), n_max, sec)};
    });
}

} // extern "C"
