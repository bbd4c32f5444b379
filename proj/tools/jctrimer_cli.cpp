// Command-line front end over the jctrimer C API: solve / sweep / figure /
// validate subcommands, CSV and optional SVG emission, and a reproducibility
// manifest per run.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jctrimer.h"

namespace {

constexpr double k_pi = 3.14159265358979323846;

struct Range {
    double lo = 0.0, hi = 0.0;
    int n = 1;
};

Range parse_range(const std::string& text) {
    Range r;
    size_t c1 = text.find(':');
    size_t c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw CLI::ValidationError("range", "expected a:b:n, got '" + text + "'");
    try {
        r.lo = std::stod(text.substr(0, c1));
        r.hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
        r.n = std::stoi(text.substr(c2 + 1));
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "expected a:b:n, got '" + text + "'");
    }
    if (r.n < 1 || (r.n > 1 && !(r.lo < r.hi)))
        throw CLI::ValidationError("range", "need n >= 1 and a < b in '" + text + "'");
    return r;
}

std::vector<double> expand(const Range& r) {
    std::vector<double> v(static_cast<size_t>(r.n));
    for (int i = 0; i < r.n; ++i)
        v[static_cast<size_t>(i)] =
            r.n == 1 ? r.lo : r.lo + (r.hi - r.lo) * static_cast<double>(i) / static_cast<double>(r.n - 1);
    return v;
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12e", v);
    return buf;
}

const char* phase_label(int phase) {
    switch (phase) {
    case JCT_PHASE_NP: return "NP";
    case JCT_PHASE_USP: return "USP";
    case JCT_PHASE_FSP: return "FSP";
    case JCT_PHASE_CFSP: return "CFSP";
    default: return "FAIL";
    }
}

[[noreturn]] void die(int exit_code, const std::string& msg) {
    std::cerr << "jctrimer: " << msg << "\n";
    std::exit(exit_code);
}

void check(int status, const std::string& context) {
    if (status != JCT_OK)
        die(3, context + ": " + jct_status_name(status) + " (" + jct_last_error() + ")");
}

struct Run {
    double omega0 = 1000.0;
    double g1 = 1.2;
    double j = 0.05;
    double theta = 0.0;
    jct_solver_options opts{};
    std::string out_dir = ".";
    std::vector<std::string> outputs;
    std::string command_line;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    jct_params* make_params() const {
        jct_params* p = nullptr;
        int st = jct_params_create(omega0, g1, j, theta, &p);
        if (st != JCT_OK) die(2, std::string("invalid parameters: ") + jct_last_error());
        return p;
    }

    std::filesystem::path path(const std::string& name) const {
        return std::filesystem::path(out_dir) / name;
    }

    std::ofstream open_output(const std::string& name) {
        std::filesystem::create_directories(out_dir);
        auto p = path(name);
        std::ofstream f(p, std::ios::binary); // "\n" line endings on every platform
        if (!f) die(3, "cannot open output file " + p.string());
        outputs.push_back(name);
        return f;
    }

    void write_manifest(const std::string& command) {
        using nlohmann::json;
        double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        json m;
        m["command"] = command;
        m["command_line"] = command_line;
        m["tool_version"] = jct_version();
        m["wall_time_s"] = wall;
        m["seed"] = opts.seed;
        m["config"] = {{"omega0", omega0},
                       {"g1", g1},
                       {"j", j},
                       {"theta", theta},
                       {"n_random", opts.n_random},
                       {"max_iter", opts.max_iter},
                       {"tol_residual", opts.tol_residual},
                       {"seed", opts.seed}};
        m["outputs"] = outputs;
        std::ofstream f = open_output("manifest.json");
        f << m.dump(2) << "\n";
    }
};

// --- minimal SVG emission (convenience layer; CSV is the contract) ---------

std::string svg_header(int w, int h) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) +
           "\" height=\"" + std::to_string(h) + "\" viewBox=\"0 0 " + std::to_string(w) + " " +
           std::to_string(h) + "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

const char* phase_color(int phase) {
    switch (phase) {
    case JCT_PHASE_NP: return "#d9d9d9";
    case JCT_PHASE_USP: return "#4c72b0";
    case JCT_PHASE_FSP: return "#55a868";
    case JCT_PHASE_CFSP: return "#c44e52";
    default: return "#000000";
    }
}

void write_sweep_svg(Run& run, const jct_sweep* sweep) {
    int nt = 0, ng = 0;
    jct_sweep_shape(sweep, &nt, &ng);
    const int w = 720, h = 560, m = 50;
    std::ofstream f = run.open_output("phase_diagram.svg");
    f << svg_header(w, h);
    double cw = static_cast<double>(w - 2 * m) / nt;
    double ch = static_cast<double>(h - 2 * m) / ng;
    for (int it = 0; it < nt; ++it) {
        for (int ig = 0; ig < ng; ++ig) {
            jct_cell c{};
            jct_sweep_cell(sweep, it, ig, &c);
            double x = m + it * cw;
            double y = h - m - (ig + 1) * ch;
            f << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cw + 0.5
              << "\" height=\"" << ch + 0.5 << "\" fill=\"" << phase_color(c.ok ? c.phase : -1)
              << "\"/>\n";
        }
    }
    f << "<text x=\"" << w / 2 << "\" y=\"" << h - 12
      << "\" text-anchor=\"middle\" font-size=\"14\">theta</text>\n";
    f << "<text x=\"16\" y=\"" << h / 2
      << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 16 " << h / 2
      << ")\">g1</text>\n";
    f << "</svg>\n";
}

void write_lines_svg(Run& run, const std::string& name,
                     const std::vector<std::pair<std::string, std::vector<std::pair<double, double>>>>& series) {
    const int w = 720, h = 480, m = 50;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& [label, pts] : series)
        for (auto [x, y] : pts) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (!(xmax > xmin)) xmax = xmin + 1;
    if (!(ymax > ymin)) ymax = ymin + 1;
    const char* colors[] = {"#4c72b0", "#c44e52", "#55a868", "#8172b2", "#ccb974", "#64b5cd"};
    std::ofstream f = run.open_output(name);
    f << svg_header(w, h);
    int k = 0;
    for (const auto& [label, pts] : series) {
        f << "<polyline fill=\"none\" stroke=\"" << colors[k % 6] << "\" stroke-width=\"1.5\" points=\"";
        for (auto [x, y] : pts) {
            double px = m + (x - xmin) / (xmax - xmin) * (w - 2 * m);
            double py = h - m - (y - ymin) / (ymax - ymin) * (h - 2 * m);
            f << px << "," << py << " ";
        }
        f << "\"/>\n";
        f << "<text x=\"" << w - m - 150 << "\" y=\"" << m + 16 * k << "\" font-size=\"12\" fill=\""
          << colors[k % 6] << "\">" << label << "</text>\n";
        ++k;
    }
    f << "</svg>\n";
}

// --- subcommands ------------------------------------------------------------

int cmd_solve(Run& run) {
    jct_params* p = run.make_params();
    jct_solution* sol = nullptr;
    check(jct_solve(p, &run.opts, &sol), "solve failed");

    double alpha[6], scaled[6], eps[3];
    jct_solution_amplitudes(sol, alpha);
    jct_solution_order_parameters(sol, scaled);
    jct_solution_epsilons(sol, eps);
    double cur = 0.0, chi = 0.0;
    jct_solution_observables(sol, &cur, &chi);

    {
        std::ofstream f = run.open_output("solution.csv");
        f << "site,alpha_re,alpha_im,alpha_scaled_re,alpha_scaled_im\n";
        for (int n = 0; n < 3; ++n)
            f << (n + 1) << "," << num(alpha[2 * n]) << "," << num(alpha[2 * n + 1]) << ","
              << num(scaled[2 * n]) << "," << num(scaled[2 * n + 1]) << "\n";
    }
    {
        std::ofstream f = run.open_output("summary.csv");
        f << "phase,e_g,eps_1,eps_2,eps_3,current_scaled,chirality_scaled,residual\n";
        f << phase_label(jct_solution_phase(sol)) << "," << num(jct_solution_ground_energy(sol))
          << "," << num(eps[0]) << "," << num(eps[1]) << "," << num(eps[2]) << "," << num(cur)
          << "," << num(chi) << "," << num(jct_solution_residual(sol)) << "\n";
    }
    std::cout << "phase=" << phase_label(jct_solution_phase(sol))
              << " E_g=" << jct_solution_ground_energy(sol) << " current_scaled=" << cur << "\n";
    jct_solution_destroy(sol);
    jct_params_destroy(p);
    run.write_manifest("solve");
    return 0;
}

int cmd_sweep(Run& run, const std::string& g1_range, const std::string& theta_range, bool svg,
              int threads) {
    std::vector<double> g1s, thetas;
    if (!g1_range.empty()) {
        g1s = expand(parse_range(g1_range));
    } else {
        g1s = expand({0.8, 1.3, 200});
    }
    if (!theta_range.empty()) {
        thetas = expand(parse_range(theta_range));
    } else {
        // (-pi, pi] with 200 points, hitting 0 and pi exactly
        thetas.resize(200);
        for (int k = 1; k <= 200; ++k) thetas[static_cast<size_t>(k - 1)] = -k_pi + 2.0 * k_pi * k / 200.0;
    }

    jct_params* p = run.make_params();
    jct_sweep* sweep = nullptr;
    check(jct_sweep_run(p, &run.opts, g1s.data(), static_cast<int>(g1s.size()), thetas.data(),
                        static_cast<int>(thetas.size()), threads, &sweep),
          "sweep failed");

    size_t failed = 0;
    {
        std::ofstream f = run.open_output("phase_diagram.csv");
        f << "theta,g1,phase,e_g,eps_min,current_scaled,chirality_scaled,"
             "alpha1_re,alpha1_im,alpha2_re,alpha2_im,alpha3_re,alpha3_im\n";
        for (size_t it = 0; it < thetas.size(); ++it) {
            for (size_t ig = 0; ig < g1s.size(); ++ig) {
                jct_cell c{};
                jct_sweep_cell(sweep, static_cast<int>(it), static_cast<int>(ig), &c);
                if (!c.ok) ++failed;
                f << num(c.theta) << "," << num(c.g1) << ","
                  << (c.ok ? phase_label(c.phase) : "FAIL") << "," << num(c.e_g) << ","
                  << num(c.eps_min) << "," << num(c.current_scaled) << ","
                  << num(c.chirality_scaled);
                for (int i = 0; i < 6; ++i) f << "," << num(c.alpha[i]);
                f << "\n";
            }
        }
    }
    if (svg) write_sweep_svg(run, sweep);
    jct_sweep_destroy(sweep);
    jct_params_destroy(p);
    run.write_manifest("sweep");
    std::cout << "cells=" << thetas.size() * g1s.size() << " failed=" << failed << "\n";
    if (100 * failed > thetas.size() * g1s.size()) die(3, "more than 1% of sweep cells failed");
    return 0;
}

int cmd_figure(Run& run, int fig, std::optional<double> theta_override, bool svg) {
    jct_params* p = run.make_params();
    jct_table* table = nullptr;
    std::vector<double> thetas;
    if (theta_override) thetas.push_back(*theta_override);
    check(jct_figure_table(p, &run.opts, fig, thetas.empty() ? nullptr : thetas.data(),
                           static_cast<int>(thetas.size()), nullptr, 0, &table),
          "figure data failed");

    int rows = 0, cols = 0;
    jct_table_shape(table, &rows, &cols);
    std::string name = "fig" + std::to_string(fig) + ".csv";
    {
        std::ofstream f = run.open_output(name);
        for (int c = 0; c < cols; ++c) f << (c ? "," : "") << jct_table_column(table, c);
        f << "\n";
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) {
                double v = 0.0;
                jct_table_get(table, r, c, &v);
                if (c) f << ",";
                if (std::string(jct_table_column(table, c)) == "phase")
                    f << phase_label(static_cast<int>(v));
                else
                    f << num(v);
            }
            f << "\n";
        }
    }

    if (svg) {
        // one polyline per (theta, quantity) pair on the leading numeric column
        std::vector<std::pair<std::string, std::vector<std::pair<double, double>>>> series;
        auto col_index = [&](const std::string& want) {
            for (int c = 0; c < cols; ++c)
                if (want == jct_table_column(table, c)) return c;
            return -1;
        };
        int xcol = fig == 4 ? col_index("theta") : col_index("g1");
        std::vector<std::string> ycols;
        if (fig == 2) ycols = {"eps_min"};
        if (fig == 3) ycols = {"alpha1_re", "alpha2_re", "alpha3_re"};
        if (fig == 4) ycols = {"current_scaled", "chirality_scaled"};
        int tcol = col_index("theta");
        int bcol = col_index("branch");
        std::vector<double> curve_keys;
        for (int r = 0; r < rows; ++r) {
            double t = 0.0;
            jct_table_get(table, r, tcol, &t);
            bool seen = false;
            for (double k : curve_keys) seen |= (k == t);
            if (!seen) curve_keys.push_back(t);
        }
        for (const auto& yname : ycols) {
            int yc = col_index(yname);
            for (double key : curve_keys) {
                std::vector<std::pair<double, double>> pts;
                for (int r = 0; r < rows; ++r) {
                    double t = 0.0, b = 1.0;
                    jct_table_get(table, r, tcol, &t);
                    if (bcol >= 0) jct_table_get(table, r, bcol, &b);
                    if (t != key || b < 0) continue;
                    double x = 0.0, y = 0.0;
                    jct_table_get(table, r, xcol, &x);
                    jct_table_get(table, r, yc, &y);
                    pts.emplace_back(x, y);
                }
                char label[64];
                std::snprintf(label, sizeof label, "%s theta=%.3f", yname.c_str(), key);
                series.emplace_back(fig == 4 ? yname : label, std::move(pts));
            }
            if (fig == 4) break; // theta is the x axis; one curve per quantity
        }
        if (fig == 4) {
            series.clear();
            for (const auto& yname : ycols) {
                int yc = col_index(yname);
                std::vector<std::pair<double, double>> pts;
                for (int r = 0; r < rows; ++r) {
                    double x = 0.0, y = 0.0;
                    jct_table_get(table, r, xcol, &x);
                    jct_table_get(table, r, yc, &y);
                    pts.emplace_back(x, y);
                }
                series.emplace_back(yname, std::move(pts));
            }
        }
        write_lines_svg(run, "fig" + std::to_string(fig) + ".svg", series);
    }

    jct_table_destroy(table);
    jct_params_destroy(p);
    run.write_manifest("figure");
    return 0;
}

int cmd_validate(Run& run, int nmax, int sector) {
    jct_params* p = run.make_params();
    jct_table* report = nullptr;
    check(jct_validate(p, &run.opts, nmax, sector, &report), "validation failed to run");

    int rows = 0, cols = 0;
    jct_table_shape(report, &rows, &cols);
    bool all_pass = true;
    {
        std::ofstream f = run.open_output("validation_report.csv");
        f << "check,measured,threshold,pass\n";
        for (int r = 0; r < rows; ++r) {
            double measured = 0.0, threshold = 0.0, pass = 0.0;
            jct_table_get(report, r, 0, &measured);
            jct_table_get(report, r, 1, &threshold);
            jct_table_get(report, r, 2, &pass);
            all_pass &= pass != 0.0;
            f << jct_table_row_label(report, r) << "," << num(measured) << "," << num(threshold)
              << "," << (pass != 0.0 ? 1 : 0) << "\n";
            std::cout << (pass != 0.0 ? "PASS " : "FAIL ") << jct_table_row_label(report, r)
                      << " (measured " << measured << ", threshold " << threshold << ")\n";
        }
    }
    jct_table_destroy(report);
    jct_params_destroy(p);
    run.write_manifest("validate");
    return all_pass ? 0 : 4;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ground-state phases of a three-cavity Jaynes-Cummings ring with complex hopping"};
    app.require_subcommand(1);

    Run run;
    for (int i = 0; i < argc; ++i) run.command_line += std::string(i ? " " : "") + argv[i];

    std::string config_path;
    bool have_flag[4] = {false, false, false, false};
    double omega0 = run.omega0, g1 = run.g1, j = run.j, theta = run.theta;
    std::optional<long long> seed_flag;
    std::optional<int> restarts_flag;

    jct_solver_options_init(&run.opts);

    app.add_option("--config", config_path, "key=value config file");
    app.add_option("--out", run.out_dir, "output directory (default .)");
    auto* o1 = app.add_option("--omega0", omega0, "atomic frequency in units of omega_c");
    auto* o2 = app.add_option("--g1", g1, "dimensionless coupling g/sqrt(omega0 omega_c)");
    auto* o3 = app.add_option("--j", j, "hopping rate in units of omega_c");
    auto* o4 = app.add_option("--theta", theta, "hopping phase in radians");
    app.add_option("--seed", seed_flag, "solver RNG seed");
    app.add_option("--restarts", restarts_flag, "number of random multistart seeds");

    auto* solve_cmd = app.add_subcommand("solve", "mean-field ground state at one parameter point");

    std::string g1_range, theta_range;
    bool svg = false;
    int threads = 0;
    auto* sweep_cmd = app.add_subcommand("sweep", "classify the (g1, theta) plane");
    sweep_cmd->add_option("--g1-range", g1_range, "a:b:n (default 0.8:1.3:200)");
    sweep_cmd->add_option("--theta-range", theta_range, "a:b:n (default (-pi, pi] with 200 points)");
    sweep_cmd->add_flag("--svg", svg, "also render an SVG heatmap");
    sweep_cmd->add_option("--threads", threads, "worker threads (0 = auto; JCTRIMER_THREADS caps)");

    int fig = 2;
    auto* figure_cmd = app.add_subcommand("figure", "emit figure data tables");
    figure_cmd->add_option("--fig", fig, "figure id: 2, 3 or 4")->required()->check(CLI::Range(2, 4));
    figure_cmd->add_flag("--svg", svg, "also render an SVG line plot");

    int nmax = 2, sector = -1;
    auto* validate_cmd = app.add_subcommand("validate", "run the oracle checks");
    validate_cmd->add_option("--nmax", nmax, "photon cutoff per cavity (default 2)");
    validate_cmd->add_option("--sector", sector, "N_tot sector for the ED ground check (-1 = full)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    have_flag[0] = o1->count() > 0;
    have_flag[1] = o2->count() > 0;
    have_flag[2] = o3->count() > 0;
    have_flag[3] = o4->count() > 0;

    if (!config_path.empty()) {
        jct_params* cfg_params = nullptr;
        jct_solver_options cfg_opts = run.opts;
        int st = jct_config_load(config_path.c_str(), &cfg_params, &cfg_opts);
        if (st != JCT_OK) die(2, std::string("config: ") + jct_last_error());
        run.omega0 = jct_params_omega0(cfg_params);
        run.g1 = jct_params_g1(cfg_params);
        run.j = jct_params_j(cfg_params);
        run.theta = jct_params_theta(cfg_params);
        run.opts = cfg_opts;
        jct_params_destroy(cfg_params);
    }
    // flags win over the config file
    if (have_flag[0]) run.omega0 = omega0;
    if (have_flag[1]) run.g1 = g1;
    if (have_flag[2]) run.j = j;
    if (have_flag[3]) run.theta = theta;
    if (seed_flag) run.opts.seed = static_cast<uint64_t>(*seed_flag);
    if (restarts_flag) run.opts.n_random = *restarts_flag;

    try {
        if (solve_cmd->parsed()) return cmd_solve(run);
        if (sweep_cmd->parsed()) return cmd_sweep(run, g1_range, theta_range, svg, threads);
        if (figure_cmd->parsed()) {
            std::optional<double> th;
            if (have_flag[3]) th = run.theta;
            return cmd_figure(run, fig, th, svg);
        }
        if (validate_cmd->parsed()) return cmd_validate(run, nmax, sector);
    } catch (const CLI::ValidationError& e) {
        die(2, e.what());
    } catch (const std::exception& e) {
        die(3, e.what());
    }
    return 2;
}
