#include "jct/config.hpp"

#include <fstream>
#include <sstream>

namespace jct {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    size_t b = s.find_last_not_of(" \t\r");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

const char* known_keys[] = {"omega0", "g1", "j", "theta", "n_random", "max_iter", "tol_residual", "seed"};

} // namespace

double Config::get_double(const std::string& key) const {
    const std::string& v = values.at(key);
    size_t pos = 0;
    double d = std::stod(v, &pos);
    if (pos != v.size())
        throw error(errc::invalid_argument, "config key '" + key + "' is not a number: " + v);
    return d;
}

long Config::get_long(const std::string& key) const {
    const std::string& v = values.at(key);
    size_t pos = 0;
    long l = std::stol(v, &pos);
    if (pos != v.size())
        throw error(errc::invalid_argument, "config key '" + key + "' is not an integer: " + v);
    return l;
}

Config parse_config_text(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw error(errc::invalid_argument,
                        "config line " + std::to_string(lineno) + " is not key=value: " + line);
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        bool known = false;
        for (const char* k : known_keys)
            if (key == k) known = true;
        if (!known)
            throw error(errc::invalid_argument, "unknown config key '" + key + "'");
        cfg.values[key] = value;
    }
    return cfg;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::io_error, "cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

SystemParams params_from_config(const Config& cfg) {
    double omega0 = cfg.has("omega0") ? cfg.get_double("omega0") : 1000.0;
    double g1 = cfg.has("g1") ? cfg.get_double("g1") : 1.0;
    double j = cfg.has("j") ? cfg.get_double("j") : 0.05;
    double theta = cfg.has("theta") ? cfg.get_double("theta") : 0.0;
    return make_params(omega0, g1, j, theta);
}

SolverOptions solver_options_from_config(const Config& cfg) {
    SolverOptions o;
    if (cfg.has("n_random")) o.n_random = static_cast<int>(cfg.get_long("n_random"));
    if (cfg.has("max_iter")) o.max_iter = static_cast<int>(cfg.get_long("max_iter"));
    if (cfg.has("tol_residual")) o.tol_residual = cfg.get_double("tol_residual");
    if (cfg.has("seed")) o.seed = static_cast<std::uint64_t>(cfg.get_long("seed"));
    if (o.n_random < 0 || o.max_iter < 1 || o.tol_residual <= 0.0)
        throw error(errc::invalid_argument, "invalid solver options in config");
    return o;
}

} // namespace jct
