#pragma once

#include <map>
#include <string>

#include "jct/meanfield.hpp"
#include "jct/params.hpp"

namespace jct {

/// Parsed `key=value` file; `#` starts a comment, blank lines are skipped.
/// Recognized keys: omega0, g1, j, theta, n_random, max_iter, tol_residual, seed.
struct Config {
    std::map<std::string, std::string> values;

    bool has(const std::string& key) const { return values.count(key) > 0; }
    double get_double(const std::string& key) const;
    long get_long(const std::string& key) const;
};

Config parse_config_text(const std::string& text);
Config load_config(const std::string& path);

/// Params from a config, with built-in defaults for missing keys
/// (omega0 = 1000, g1 = 1, j = 0.05, theta = 0).
SystemParams params_from_config(const Config& cfg);

/// Solver options from the same file; missing keys keep their defaults.
SolverOptions solver_options_from_config(const Config& cfg);

} // namespace jct
