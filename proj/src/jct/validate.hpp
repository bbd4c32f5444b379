#pragma once

#include <optional>

#include "jct/phase_diagram.hpp"

namespace jct {

/// Oracle checks behind the `validate` command: exact-diagonalization
/// symmetries, the weak-coupling dispersion comparison (with its eta-scaling
/// counterpart), finite-difference gradient consistency, brute-force vs
/// multistart agreement, and seed independence. One labeled row per check
/// with columns (measured, threshold, pass).
Table validate_suite(const SystemParams& base, const SolverOptions& opts, int n_max,
                     std::optional<int> sector);

bool all_checks_pass(const Table& report);

} // namespace jct
