#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "jct/bogoliubov.hpp"
#include "jct/params.hpp"

namespace jct {

enum class PhaseLabel { NP, USP, FSP, CFSP };

const char* phase_name(PhaseLabel p);

struct ClassifyTolerances {
    double tol_np = 1e-4;   // max|alpha| < tol_np * sqrt(eta)  => NP
    double tol_unif = 1e-6; // gauge-fixed spread < tol_unif * sqrt(eta) => USP
    double tol_cur = 1e-8;  // |<I>| < tol_cur * eta separates FSP from CFSP
};

struct SolverOptions {
    int n_random = 8;
    int max_iter = 500;
    double tol_residual = 1e-10; // convergence at max|D_n| < tol_residual * omega0
    std::uint64_t seed = 12345;
};

struct MeanFieldSolution {
    Amplitudes amplitudes;        // alpha_3-real gauge
    double classical_energy = 0.0;
    double ground_energy = 0.0;   // E_cl-consistent full energy incl. zero point
    double residual = 0.0;        // max |D_n|
    PhaseLabel phase = PhaseLabel::NP;
    BogoliubovSpectrum spectrum;
    int n_restarts_used = 0;
    std::uint64_t seed = 0;
};

/// E_cl(alpha) = sum_n [ omega_c |alpha_n|^2 + 2J Re(e^{i theta} alpha_n* alpha_{n+1}) - Delta_n/2 ].
/// Its Wirtinger gradient d/d alpha_n* is exactly D_n.
double classical_energy(const Amplitudes& alpha, const SystemParams& p);

/// D_n = (omega_c - g^2/Delta_n) alpha_n + J (e^{i theta} alpha_{n+1} + e^{-i theta} alpha_{n-1}).
Amplitudes gradient(const Amplitudes& alpha, const SystemParams& p);

double max_residual(const Amplitudes& alpha, const SystemParams& p);

/// Real 6x6 Hessian of E_cl in coordinates (A1, B1, A2, B2, A3, B3).
Eigen::Matrix<double, 6, 6> real_hessian(const Amplitudes& alpha, const SystemParams& p);

/// Uniform closed form: alpha_n = sign * sqrt(g^4/(omega_c + 2J cos theta)^2 - omega0^2)/(2g).
/// Throws below_critical when the radicand is <= 0. sign is +1 or -1.
Amplitudes usp_amplitude(const SystemParams& p, int sign = +1);

/// Plane-wave stationary point alpha_n = A e^{-i q n} with
/// Delta = g^2/(omega_c + 2J cos(theta - q)); throws below_critical when the
/// amplitude radicand is <= 0. q must be one of momenta().
Amplitudes plane_wave_amplitude(const SystemParams& p, double q, int sign = +1);

/// Local stationary-point refinement from a starting guess: adaptive gradient
/// descent followed by Levenberg-damped Newton on the six real variables.
/// Returns false when max|D_n| fails to reach tol within max_iter.
bool local_minimize(Amplitudes& alpha, const SystemParams& p, double tol_abs, int max_iter);

PhaseLabel classify(const Amplitudes& alpha, const SystemParams& p,
                    const ClassifyTolerances& tol = {});

/// Multistart global search for the stationary point of lowest full ground
/// energy among stable candidates. Extra warm-start seeds may be supplied.
MeanFieldSolution solve(const SystemParams& p, const SolverOptions& opts = {},
                        std::span<const Amplitudes> extra_seeds = {});

/// Applies {3 cyclic translations} x {global sign flip} to the gauge-fixed
/// solution and deduplicates componentwise. Members carry equal classical
/// energies (symmetries of E_cl).
std::vector<MeanFieldSolution> degenerate_orbit(const MeanFieldSolution& sol, const SystemParams& p);

} // namespace jct
