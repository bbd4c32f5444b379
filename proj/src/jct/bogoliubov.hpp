#pragma once

#include <Eigen/Dense>

#include "jct/params.hpp"

namespace jct {

/// Eigenvalues within zero_tol of zero count as zero modes; stability accepts
/// negative eigenvalues down to -zero_tol.
inline constexpr double zero_tol = 1e-7 * omega_c;

/// Coefficients of the quadratic boson form
///   sum_n [ mu_n b_n^dag b_n + (nu_n/2 b_n^dag^2 + J e^{i theta} b_n^dag b_{n+1} + h.c.) ] + C2,
/// equivalently (1/2) v M v^dag + C3 with v = (b1^dag, b2^dag, b3^dag, b1, b2, b3).
struct QuadraticBosonForm {
    std::array<double, 3> mu{};
    std::array<cplx, 3> nu{};
    cplx hop{}; // J e^{i theta}
    double c2 = 0.0;
    double c3 = 0.0; // c2 - (1/2) sum mu_n

    Eigen::Matrix<cplx, 6, 6> matrix() const;
};

struct BogoliubovSpectrum {
    std::array<double, 3> eps{}; // sorted ascending
    bool stable = false;
    double ground_energy = 0.0;

    double min_eps() const { return eps[0]; }
};

/// Builds the quadratic form at the given displacements. Throws degenerate_site
/// when any |alpha_n|^2 < eps_machine * eta (callers must use the NP branch
/// instead).
QuadraticBosonForm build_form(const Amplitudes& alpha, const SystemParams& p);

/// Same coefficients without the degenerate-site guard; the simplified
/// formulas are finite in the alpha_n -> 0 limit (mu_n -> omega_c(1-g1^2)).
QuadraticBosonForm build_form_unchecked(const Amplitudes& alpha, const SystemParams& p);

/// Quasiparticle energies from the spectrum of Sigma_s * M,
/// Sigma_s = diag(1,1,1,-1,-1,-1). Stable iff M is positive semidefinite
/// (which forces the spectrum real and paired +/-); the three nonnegative
/// members are returned, and ground_energy = C3 + (1/2) sum eps_m.
BogoliubovSpectrum diagonalize(const QuadraticBosonForm& form);

/// Raw eigenvalues of Sigma_s * M (unsorted), for cross-checks.
std::array<cplx, 6> dynamical_eigenvalues(const QuadraticBosonForm& form);

/// Closed-form spectrum on the uniform (USP) solution, Eq. (7)-style:
/// omega_q = mu0 + 2J cos(theta - q),
/// eps_q = (omega_q - omega_{-q})/2 + sqrt((omega_q + omega_{-q})^2 - 4 nu0^2)/2.
struct UspSpectrum {
    std::array<double, 3> omega_q{}; // ordered as momenta()
    double nu0 = 0.0;
    std::array<double, 3> eps_q{};
    double mu0 = 0.0;
    double delta0 = 0.0;
};

UspSpectrum usp_spectrum(const SystemParams& p);

/// NP branch wrapped into the same spectrum type (nu = 0 case), with
/// ground_energy = E_g^NP. Reported for all g1; stable flags g1 <= g1c.
BogoliubovSpectrum np_branch_spectrum(const SystemParams& p);

} // namespace jct
