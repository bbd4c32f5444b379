#pragma once

#include <array>

#include "jct/params.hpp"

namespace jct {

/// The three quasimomenta of the trimer, in the fixed order {0, +2pi/3, -2pi/3}.
std::array<double, 3> momenta();

/// Normal-phase quasiparticle branch: eps_q for each momentum plus the
/// ground-state energy E_g^NP = -3(omega0 + omega_c g1^2)/2.
struct NpSpectrum {
    std::array<double, 3> eps_q{}; // ordered as momenta()
    double ground_energy = 0.0;

    double eps_at(double q) const;
    double min_eps() const { return std::min({eps_q[0], eps_q[1], eps_q[2]}); }
};

/// eps_q = omega_c (1 - g1^2) + 2 J cos(theta - q). q must be one of momenta().
double np_dispersion(const SystemParams& p, double q);

/// Momentum minimizing cos(theta - q); ties broken toward smaller |q|, then
/// toward positive q.
double q_theta(const SystemParams& p);

/// g1c = sqrt(1 + (2J/omega_c) cos(theta - q_theta)). Requires the radicand
/// to be positive (guaranteed for 2J < omega_c).
double critical_coupling(const SystemParams& p);

double np_ground_energy(const SystemParams& p);

NpSpectrum np_spectrum(const SystemParams& p);

} // namespace jct
