#pragma once

#include <utility>

#include "jct/params.hpp"

namespace jct {

struct Observables {
    std::array<cplx, 3> order_params{}; // alpha_n / sqrt(eta), alpha_3-real gauge
    double current = 0.0;               // <I>/eta
    double chirality = 0.0;             // <C>/eta^2
};

/// alpha_n / sqrt(eta) in the alpha_3-real gauge.
std::array<cplx, 3> order_parameters(const Amplitudes& alpha, const SystemParams& p);

/// <I>/eta with I = i[(a1^dag a2 + a2^dag a3 + a3^dag a1) - h.c.], i.e.
/// -2 Im[a1* a2 + a2* a3 + a3* a1] / eta on coherent states.
double current(const Amplitudes& alpha, const SystemParams& p);

/// <C>/eta^2 with C = -2i sum_{ijk} eps_ijk a_i a_j^dag (n_k - 1/2), the sum
/// running over all six permutations. Computed as a complex contraction and
/// asserted real (imaginary residue below 1e-12 relative).
double chirality(const Amplitudes& alpha, const SystemParams& p);

Observables observables(const Amplitudes& alpha, const SystemParams& p);

/// Site relabeling 123 <-> 321.
Amplitudes chiral_transform(const Amplitudes& alpha);

/// Conjugates the displacements and maps theta -> -theta.
std::pair<Amplitudes, SystemParams> time_reversal(const Amplitudes& alpha, const SystemParams& p);

} // namespace jct
