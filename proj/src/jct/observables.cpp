#include "jct/observables.hpp"

#include <cmath>

namespace jct {

std::array<cplx, 3> order_parameters(const Amplitudes& alpha, const SystemParams& p) {
    const Amplitudes fixed = gauge_fix(alpha);
    const double s = 1.0 / std::sqrt(p.eta());
    return {fixed[0] * s, fixed[1] * s, fixed[2] * s};
}

double current(const Amplitudes& alpha, const SystemParams& p) {
    cplx bonds = std::conj(alpha[0]) * alpha[1] + std::conj(alpha[1]) * alpha[2] +
                 std::conj(alpha[2]) * alpha[0];
    return -2.0 * bonds.imag() / p.eta();
}

double chirality(const Amplitudes& alpha, const SystemParams& p) {
    struct Perm {
        int i, j, k, sign;
    };
    static constexpr Perm perms[6] = {{0, 1, 2, +1}, {1, 2, 0, +1}, {2, 0, 1, +1},
                                      {2, 1, 0, -1}, {0, 2, 1, -1}, {1, 0, 2, -1}};
    cplx sum = 0.0;
    for (const auto& t : perms)
        sum += static_cast<double>(t.sign) * alpha[t.i] * std::conj(alpha[t.j]) *
               (std::norm(alpha[t.k]) - 0.5);
    cplx c = cplx(0.0, -2.0) * sum;
    return c.real() / (p.eta() * p.eta());
}

Observables observables(const Amplitudes& alpha, const SystemParams& p) {
    Observables o;
    o.order_params = order_parameters(alpha, p);
    o.current = current(alpha, p);
    o.chirality = chirality(alpha, p);
    return o;
}

Amplitudes chiral_transform(const Amplitudes& alpha) {
    return {{alpha[2], alpha[1], alpha[0]}};
}

std::pair<Amplitudes, SystemParams> time_reversal(const Amplitudes& alpha, const SystemParams& p) {
    Amplitudes conj;
    for (int n = 0; n < 3; ++n) conj[n] = std::conj(alpha[n]);
    return {conj, p.with_theta(-p.theta())};
}

} // namespace jct
