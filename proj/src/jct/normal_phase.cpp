#include "jct/normal_phase.hpp"

#include <cmath>
#include <numbers>

namespace jct {

std::array<double, 3> momenta() {
    constexpr double q = 2.0 * std::numbers::pi / 3.0;
    return {0.0, q, -q};
}

double NpSpectrum::eps_at(double q) const {
    auto qs = momenta();
    for (int i = 0; i < 3; ++i)
        if (std::abs(q - qs[static_cast<size_t>(i)]) < 1e-12) return eps_q[static_cast<size_t>(i)];
    throw error(errc::invalid_argument, "q must be one of {0, +2pi/3, -2pi/3}");
}

double np_dispersion(const SystemParams& p, double q) {
    bool ok = false;
    for (double qa : momenta())
        if (std::abs(q - qa) < 1e-12) ok = true;
    if (!ok) throw error(errc::invalid_argument, "q must be one of {0, +2pi/3, -2pi/3}");
    double wc_eff = omega_c * (1.0 - p.g1() * p.g1());
    return wc_eff + 2.0 * p.j() * std::cos(p.theta() - q);
}

double q_theta(const SystemParams& p) {
    double best_q = 0.0;
    double best_c = std::cos(p.theta());
    for (double q : momenta()) {
        double c = std::cos(p.theta() - q);
        if (c < best_c ||
            (c == best_c && (std::abs(q) < std::abs(best_q) ||
                             (std::abs(q) == std::abs(best_q) && q > best_q)))) {
            best_c = c;
            best_q = q;
        }
    }
    return best_q;
}

double critical_coupling(const SystemParams& p) {
    double radicand = 1.0 + (2.0 * p.j() / omega_c) * std::cos(p.theta() - q_theta(p));
    if (radicand <= 0.0)
        throw error(errc::below_critical, "critical coupling undefined: 1 + 2J cos(theta - q_theta) <= 0");
    return std::sqrt(radicand);
}

double np_ground_energy(const SystemParams& p) {
    return -1.5 * (p.omega0() + omega_c * p.g1() * p.g1());
}

NpSpectrum np_spectrum(const SystemParams& p) {
    NpSpectrum s;
    auto qs = momenta();
    for (size_t i = 0; i < 3; ++i) s.eps_q[i] = np_dispersion(p, qs[i]);
    s.ground_energy = np_ground_energy(p);
    return s;
}

} // namespace jct
