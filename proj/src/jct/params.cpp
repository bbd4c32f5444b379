#include "jct/params.hpp"

#include <numbers>

namespace jct {

namespace detail {

void require_finite(double v, const char* field) {
    if (!std::isfinite(v))
        throw error(errc::invalid_argument, std::string("non-finite value for field '") + field + "'");
}

} // namespace detail

double wrap_angle(double theta) {
    double w = std::remainder(theta, 2.0 * std::numbers::pi);
    if (w <= -std::numbers::pi) w += 2.0 * std::numbers::pi;
    return w;
}

SystemParams::SystemParams(double omega0, double g1, double j, double theta) {
    detail::require_finite(omega0, "omega0");
    detail::require_finite(g1, "g1");
    detail::require_finite(j, "j");
    detail::require_finite(theta, "theta");
    if (omega0 <= 0.0) throw error(errc::invalid_argument, "field 'omega0' must be > 0");
    if (g1 < 0.0) throw error(errc::invalid_argument, "field 'g1' must be >= 0");
    if (j < 0.0) throw error(errc::invalid_argument, "field 'j' must be >= 0");
    omega0_ = omega0;
    g1_ = g1;
    j_ = j;
    theta_ = wrap_angle(theta);
    g_ = g1 * std::sqrt(omega0 * omega_c);
}

SystemParams make_params(double omega0, double g1, double j, double theta) {
    return {omega0, g1, j, theta};
}

bool Amplitudes::finite() const noexcept {
    for (const auto& a : alpha)
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) return false;
    return true;
}

double Amplitudes::max_abs() const noexcept {
    double m = 0.0;
    for (const auto& a : alpha) m = std::max(m, std::abs(a));
    return m;
}

double Amplitudes::norm() const noexcept {
    double s = 0.0;
    for (const auto& a : alpha) s += std::norm(a);
    return std::sqrt(s);
}

Amplitudes translate(const Amplitudes& a, int k) {
    Amplitudes out;
    for (int n = 0; n < 3; ++n) out[n] = a.site(n + k);
    return out;
}

Amplitudes gauge_fix(const Amplitudes& a) {
    int ref = -1;
    for (int n = 2; n >= 0; --n) {
        if (std::abs(a[n]) > 0.0) {
            ref = n;
            break;
        }
    }
    if (ref < 0) return a;
    cplx phase = std::conj(a[ref]) / std::abs(a[ref]);
    Amplitudes out = phase * a;
    out[ref] = cplx(std::abs(a[ref]), 0.0); // exact by construction
    return out;
}

SiteAux delta_of(cplx alpha_n, const SystemParams& p) {
    if (!std::isfinite(alpha_n.real()) || !std::isfinite(alpha_n.imag()))
        throw error(errc::invalid_argument, "non-finite value for field 'alpha_n'");
    double g2 = p.g() * p.g();
    return {std::sqrt(4.0 * g2 * std::norm(alpha_n) + p.omega0() * p.omega0())};
}

} // namespace jct
