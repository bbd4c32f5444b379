#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "jct/errors.hpp"

namespace jct {

using cplx = std::complex<double>;

inline constexpr double omega_c = 1.0; // all frequencies are ratios to the cavity frequency

/// Physical parameters of the trimer. Immutable after construction; theta is
/// stored wrapped into (-pi, pi].
class SystemParams {
public:
    SystemParams(double omega0, double g1, double j, double theta);

    double omega0() const noexcept { return omega0_; }
    double g1() const noexcept { return g1_; }
    double j() const noexcept { return j_; }
    double theta() const noexcept { return theta_; }

    /// g = g1 * sqrt(omega0 * omega_c)
    double g() const noexcept { return g_; }
    /// eta = omega0 / omega_c
    double eta() const noexcept { return omega0_; }

    SystemParams with_g1(double g1) const { return {omega0_, g1, j_, theta_}; }
    SystemParams with_theta(double theta) const { return {omega0_, g1_, j_, theta}; }

private:
    double omega0_;
    double g1_;
    double j_;
    double theta_;
    double g_;
};

SystemParams make_params(double omega0, double g1, double j, double theta);

/// Wraps an angle into (-pi, pi]. Idempotent on in-range values.
double wrap_angle(double theta);

/// The triple of complex cavity displacements, with cyclic site indexing.
struct Amplitudes {
    std::array<cplx, 3> alpha{};

    cplx& operator[](int n) { return alpha[static_cast<size_t>(n)]; }
    const cplx& operator[](int n) const { return alpha[static_cast<size_t>(n)]; }

    /// Cyclic access: site(3) == site(0), site(-1) == site(2).
    const cplx& site(int n) const { return alpha[static_cast<size_t>(((n % 3) + 3) % 3)]; }

    bool finite() const noexcept;
    double max_abs() const noexcept;
    double norm() const noexcept; // sqrt(sum |alpha_n|^2)

    friend Amplitudes operator*(const cplx& c, const Amplitudes& a) {
        return {{c * a.alpha[0], c * a.alpha[1], c * a.alpha[2]}};
    }
    friend Amplitudes operator-(const Amplitudes& a) { return cplx(-1.0, 0.0) * a; }
    bool operator==(const Amplitudes&) const = default;
};

/// Cyclic translation by k sites: result[n] = a[n+k].
Amplitudes translate(const Amplitudes& a, int k);

/// Rotates the global phase so that alpha_3 is real and nonnegative (falling
/// back to the last nonzero site when alpha_3 vanishes).
Amplitudes gauge_fix(const Amplitudes& a);

/// Per-site normalization factor Delta_n = sqrt(4 g^2 |alpha_n|^2 + omega0^2).
struct SiteAux {
    double delta;
};

SiteAux delta_of(cplx alpha_n, const SystemParams& p);

namespace detail {
void require_finite(double v, const char* field);
}

} // namespace jct
