#include "jct/bogoliubov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "jct/meanfield.hpp"
#include "jct/normal_phase.hpp"

namespace jct {

namespace {

using Mat6 = Eigen::Matrix<cplx, 6, 6>;

Mat6 sigma_s() {
    Mat6 s = Mat6::Zero();
    for (int i = 0; i < 3; ++i) {
        s(i, i) = 1.0;
        s(i + 3, i + 3) = -1.0;
    }
    return s;
}

} // namespace

Eigen::Matrix<cplx, 6, 6> QuadraticBosonForm::matrix() const {
    Mat6 m = Mat6::Zero();
    const cplx h = hop;
    const cplx hc = std::conj(hop);
    // particle-particle block: on-site mu, hopping J e^{i theta} on bonds n -> n+1
    Eigen::Matrix<cplx, 3, 3> a;
    a << mu[0], h, hc,
         hc, mu[1], h,
         h, hc, mu[2];
    m.block<3, 3>(0, 0) = a;
    m.block<3, 3>(3, 3) = a.conjugate();
    for (int n = 0; n < 3; ++n) {
        m(n, n + 3) = nu[static_cast<size_t>(n)];
        m(n + 3, n) = std::conj(nu[static_cast<size_t>(n)]);
    }
    return m;
}

QuadraticBosonForm build_form_unchecked(const Amplitudes& alpha, const SystemParams& p) {
    const double g2 = p.g() * p.g();
    const double g4 = g2 * g2;
    const double w0 = p.omega0();
    const cplx phase = std::polar(1.0, p.theta());
    QuadraticBosonForm f;
    f.hop = p.j() * phase;

    double c1 = 0.0, corr = 0.0;
    for (int n = 0; n < 3; ++n) {
        const cplx an = alpha[n];
        const double d = delta_of(an, p).delta;
        const double d2 = d * d;
        const double d3 = d2 * d;
        // simplified via 4 g^2 |alpha|^2 = Delta^2 - omega0^2 (finite at alpha -> 0)
        f.mu[static_cast<size_t>(n)] = omega_c - g2 * (d2 + w0 * w0) / (2.0 * d3);
        f.nu[static_cast<size_t>(n)] = 2.0 * g4 * an * an / d3;
        c1 += omega_c * std::norm(an) + 2.0 * p.j() * std::real(phase * std::conj(an) * alpha.site(n + 1));
        corr += d / 2.0 - g2 * w0 / (2.0 * d2);
    }
    f.c2 = c1 - corr;
    f.c3 = f.c2 - 0.5 * (f.mu[0] + f.mu[1] + f.mu[2]);
    return f;
}

QuadraticBosonForm build_form(const Amplitudes& alpha, const SystemParams& p) {
    if (!alpha.finite())
        throw error(errc::invalid_argument, "non-finite value for field 'alpha'");
    const double floor = std::numeric_limits<double>::epsilon() * p.eta();
    for (int n = 0; n < 3; ++n)
        if (std::norm(alpha[n]) < floor)
            throw error(errc::degenerate_site,
                        "site " + std::to_string(n + 1) +
                            " has |alpha|^2 below eps_machine * eta; use the NP branch");
    return build_form_unchecked(alpha, p);
}

std::array<cplx, 6> dynamical_eigenvalues(const QuadraticBosonForm& form) {
    Mat6 sm = sigma_s() * form.matrix();
    Eigen::ComplexEigenSolver<Mat6> es(sm, false);
    std::array<cplx, 6> out;
    for (int i = 0; i < 6; ++i) out[static_cast<size_t>(i)] = es.eigenvalues()(i);
    return out;
}

BogoliubovSpectrum diagonalize(const QuadraticBosonForm& form) {
    BogoliubovSpectrum out;
    const Mat6 m = form.matrix();
    Eigen::SelfAdjointEigenSolver<Mat6> es(m);
    const auto& d = es.eigenvalues();

    if (d.minCoeff() >= -zero_tol) {
        // Energetically stable: the spectrum of Sigma_s M equals that of the
        // Hermitian S Sigma_s S with S = M^{1/2}, which stays accurate at the
        // Goldstone zero where Sigma_s M is defective.
        Eigen::Matrix<double, 6, 1> dc = d.cwiseMax(0.0);
        Mat6 sqrtm = es.eigenvectors() * dc.cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();
        Mat6 x = sqrtm * sigma_s() * sqrtm;
        Eigen::SelfAdjointEigenSolver<Mat6> ex(x, Eigen::EigenvaluesOnly);
        for (int i = 0; i < 3; ++i) {
            double e = ex.eigenvalues()(i + 3);
            out.eps[static_cast<size_t>(i)] = (e < 0.0 && e > -zero_tol) ? 0.0 : e;
        }
        out.stable = true;
    } else {
        // Saddle: report the three largest-real-part eigenvalues of Sigma_s M.
        auto ev = dynamical_eigenvalues(form);
        std::sort(ev.begin(), ev.end(), [](const cplx& a, const cplx& b) { return a.real() < b.real(); });
        for (int i = 0; i < 3; ++i) out.eps[static_cast<size_t>(i)] = ev[static_cast<size_t>(i + 3)].real();
        std::sort(out.eps.begin(), out.eps.end());
        out.stable = false;
    }
    out.ground_energy = form.c3 + 0.5 * (out.eps[0] + out.eps[1] + out.eps[2]);
    return out;
}

UspSpectrum usp_spectrum(const SystemParams& p) {
    const Amplitudes a = usp_amplitude(p, +1);
    const double d = delta_of(a[0], p).delta;
    const double g2 = p.g() * p.g();
    UspSpectrum s;
    s.delta0 = d;
    s.mu0 = omega_c - g2 * (d * d + p.omega0() * p.omega0()) / (2.0 * d * d * d);
    s.nu0 = g2 * (d * d - p.omega0() * p.omega0()) / (2.0 * d * d * d);
    const auto qs = momenta();
    for (size_t i = 0; i < 3; ++i) s.omega_q[i] = s.mu0 + 2.0 * p.j() * std::cos(p.theta() - qs[i]);
    for (size_t i = 0; i < 3; ++i) {
        double wq = s.omega_q[i];
        double wmq = s.mu0 + 2.0 * p.j() * std::cos(p.theta() + qs[i]);
        double disc = (wq + wmq) * (wq + wmq) - 4.0 * s.nu0 * s.nu0;
        if (disc < 0.0) {
            if (disc < -zero_tol)
                throw error(errc::unstable_form, "uniform branch dynamically unstable at this (g1, theta)");
            disc = 0.0;
        }
        s.eps_q[i] = 0.5 * (wq - wmq) + 0.5 * std::sqrt(disc);
    }
    return s;
}

BogoliubovSpectrum np_branch_spectrum(const SystemParams& p) {
    NpSpectrum np = np_spectrum(p);
    BogoliubovSpectrum out;
    out.eps = np.eps_q;
    std::sort(out.eps.begin(), out.eps.end());
    out.stable = out.eps[0] >= -zero_tol;
    out.ground_energy = np.ground_energy;
    return out;
}

} // namespace jct
