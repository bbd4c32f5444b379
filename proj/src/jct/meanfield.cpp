#include "jct/meanfield.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "jct/normal_phase.hpp"
#include "jct/observables.hpp"

namespace jct {

const char* phase_name(PhaseLabel p) {
    switch (p) {
    case PhaseLabel::NP: return "NP";
    case PhaseLabel::USP: return "USP";
    case PhaseLabel::FSP: return "FSP";
    case PhaseLabel::CFSP: return "CFSP";
    }
    return "?";
}

double classical_energy(const Amplitudes& alpha, const SystemParams& p) {
    const cplx phase = std::polar(1.0, p.theta());
    double e = 0.0;
    for (int n = 0; n < 3; ++n) {
        e += omega_c * std::norm(alpha[n]);
        e += 2.0 * p.j() * std::real(phase * std::conj(alpha[n]) * alpha.site(n + 1));
        e -= 0.5 * delta_of(alpha[n], p).delta;
    }
    return e;
}

Amplitudes gradient(const Amplitudes& alpha, const SystemParams& p) {
    const cplx phase = std::polar(1.0, p.theta());
    const double g2 = p.g() * p.g();
    Amplitudes d;
    for (int n = 0; n < 3; ++n) {
        double delta = delta_of(alpha[n], p).delta;
        d[n] = (omega_c - g2 / delta) * alpha[n] +
               p.j() * (phase * alpha.site(n + 1) + std::conj(phase) * alpha.site(n - 1));
    }
    return d;
}

double max_residual(const Amplitudes& alpha, const SystemParams& p) {
    return gradient(alpha, p).max_abs();
}

Eigen::Matrix<double, 6, 6> real_hessian(const Amplitudes& alpha, const SystemParams& p) {
    // complex Hessian blocks: dD_n/dalpha_m has mu_n on the diagonal and the
    // hopping pattern off it; dD_n/dalpha_m* is diag(nu_n).
    const QuadraticBosonForm f = build_form_unchecked(alpha, p);
    Eigen::Matrix<cplx, 3, 3> a;
    a << f.mu[0], f.hop, std::conj(f.hop),
         std::conj(f.hop), f.mu[1], f.hop,
         f.hop, std::conj(f.hop), f.mu[2];
    Eigen::Matrix<double, 6, 6> h;
    for (int n = 0; n < 3; ++n) {
        for (int m = 0; m < 3; ++m) {
            cplx anm = a(n, m);
            cplx nnm = (n == m) ? f.nu[static_cast<size_t>(n)] : cplx(0.0);
            h(2 * n, 2 * m) = 2.0 * std::real(anm + nnm);
            h(2 * n, 2 * m + 1) = 2.0 * std::imag(nnm - anm);
            h(2 * n + 1, 2 * m) = 2.0 * std::imag(anm + nnm);
            h(2 * n + 1, 2 * m + 1) = 2.0 * std::real(anm - nnm);
        }
    }
    return h;
}

Amplitudes usp_amplitude(const SystemParams& p, int sign) {
    const double g = p.g();
    const double denom = omega_c + 2.0 * p.j() * std::cos(p.theta());
    if (denom <= 0.0)
        throw error(errc::below_critical, "uniform branch undefined: omega_c + 2J cos theta <= 0");
    const double g2 = g * g;
    const double radicand = (g2 / denom) * (g2 / denom) - p.omega0() * p.omega0();
    if (radicand <= 0.0)
        throw error(errc::below_critical, "uniform amplitude radicand <= 0 (g1 below critical)");
    const double a = (sign >= 0 ? 1.0 : -1.0) * std::sqrt(radicand) / (2.0 * g);
    return {{cplx(a), cplx(a), cplx(a)}};
}

Amplitudes plane_wave_amplitude(const SystemParams& p, double q, int sign) {
    const double g = p.g();
    const double denom = omega_c + 2.0 * p.j() * std::cos(p.theta() - q);
    if (denom <= 0.0)
        throw error(errc::below_critical, "plane-wave branch undefined: omega_c + 2J cos(theta - q) <= 0");
    const double g2 = g * g;
    const double radicand = (g2 / denom) * (g2 / denom) - p.omega0() * p.omega0();
    if (radicand <= 0.0)
        throw error(errc::below_critical, "plane-wave amplitude radicand <= 0");
    const double a = (sign >= 0 ? 1.0 : -1.0) * std::sqrt(radicand) / (2.0 * g);
    Amplitudes out;
    for (int n = 0; n < 3; ++n) out[n] = std::polar(a, -q * static_cast<double>(n + 1));
    return out;
}

namespace {

using Vec6 = Eigen::Matrix<double, 6, 1>;

Vec6 to_vec(const Amplitudes& a) {
    Vec6 x;
    for (int n = 0; n < 3; ++n) {
        x(2 * n) = a[n].real();
        x(2 * n + 1) = a[n].imag();
    }
    return x;
}

Amplitudes from_vec(const Vec6& x) {
    Amplitudes a;
    for (int n = 0; n < 3; ++n) a[n] = cplx(x(2 * n), x(2 * n + 1));
    return a;
}

Vec6 real_grad(const Amplitudes& a, const SystemParams& p) {
    Amplitudes d = gradient(a, p);
    Vec6 g;
    for (int n = 0; n < 3; ++n) {
        g(2 * n) = 2.0 * d[n].real();
        g(2 * n + 1) = 2.0 * d[n].imag();
    }
    return g;
}

} // namespace

bool local_minimize(Amplitudes& alpha, const SystemParams& p, double tol_abs, int max_iter) {
    Vec6 x = to_vec(alpha);
    double e = classical_energy(from_vec(x), p);

    // descent warm-up toward the local basin
    double step = 0.25;
    for (int it = 0; it < max_iter; ++it) {
        Vec6 g = real_grad(from_vec(x), p);
        double gn = g.template lpNorm<Eigen::Infinity>();
        if (gn < 1e3 * tol_abs || gn < 1e-3) break;
        Vec6 xt = x - step * g;
        double et = classical_energy(from_vec(xt), p);
        int backtracks = 0;
        while (et > e && backtracks++ < 40) {
            step *= 0.5;
            xt = x - step * g;
            et = classical_energy(from_vec(xt), p);
        }
        if (et > e) break;
        x = xt;
        e = et;
        step = std::min(step * 1.5, 1.0);
    }

    // Levenberg-damped Newton on the stationarity system. The U(1) orbit
    // direction is an exact Hessian null vector; the damping keeps the solve
    // well posed without disturbing the physical directions.
    double lambda = 1e-8;
    double res = max_residual(from_vec(x), p);
    bool converged = res <= tol_abs;
    for (int it = 0; it < max_iter; ++it) {
        if (res <= tol_abs && converged) {
            // a few polish steps toward the floating-point floor
            for (int extra = 0; extra < 6; ++extra) {
                Eigen::Matrix<double, 6, 6> h = real_hessian(from_vec(x), p);
                h.diagonal().array() += lambda;
                Vec6 dx = h.ldlt().solve(-real_grad(from_vec(x), p));
                Vec6 xt = x + dx;
                double rt = max_residual(from_vec(xt), p);
                if (rt >= res) break;
                x = xt;
                res = rt;
            }
            break;
        }
        Eigen::Matrix<double, 6, 6> h = real_hessian(from_vec(x), p);
        h.diagonal().array() += lambda;
        Vec6 dx = h.ldlt().solve(-real_grad(from_vec(x), p));
        Vec6 xt = x + dx;
        double rt = max_residual(from_vec(xt), p);
        if (std::isfinite(rt) && rt < res) {
            x = xt;
            res = rt;
            lambda = std::max(lambda * 0.25, 1e-10);
            converged = res <= tol_abs;
        } else {
            lambda *= 10.0;
            if (lambda > 1e8) break;
        }
    }
    alpha = from_vec(x);
    return max_residual(alpha, p) <= tol_abs;
}

PhaseLabel classify(const Amplitudes& alpha, const SystemParams& p, const ClassifyTolerances& tol) {
    const double scale = std::sqrt(p.eta());
    if (alpha.max_abs() < tol.tol_np * scale) return PhaseLabel::NP;
    const Amplitudes fixed = gauge_fix(alpha);
    double spread = 0.0;
    for (int n = 0; n < 3; ++n)
        for (int m = n + 1; m < 3; ++m) spread = std::max(spread, std::abs(fixed[n] - fixed[m]));
    if (spread < tol.tol_unif * scale) return PhaseLabel::USP;
    if (std::abs(current(alpha, p)) < tol.tol_cur) return PhaseLabel::FSP;
    return PhaseLabel::CFSP;
}

namespace {

struct Candidate {
    Amplitudes alpha;      // gauge-fixed
    double e_cl = 0.0;
    double e_g = 0.0;
    double residual = 0.0;
    BogoliubovSpectrum spectrum;
    bool stable = false;
};

// total order: ground energy (with a small tie window), then lexicographic
// comparison of the gauge-fixed amplitudes
bool better(const Candidate& a, const Candidate& b, double tie_tol) {
    if (std::abs(a.e_g - b.e_g) > tie_tol) return a.e_g < b.e_g;
    for (int n = 0; n < 3; ++n) {
        if (a.alpha[n].real() != b.alpha[n].real()) return a.alpha[n].real() < b.alpha[n].real();
        if (a.alpha[n].imag() != b.alpha[n].imag()) return a.alpha[n].imag() < b.alpha[n].imag();
    }
    return false;
}

std::vector<Amplitudes> seed_list(const SystemParams& p, const SolverOptions& opts,
                                  std::span<const Amplitudes> extra) {
    std::vector<Amplitudes> seeds;
    seeds.push_back({}); // zero configuration

    for (int sign : {+1, -1}) {
        try {
            seeds.push_back(usp_amplitude(p, sign));
        } catch (const error&) {
        }
        for (double q : momenta()) {
            if (q == 0.0) continue; // already covered by the uniform branch
            try {
                seeds.push_back(plane_wave_amplitude(p, q, sign));
            } catch (const error&) {
            }
        }
    }

    // real two-up-one-down patterns and their translations/sign flips
    const double r = 0.5 * std::max(p.g1(), 0.1) * std::sqrt(p.eta());
    const Amplitudes pat{{cplx(r), cplx(r), cplx(-r)}};
    for (int k = 0; k < 3; ++k) {
        seeds.push_back(translate(pat, k));
        seeds.push_back(-translate(pat, k));
    }

    for (const auto& s : extra) seeds.push_back(s);

    std::mt19937_64 rng(opts.seed);
    const double radius = 2.0 * p.g1() * std::sqrt(p.eta());
    auto uniform = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    for (int i = 0; i < opts.n_random; ++i) {
        Amplitudes a;
        for (int n = 0; n < 3; ++n) {
            // uniform in the disc of radius `radius`
            double rr = radius * std::sqrt(uniform());
            double ph = 2.0 * std::numbers::pi * uniform();
            a[n] = std::polar(rr, ph);
        }
        seeds.push_back(a);
    }
    return seeds;
}

} // namespace

MeanFieldSolution solve(const SystemParams& p, const SolverOptions& opts,
                        std::span<const Amplitudes> extra_seeds) {
    const double tol_abs = opts.tol_residual * p.omega0();
    const double snap = 1e-8 * std::sqrt(p.eta());
    const auto seeds = seed_list(p, opts, extra_seeds);

    std::vector<Candidate> candidates;
    int converged_count = 0;
    for (const auto& seed : seeds) {
        Amplitudes a = seed;
        bool zero_seed = a.max_abs() == 0.0;
        if (!zero_seed && !local_minimize(a, p, tol_abs, opts.max_iter)) continue;
        ++converged_count;
        if (a.max_abs() < snap) a = Amplitudes{};

        Candidate c;
        c.alpha = gauge_fix(a);
        c.e_cl = classical_energy(c.alpha, p);
        c.residual = max_residual(c.alpha, p);
        if (c.alpha.max_abs() == 0.0) {
            c.spectrum = np_branch_spectrum(p);
        } else {
            c.spectrum = diagonalize(build_form_unchecked(c.alpha, p));
        }
        c.stable = c.spectrum.stable;
        c.e_g = c.spectrum.ground_energy;
        candidates.push_back(c);
    }

    if (converged_count == 0)
        throw error(errc::no_convergence, "no start converged within max_iter");

    const double tie_tol = 1e-10 * p.omega0();
    const Candidate* best = nullptr;
    for (const auto& c : candidates) {
        if (!c.stable) continue;
        if (!best || better(c, *best, tie_tol)) best = &c;
    }
    if (!best)
        throw error(errc::no_convergence, "all converged stationary points are unstable saddles");

    MeanFieldSolution sol;
    sol.amplitudes = best->alpha;
    sol.classical_energy = best->e_cl;
    sol.ground_energy = best->e_g;
    sol.residual = best->residual;
    sol.spectrum = best->spectrum;
    sol.phase = classify(best->alpha, p);
    sol.n_restarts_used = converged_count;
    sol.seed = opts.seed;
    return sol;
}

std::vector<MeanFieldSolution> degenerate_orbit(const MeanFieldSolution& sol, const SystemParams& p) {
    const Amplitudes base = gauge_fix(sol.amplitudes);
    const double tol = 1e-8 * std::max(base.max_abs(), 1.0);

    std::vector<Amplitudes> members;
    for (int sign : {+1, -1}) {
        for (int k = 0; k < 3; ++k) {
            Amplitudes m = translate(base, k);
            if (sign < 0) m = -m;
            bool dup = false;
            for (const auto& seen : members) {
                double d = 0.0;
                for (int n = 0; n < 3; ++n) d = std::max(d, std::abs(m[n] - seen[n]));
                if (d < tol) {
                    dup = true;
                    break;
                }
            }
            if (!dup) members.push_back(m);
        }
    }

    std::vector<MeanFieldSolution> out;
    for (const auto& m : members) {
        MeanFieldSolution s = sol;
        s.amplitudes = m;
        s.classical_energy = classical_energy(m, p);
        s.residual = max_residual(m, p);
        s.phase = classify(m, p);
        out.push_back(s);
    }
    return out;
}

} // namespace jct
