#include "jct/ed_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace jct {

namespace {

long full_dim(int n_max) {
    long d = n_max + 1;
    return d * d * d * 8;
}

} // namespace

FockBasis make_basis(const FockConfig& cfg) {
    if (cfg.n_max < 1) throw error(errc::invalid_argument, "n_max must be >= 1");
    if (full_dim(cfg.n_max) > cfg.dim_cap)
        throw error(errc::dimension_cap, "full-space dimension (n_max+1)^3 * 8 exceeds the cap");
    FockBasis b;
    b.n_max = cfg.n_max;
    b.sector = cfg.sector;
    for (int n1 = 0; n1 <= cfg.n_max; ++n1)
        for (int n2 = 0; n2 <= cfg.n_max; ++n2)
            for (int n3 = 0; n3 <= cfg.n_max; ++n3)
                for (int s1 = 0; s1 < 2; ++s1)
                    for (int s2 = 0; s2 < 2; ++s2)
                        for (int s3 = 0; s3 < 2; ++s3) {
                            if (cfg.sector && n1 + n2 + n3 + s1 + s2 + s3 != *cfg.sector) continue;
                            b.states.push_back({n1, n2, n3, s1, s2, s3});
                        }
    if (b.states.empty()) throw error(errc::invalid_argument, "empty N_tot sector");
    return b;
}

namespace {

struct StateIndex {
    // dense lookup over the full product space
    std::vector<long> index;
    int n_max;

    explicit StateIndex(const FockBasis& b) : n_max(b.n_max) {
        index.assign(static_cast<size_t>(full_dim(n_max)), -1);
        for (size_t i = 0; i < b.states.size(); ++i) index[key(b.states[i])] = static_cast<long>(i);
    }
    size_t key(const std::array<int, 6>& s) const {
        long d = n_max + 1;
        long k = ((s[0] * d + s[1]) * d + s[2]);
        k = ((k * 2 + s[3]) * 2 + s[4]) * 2 + s[5];
        return static_cast<size_t>(k);
    }
    long find(const std::array<int, 6>& s) const {
        if (s[0] < 0 || s[1] < 0 || s[2] < 0 || s[0] > n_max || s[1] > n_max || s[2] > n_max)
            return -1;
        return index[key(s)];
    }
};

} // namespace

Eigen::MatrixXcd build_hamiltonian(const SystemParams& p, const FockBasis& basis) {
    const size_t dim = basis.dim();
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(static_cast<long>(dim), static_cast<long>(dim));
    const StateIndex idx(basis);
    const cplx hop = std::polar(p.j(), p.theta());
    const double g = p.g();

    for (size_t i = 0; i < dim; ++i) {
        const auto& s = basis.states[i];
        double diag = omega_c * (s[0] + s[1] + s[2]);
        diag += 0.5 * p.omega0() * ((s[3] ? 1 : -1) + (s[4] ? 1 : -1) + (s[5] ? 1 : -1));
        h(static_cast<long>(i), static_cast<long>(i)) += diag;

        for (int n = 0; n < 3; ++n) {
            // g a_n^dag sigma_n^-  (+ h.c. via the conjugate entry)
            if (s[3 + n] == 1) {
                auto t = s;
                t[3 + n] = 0;
                t[n] += 1;
                long j = idx.find(t);
                if (j >= 0) {
                    cplx amp = g * std::sqrt(static_cast<double>(s[n] + 1));
                    h(j, static_cast<long>(i)) += amp;
                    h(static_cast<long>(i), j) += std::conj(amp);
                }
            }
            // J e^{i theta} a_n^dag a_{n+1}  (+ h.c.)
            int m = (n + 1) % 3;
            if (s[m] >= 1) {
                auto t = s;
                t[m] -= 1;
                t[n] += 1;
                long j = idx.find(t);
                if (j >= 0) {
                    cplx amp = hop * std::sqrt(static_cast<double>((s[n] + 1) * s[m]));
                    h(j, static_cast<long>(i)) += amp;
                    h(static_cast<long>(i), j) += std::conj(amp);
                }
            }
        }
    }
    return h;
}

Eigen::MatrixXcd build_hamiltonian(const SystemParams& p, const FockConfig& cfg) {
    return build_hamiltonian(p, make_basis(cfg));
}

double commutator_norm(const SystemParams& p, const FockConfig& cfg) {
    const FockBasis basis = make_basis(cfg);
    const Eigen::MatrixXcd h = build_hamiltonian(p, basis);
    const long dim = h.rows();
    double norm = 0.0;
    for (long i = 0; i < dim; ++i)
        for (long j = 0; j < dim; ++j) {
            double dn = static_cast<double>(basis.n_tot(static_cast<size_t>(j)) -
                                            basis.n_tot(static_cast<size_t>(i)));
            norm = std::max(norm, std::abs(h(i, j) * dn));
        }
    return norm;
}

EdResult ed_ground(const SystemParams& p, const FockConfig& cfg) {
    const FockBasis basis = make_basis(cfg);
    const Eigen::MatrixXcd h = build_hamiltonian(p, basis);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);

    EdResult r;
    r.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    const Eigen::VectorXcd psi = es.eigenvectors().col(0);
    const StateIndex idx(basis);

    for (int n = 0; n < 3; ++n) {
        cplx a = 0.0;
        cplx bond = 0.0; // <a_n^dag a_{n+1}>
        int m = (n + 1) % 3;
        for (size_t i = 0; i < basis.dim(); ++i) {
            const auto& s = basis.states[i];
            if (s[n] >= 1) { // <j| a_n |i>, j has one photon less at n
                auto t = s;
                t[n] -= 1;
                long j = idx.find(t);
                if (j >= 0) a += std::conj(psi(j)) * std::sqrt(static_cast<double>(s[n])) * psi(static_cast<long>(i));
            }
            if (s[m] >= 1) { // a_n^dag a_m
                auto t = s;
                t[m] -= 1;
                t[n] += 1;
                long j = idx.find(t);
                if (j >= 0)
                    bond += std::conj(psi(j)) * std::sqrt(static_cast<double>((s[n] + 1) * s[m])) *
                            psi(static_cast<long>(i));
            }
        }
        r.a_expect[static_cast<size_t>(n)] = a;
        r.current_expect += -2.0 * bond.imag();
    }
    for (size_t i = 0; i < basis.dim(); ++i)
        r.n_tot_expect += static_cast<double>(basis.n_tot(i)) * std::norm(psi(static_cast<long>(i)));
    r.commutator_norm = commutator_norm(p, cfg);
    return r;
}

std::array<double, 3> photon_branch_excitations(const SystemParams& p, int n_max) {
    FockConfig cfg;
    cfg.n_max = n_max;
    cfg.sector = 1;
    const FockBasis basis = make_basis(cfg);
    const Eigen::MatrixXcd h = build_hamiltonian(p, basis);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);

    std::vector<double> photon_like;
    for (long k = 0; k < es.eigenvalues().size(); ++k) {
        double weight = 0.0;
        for (size_t i = 0; i < basis.dim(); ++i) {
            const auto& s = basis.states[i];
            bool one_photon = (s[0] + s[1] + s[2] == 1) && (s[3] + s[4] + s[5] == 0);
            if (one_photon) weight += std::norm(es.eigenvectors()(static_cast<long>(i), k));
        }
        if (weight > 0.9) photon_like.push_back(es.eigenvalues()(k));
    }
    if (photon_like.size() != 3)
        throw error(errc::no_convergence, "photon-like branch identification failed");
    std::sort(photon_like.begin(), photon_like.end());
    const double e0 = -1.5 * p.omega0(); // N_tot = 0 block
    return {photon_like[0] - e0, photon_like[1] - e0, photon_like[2] - e0};
}

MeanFieldSolution brute_force_minimize(const SystemParams& p, const BruteForceOptions& opts) {
    std::mt19937_64 rng(opts.seed);
    auto uniform = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    const double radius = 2.0 * std::max(p.g1(), 0.05) * std::sqrt(p.eta());

    struct Sample {
        double e;
        Amplitudes a;
    };
    std::vector<Sample> top;
    top.reserve(static_cast<size_t>(opts.n_descents) + 1);

    for (long i = 0; i < opts.n_samples; ++i) {
        // uniform in the 6-ball: isotropic Gaussian direction, radius ~ u^(1/6)
        Amplitudes a;
        double norm2 = 0.0;
        for (int n = 0; n < 3; ++n) {
            double u1 = uniform(), u2 = uniform();
            double r = std::sqrt(-2.0 * std::log(std::max(u1, 1e-300)));
            a[n] = std::polar(r, 2.0 * std::numbers::pi * u2);
            norm2 += std::norm(a[n]);
        }
        double scale = radius * std::pow(uniform(), 1.0 / 6.0) / std::sqrt(std::max(norm2, 1e-300));
        for (int n = 0; n < 3; ++n) a[n] *= scale;

        double e = classical_energy(a, p);
        if (top.size() < static_cast<size_t>(opts.n_descents)) {
            top.push_back({e, a});
            std::push_heap(top.begin(), top.end(), [](const Sample& l, const Sample& r) { return l.e < r.e; });
        } else if (e < top.front().e) {
            std::pop_heap(top.begin(), top.end(), [](const Sample& l, const Sample& r) { return l.e < r.e; });
            top.back() = {e, a};
            std::push_heap(top.begin(), top.end(), [](const Sample& l, const Sample& r) { return l.e < r.e; });
        }
    }

    const double tol_abs = opts.tol_residual * p.omega0();
    bool found = false;
    Amplitudes best;
    double best_e = 0.0;
    for (auto& s : top) {
        Amplitudes a = s.a;
        if (!local_minimize(a, p, tol_abs, opts.max_iter)) continue;
        double e = classical_energy(a, p);
        if (!found || e < best_e) {
            found = true;
            best = a;
            best_e = e;
        }
    }
    // the zero configuration is always stationary; it also absorbs near-zero
    // descents in the normal phase
    const double zero_e = classical_energy(Amplitudes{}, p);
    if (!found || zero_e < best_e || best.max_abs() < 1e-8 * std::sqrt(p.eta())) {
        best = Amplitudes{};
        best_e = zero_e;
    }

    MeanFieldSolution sol;
    sol.amplitudes = gauge_fix(best);
    sol.classical_energy = best_e;
    sol.residual = max_residual(sol.amplitudes, p);
    sol.phase = classify(sol.amplitudes, p);
    if (sol.amplitudes.max_abs() == 0.0 || sol.amplitudes.max_abs() < 1e-8 * std::sqrt(p.eta())) {
        sol.spectrum = np_branch_spectrum(p);
    } else {
        sol.spectrum = diagonalize(build_form_unchecked(sol.amplitudes, p));
    }
    sol.ground_energy = sol.spectrum.ground_energy;
    sol.seed = opts.seed;
    return sol;
}

Amplitudes finite_diff_gradient(const Amplitudes& alpha, const SystemParams& p, double step) {
    if (step <= 0.0) throw error(errc::invalid_argument, "step must be > 0");
    Amplitudes d;
    for (int n = 0; n < 3; ++n) {
        auto shift = [&](cplx dz) {
            Amplitudes a = alpha;
            a[n] += dz;
            return classical_energy(a, p);
        };
        double de_da = (shift(cplx(step, 0.0)) - shift(cplx(-step, 0.0))) / (2.0 * step);
        double de_db = (shift(cplx(0.0, step)) - shift(cplx(0.0, -step))) / (2.0 * step);
        d[n] = 0.5 * cplx(de_da, de_db);
    }
    return d;
}

} // namespace jct
