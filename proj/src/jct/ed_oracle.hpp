#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "jct/meanfield.hpp"

namespace jct {

struct FockConfig {
    int n_max = 2;                    // photon cutoff per cavity
    std::optional<int> sector;       // optional total-excitation restriction
    int dim_cap = 20000;             // on the full-space dimension (n_max+1)^3 * 8
};

/// Truncated product basis (three cavities x three two-level atoms), optionally
/// restricted to one N_tot block. Hopping and JC terms conserve N_tot, so the
/// blocks are exact.
struct FockBasis {
    int n_max = 0;
    std::optional<int> sector;
    // state encoding: (n1, n2, n3, s1, s2, s3), spins in {0, 1}
    std::vector<std::array<int, 6>> states;

    int n_tot(size_t i) const {
        const auto& s = states[i];
        return s[0] + s[1] + s[2] + s[3] + s[4] + s[5];
    }
    size_t dim() const { return states.size(); }
};

FockBasis make_basis(const FockConfig& cfg);

/// Hermitian matrix of H = sum_n [H_JC^(n) + H_hop^(n)] on the basis.
Eigen::MatrixXcd build_hamiltonian(const SystemParams& p, const FockConfig& cfg);
Eigen::MatrixXcd build_hamiltonian(const SystemParams& p, const FockBasis& basis);

/// max |[H, N_tot]_{ij}| on the truncated space (N_tot is diagonal here).
double commutator_norm(const SystemParams& p, const FockConfig& cfg);

struct EdResult {
    std::vector<double> eigenvalues; // ascending
    std::array<cplx, 3> a_expect{};
    double n_tot_expect = 0.0;
    double current_expect = 0.0;
    double commutator_norm = 0.0;
};

EdResult ed_ground(const SystemParams& p, const FockConfig& cfg);

/// Excitation energies of the three photon-like eigenstates in the N_tot = 1
/// sector (identified by single-photon basis weight > 0.9), relative to the
/// N_tot = 0 ground energy -3 omega0/2. Sorted ascending.
std::array<double, 3> photon_branch_excitations(const SystemParams& p, int n_max = 2);

struct BruteForceOptions {
    long n_samples = 100000;
    int n_descents = 100;
    std::uint64_t seed = 2024;
    double tol_residual = 1e-10;
    int max_iter = 500;
};

/// Independent check of solve(): dense random search over the ball
/// |alpha_n| <= 2 g1 sqrt(eta) followed by local descent from the best
/// samples; returns the best stationary point found.
MeanFieldSolution brute_force_minimize(const SystemParams& p, const BruteForceOptions& opts = {});

/// Central-difference Wirtinger derivative of classical_energy,
/// (dE/dA_n + i dE/dB_n)/2, matching the D_n convention.
Amplitudes finite_diff_gradient(const Amplitudes& alpha, const SystemParams& p, double step);

} // namespace jct
