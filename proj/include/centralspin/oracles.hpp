#pragma once

// Dense brute-force ground truth for the analytic modules: bath-chain
// Hamiltonians in the full 2^Nb space, the exact central-spin reduced state,
// and original/effective cavity-QED evolutions.

#include <vector>

#include "centralspin/cavity_params.hpp"
#include "centralspin/density_matrix.hpp"
#include "centralspin/dicke.hpp"
#include "centralspin/numkit.hpp"
#include "centralspin/xychain.hpp"

namespace cspin::oracles {

using numkit::ComplexMatrix;
using numkit::ComplexVector;

/// Boundary closing the chain.
///  - PeriodicSpin: sigma on site Nb+1 is sigma on site 1.
///  - PeriodicFermion: Jordan-Wigner fermions with c_{Nb+1} = c_1, which is
///    the spin boundary bond multiplied by -(parity); its spectrum is the
///    mode sum over the uniform momentum grid.
///  - Open: no boundary bond.
enum class Boundary { PeriodicSpin, PeriodicFermion, Open };

inline constexpr int kMaxChainSites = 12;
inline constexpr int kMaxOracleSites = 10;

/// Basis index bit i set means site i is spin up (occupied fermion mode).
ComplexMatrix spin_chain_matrix(const xychain::ChainParams& p, Boundary boundary);

/// prod_i sigma^z_i as a diagonal of +-1.
numkit::RealVector parity_diagonal(int n_sites);

/// Collective J_x, J_y, J_z = sum_i sigma_i / 2 on the 2^Nb space.
dicke::CollectiveOps chain_collective_ops(int n_sites);

/// Exact rho_c(t) by dense evolution of every H_m = H0(h + 2 eta m) against
/// the thermal bath state e^{-beta H0(h)} / Z. Decompositions are computed
/// once at construction.
class CentralOracle {
 public:
  CentralOracle(const xychain::ChainParams& chain, const dicke::CentralParams& central,
                Boundary boundary = Boundary::PeriodicFermion);

  ComplexMatrix decoherence(double t) const;
  ComplexMatrix matrix_at(double t) const;
  DensityMatrix at(double t) const { return DensityMatrix(matrix_at(t)); }

  /// log Tr e^{-beta H0(h)} of the dense chain.
  double log_partition_function() const { return log_partition_function_; }

 private:
  xychain::ChainParams chain_;
  dicke::CentralParams central_;
  ComplexVector coeffs_;
  std::vector<numkit::HermEigen> branches_;  // one per Dicke label
  ComplexMatrix thermal_;
  double log_partition_function_ = 0.0;
};

DensityMatrix central_reduced_oracle(const xychain::ChainParams& chain,
                                     const dicke::CentralParams& central, double t,
                                     Boundary boundary = Boundary::PeriodicFermion);

// --- cavity QED ------------------------------------------------------------

enum class CavityModel {
  Original,   // omega0 Jz + omega_a a^dag a + H0(h0) + g (a^dag J- + a J+)
  Effective2,  // H0(h0 - omega0) + (2 g^2/Delta) Jz a^dag a + (g^2/Delta) J+ J-
  Effective3,  // H0(h0 - omega0) + (2 g^2/Delta) Jz a^dag a
};

/// Full: all 2^Nb spin states, chain closed with the spin boundary.
/// Symmetric: Dicke sector of dimension Nb+1; requires lambda = 0 because
/// the two-body chain terms leave the sector.
enum class SpinSector { Full, Symmetric };

/// Tensor-product space photon (x) spin with index n * spin_dim + s.
struct CavitySpace {
  int photon_levels = 0;
  int spin_dim = 0;
  int dim() const { return photon_levels * spin_dim; }
};

CavitySpace cavity_space(const CavityParams& p, SpinSector sector);

/// Spin operators of the TC spins in the chosen sector.
dicke::CollectiveOps cavity_spin_ops(const CavityParams& p, SpinSector sector);

ComplexMatrix cavity_hamiltonian(const CavityParams& p, CavityModel model,
                                 SpinSector sector = SpinSector::Full);

/// Photon-number operator a^dag a on the full cavity space.
ComplexMatrix photon_number(const CavityParams& p, SpinSector sector);

/// Truncated coherent amplitudes e^{-nbar/2} nbar^{n/2} / sqrt(n!), n = 0..cutoff,
/// renormalized. Throws ToleranceError if the discarded weight is >= 1e-8.
ComplexVector coherent_field(double nbar, int fock_cutoff);

/// Spin-coherent state exp(mu J-) |j, j> / (1 + |mu|^2)^j, mu = e^{i phi} tan(theta/2).
ComplexVector spin_coherent_state(const CavityParams& p, SpinSector sector);

/// |alpha> (x) |mu>.
ComplexVector cavity_initial_state(const CavityParams& p, SpinSector sector);

/// <J_zeta> = <cos(zeta) J_x + sin(zeta) J_y> for a spin-only state.
double expectation_J(const ComplexVector& spin_state, double zeta,
                     const dicke::CollectiveOps& ops);

/// <J_zeta> on the photon (x) spin space, tracing out the field.
double expectation_J(const ComplexVector& state, double zeta, const dicke::CollectiveOps& ops,
                     const CavitySpace& space);

/// Population of the two highest retained Fock levels.
double fock_leakage(const ComplexVector& state, const CavitySpace& space);

struct DifferenceRatio {
  std::vector<double> omega0_t;
  std::vector<double> zeta;
  Eigen::MatrixXd k;  // k(time index, zeta index)
  double max_abs_k = 0.0;
  double max_leakage = 0.0;
  double truncated_weight = 0.0;
};

inline constexpr double kMaxFockLeakage = 1e-6;

/// K(t, zeta) = 2 (<J_zeta>_eff - <J_zeta>_ori) / Nb on a grid of rescaled
/// times omega0 t. Raises ToleranceError if Fock leakage reaches 1e-6.
/// Time points are evaluated on `jobs` threads.
DifferenceRatio difference_ratio(const CavityParams& p, const std::vector<double>& omega0_t,
                                 const std::vector<double>& zeta,
                                 CavityModel effective = CavityModel::Effective3,
                                 SpinSector sector = SpinSector::Full, int jobs = 1);

}  // namespace cspin::oracles
