#include <cmath>
#include <string>

#include "centralspin/error.hpp"
#include "centralspin/oracles.hpp"

namespace cspin::oracles {

CentralOracle::CentralOracle(const xychain::ChainParams& chain,
                             const dicke::CentralParams& central, Boundary boundary)
    : chain_(chain), central_(central) {
  chain_.validate();
  central_.validate();
  if (chain_.n_sites > kMaxOracleSites) {
    throw ValidationError("central_reduced_oracle: n_sites " + std::to_string(chain_.n_sites) +
                          " exceeds " + std::to_string(kMaxOracleSites));
  }
  coeffs_ = dicke::coherent_coeffs(central_.n_central, central_.polar, central_.azimuth);

  const numkit::HermEigen bath = numkit::herm_eig(spin_chain_matrix(chain_, boundary));
  // Shift by the ground energy so e^{-beta E} cannot overflow.
  const double ground = bath.eigenvalues(0);
  numkit::RealVector weights(bath.dim());
  for (numkit::Index n = 0; n < bath.dim(); ++n) {
    weights(n) = std::exp(-central_.beta * (bath.eigenvalues(n) - ground));
  }
  const double shifted_z = weights.sum();
  log_partition_function_ = std::log(shifted_z) - central_.beta * ground;
  thermal_ = bath.reconstruct(weights / shifted_z);

  branches_.reserve(central_.dim());
  for (int a = 0; a < central_.dim(); ++a) {
    const double h = chain_.field + 2.0 * central_.coupling * central_.label(a);
    branches_.push_back(numkit::herm_eig(spin_chain_matrix(chain_.with_field(h), boundary)));
  }
}

ComplexMatrix CentralOracle::decoherence(double t) const {
  const int dim = central_.dim();
  std::vector<ComplexMatrix> propagators;
  std::vector<ComplexMatrix> weighted;
  propagators.reserve(dim);
  weighted.reserve(dim);
  for (const numkit::HermEigen& branch : branches_) {
    propagators.push_back(branch.evolution(t));
    weighted.push_back(propagators.back() * thermal_);
  }
  // Tr[U_j^dag U_i rho_b] = sum_{ab} conj(U_j)_{ab} (U_i rho_b)_{ab}
  ComplexMatrix out(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      out(i, j) = propagators[j].conjugate().cwiseProduct(weighted[i]).sum();
    }
  }
  return out;
}

ComplexMatrix CentralOracle::matrix_at(double t) const {
  return (coeffs_ * coeffs_.adjoint()).cwiseProduct(decoherence(t));
}

DensityMatrix central_reduced_oracle(const xychain::ChainParams& chain,
                                     const dicke::CentralParams& central, double t,
                                     Boundary boundary) {
  return CentralOracle(chain, central, boundary).at(t);
}

}  // namespace cspin::oracles
