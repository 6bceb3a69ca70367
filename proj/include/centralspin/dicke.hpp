#pragma once

// Symmetric (Dicke) sector of Nc central spins. Basis index a = n + Nc/2 for
// the Dicke label n = -Nc/2, ..., Nc/2, with Sz |n> = n |n>.

#include "centralspin/cavity_params.hpp"
#include "centralspin/numkit.hpp"
#include "centralspin/xychain.hpp"

namespace cspin::dicke {

using numkit::ComplexMatrix;
using numkit::ComplexVector;

struct CentralParams {
  int n_central = 1;     // Nc
  double coupling = 0.0;  // eta
  double beta = 0.0;      // inverse bath temperature
  double polar = 0.0;     // vartheta
  double azimuth = 0.0;   // varphi

  void validate() const;
  int dim() const { return n_central + 1; }
  /// Dicke label of basis index a.
  double label(int a) const { return a - 0.5 * n_central; }
};

/// c_n of the spin-coherent state |vartheta, varphi>, in the overflow-safe
/// form cos^{Nc/2-n}(vartheta/2) sin^{Nc/2+n}(vartheta/2) e^{-i(Nc/2+n)varphi}
/// sqrt(binom(Nc, Nc/2+n)).
ComplexVector coherent_coeffs(int n_central, double polar, double azimuth);

/// Collective spin matrices of total spin j = Nc/2.
struct CollectiveOps {
  ComplexMatrix sx, sy, sz;
  const ComplexMatrix& operator[](int axis) const { return axis == 0 ? sx : axis == 1 ? sy : sz; }
};

/// Spin-j matrices for 2j = two_j in the ascending-m basis; j = Nc/2 gives
/// the collective operators of Nc spin-1/2.
CollectiveOps spin_matrices(int two_j);
CollectiveOps collective_ops(int n_central);

/// log binom(n, k); exact for n <= 60 and via lgamma beyond.
double log_binomial(int n, int k);

/// Central-spin model obtained from the dispersive cavity Hamiltonian.
struct MappedModel {
  double detuning = 0.0;   // Delta
  double coupling = 0.0;   // eta = -g^2 / Delta
  xychain::ChainParams chain;  // bath with shifted field h0 - omega0 + eta Nc
};

/// Identifies cavity photons with Nc central spins (S_z = a^dagger a - Nc/2).
/// Matching H0(h0 - omega0) + (2 g^2/Delta) J_z a^dagger a against
/// H0(h) - 2 eta J_z S_z fixes eta = -g^2/Delta and h = h0 - omega0 + eta Nc.
MappedModel map_cavity_to_central(const CavityParams& cavity, int n_central);

}  // namespace cspin::dicke
