#pragma once

// Closed-form reduced density matrix of Nc central spins coupled through
// -2 eta J_z S_z to a thermal XY bath:
//
//   rho_c(t)_{ij} = c_i c_j^* rho~_{ij}(t),
//   rho~_{ij}(t)  = Tr_b[e^{i t H_j} e^{-i t H_i} e^{-beta H0(h)}] / Z,   H_m = H0(h + 2 eta m),
//
// evaluated as a product of per-momentum factors.

#include <vector>

#include "centralspin/density_matrix.hpp"
#include "centralspin/dicke.hpp"
#include "centralspin/numkit.hpp"
#include "centralspin/xychain.hpp"

namespace cspin::reduced_state {

using numkit::Complex;
using numkit::ComplexMatrix;
using numkit::ComplexVector;

struct ABCFactors {
  Complex a;
  Complex b;
  double c = 0.0;
};

/// A = e^{-iY} + 2i sin^2 X sin Y, B = e^{-iY} + 2i cos^2 X sin Y, C = sin 2X sin Y.
ABCFactors abc(double x, double y);

/// Trace over one (k, -k) pair:
/// 2 + 2 cosh(beta Lambda) C_i C_j + e^{beta Lambda} A_j A_i^* + e^{-beta Lambda} B_j B_i^*.
Complex paired_factor(const xychain::MomentumMode& mode, const xychain::ShiftedModeData& di,
                      const xychain::ShiftedModeData& dj, double beta, double t);

/// Trace over a self-conjugate momentum (k = 0 or pi). The mode of H_m has
/// energy E_m cos(2 theta_m) (n - 1/2) in the bath occupation basis, where
/// cos(2 theta_m) = -1 marks a sign change of h + 2 eta m - lambda cos k
/// relative to the bath:
/// e^{beta Lambda/2} e^{-i t (E~_j - E~_i)/2} + e^{-beta Lambda/2} e^{+i t (E~_j - E~_i)/2}.
Complex unpaired_factor(const xychain::MomentumMode& mode, const xychain::ShiftedModeData& di,
                        const xychain::ShiftedModeData& dj, double beta, double t);

/// The factors above divided by the mode's share of Z, evaluated in a form
/// that stays finite for any beta Lambda >= 0.
Complex paired_factor_normalized(const xychain::MomentumMode& mode,
                                 const xychain::ShiftedModeData& di,
                                 const xychain::ShiftedModeData& dj, double beta, double t);
Complex unpaired_factor_normalized(const xychain::MomentumMode& mode,
                                   const xychain::ShiftedModeData& di,
                                   const xychain::ShiftedModeData& dj, double beta, double t);

/// Precomputes the mode data of every H_m once; evaluating a time point is
/// then O(Nc^2 Nb). Immutable and safe to share across threads.
class ReducedStateModel {
 public:
  ReducedStateModel(const xychain::ChainParams& chain, const dicke::CentralParams& central);

  /// rho~(t), the bath-induced factor of every Dicke coherence.
  ComplexMatrix decoherence(double t) const;

  /// rho_c(t) as a raw matrix (no invariant checks).
  ComplexMatrix matrix_at(double t) const;

  /// rho_c(t) with DensityMatrix invariants enforced.
  DensityMatrix at(double t) const { return DensityMatrix(matrix_at(t)); }

  const xychain::ChainParams& chain() const { return chain_; }
  const dicke::CentralParams& central() const { return central_; }
  const ComplexVector& coefficients() const { return coeffs_; }
  const std::vector<xychain::MomentumMode>& modes() const { return modes_; }
  const xychain::ShiftedModeData& shifted(int dicke_index, std::size_t mode) const {
    return shifted_[dicke_index * modes_.size() + mode];
  }

 private:
  xychain::ChainParams chain_;
  dicke::CentralParams central_;
  ComplexVector coeffs_;
  std::vector<xychain::MomentumMode> modes_;
  std::vector<xychain::ShiftedModeData> shifted_;  // [dicke_index][mode]
};

DensityMatrix reduced_density(const xychain::ChainParams& chain,
                              const dicke::CentralParams& central, double t);

}  // namespace cspin::reduced_state
