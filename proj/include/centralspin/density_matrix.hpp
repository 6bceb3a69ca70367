#pragma once

#include "centralspin/numkit.hpp"

namespace cspin {

/// Hermitian, unit-trace, positive semidefinite operator in the Dicke basis.
/// Construction checks every invariant and throws ToleranceError on failure.
class DensityMatrix {
 public:
  static constexpr double kHermiticityTolerance = 1e-10;
  static constexpr double kTraceTolerance = 1e-10;
  static constexpr double kNegativityTolerance = 1e-9;

  explicit DensityMatrix(numkit::ComplexMatrix rho);

  /// |psi><psi| for a normalized psi.
  static DensityMatrix pure(const numkit::ComplexVector& psi);

  const numkit::ComplexMatrix& matrix() const { return rho_; }
  numkit::Index dim() const { return rho_.rows(); }
  numkit::Complex operator()(numkit::Index i, numkit::Index j) const { return rho_(i, j); }

  /// Smallest eigenvalue found during validation.
  double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  numkit::ComplexMatrix rho_;
  double min_eigenvalue_ = 0.0;
};

}  // namespace cspin
