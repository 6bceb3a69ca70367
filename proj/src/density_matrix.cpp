#include "centralspin/density_matrix.hpp"

#include <cmath>
#include <string>

#include "centralspin/error.hpp"

namespace cspin {

DensityMatrix::DensityMatrix(numkit::ComplexMatrix rho) : rho_(std::move(rho)) {
  if (rho_.rows() != rho_.cols() || rho_.rows() == 0) {
    throw ValidationError("density matrix must be square and non-empty");
  }
  if (!numkit::all_finite(rho_)) throw ToleranceError("density matrix has non-finite entries");
  const double defect = numkit::hermiticity_defect(rho_);
  if (defect > kHermiticityTolerance) {
    throw ToleranceError("density matrix Hermiticity defect " + std::to_string(defect));
  }
  const numkit::Complex trace = rho_.trace();
  if (std::abs(trace - 1.0) > kTraceTolerance) {
    throw ToleranceError("density matrix trace deviates from 1 by " +
                         std::to_string(std::abs(trace - 1.0)));
  }
  min_eigenvalue_ = numkit::herm_eig(rho_).eigenvalues(0);
  if (min_eigenvalue_ < -kNegativityTolerance) {
    throw ToleranceError("density matrix eigenvalue " + std::to_string(min_eigenvalue_) +
                         " below -1e-9");
  }
}

DensityMatrix DensityMatrix::pure(const numkit::ComplexVector& psi) {
  return DensityMatrix(psi * psi.adjoint());
}

}  // namespace cspin
