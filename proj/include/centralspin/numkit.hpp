#pragma once

// Dense complex linear algebra shared by the rest of the library.

#include <complex>

#include <Eigen/Dense>

namespace cspin::numkit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr Complex kI{0.0, 1.0};

/// Largest dense dimension any operation accepts.
inline constexpr Index kMaxDenseDim = 4096;

/// Relative Hermiticity defect above which herm_eig refuses its input.
inline constexpr double kHermiticityTolerance = 1e-9;

/// Spectral decomposition H = V diag(eigenvalues) V^dagger.
struct HermEigen {
  RealVector eigenvalues;      // ascending
  ComplexMatrix eigenvectors;  // columns, unitary

  Index dim() const { return eigenvalues.size(); }

  /// exp(-i H t) through the stored decomposition.
  ComplexMatrix evolution(double t) const;

  /// exp(-i H t) |psi> without forming the propagator.
  ComplexVector evolve(const ComplexVector& psi, double t) const;

  /// V diag(weights) V^dagger for caller-supplied spectral weights.
  ComplexMatrix reconstruct(const RealVector& weights) const;
  ComplexMatrix reconstruct() const { return reconstruct(eigenvalues); }
};

/// Max-norm of the entries.
double max_abs(const ComplexMatrix& m);

/// ||m - m^dagger||_max.
double hermiticity_defect(const ComplexMatrix& m);

bool all_finite(const ComplexMatrix& m);

/// Eigendecomposition of a Hermitian matrix (LAPACK zheevd). Inputs whose
/// anti-Hermitian part is below kHermiticityTolerance * ||H||_max are
/// symmetrized first; larger defects raise ValidationError.
HermEigen herm_eig(const ComplexMatrix& h);

/// exp(-i H t) through the eigendecomposition route.
ComplexMatrix unitary_evolution(const ComplexMatrix& h, double t);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Keep { A, B };

/// Partial trace of an operator on a (dim_a x dim_b) bipartite space with
/// index convention i_a * dim_b + i_b.
ComplexMatrix partial_trace(const ComplexMatrix& rho, Index dim_a, Index dim_b,
                            Keep keep);

}  // namespace cspin::numkit
