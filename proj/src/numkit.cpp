#include "centralspin/numkit.hpp"

#include <cmath>
#include <string>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "centralspin/error.hpp"

namespace cspin::numkit {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw ValidationError(std::string(what) + ": matrix must be square and non-empty, got " +
                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (m.rows() > kMaxDenseDim) {
    throw ValidationError(std::string(what) + ": dimension " + std::to_string(m.rows()) +
                          " exceeds the dense limit " + std::to_string(kMaxDenseDim));
  }
}

ComplexVector phases(const RealVector& eigenvalues, double t) {
  ComplexVector out(eigenvalues.size());
  for (Index i = 0; i < eigenvalues.size(); ++i) {
    out(i) = std::polar(1.0, -eigenvalues(i) * t);
  }
  return out;
}

}  // namespace

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix& m) {
  return max_abs(m - m.adjoint());
}

bool all_finite(const ComplexMatrix& m) {
  return m.allFinite();
}

HermEigen herm_eig(const ComplexMatrix& h) {
  require_square(h, "herm_eig");
  if (!all_finite(h)) throw ValidationError("herm_eig: non-finite matrix entry");

  const double scale = max_abs(h);
  const double defect = hermiticity_defect(h);
  if (defect > kHermiticityTolerance * scale) {
    throw ValidationError("herm_eig: Hermiticity defect " + std::to_string(defect) +
                          " exceeds tolerance relative to ||H||_max=" + std::to_string(scale));
  }

  HermEigen out;
  out.eigenvectors = 0.5 * (h + h.adjoint());
  out.eigenvalues.resize(h.rows());
  const auto n = static_cast<lapack_int>(h.rows());
  // Column-major storage; the upper triangle is referenced.
  const lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'U', n, out.eigenvectors.data(),
                                         n, out.eigenvalues.data());
  if (info != 0) {
    throw ToleranceError("herm_eig: zheevd failed with info=" + std::to_string(info));
  }
  return out;
}

ComplexMatrix HermEigen::evolution(double t) const {
  return eigenvectors * phases(eigenvalues, t).asDiagonal() * eigenvectors.adjoint();
}

ComplexVector HermEigen::evolve(const ComplexVector& psi, double t) const {
  if (psi.size() != dim()) throw ValidationError("evolve: state dimension mismatch");
  ComplexVector coeffs = eigenvectors.adjoint() * psi;
  coeffs.array() *= phases(eigenvalues, t).array();
  return eigenvectors * coeffs;
}

ComplexMatrix HermEigen::reconstruct(const RealVector& weights) const {
  if (weights.size() != dim()) throw ValidationError("reconstruct: weight count mismatch");
  return eigenvectors * weights.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

ComplexMatrix unitary_evolution(const ComplexMatrix& h, double t) {
  if (t == 0.0) {
    require_square(h, "unitary_evolution");
    return ComplexMatrix::Identity(h.rows(), h.cols());
  }
  return herm_eig(h).evolution(t);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Index rows = a.rows() * b.rows();
  const Index cols = a.cols() * b.cols();
  if (rows > kMaxDenseDim || cols > kMaxDenseDim) {
    throw ValidationError("kron: result exceeds the dense dimension limit");
  }
  ComplexMatrix out(rows, cols);
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, Index dim_a, Index dim_b, Keep keep) {
  if (dim_a <= 0 || dim_b <= 0 || rho.rows() != dim_a * dim_b || rho.cols() != rho.rows()) {
    throw ValidationError("partial_trace: dimensions " + std::to_string(dim_a) + "x" +
                          std::to_string(dim_b) + " do not factor a " +
                          std::to_string(rho.rows()) + "x" + std::to_string(rho.cols()) +
                          " operator");
  }
  if (keep == Keep::A) {
    ComplexMatrix out = ComplexMatrix::Zero(dim_a, dim_a);
    for (Index i = 0; i < dim_a; ++i) {
      for (Index j = 0; j < dim_a; ++j) {
        out(i, j) = rho.block(i * dim_b, j * dim_b, dim_b, dim_b).trace();
      }
    }
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
  for (Index i = 0; i < dim_a; ++i) {
    out += rho.block(i * dim_b, i * dim_b, dim_b, dim_b);
  }
  return out;
}

}  // namespace cspin::numkit
