#pragma once

#include <cmath>
#include <random>

#include "centralspin/numkit.hpp"

namespace testing_support {

using cspin::numkit::Complex;
using cspin::numkit::ComplexMatrix;
using cspin::numkit::ComplexVector;

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * std::generate_canonical<double, 53>(rng);
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = {uniform(rng, -1, 1), uniform(rng, -1, 1)};
  }
  return 0.5 * (m + m.adjoint());
}

inline ComplexVector random_state(std::mt19937_64& rng, int n) {
  ComplexVector v(n);
  for (int i = 0; i < n; ++i) v(i) = {uniform(rng, -1, 1), uniform(rng, -1, 1)};
  return v.normalized();
}

// Largest |a - b| up to a global phase, aligned on the largest entry of b.
inline double phase_free_distance(const ComplexVector& a, const ComplexVector& b) {
  Eigen::Index k = 0;
  b.cwiseAbs().maxCoeff(&k);
  const Complex phase = a(k) / b(k);
  return (a - (phase / std::abs(phase)) * b).cwiseAbs().maxCoeff();
}

}  // namespace testing_support
