#include "centralspin/qfi.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "centralspin/error.hpp"

namespace cspin::qfi {

using numkit::ComplexMatrix;
using numkit::RealVector;

namespace {

constexpr double kImaginaryResidue = 1e-10;

RealVector repaired_spectrum(const RealVector& p) {
  RealVector out = p;
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (out(i) < -DensityMatrix::kNegativityTolerance) {
      throw ToleranceError("gamma_matrix: eigenvalue " + std::to_string(out(i)) +
                           " below -1e-9");
    }
    out(i) = std::max(out(i), 0.0);
  }
  return out / out.sum();
}

}  // namespace

GammaMatrix gamma_matrix(const DensityMatrix& rho, const dicke::CollectiveOps& ops,
                         double pair_cutoff) {
  const auto dim = rho.dim();
  if (ops.sx.rows() != dim) {
    throw ValidationError("gamma_matrix: operator dimension " + std::to_string(ops.sx.rows()) +
                          " does not match the state dimension " + std::to_string(dim));
  }
  const numkit::HermEigen eig = numkit::herm_eig(rho.matrix());
  const RealVector p = repaired_spectrum(eig.eigenvalues);

  Eigen::MatrixXd weight = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index m = 0; m < dim; ++m) {
    for (Eigen::Index n = 0; n < dim; ++n) {
      const double sum = p(m) + p(n);
      if (sum < pair_cutoff) continue;
      const double diff = p(m) - p(n);
      weight(m, n) = diff * diff / sum;
    }
  }

  std::array<ComplexMatrix, 3> rotated;
  for (int a = 0; a < 3; ++a) rotated[a] = eig.eigenvectors.adjoint() * ops[a] * eig.eigenvectors;

  GammaMatrix gamma;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      // sum_{m,n} w_mn A_mn B_nm
      const numkit::Complex entry =
          2.0 * (weight.cast<numkit::Complex>().cwiseProduct(rotated[a])
                     .cwiseProduct(rotated[b].transpose()))
                    .sum();
      if (std::abs(entry.imag()) > kImaginaryResidue * std::max(1.0, std::abs(entry.real()))) {
        throw ToleranceError("gamma_matrix: imaginary residue " + std::to_string(entry.imag()));
      }
      gamma(a, b) = entry.real();
    }
  }
  return 0.5 * (gamma + gamma.transpose());
}

OptimalQfi max_qfi(const GammaMatrix& gamma) {
  Eigen::SelfAdjointEigenSolver<GammaMatrix> solver(0.5 * (gamma + gamma.transpose()));
  OptimalQfi out;
  out.value = solver.eigenvalues()(2);
  out.direction = solver.eigenvectors().col(2).normalized();
  for (int a = 0; a < 3; ++a) {
    if (std::abs(out.direction(a)) > 1e-12) {
      if (out.direction(a) < 0) out.direction = -out.direction;
      break;
    }
  }
  return out;
}

std::vector<Threshold> depth_thresholds(int n_central) {
  if (n_central < 1) throw ValidationError("depth_thresholds: Nc must be >= 1");
  std::vector<Threshold> out;
  out.reserve(n_central);
  for (int l = 1; l <= n_central; ++l) {
    const int s = n_central / l;
    const int r = n_central - s * l;
    out.push_back({l, static_cast<double>(s * l * l + r * r)});
  }
  return out;
}

DepthResult entanglement_depth(double qfi, int n_central) {
  if (!(qfi >= 0.0)) throw ValidationError("entanglement_depth: F must be >= 0");
  DepthResult out;
  out.thresholds = depth_thresholds(n_central);
  int largest = 0;
  // The l = Nc bound is the Cramer-Rao ceiling Nc^2; only round-off crosses it.
  for (const Threshold& th : out.thresholds) {
    if (th.l < n_central && qfi > th.bound) largest = std::max(largest, th.l);
  }
  out.depth = 1 + largest;
  return out;
}

EntanglementReport analyze(const DensityMatrix& rho, const dicke::CollectiveOps& ops) {
  const OptimalQfi best = max_qfi(gamma_matrix(rho, ops));
  const int n_central = static_cast<int>(rho.dim()) - 1;
  EntanglementReport out;
  // Round-off can leave F a hair below zero for states with vanishing QFI.
  out.qfi = std::max(best.value, 0.0);
  out.direction = best.direction;
  DepthResult depth = entanglement_depth(out.qfi, n_central);
  out.depth = depth.depth;
  out.thresholds = std::move(depth.thresholds);
  return out;
}

double time_average(std::span<const std::pair<double, double>> series) {
  if (series.empty()) throw ValidationError("time_average: empty series");
  if (series.size() > 1) {
    const double step = series[1].first - series[0].first;
    if (!(step > 0.0)) throw ValidationError("time_average: times must be strictly increasing");
    const double scale = std::max(std::abs(series.front().first), std::abs(series.back().first));
    for (std::size_t i = 1; i < series.size(); ++i) {
      const double d = series[i].first - series[i - 1].first;
      if (std::abs(d - step) > 1e-9 * std::max(step, scale)) {
        throw ValidationError("time_average: non-uniform time spacing");
      }
    }
  }
  double sum = 0.0;
  for (const auto& [t, f] : series) sum += f;
  return sum / static_cast<double>(series.size());
}

}  // namespace cspin::qfi
