#pragma once

// Quantum Fisher information of collective rotations n.S, maximized over
// the direction n, and the entanglement depth it certifies.

#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "centralspin/density_matrix.hpp"
#include "centralspin/dicke.hpp"

namespace cspin::qfi {

using GammaMatrix = Eigen::Matrix3d;

/// Eigenvalue pairs with p_m + p_n below this are outside the support.
inline constexpr double kPairCutoff = 1e-12;

/// Gamma_{ab} = 2 sum_{m,n} (p_m - p_n)^2 / (p_m + p_n) <m|S^a|n><n|S^b|m>,
/// so that F[rho, n.S] = n^T Gamma n. Eigenvalues of rho in [-1e-9, 0) are
/// clipped to zero and the spectrum renormalized first.
GammaMatrix gamma_matrix(const DensityMatrix& rho, const dicke::CollectiveOps& ops,
                         double pair_cutoff = kPairCutoff);

struct OptimalQfi {
  double value = 0.0;          // largest eigenvalue of Gamma
  Eigen::Vector3d direction;   // unit; first nonzero component positive
};

OptimalQfi max_qfi(const GammaMatrix& gamma);

/// F > s l^2 + r^2 with s = floor(Nc / l), r = Nc - s l certifies
/// (l+1)-particle entanglement.
struct Threshold {
  int l = 0;
  double bound = 0.0;
};

std::vector<Threshold> depth_thresholds(int n_central);

struct DepthResult {
  int depth = 1;  // 1 + largest l whose bound F exceeds; 1 = nothing witnessed
  std::vector<Threshold> thresholds;
};

DepthResult entanglement_depth(double qfi, int n_central);

struct EntanglementReport {
  double qfi = 0.0;
  Eigen::Vector3d direction = Eigen::Vector3d::UnitZ();
  int depth = 1;
  std::vector<Threshold> thresholds;
};

EntanglementReport analyze(const DensityMatrix& rho, const dicke::CollectiveOps& ops);

/// Mean of F over a uniformly spaced, strictly increasing time series.
double time_average(std::span<const std::pair<double, double>> series);

}  // namespace cspin::qfi
