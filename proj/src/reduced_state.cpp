#include "centralspin/reduced_state.hpp"

#include <cmath>

#include "centralspin/error.hpp"

namespace cspin::reduced_state {

using numkit::kI;
using xychain::MomentumMode;
using xychain::ShiftedModeData;

namespace {

void require_paired(const MomentumMode& mode, bool paired) {
  if (mode.paired != paired) {
    throw ValidationError(paired ? "paired_factor called on an unpaired momentum"
                                 : "unpaired_factor called on a paired momentum");
  }
}

// Energy of the H_m mode per bath occupation; only meaningful for k = 0, pi.
double signed_energy(const ShiftedModeData& d) {
  return d.energy * std::cos(2.0 * d.theta);
}

// Pair-subspace trace with e^{beta Lambda} factored out, x = e^{-beta Lambda}.
Complex pair_trace_scaled(const ShiftedModeData& di, const ShiftedModeData& dj, double x,
                          double t) {
  const ABCFactors fi = abc(di.theta, di.energy * t);
  const ABCFactors fj = abc(dj.theta, dj.energy * t);
  return 2.0 * x + (1.0 + x * x) * fi.c * fj.c + fj.a * std::conj(fi.a) +
         x * x * fj.b * std::conj(fi.b);
}

}  // namespace

ABCFactors abc(double x, double y) {
  const Complex phase = std::polar(1.0, -y);
  const double sx = std::sin(x);
  const double cx = std::cos(x);
  const double sy = std::sin(y);
  return {phase + 2.0 * kI * sx * sx * sy, phase + 2.0 * kI * cx * cx * sy,
          std::sin(2.0 * x) * sy};
}

Complex paired_factor(const MomentumMode& mode, const ShiftedModeData& di,
                      const ShiftedModeData& dj, double beta, double t) {
  require_paired(mode, true);
  const double bl = beta * mode.energy;
  return std::exp(bl) * pair_trace_scaled(di, dj, std::exp(-bl), t);
}

Complex unpaired_factor(const MomentumMode& mode, const ShiftedModeData& di,
                        const ShiftedModeData& dj, double beta, double t) {
  require_paired(mode, false);
  const double half_bl = 0.5 * beta * mode.energy;
  const double phi = 0.5 * t * (signed_energy(dj) - signed_energy(di));
  return std::exp(half_bl) * std::polar(1.0, -phi) + std::exp(-half_bl) * std::polar(1.0, phi);
}

Complex paired_factor_normalized(const MomentumMode& mode, const ShiftedModeData& di,
                                 const ShiftedModeData& dj, double beta, double t) {
  require_paired(mode, true);
  const double x = std::exp(-beta * mode.energy);
  return pair_trace_scaled(di, dj, x, t) / ((1.0 + x) * (1.0 + x));
}

Complex unpaired_factor_normalized(const MomentumMode& mode, const ShiftedModeData& di,
                                   const ShiftedModeData& dj, double beta, double t) {
  require_paired(mode, false);
  const double x = std::exp(-beta * mode.energy);
  const double phi = 0.5 * t * (signed_energy(dj) - signed_energy(di));
  return (std::polar(1.0, -phi) + x * std::polar(1.0, phi)) / (1.0 + x);
}

ReducedStateModel::ReducedStateModel(const xychain::ChainParams& chain,
                                     const dicke::CentralParams& central)
    : chain_(chain), central_(central) {
  chain_.validate();
  central_.validate();
  coeffs_ = dicke::coherent_coeffs(central_.n_central, central_.polar, central_.azimuth);
  modes_ = xychain::bath_modes(chain_);
  shifted_.reserve(static_cast<std::size_t>(central_.dim()) * modes_.size());
  for (int a = 0; a < central_.dim(); ++a) {
    for (const MomentumMode& mode : modes_) {
      shifted_.push_back(xychain::shifted_mode(chain_, central_.coupling, central_.label(a), mode));
    }
  }
}

ComplexMatrix ReducedStateModel::decoherence(double t) const {
  const int dim = central_.dim();
  const double beta = central_.beta;
  ComplexMatrix out(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      Complex product = 1.0;
      for (std::size_t q = 0; q < modes_.size(); ++q) {
        const MomentumMode& mode = modes_[q];
        const ShiftedModeData& di = shifted(i, q);
        const ShiftedModeData& dj = shifted(j, q);
        product *= mode.paired ? paired_factor_normalized(mode, di, dj, beta, t)
                               : unpaired_factor_normalized(mode, di, dj, beta, t);
      }
      out(i, j) = product;
    }
  }
  return out;
}

ComplexMatrix ReducedStateModel::matrix_at(double t) const {
  return (coeffs_ * coeffs_.adjoint()).cwiseProduct(decoherence(t));
}

DensityMatrix reduced_density(const xychain::ChainParams& chain,
                              const dicke::CentralParams& central, double t) {
  return ReducedStateModel(chain, central).at(t);
}

}  // namespace cspin::reduced_state
