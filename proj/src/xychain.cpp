#include "centralspin/xychain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "centralspin/error.hpp"

namespace cspin::xychain {

namespace {

using std::numbers::pi;

Momentum make_momentum(int m, int n_sites) {
  Momentum out;
  out.index = m;
  out.k = 2.0 * pi * m / n_sites;
  if (m == 0) {
    out.sin_k = 0.0;
    out.cos_k = 1.0;
  } else if (2 * m == n_sites) {
    out.k = pi;
    out.sin_k = 0.0;
    out.cos_k = -1.0;
  } else {
    out.sin_k = std::sin(out.k);
    out.cos_k = std::cos(out.k);
  }
  out.paired = out.k > 0.0 && 2 * m != n_sites;
  return out;
}

Momentum from_k(double k) {
  Momentum out;
  out.k = k;
  out.sin_k = std::sin(k);
  out.cos_k = std::cos(k);
  out.paired = k > 0.0 && k < pi;
  return out;
}

double angle(double pairing, double diagonal) {
  if (pairing == 0.0 && diagonal == 0.0) return 0.0;
  return std::atan2(pairing, diagonal);
}

// Reduces to (-pi/2, pi/2].
double reduce_half_turn(double x) {
  double r = std::remainder(x, pi);
  if (r <= -pi / 2) r += pi;
  return r;
}

// log(2 cosh(x/2)) for x >= 0 without overflow.
double log_two_cosh_half(double x) {
  const double a = std::abs(x) / 2;
  return a + std::log1p(std::exp(-2 * a));
}

}  // namespace

void ChainParams::validate() const {
  if (n_sites < 2 || n_sites % 2 != 0) {
    throw ValidationError("chain: n_sites must be even and >= 2, got " + std::to_string(n_sites));
  }
  if (!std::isfinite(coupling) || !std::isfinite(anisotropy) || !std::isfinite(field)) {
    throw ValidationError("chain: lambda, gamma and h must be finite");
  }
}

std::vector<Momentum> momentum_grid(int n_sites) {
  ChainParams{n_sites}.validate();
  std::vector<Momentum> grid;
  grid.reserve(n_sites);
  for (int m = -n_sites / 2 + 1; m <= n_sites / 2; ++m) grid.push_back(make_momentum(m, n_sites));
  return grid;
}

std::vector<MomentumMode> bath_modes(const ChainParams& p) {
  p.validate();
  std::vector<MomentumMode> out;
  for (const Momentum& k : momentum_grid(p.n_sites)) {
    if (k.k < 0.0) continue;
    MomentumMode mode;
    static_cast<Momentum&>(mode) = k;
    mode.energy = dispersion(p, k);
    mode.angle = bogoliubov_angle(p, k);
    out.push_back(mode);
  }
  return out;
}

double dispersion(const ChainParams& p, const Momentum& k) {
  const double diagonal = p.field - p.coupling * k.cos_k;
  const double pairing = p.coupling * p.anisotropy * k.sin_k;
  return std::hypot(diagonal, pairing);
}

double dispersion(const ChainParams& p, double k) { return dispersion(p, from_k(k)); }

double bogoliubov_angle(const ChainParams& p, const Momentum& k) {
  return angle(p.coupling * p.anisotropy * k.sin_k, p.coupling * k.cos_k - p.field);
}

double bogoliubov_angle(const ChainParams& p, double k) {
  return bogoliubov_angle(p, from_k(k));
}

ShiftedModeData shifted_mode(const ChainParams& p, double eta, double dicke_label,
                             const Momentum& k) {
  const ChainParams shifted = p.with_field(p.field + 2.0 * eta * dicke_label);
  const double mu = bogoliubov_angle(shifted, k);
  const double nu = bogoliubov_angle(p, k);
  return {dicke_label, reduce_half_turn((mu - nu) / 2), dispersion(shifted, k)};
}

ShiftedModeData shifted_mode(const ChainParams& p, double eta, double dicke_label, double k) {
  return shifted_mode(p, eta, dicke_label, from_k(k));
}

double log_partition_function(const ChainParams& p, double beta) {
  p.validate();
  if (!(beta >= 0.0)) throw ValidationError("partition_function: beta must be >= 0");
  double log_z = 0.0;
  for (const Momentum& k : momentum_grid(p.n_sites)) {
    log_z += log_two_cosh_half(beta * dispersion(p, k));
  }
  return log_z;
}

double partition_function(const ChainParams& p, double beta) {
  return std::exp(log_partition_function(p, beta));
}

std::vector<double> mode_sum_spectrum(const ChainParams& p) {
  p.validate();
  if (p.n_sites > 20) throw ValidationError("mode_sum_spectrum: n_sites > 20");
  std::vector<double> energies;
  for (const Momentum& k : momentum_grid(p.n_sites)) energies.push_back(dispersion(p, k));
  const std::size_t count = std::size_t{1} << energies.size();
  std::vector<double> spectrum(count);
  for (std::size_t occ = 0; occ < count; ++occ) {
    double e = 0.0;
    for (std::size_t q = 0; q < energies.size(); ++q) {
      e += energies[q] * (((occ >> q) & 1U) ? 0.5 : -0.5);
    }
    spectrum[occ] = e;
  }
  std::sort(spectrum.begin(), spectrum.end());
  return spectrum;
}

}  // namespace cspin::xychain
