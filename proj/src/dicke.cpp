#include "centralspin/dicke.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "centralspin/error.hpp"

namespace cspin {

void CavityParams::validate() const {
  for (double v : {omega0, omega_a, g, nbar, h0, coupling, anisotropy, theta, phi, zeta}) {
    if (!std::isfinite(v)) throw ValidationError("cavity: non-finite parameter");
  }
  if (detuning() == 0.0) throw ValidationError("cavity: zero detuning omega0 - h0 - omega_a");
  if (nbar < 0.0) throw ValidationError("cavity: nbar must be >= 0");
  if (n_sites < 2 || n_sites % 2 != 0) {
    throw ValidationError("cavity: n_sites must be even and >= 2");
  }
  if (fock_cutoff < nbar + 6.0 * std::sqrt(nbar) || fock_cutoff < 1) {
    throw ValidationError("cavity: fock_cutoff " + std::to_string(fock_cutoff) +
                          " is below nbar + 6 sqrt(nbar)");
  }
}

namespace dicke {

void CentralParams::validate() const {
  if (n_central < 1) throw ValidationError("central: Nc must be >= 1");
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw ValidationError("central: beta must be >= 0");
  if (!std::isfinite(coupling) || !std::isfinite(polar) || !std::isfinite(azimuth)) {
    throw ValidationError("central: eta, vartheta and varphi must be finite");
  }
}

double log_binomial(int n, int k) {
  if (k < 0 || k > n) throw ValidationError("log_binomial: k outside [0, n]");
  if (n > 60) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
  }
  k = std::min(k, n - k);
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return std::log(b);
}

ComplexVector coherent_coeffs(int n_central, double polar, double azimuth) {
  if (n_central < 1) throw ValidationError("coherent_coeffs: Nc must be >= 1");
  const double c = std::cos(polar / 2);
  const double s = std::sin(polar / 2);
  ComplexVector out(n_central + 1);
  for (int up = 0; up <= n_central; ++up) {  // up = Nc/2 + n
    const double magnitude = std::pow(c, n_central - up) * std::pow(s, up) *
                             std::exp(0.5 * log_binomial(n_central, up));
    out(up) = std::polar(magnitude, -up * azimuth);
  }
  return out;
}

CollectiveOps spin_matrices(int two_j) {
  if (two_j < 1) throw ValidationError("spin_matrices: 2j must be >= 1");
  const int dim = two_j + 1;
  const double j = 0.5 * two_j;
  ComplexMatrix raise = ComplexMatrix::Zero(dim, dim);
  ComplexMatrix sz = ComplexMatrix::Zero(dim, dim);
  for (int a = 0; a < dim; ++a) {
    const double m = a - j;
    sz(a, a) = m;
    if (a + 1 < dim) raise(a + 1, a) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  const ComplexMatrix lower = raise.adjoint();
  return {0.5 * (raise + lower), -0.5 * numkit::kI * (raise - lower), sz};
}

CollectiveOps collective_ops(int n_central) {
  if (n_central < 1) throw ValidationError("collective_ops: Nc must be >= 1");
  return spin_matrices(n_central);
}

MappedModel map_cavity_to_central(const CavityParams& cavity, int n_central) {
  if (n_central < 1) throw ValidationError("map_cavity_to_central: Nc must be >= 1");
  const double delta = cavity.detuning();
  if (delta == 0.0) throw ValidationError("map_cavity_to_central: zero detuning");
  MappedModel out;
  out.detuning = delta;
  out.coupling = -cavity.g * cavity.g / delta;
  out.chain.n_sites = cavity.n_sites;
  out.chain.coupling = cavity.coupling;
  out.chain.anisotropy = cavity.anisotropy;
  out.chain.field = cavity.h0 - cavity.omega0 + out.coupling * n_central;
  return out;
}

}  // namespace dicke
}  // namespace cspin
