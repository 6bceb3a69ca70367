#include <cmath>
#include <string>

#include "centralspin/error.hpp"
#include "centralspin/oracles.hpp"
#include "centralspin/parallel.hpp"

namespace cspin::oracles {

using numkit::Complex;
using numkit::Index;
using numkit::kI;

namespace {

constexpr double kMaxTruncatedWeight = 1e-8;

void require_sector(const CavityParams& p, SpinSector sector) {
  if (sector == SpinSector::Symmetric && p.coupling != 0.0) {
    throw ValidationError("cavity: the symmetric spin sector requires lambda = 0");
  }
  if (sector == SpinSector::Full && p.n_sites > kMaxChainSites) {
    throw ValidationError("cavity: too many spins for the full spin space");
  }
}

xychain::ChainParams tc_chain(const CavityParams& p, double field) {
  return {p.n_sites, p.coupling, p.anisotropy, field};
}

// H0(field) acting on the TC spins.
ComplexMatrix spin_hamiltonian(const CavityParams& p, SpinSector sector, double field,
                               const dicke::CollectiveOps& ops) {
  if (sector == SpinSector::Full) {
    return spin_chain_matrix(tc_chain(p, field), Boundary::PeriodicSpin);
  }
  return -field * ops.sz;
}

ComplexMatrix annihilation(int levels) {
  ComplexMatrix a = ComplexMatrix::Zero(levels, levels);
  for (int n = 1; n < levels; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

double log_poisson(double nbar, int n) {
  if (nbar == 0.0) return n == 0 ? 0.0 : -INFINITY;
  return -nbar + n * std::log(nbar) - std::lgamma(n + 1.0);
}

double poisson_tail(double nbar, int cutoff) {
  double tail = 0.0;
  for (int n = cutoff + 1;; ++n) {
    const double term = std::exp(log_poisson(nbar, n));
    tail += term;
    if (n > nbar && term < 1e-30) break;
  }
  return tail;
}

Complex expectation(const ComplexVector& state, const ComplexMatrix& op, const CavitySpace& space) {
  const Eigen::Map<const ComplexMatrix> m(state.data(), space.spin_dim, space.photon_levels);
  return (m.adjoint() * (op * m)).trace();
}

}  // namespace

CavitySpace cavity_space(const CavityParams& p, SpinSector sector) {
  require_sector(p, sector);
  CavitySpace space;
  space.photon_levels = p.fock_cutoff + 1;
  space.spin_dim = sector == SpinSector::Full ? (1 << p.n_sites) : p.n_sites + 1;
  if (space.dim() > numkit::kMaxDenseDim) {
    throw ValidationError("cavity: dimension " + std::to_string(space.dim()) + " exceeds " +
                          std::to_string(numkit::kMaxDenseDim));
  }
  return space;
}

dicke::CollectiveOps cavity_spin_ops(const CavityParams& p, SpinSector sector) {
  require_sector(p, sector);
  return sector == SpinSector::Full ? chain_collective_ops(p.n_sites)
                                    : dicke::spin_matrices(p.n_sites);
}

ComplexMatrix cavity_hamiltonian(const CavityParams& p, CavityModel model, SpinSector sector) {
  p.validate();
  const CavitySpace space = cavity_space(p, sector);
  const dicke::CollectiveOps ops = cavity_spin_ops(p, sector);
  const ComplexMatrix photon_id = ComplexMatrix::Identity(space.photon_levels, space.photon_levels);
  const ComplexMatrix spin_id = ComplexMatrix::Identity(space.spin_dim, space.spin_dim);
  const ComplexMatrix a = annihilation(space.photon_levels);
  const ComplexMatrix n = a.adjoint() * a;
  const ComplexMatrix j_plus = ops.sx + kI * ops.sy;
  const ComplexMatrix j_minus = j_plus.adjoint();

  if (model == CavityModel::Original) {
    return p.omega0 * numkit::kron(photon_id, ops.sz) + p.omega_a * numkit::kron(n, spin_id) +
           numkit::kron(photon_id, spin_hamiltonian(p, sector, p.h0, ops)) +
           p.g * (numkit::kron(a.adjoint(), j_minus) + numkit::kron(a, j_plus));
  }
  const double dispersive = p.g * p.g / p.detuning();
  ComplexMatrix h = numkit::kron(photon_id, spin_hamiltonian(p, sector, p.h0 - p.omega0, ops)) +
                    2.0 * dispersive * numkit::kron(n, ops.sz);
  if (model == CavityModel::Effective2) {
    h += dispersive * numkit::kron(photon_id, j_plus * j_minus);
  }
  return h;
}

ComplexMatrix photon_number(const CavityParams& p, SpinSector sector) {
  const CavitySpace space = cavity_space(p, sector);
  const ComplexMatrix a = annihilation(space.photon_levels);
  return numkit::kron(a.adjoint() * a, ComplexMatrix::Identity(space.spin_dim, space.spin_dim));
}

ComplexVector coherent_field(double nbar, int fock_cutoff) {
  if (!(nbar >= 0.0) || fock_cutoff < 0) {
    throw ValidationError("coherent_field: need nbar >= 0 and cutoff >= 0");
  }
  const double tail = poisson_tail(nbar, fock_cutoff);
  if (tail >= kMaxTruncatedWeight) {
    throw ToleranceError("coherent_field: truncated weight " + std::to_string(tail) +
                         " at cutoff " + std::to_string(fock_cutoff));
  }
  ComplexVector out(fock_cutoff + 1);
  for (int n = 0; n <= fock_cutoff; ++n) out(n) = std::exp(0.5 * log_poisson(nbar, n));
  return out / out.norm();
}

ComplexVector spin_coherent_state(const CavityParams& p, SpinSector sector) {
  require_sector(p, sector);
  const double c = std::cos(p.theta / 2);
  const double s = std::sin(p.theta / 2);
  const int nb = p.n_sites;
  if (sector == SpinSector::Full) {
    const Index dim = Index{1} << nb;
    ComplexVector out(dim);
    for (Index state = 0; state < dim; ++state) {
      Complex amp = 1.0;
      for (int site = 0; site < nb; ++site) {
        amp *= ((state >> site) & 1) ? Complex(c) : std::polar(s, p.phi);
      }
      out(state) = amp;
    }
    return out;
  }
  ComplexVector out(nb + 1);
  for (int a = 0; a <= nb; ++a) {  // a = m + j; nb - a lowering steps
    const int lowered = nb - a;
    const double magnitude = std::pow(c, a) * std::pow(s, lowered) *
                             std::exp(0.5 * dicke::log_binomial(nb, lowered));
    out(a) = std::polar(magnitude, lowered * p.phi);
  }
  return out;
}

ComplexVector cavity_initial_state(const CavityParams& p, SpinSector sector) {
  return numkit::kron(coherent_field(p.nbar, p.fock_cutoff),
                      spin_coherent_state(p, sector));
}

double expectation_J(const ComplexVector& spin_state, double zeta,
                     const dicke::CollectiveOps& ops) {
  if (spin_state.size() != ops.sx.rows()) throw ValidationError("expectation_J: size mismatch");
  const ComplexMatrix j_zeta = std::cos(zeta) * ops.sx + std::sin(zeta) * ops.sy;
  return spin_state.dot(j_zeta * spin_state).real();
}

double expectation_J(const ComplexVector& state, double zeta, const dicke::CollectiveOps& ops,
                     const CavitySpace& space) {
  if (state.size() != space.dim() || ops.sx.rows() != space.spin_dim) {
    throw ValidationError("expectation_J: size mismatch");
  }
  const ComplexMatrix j_zeta = std::cos(zeta) * ops.sx + std::sin(zeta) * ops.sy;
  return expectation(state, j_zeta, space).real();
}

double fock_leakage(const ComplexVector& state, const CavitySpace& space) {
  const Index top = space.photon_levels >= 2 ? 2 : space.photon_levels;
  return state.tail(top * space.spin_dim).squaredNorm();
}

DifferenceRatio difference_ratio(const CavityParams& p, const std::vector<double>& omega0_t,
                                 const std::vector<double>& zeta, CavityModel effective,
                                 SpinSector sector, int jobs) {
  p.validate();
  if (!(p.omega0 > 0.0)) throw ValidationError("difference_ratio: omega0 must be > 0");
  if (effective == CavityModel::Original) {
    throw ValidationError("difference_ratio: the effective model must be Effective2 or Effective3");
  }
  if (omega0_t.empty() || zeta.empty()) throw ValidationError("difference_ratio: empty grid");

  const CavitySpace space = cavity_space(p, sector);
  const dicke::CollectiveOps ops = cavity_spin_ops(p, sector);
  const ComplexMatrix j_plus = ops.sx + kI * ops.sy;
  const ComplexVector psi0 = cavity_initial_state(p, sector);

  const numkit::HermEigen original = numkit::herm_eig(cavity_hamiltonian(p, CavityModel::Original, sector));
  const numkit::HermEigen approx = numkit::herm_eig(cavity_hamiltonian(p, effective, sector));
  const ComplexVector c_original = original.eigenvectors.adjoint() * psi0;
  const ComplexVector c_approx = approx.eigenvectors.adjoint() * psi0;

  const std::size_t nt = omega0_t.size();
  std::vector<Complex> delta(nt);
  std::vector<double> leakage(nt);
  parallel_for(nt, jobs, [&](std::size_t i) {
    const double t = omega0_t[i] / p.omega0;
    auto evolve = [t](const numkit::HermEigen& eig, const ComplexVector& coeffs) {
      ComplexVector phased = coeffs;
      for (Index q = 0; q < phased.size(); ++q) phased(q) *= std::polar(1.0, -eig.eigenvalues(q) * t);
      return ComplexVector(eig.eigenvectors * phased);
    };
    const ComplexVector psi_o = evolve(original, c_original);
    const ComplexVector psi_e = evolve(approx, c_approx);
    // <J+> = <Jx> + i <Jy>
    delta[i] = expectation(psi_e, j_plus, space) - expectation(psi_o, j_plus, space);
    leakage[i] = std::max(fock_leakage(psi_o, space), fock_leakage(psi_e, space));
  });

  DifferenceRatio out;
  out.omega0_t = omega0_t;
  out.zeta = zeta;
  out.truncated_weight = poisson_tail(p.nbar, p.fock_cutoff);
  out.k.resize(static_cast<Index>(nt), static_cast<Index>(zeta.size()));
  for (std::size_t i = 0; i < nt; ++i) {
    out.max_leakage = std::max(out.max_leakage, leakage[i]);
    for (std::size_t z = 0; z < zeta.size(); ++z) {
      const double value = 2.0 / p.n_sites *
                           (std::cos(zeta[z]) * delta[i].real() + std::sin(zeta[z]) * delta[i].imag());
      out.k(static_cast<Index>(i), static_cast<Index>(z)) = value;
      out.max_abs_k = std::max(out.max_abs_k, std::abs(value));
    }
  }
  if (out.max_leakage >= kMaxFockLeakage) {
    throw ToleranceError("difference_ratio: Fock leakage " + std::to_string(out.max_leakage) +
                         " reached the top of the truncated field space");
  }
  return out;
}

}  // namespace cspin::oracles
