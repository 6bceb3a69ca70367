#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "centralspin/error.hpp"
#include "centralspin/oracles.hpp"
#include "centralspin/reduced_state.hpp"
#include "support.hpp"

using namespace cspin;
using namespace cspin::oracles;
using numkit::Complex;
using numkit::kI;
using numkit::max_abs;
using std::numbers::pi;
using testing_support::uniform;

namespace {

CavityParams small_cavity() {
  CavityParams p;
  p.omega0 = 40.0;
  p.omega_a = 34.0;
  p.g = 0.6;
  p.nbar = 3.0;
  p.fock_cutoff = 24;
  p.h0 = 0.2;
  p.coupling = 0.7;
  p.anisotropy = 0.5;
  p.n_sites = 4;
  p.theta = pi / 2;
  p.phi = 0.0;
  return p;
}

ComplexMatrix block(const ComplexMatrix& h, const CavitySpace& s, int n, int m) {
  return h.block(n * s.spin_dim, m * s.spin_dim, s.spin_dim, s.spin_dim);
}

}  // namespace

TEST_CASE("chain matrix: free spins in a field") {
  const double h = 0.8;
  const ComplexMatrix m = spin_chain_matrix({2, 0.0, 0.3, h}, Boundary::PeriodicSpin);
  // basis bit set = up; -(h/2)(sz x 1 + 1 x sz)
  const double expected[] = {h, 0.0, 0.0, -h};
  for (int s = 0; s < 4; ++s) CHECK(std::abs(m(s, s) - expected[s]) < 1e-15);
  CHECK(max_abs(m - ComplexMatrix(m.diagonal().asDiagonal())) == 0.0);
}

TEST_CASE("chain matrix: hermiticity, limits, particle-hole symmetry") {
  for (Boundary b : {Boundary::PeriodicSpin, Boundary::PeriodicFermion, Boundary::Open}) {
    CHECK(numkit::hermiticity_defect(spin_chain_matrix({8, 1.1, 0.6, 0.4}, b)) < 1e-15);
  }
  CHECK_THROWS_AS(spin_chain_matrix({14, 1, 0, 0}, Boundary::PeriodicSpin), ValidationError);

  const auto e = numkit::herm_eig(spin_chain_matrix({4, 1.0, 0.0, 0.0}, Boundary::PeriodicFermion)).eigenvalues;
  for (int i = 0; i < e.size(); ++i) CHECK(std::abs(e(i) + e(e.size() - 1 - i)) < 1e-12);
}

TEST_CASE("fermion and spin forms differ only by the parity-weighted boundary bond") {
  std::mt19937_64 rng(14);
  for (int nb : {4, 6, 8}) {
    const xychain::ChainParams p{nb, uniform(rng, 0.2, 1.5), uniform(rng, 0, 1), uniform(rng, -2, 2)};
    const ComplexMatrix open = spin_chain_matrix(p, Boundary::Open);
    const ComplexMatrix spin_bond = spin_chain_matrix(p, Boundary::PeriodicSpin) - open;
    const ComplexMatrix parity = parity_diagonal(nb).cast<Complex>().asDiagonal();
    // prod over odd sites of sigma^z flips the sign of every bond, so the
    // fermion form (+lambda/2 hopping) maps onto the spin bulk.
    numkit::RealVector sublattice(std::size_t{1} << nb);
    for (Eigen::Index s = 0; s < sublattice.size(); ++s) {
      int odd_up = 0;
      for (int i = 1; i < nb; i += 2) odd_up += static_cast<int>((s >> i) & 1);
      sublattice(s) = odd_up % 2 ? -1.0 : 1.0;
    }
    const ComplexMatrix d = sublattice.cast<Complex>().asDiagonal();
    const ComplexMatrix fermion = d * spin_chain_matrix(p, Boundary::PeriodicFermion) * d;
    CHECK(max_abs(fermion - open + parity * spin_bond) < 1e-14);
    CHECK(max_abs(parity * spin_bond - spin_bond * parity) < 1e-14);  // bond keeps parity
    CHECK(max_abs(spin_bond) > 0.1);
  }
}

TEST_CASE("collective operators on the chain") {
  const auto ops = chain_collective_ops(4);
  CHECK(max_abs(ops.sx * ops.sy - ops.sy * ops.sx - kI * ops.sz) < 1e-13);
  CHECK(ops.sz(0, 0).real() == -2.0);
  CHECK(ops.sz(0b0111, 0b0111).real() == 1.0);
  // Tr J^2 = sum_i Tr s_i^2; the cross terms are traceless
  const ComplexMatrix casimir = ops.sx * ops.sx + ops.sy * ops.sy + ops.sz * ops.sz;
  CHECK(casimir.trace().real() == doctest::Approx(4 * 0.75 * 16));
  const auto p = parity_diagonal(4);
  CHECK(p(0) == 1.0);   // all down
  CHECK(p(1) == -1.0);  // one up
}

TEST_CASE("central oracle: trivial limits and state invariants") {
  const xychain::ChainParams chain{6, 1.0, 0.5, 0.3};
  const dicke::CentralParams central{3, 0.6, 1.2, 1.0, 0.5};
  const ComplexVector c = dicke::coherent_coeffs(3, 1.0, 0.5);
  const CentralOracle oracle(chain, central);
  CHECK(max_abs(oracle.matrix_at(0.0) - c * c.adjoint()) < 1e-12);
  CHECK(oracle.log_partition_function() == doctest::Approx(xychain::log_partition_function(chain, 1.2)));
  for (double t : {0.4, 5.0, 40.0}) {
    const DensityMatrix rho = oracle.at(t);
    CHECK(std::abs(rho.matrix().trace() - 1.0) < 1e-10);
    CHECK(rho.min_eigenvalue() >= -1e-9);
  }

  dicke::CentralParams free = central;
  free.coupling = 0.0;
  CHECK(max_abs(CentralOracle(chain, free).matrix_at(9.0) - c * c.adjoint()) < 1e-12);
  CHECK_THROWS_AS(CentralOracle({12, 1, 0, 0}, central), ValidationError);
}

TEST_CASE("spin boundary deviates from the analytic state while the fermion boundary matches") {
  const xychain::ChainParams chain{4, 1.0, 0.6, 0.4};
  const dicke::CentralParams central{2, 0.8, 0.3, pi / 2, 0.0};
  const ComplexMatrix analytic = reduced_state::ReducedStateModel(chain, central).matrix_at(2.5);
  CHECK(max_abs(analytic - CentralOracle(chain, central, Boundary::PeriodicFermion).matrix_at(2.5)) < 1e-12);
  CHECK(max_abs(analytic - CentralOracle(chain, central, Boundary::PeriodicSpin).matrix_at(2.5)) > 1e-4);
}

TEST_CASE("coherent field amplitudes") {
  const ComplexVector alpha = coherent_field(9.0, 40);
  CHECK(std::abs(alpha.norm() - 1.0) < 1e-14);
  double mean = 0.0;
  for (int n = 0; n <= 40; ++n) mean += n * std::norm(alpha(n));
  CHECK(mean == doctest::Approx(9.0).epsilon(1e-8));
  CHECK(std::abs(coherent_field(0.0, 3)(0) - 1.0) < 1e-15);
  CHECK_THROWS_AS(coherent_field(40.0, 60), ToleranceError);
  CHECK_THROWS_AS(coherent_field(-1.0, 10), ValidationError);
}

TEST_CASE("spin-coherent expectations") {
  for (SpinSector sector : {SpinSector::Full, SpinSector::Symmetric}) {
    CavityParams p = small_cavity();
    p.coupling = 0.0;
    const auto ops = cavity_spin_ops(p, sector);
    const ComplexVector mu = spin_coherent_state(p, sector);
    CHECK(std::abs(mu.norm() - 1.0) < 1e-14);
    CHECK(expectation_J(mu, 0.0, ops) == doctest::Approx(2.0));
    CHECK(std::abs(expectation_J(mu, pi / 2, ops)) < 1e-14);
    CHECK(expectation_J(mu, pi / 6, ops) == doctest::Approx(2.0 * std::cos(pi / 6)));
  }
  // both sectors describe the same state
  CavityParams p = small_cavity();
  p.coupling = 0.0;
  p.theta = 1.1;
  p.phi = -0.7;
  const auto full_ops = cavity_spin_ops(p, SpinSector::Full);
  const auto sym_ops = cavity_spin_ops(p, SpinSector::Symmetric);
  const ComplexVector full = spin_coherent_state(p, SpinSector::Full);
  const ComplexVector sym = spin_coherent_state(p, SpinSector::Symmetric);
  for (int a = 0; a < 3; ++a) {
    CHECK(std::abs(full.dot(full_ops[a] * full) - sym.dot(sym_ops[a] * sym)) < 1e-13);
  }
  CHECK(full.dot(full_ops.sz * full).real() == doctest::Approx(2.0 * std::cos(1.1)));
  CHECK_THROWS_AS(cavity_space(small_cavity(), SpinSector::Symmetric), ValidationError);
}

TEST_CASE("cavity Hamiltonians: structure") {
  const CavityParams p = small_cavity();
  const CavitySpace s = cavity_space(p, SpinSector::Full);
  const ComplexMatrix n = photon_number(p, SpinSector::Full);
  for (CavityModel model : {CavityModel::Original, CavityModel::Effective2, CavityModel::Effective3}) {
    CHECK(numkit::hermiticity_defect(cavity_hamiltonian(p, model)) < 1e-12);
  }
  const ComplexMatrix eff3 = cavity_hamiltonian(p, CavityModel::Effective3);
  CHECK(max_abs(eff3 * n - n * eff3) == 0.0);

  CavityParams uncoupled = p;
  uncoupled.g = 0.0;
  const ComplexMatrix h = cavity_hamiltonian(uncoupled, CavityModel::Original);
  CHECK(max_abs(h * n - n * h) < 1e-12);
  CHECK(max_abs(block(h, s, 3, 2)) == 0.0);
}

TEST_CASE("effective blocks are the central-spin branches of the mapped model") {
  const CavityParams p = small_cavity();
  const CavitySpace s = cavity_space(p, SpinSector::Full);
  const ComplexMatrix eff3 = cavity_hamiltonian(p, CavityModel::Effective3);
  const int nc = 30;  // any Nc >= cutoff works; photons n map to S_z = n - Nc/2
  const dicke::MappedModel mapped = dicke::map_cavity_to_central(p, nc);
  for (int n : {0, 1, 7, 24}) {
    const double sz = n - 0.5 * nc;
    const ComplexMatrix branch =
        spin_chain_matrix(mapped.chain.with_field(mapped.chain.field + 2 * mapped.coupling * sz), Boundary::PeriodicSpin);
    CHECK(max_abs(block(eff3, s, n, n) - branch) < 1e-12);
  }
}

TEST_CASE("eff3 dynamics equal the Poisson mixture of per-photon-number spin evolutions") {
  const CavityParams p = small_cavity();
  const CavitySpace s = cavity_space(p, SpinSector::Full);
  const auto ops = cavity_spin_ops(p, SpinSector::Full);
  const ComplexVector psi0 = cavity_initial_state(p, SpinSector::Full);
  const numkit::HermEigen eff = numkit::herm_eig(cavity_hamiltonian(p, CavityModel::Effective3));
  const ComplexVector alpha = coherent_field(p.nbar, p.fock_cutoff);
  const ComplexVector mu = spin_coherent_state(p, SpinSector::Full);
  const double chi = 2 * p.g * p.g / p.detuning();
  for (double t : {0.3, 2.0, 11.0}) {
    for (double zeta : {0.0, pi / 6, 2.0}) {
      const double full = expectation_J(eff.evolve(psi0, t), zeta, ops, s);
      double mixture = 0.0;
      for (int n = 0; n <= p.fock_cutoff; ++n) {
        const xychain::ChainParams chain{p.n_sites, p.coupling, p.anisotropy, p.h0 - p.omega0 - chi * n};
        const ComplexVector evolved = numkit::unitary_evolution(spin_chain_matrix(chain, Boundary::PeriodicSpin), t) * mu;
        mixture += std::norm(alpha(n)) * expectation_J(evolved, zeta, ops);
      }
      CHECK(std::abs(full - mixture) < 1e-10);
    }
  }
}

TEST_CASE("original evolution conserves norm and energy") {
  const CavityParams p = small_cavity();
  const ComplexMatrix h = cavity_hamiltonian(p, CavityModel::Original);
  const numkit::HermEigen eig = numkit::herm_eig(h);
  const ComplexVector psi0 = cavity_initial_state(p, SpinSector::Full);
  const double e0 = psi0.dot(h * psi0).real();
  for (double t : {0.5, 4.0, 30.0}) {
    const ComplexVector psi = eig.evolve(psi0, t);
    CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
    CHECK(std::abs(psi.dot(h * psi).real() - e0) <= 1e-8 * std::abs(e0));
  }
}

TEST_CASE("difference ratio: trivial and cross-sector checks") {
  CavityParams p = small_cavity();
  const std::vector<double> times{0.0, 3.0, 40.0, 200.0};
  const std::vector<double> zetas{0.0, pi / 6, pi / 2};

  CavityParams uncoupled = p;
  uncoupled.g = 0.0;
  const DifferenceRatio zero = difference_ratio(uncoupled, times, zetas);
  CHECK(zero.max_abs_k < 1e-10);

  const DifferenceRatio at_zero = difference_ratio(p, {0.0}, zetas);
  CHECK(at_zero.max_abs_k < 1e-12);

  // With lambda = 0 the symmetric sector reproduces the full space.
  p.coupling = 0.0;
  const DifferenceRatio full = difference_ratio(p, times, zetas, CavityModel::Effective2, SpinSector::Full);
  const DifferenceRatio sym = difference_ratio(p, times, zetas, CavityModel::Effective2, SpinSector::Symmetric);
  CHECK((full.k - sym.k).cwiseAbs().maxCoeff() < 1e-9);

  // Results do not depend on the worker count.
  const DifferenceRatio threaded = difference_ratio(p, times, zetas, CavityModel::Effective3, SpinSector::Full, 3);
  const DifferenceRatio serial = difference_ratio(p, times, zetas, CavityModel::Effective3, SpinSector::Full, 1);
  CHECK((threaded.k - serial.k).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(difference_ratio(p, times, zetas, CavityModel::Original), ValidationError);
  CHECK_THROWS_AS(difference_ratio(p, {}, zetas), ValidationError);
}

TEST_CASE("difference ratio shrinks deeper in the dispersive regime") {
  CavityParams p = small_cavity();
  std::vector<double> times;
  for (int i = 0; i <= 200; ++i) times.push_back(2.0 * i);
  const std::vector<double> zetas{0.0, pi / 4, pi / 2, 3 * pi / 4};
  double previous = INFINITY;
  for (double g : {0.6, 0.3, 0.15}) {
    p.g = g;
    const double k = difference_ratio(p, times, zetas).max_abs_k;
    CHECK(k < previous);
    previous = k;
  }
}

TEST_CASE("Fock leakage monitor raises when the cutoff is too tight") {
  CavityParams p;
  p.omega0 = 10.0;
  p.omega_a = 9.5;
  p.g = 1.0;
  p.nbar = 4.0;
  p.fock_cutoff = 16;
  p.n_sites = 4;
  p.theta = 0.2;  // mostly up: spins can emit photons
  CHECK_THROWS_AS(difference_ratio(p, {0.0, 1.0, 2.0, 5.0, 9.0}, {0.0}), ToleranceError);

  CavityParams low = p;
  low.fock_cutoff = 10;
  CHECK_THROWS_AS(low.validate(), ValidationError);
}
