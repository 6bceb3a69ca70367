#include <doctest.h>

#include <cmath>
#include <numbers>

#include "centralspin/error.hpp"
#include "centralspin/numkit.hpp"
#include "support.hpp"

using namespace cspin;
using namespace cspin::numkit;
using testing_support::random_hermitian;

namespace {

// Classic RK4 for i d(psi)/dt = H psi.
ComplexVector rk4(const ComplexMatrix& h, ComplexVector psi, double t, double step) {
  const int steps = static_cast<int>(std::lround(t / step));
  const double dt = t / steps;
  auto f = [&](const ComplexVector& v) -> ComplexVector { return -kI * (h * v); };
  for (int s = 0; s < steps; ++s) {
    const ComplexVector k1 = f(psi);
    const ComplexVector k2 = f(psi + 0.5 * dt * k1);
    const ComplexVector k3 = f(psi + 0.5 * dt * k2);
    const ComplexVector k4 = f(psi + dt * k3);
    psi += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return psi;
}

}  // namespace

TEST_CASE("herm_eig on identity and diagonal input") {
  const HermEigen id = herm_eig(ComplexMatrix::Identity(3, 3));
  CHECK(max_abs((id.eigenvalues - RealVector::Ones(3)).cast<Complex>()) < 1e-14);
  CHECK(max_abs(id.eigenvectors.adjoint() * id.eigenvectors - ComplexMatrix::Identity(3, 3)) < 1e-14);

  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 2.0;
  d(1, 1) = -1.0;
  const HermEigen e = herm_eig(d);
  CHECK(e.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(e.eigenvalues(1) == doctest::Approx(2.0));
}

TEST_CASE("herm_eig reconstructs random Hermitian matrices") {
  std::mt19937_64 rng(11);
  for (int n : {1, 2, 8, 33}) {
    const ComplexMatrix h = random_hermitian(rng, n);
    const HermEigen e = herm_eig(h);
    CHECK(max_abs(e.reconstruct() - h) <= 1e-10 * max_abs(h));
    CHECK(max_abs(e.eigenvectors.adjoint() * e.eigenvectors - ComplexMatrix::Identity(n, n)) <= 1e-10);
    for (int i = 1; i < n; ++i) CHECK(e.eigenvalues(i) >= e.eigenvalues(i - 1));
  }
}

TEST_CASE("herm_eig rejects bad input") {
  CHECK_THROWS_AS(herm_eig(ComplexMatrix::Zero(2, 3)), ValidationError);
  CHECK_THROWS_AS(herm_eig(ComplexMatrix()), ValidationError);
  ComplexMatrix skew = ComplexMatrix::Identity(2, 2);
  skew(0, 1) = 0.5;
  CHECK_THROWS_AS(herm_eig(skew), ValidationError);
  ComplexMatrix nan = ComplexMatrix::Identity(2, 2);
  nan(1, 1) = std::nan("");
  CHECK_THROWS_AS(herm_eig(nan), ValidationError);
}

TEST_CASE("unitary_evolution basics") {
  std::mt19937_64 rng(5);
  const ComplexMatrix h = random_hermitian(rng, 5);
  CHECK(max_abs(unitary_evolution(h, 0.0) - ComplexMatrix::Identity(5, 5)) < 1e-13);
  const ComplexMatrix u = unitary_evolution(h, 3.3);
  CHECK(max_abs(u.adjoint() * u - ComplexMatrix::Identity(5, 5)) <= 1e-9);

  ComplexMatrix z = ComplexMatrix::Zero(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  CHECK(max_abs(unitary_evolution(z, std::numbers::pi) + ComplexMatrix::Identity(2, 2)) < 1e-12);
}

TEST_CASE("unitary_evolution matches RK4 integration column by column") {
  std::mt19937_64 rng(7);
  const ComplexMatrix h = random_hermitian(rng, 6);
  const ComplexMatrix u = unitary_evolution(h, 0.7);
  for (int c = 0; c < 6; ++c) {
    const ComplexVector e = ComplexVector::Unit(6, c);
    CHECK((rk4(h, e, 0.7, 1e-4) - u.col(c)).cwiseAbs().maxCoeff() < 1e-6);
  }
  const HermEigen eig = herm_eig(h);
  const ComplexVector psi = testing_support::random_state(rng, 6);
  CHECK((eig.evolve(psi, 0.7) - u * psi).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("kron and partial_trace") {
  std::mt19937_64 rng(3);
  const ComplexMatrix a = random_hermitian(rng, 2);
  const ComplexMatrix b = random_hermitian(rng, 3);
  const ComplexMatrix ab = kron(a, b);
  CHECK(ab.rows() == 6);
  CHECK(std::abs(ab(1 * 3 + 2, 0 * 3 + 1) - a(1, 0) * b(2, 1)) < 1e-15);

  CHECK(max_abs(partial_trace(ab, 2, 3, Keep::A) - b.trace() * a) < 1e-13);
  CHECK(max_abs(partial_trace(ab, 2, 3, Keep::B) - a.trace() * b) < 1e-13);

  const ComplexMatrix rho = random_hermitian(rng, 12);
  for (Keep keep : {Keep::A, Keep::B}) {
    CHECK(std::abs(partial_trace(rho, 3, 4, keep).trace() - rho.trace()) < 1e-12);
  }
  CHECK_THROWS_AS(partial_trace(rho, 5, 2, Keep::A), ValidationError);
}
