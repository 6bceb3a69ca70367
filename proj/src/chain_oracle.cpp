#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "centralspin/error.hpp"
#include "centralspin/oracles.hpp"

namespace cspin::oracles {

namespace {

using Basis = std::uint32_t;

bool is_up(Basis s, int site) { return ((s >> site) & 1U) != 0; }

struct Signed {
  Basis state;
  double sign;
};

// Jordan-Wigner fermion operator on site `site`, ordering sites ascending.
std::optional<Signed> apply_fermion(Signed in, int site, bool create) {
  if (is_up(in.state, site) == create) return std::nullopt;
  const Basis below = in.state & ((Basis{1} << site) - 1U);
  const double string = (std::popcount(below) % 2 == 0) ? 1.0 : -1.0;
  return Signed{in.state ^ (Basis{1} << site), in.sign * string};
}

// Adds amp * op_first(site_first) op_second(site_second) (second applied first).
void add_bilinear(ComplexMatrix& h, Basis s, double amp, int first, bool create_first, int second,
                  bool create_second) {
  auto mid = apply_fermion({s, 1.0}, second, create_second);
  if (!mid) return;
  auto out = apply_fermion(*mid, first, create_first);
  if (!out) return;
  h(out->state, s) += amp * out->sign;
}

void add_fermion_bond(ComplexMatrix& h, Basis s, int i, int j, const xychain::ChainParams& p) {
  const double hop = 0.5 * p.coupling;
  const double pair = 0.5 * p.coupling * p.anisotropy;
  add_bilinear(h, s, hop, i, true, j, false);
  add_bilinear(h, s, hop, j, true, i, false);
  add_bilinear(h, s, pair, i, true, j, true);
  add_bilinear(h, s, pair, j, false, i, false);
}

void add_spin_bond(ComplexMatrix& h, Basis s, int i, int j, const xychain::ChainParams& p) {
  // -(lambda/4)[(1+g) sx sx + (1-g) sy sy] = -(lambda/2)[(s+s- + s-s+) + g (s+s+ + s-s-)]
  const Basis flipped = s ^ (Basis{1} << i) ^ (Basis{1} << j);
  const double amp = is_up(s, i) != is_up(s, j) ? 1.0 : p.anisotropy;
  h(flipped, s) += -0.5 * p.coupling * amp;
}

}  // namespace

numkit::RealVector parity_diagonal(int n_sites) {
  const Basis dim = Basis{1} << n_sites;
  numkit::RealVector out(dim);
  for (Basis s = 0; s < dim; ++s) out(s) = ((n_sites - std::popcount(s)) % 2 == 0) ? 1.0 : -1.0;
  return out;
}

ComplexMatrix spin_chain_matrix(const xychain::ChainParams& p, Boundary boundary) {
  p.validate();
  if (p.n_sites > kMaxChainSites) {
    throw ValidationError("spin_chain_matrix: n_sites " + std::to_string(p.n_sites) +
                          " exceeds " + std::to_string(kMaxChainSites));
  }
  const int n = p.n_sites;
  const Basis dim = Basis{1} << n;
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (Basis s = 0; s < dim; ++s) {
    double diagonal = 0.0;
    for (int i = 0; i < n; ++i) diagonal += is_up(s, i) ? -0.5 * p.field : 0.5 * p.field;
    h(s, s) += diagonal;

    for (int i = 0; i < n; ++i) {
      const int j = (i + 1) % n;
      const bool closing = (j == 0);
      if (closing && boundary == Boundary::Open) continue;
      if (boundary == Boundary::PeriodicFermion) {
        add_fermion_bond(h, s, i, j, p);
      } else {
        add_spin_bond(h, s, i, j, p);
      }
    }
  }
  return h;
}

dicke::CollectiveOps chain_collective_ops(int n_sites) {
  if (n_sites < 1 || n_sites > kMaxChainSites) {
    throw ValidationError("chain_collective_ops: n_sites out of range");
  }
  const Basis dim = Basis{1} << n_sites;
  ComplexMatrix raise = ComplexMatrix::Zero(dim, dim);
  ComplexMatrix jz = ComplexMatrix::Zero(dim, dim);
  for (Basis s = 0; s < dim; ++s) {
    jz(s, s) = std::popcount(s) - 0.5 * n_sites;
    for (int i = 0; i < n_sites; ++i) {
      if (!is_up(s, i)) raise(s | (Basis{1} << i), s) = 1.0;
    }
  }
  const ComplexMatrix lower = raise.adjoint();
  return {0.5 * (raise + lower), -0.5 * numkit::kI * (raise - lower), jz};
}

}  // namespace cspin::oracles
