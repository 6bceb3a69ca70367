#pragma once

// Free-fermion description of the periodic XY bath chain
//
//   H0(h) = -1/2 sum_i { lambda/2 [(1+gamma) sx_i sx_{i+1} + (1-gamma) sy_i sy_{i+1}] + h sz_i }
//
// after Jordan-Wigner, Fourier and Bogoliubov transformations:
// H0(h) = sum_k Lambda_k (b_k^dagger b_k - 1/2) on the uniform grid
// k = 2 pi m / Nb, m = -Nb/2 + 1, ..., Nb/2.

#include <vector>

namespace cspin::xychain {

struct ChainParams {
  int n_sites = 2;
  double coupling = 1.0;    // lambda
  double anisotropy = 0.0;  // gamma
  double field = 0.0;       // h

  /// Throws ValidationError unless n_sites is even and >= 2 and all reals
  /// are finite.
  void validate() const;

  ChainParams with_field(double h) const {
    ChainParams p = *this;
    p.field = h;
    return p;
  }
};

/// One quasi-momentum of the grid. The sine and cosine are stored exactly
/// for the self-conjugate momenta k = 0 and k = pi.
struct Momentum {
  int index = 0;  // m
  double k = 0.0;
  double sin_k = 0.0;
  double cos_k = 1.0;
  bool paired = false;  // 0 < k < pi; the partner -k is implied
};

/// A momentum together with its bath dispersion and Bogoliubov angle.
struct MomentumMode : Momentum {
  double energy = 0.0;  // Lambda_k
  double angle = 0.0;   // nu_k
};

/// Bogoliubov data of H0(h + 2 eta m) relative to the bath basis of H0(h).
struct ShiftedModeData {
  double dicke_label = 0.0;  // m
  double theta = 0.0;        // (mu_{m,k} - nu_k) / 2, reduced to (-pi/2, pi/2]
  double energy = 0.0;       // E_{m,k}
};

/// All Nb momenta, ordered by m ascending.
std::vector<Momentum> momentum_grid(int n_sites);

/// The representative modes entering product formulas: every paired k in
/// (0, pi) plus the unpaired k = 0 and k = pi.
std::vector<MomentumMode> bath_modes(const ChainParams& p);

double dispersion(const ChainParams& p, const Momentum& k);
double dispersion(const ChainParams& p, double k);

/// nu_k = atan2(lambda gamma sin k, lambda cos k - h); 0 where Lambda_k = 0.
double bogoliubov_angle(const ChainParams& p, const Momentum& k);
double bogoliubov_angle(const ChainParams& p, double k);

/// Mode data of H0(h + 2 eta m), with mu_{m,k} taken in the same atan2
/// convention as nu_k.
ShiftedModeData shifted_mode(const ChainParams& p, double eta, double dicke_label,
                             const Momentum& k);
ShiftedModeData shifted_mode(const ChainParams& p, double eta, double dicke_label, double k);

/// Z(beta, h) = prod over all Nb modes of 2 cosh(beta Lambda_k / 2).
double partition_function(const ChainParams& p, double beta);

/// log Z, safe for large beta * Nb.
double log_partition_function(const ChainParams& p, double beta);

/// Eigenvalues of sum_k eps_k (n_k - 1/2) over all 2^Nb occupations, sorted
/// ascending. eps_k is Lambda_k for the bath field. Used to cross-check dense
/// chain spectra; Nb <= 20.
std::vector<double> mode_sum_spectrum(const ChainParams& p);

}  // namespace cspin::xychain
