#pragma once

namespace cspin {

/// Cavity-QED model: Nb two-level spins on a periodic XY chain, all coupled
/// to one cavity mode. Frequencies are angular (rad per unit time).
struct CavityParams {
  double omega0 = 0.0;   // spin transition frequency
  double omega_a = 0.0;  // cavity frequency
  double g = 0.0;        // single-photon coupling
  double nbar = 0.0;     // mean photon number of the initial coherent field
  int fock_cutoff = 0;   // highest retained Fock level
  double h0 = 0.0;
  double coupling = 0.0;    // lambda
  double anisotropy = 0.0;  // gamma
  int n_sites = 2;          // Nb
  double theta = 0.0;       // spin-coherent polar angle
  double phi = 0.0;         // spin-coherent azimuth
  double zeta = 0.0;        // measurement rotation angle

  /// Delta = omega0 - h0 - omega_a.
  double detuning() const { return omega0 - h0 - omega_a; }

  /// Throws ValidationError on zero detuning, non-finite entries, or a Fock
  /// cutoff below nbar + 6 sqrt(nbar).
  void validate() const;
};

}  // namespace cspin
