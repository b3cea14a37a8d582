#pragma once
// Independent brute-force verifiers for the closed-form pipeline:
//  - wave_matching: spin-resolved lattice Schroedinger solve on the chain,
//  - spinless_transfer: 2x2 transfer-matrix transmission for scalar defects,
//  - quadrature_green: direct numerical integral behind the zPNR closed forms.
// Deliberately slow and structurally unrelated to the engine; test-suite use.

#include "edgescatter/scattering_engine.hpp"

namespace edgescatter {

struct WaveMatchOutcome {
  double R = 0.0;
  double T = 0.0;
  SpinVector reflected{};   // r amplitudes (coefficient of e^{-i k0 x})
  SpinVector transmitted{}; // tau amplitudes (coefficient of e^{+i k0 x})
};

// Solve E psi(x) = t [psi(x-1) + psi(x+1)] + V(x) psi(x) with plane-wave
// ansatz outside [0, m] and explicit interior amplitudes; square system of
// (m+3) blocks of 8. Chain model only.
WaveMatchOutcome wave_matching(const ChainParams& p, int separation,
                               const SpinVector& initial, double k0);

// Transmission through scalar on-site defects u_eff at sites 0 and
// separation, by composing 2x2 site transfer matrices. separation == 0 puts
// both defects on one site (strength 2 u_eff), matching the engine's
// coincident-impurity collapse.
double spinless_transfer(double u_eff, int separation, double k0, double t = 1.0);

// Closed form for one isolated defect: T = 1 / (1 + (u_eff / (2 t sin k0))^2).
double spinless_single_defect(double u_eff, double k0, double t = 1.0);

struct QuadratureSpec {
  double eta = 1e-3;        // broadening replacing i0+
  long n_points = 2'000'000; // midpoint panels on [-pi, pi]
  double tolerance = 1e-3;  // convergence contract for the extrapolation
  int levels = 9;           // eta-halving extrapolation depth
};

struct QuadratureResult {
  cplx value{};          // eta -> 0 extrapolation
  cplx raw{};            // plain integral at spec.eta, no extrapolation
  double refine_error{}; // |last tableau correction|, convergence estimate
};

// Edge-band resolvent element between edge cells 0 and sep (>= 0):
//   (1/2pi) Int_{-pi}^{pi} dk gamma^2(k) e^{i k sep} / (2 t_eff (cos k - cos k0) + i eta).
// The +i eta branch keeps the +k0 pole in the upper half-plane, so the result
// is outgoing (e^{+i k0 sep}) and converges to the closed forms as eta -> 0;
// extrapolation handled internally (see QuadratureResult). Throws
// std::runtime_error if the tableau fails its convergence contract.
QuadratureResult quadrature_green(const ZpnrParams& p, long sep, double k0,
                                  const QuadratureSpec& spec = {});

} // namespace edgescatter
