#pragma once
// Single-band dispersions and lattice Green's functions for the two host
// systems: the infinite 1D chain and the A-edge band of a zigzag phosphorene
// nanoribbon (zPNR).

#include "edgescatter/types.hpp"

namespace edgescatter {

enum class Model { chain, zpnr };

struct ChainParams {
  double t = 1.0;       // hopping (sets the energy unit)
  double u_prime = 0.0; // impurity exchange in units of t
  double coupling() const { return u_prime * t; }
};

// Hoppings in eV; defaults are the accepted DFT-fitted phosphorene values.
// The edge band only feels the combination t_eff = 2*t1*t4/t2, recomputed on
// the fly so the three hoppings stay the single source of truth.
struct ZpnrParams {
  double t1 = -1.220;
  double t2 = 3.665;
  double t4 = -0.105;
  double u_prime = 0.0; // impurity exchange in units of t_eff

  double t_eff() const { return 2.0 * t1 * t4 / t2; }
  double band_center() const { return -2.0 * t_eff(); }
  double ratio() const { return t1 / t2; }
  double coupling() const { return u_prime * t_eff(); }

  // transverse decay factor and edge-state normalization of the A-edge mode
  double alpha(double k) const;
  double gamma_sq(double k) const { double a = alpha(k); return 1.0 - a * a; }
};

// E(k0) = 2 t cos k0 for the chain.
double chain_dispersion(const ChainParams& p, double k0);

// Reported edge-band energy E(k0) = E0 + 2 t_eff cos k0 (pole-condition
// inversion; the scattering formulas depend on k0 only).
double zpnr_dispersion(const ZpnrParams& p, double k0);

// Retarded chain Green's function between sites m and mp:
//   G = -e^{i k0 |m-mp|} / (2 i t sin k0),
// normalized so that E G(d) - t [G(d+1) + G(d-1)] = delta_{d,0}
// with outgoing-wave (e^{+ik0|d|}) boundary conditions.
cplx chain_green(const ChainParams& p, long m, long mp, double k0);

// zPNR edge-band Green's function projected on the edge row. The diagonal
// element carries an extra real local term -(t1/t2)^2 / t_eff from the
// evanescent part of the edge mode; off-diagonal elements are purely the
// outgoing wave gamma^2(k0) e^{i k0 m} / (2 i t_eff sin k0), m >= 1.
cplx zpnr_green_diag(const ZpnrParams& p, double k0);
cplx zpnr_green_offdiag(const ZpnrParams& p, long m, double k0);

// Per-(model, k0) evaluator consumed by the scattering engine.
// offdiag(sep) = outgoing * e^{i k0 sep}; `outgoing` is also the amplitude
// with which a scattering source radiates into the asymptotic region.
struct GreensKernel {
  Model model;
  double k0 = 0.0;
  double energy = 0.0;
  cplx outgoing{};
  cplx diag{};
  cplx offdiag(long sep) const;
};

GreensKernel make_kernel(const ChainParams& p, double k0);
GreensKernel make_kernel(const ZpnrParams& p, double k0);

// Band-interior check shared by every closed form: sin k0 > 1e-9, else the
// 1/sin k0 poles blow up. Throws std::domain_error.
void require_band_interior(double k0);

} // namespace edgescatter
