#include "edgescatter/lattice_models.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace edgescatter {

void require_band_interior(double k0) {
  if (!(std::sin(k0) > 1e-9))
    throw std::domain_error("k0 too close to a band edge (sin k0 <= 1e-9)");
}

double ZpnrParams::alpha(double k) const {
  return -2.0 * ratio() * std::cos(0.5 * k);
}

double chain_dispersion(const ChainParams& p, double k0) {
  return 2.0 * p.t * std::cos(k0);
}

double zpnr_dispersion(const ZpnrParams& p, double k0) {
  return p.band_center() + 2.0 * p.t_eff() * std::cos(k0);
}

cplx chain_green(const ChainParams& p, long m, long mp, double k0) {
  require_band_interior(k0);
  double d = static_cast<double>(std::labs(m - mp));
  // minus sign: with it, E G(d) - t [G(d+1) + G(d-1)] = delta_{d,0}; the bare
  // e^{ik|d|}/(2it sin k) resolves (E - H) G = -1 and flips the potential.
  return -std::polar(1.0, k0 * d) / (2.0 * I * p.t * std::sin(k0));
}

cplx zpnr_green_diag(const ZpnrParams& p, double k0) {
  require_band_interior(k0);
  double r = p.ratio();
  return p.gamma_sq(k0) / (2.0 * I * p.t_eff() * std::sin(k0)) - r * r / p.t_eff();
}

cplx zpnr_green_offdiag(const ZpnrParams& p, long m, double k0) {
  require_band_interior(k0);
  if (m < 1)
    throw std::domain_error("zpnr_green_offdiag needs site separation >= 1 "
                            "(use zpnr_green_diag at separation 0)");
  return p.gamma_sq(k0) * std::polar(1.0, k0 * static_cast<double>(m)) /
         (2.0 * I * p.t_eff() * std::sin(k0));
}

cplx GreensKernel::offdiag(long sep) const {
  return outgoing * std::polar(1.0, k0 * static_cast<double>(std::labs(sep)));
}

GreensKernel make_kernel(const ChainParams& p, double k0) {
  require_band_interior(k0);
  cplx out = -1.0 / (2.0 * I * p.t * std::sin(k0));
  return {Model::chain, k0, chain_dispersion(p, k0), out, out};
}

GreensKernel make_kernel(const ZpnrParams& p, double k0) {
  require_band_interior(k0);
  cplx out = p.gamma_sq(k0) / (2.0 * I * p.t_eff() * std::sin(k0));
  double r = p.ratio();
  return {Model::zpnr, k0, zpnr_dispersion(p, k0), out, out - r * r / p.t_eff()};
}

} // namespace edgescatter
