#include "edgescatter/scattering_engine.hpp"

#include <Eigen/LU>
#include <cmath>
#include <string>

namespace edgescatter {

namespace {
constexpr double kConditionGuard = 1e12;
}

resonance_singularity::resonance_singularity(double k)
    : std::runtime_error("near-singular scattering solve at k0 = " + std::to_string(k)),
      k0(k) {}

GreensKernel ScatterProblem::kernel() const {
  return model == Model::chain ? make_kernel(chain, k0) : make_kernel(zpnr, k0);
}

double ScatterProblem::coupling() const {
  return model == Model::chain ? chain.coupling() : zpnr.coupling();
}

std::pair<SpinOperator, SpinOperator> build_potentials(const ScatterProblem& prob) {
  double u = prob.coupling();
  SpinOperator v00 = u * embed_pair(heisenberg_pair(), 1, 2);
  SpinOperator vmm = u * embed_pair(heisenberg_pair(), 1, 3);
  if (prob.separation == 0) return {v00 + vmm, SpinOperator::Zero()};
  return {v00, vmm};
}

SiteSpinMatrix build_coupling(const GreensKernel& kernel, long separation,
                              const SpinOperator& V00, const SpinOperator& Vmm) {
  if (separation < 1)
    throw std::domain_error("build_coupling: site blocks require separation >= 1");
  cplx g00 = kernel.diag;
  cplx g0m = kernel.offdiag(separation);
  SiteSpinMatrix chi;
  chi.topLeftCorner<8, 8>() = g00 * V00;
  chi.topRightCorner<8, 8>() = g0m * Vmm;
  chi.bottomLeftCorner<8, 8>() = g0m * V00;
  chi.bottomRightCorner<8, 8>() = g00 * Vmm;
  return chi;
}

namespace {

// rcond guard shared by the 8- and 16-dim solves
template <typename Mat, typename Vec>
Vec guarded_solve(const Mat& a, const Vec& b, double k0) {
  Eigen::PartialPivLU<Mat> lu(a);
  double rc = lu.rcond();
  if (!(rc > 1.0 / kConditionGuard)) throw resonance_singularity(k0);
  return lu.solve(b);
}

} // namespace

std::pair<SpinVector, SpinVector> solve_auxiliary(const ScatterProblem& prob) {
  GreensKernel kern = prob.kernel();
  auto [V00, Vmm] = build_potentials(prob);

  if (prob.separation == 0) {
    SpinOperator a = SpinOperator::Identity() - kern.diag * V00;
    SpinVector x = guarded_solve<SpinOperator, SpinVector>(a, prob.initial, prob.k0);
    return {V00 * x, SpinVector::Zero()};
  }

  // incident wave reaches site m with phase e^{+-i k0 m}
  double sgn = prob.incidence == Incidence::left ? 1.0 : -1.0;
  cplx phase_m = std::polar(1.0, sgn * prob.k0 * prob.separation);

  SiteSpinMatrix a = SiteSpinMatrix::Identity() -
                     build_coupling(kern, prob.separation, V00, Vmm);
  SiteSpinVector rhs;
  rhs.head<8>() = prob.initial;
  rhs.tail<8>() = phase_m * prob.initial;
  SiteSpinVector x = guarded_solve<SiteSpinMatrix, SiteSpinVector>(a, rhs, prob.k0);
  return {V00 * x.head<8>(), Vmm * x.tail<8>()};
}

ScatterOutcome scatter(const ScatterProblem& prob) {
  GreensKernel kern = prob.kernel();
  auto [s0, sm] = solve_auxiliary(prob);

  double sgn = prob.incidence == Incidence::left ? 1.0 : -1.0;
  cplx phase_m = std::polar(1.0, sgn * prob.k0 * prob.separation);

  ScatterOutcome out;
  out.k0 = prob.k0;
  out.energy = kern.energy;
  out.s0 = s0;
  out.sm = sm;
  out.S_R = kern.outgoing * (s0 + phase_m * sm);
  out.S_T = prob.initial + kern.outgoing * (s0 + sm / phase_m);
  out.R = out.S_R.squaredNorm();
  out.T = out.S_T.squaredNorm();
  return out;
}

} // namespace edgescatter
