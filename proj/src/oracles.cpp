#include "edgescatter/oracles.hpp"

#include <Eigen/LU>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace edgescatter {

WaveMatchOutcome wave_matching(const ChainParams& p, int separation,
                               const SpinVector& initial, double k0) {
  require_band_interior(k0);
  if (separation < 0) throw std::domain_error("wave_matching: separation must be >= 0");

  const int m = separation;
  const double t = p.t;
  const double e = chain_dispersion(p, k0);
  const double u = p.coupling();
  const cplx f = std::polar(1.0, k0); // one-site propagation phase

  SpinOperator v_left = u * embed_pair(heisenberg_pair(), 1, 2);
  SpinOperator v_right = u * embed_pair(heisenberg_pair(), 1, 3);

  // unknown blocks of 8: [r, tau, psi(0..m)]; equations at sites -1 .. m+1
  const int nb = m + 3;
  const int n = 8 * nb;
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(n);
  auto blk = [&](int row, int col) { return a.block<8, 8>(8 * row, 8 * col); };
  const SpinOperator id = SpinOperator::Identity();
  const int col_r = 0, col_tau = 1, col_psi = 2;

  // site -1: E psi(-1) - t [psi(-2) + psi(0)] = 0 with the plane-wave ansatz
  // psi(x<=-1) = f^x chi + f^{-x} r substituted
  blk(0, col_r) = (e * f - t * f * f) * id;
  blk(0, col_psi) = -t * id;
  rhs.segment<8>(0) = -(e / f - t / (f * f)) * initial;

  // site m+1: E f^{m+1} tau - t [psi(m) + f^{m+2} tau] = 0
  cplx fm1 = std::polar(1.0, k0 * (m + 1));
  blk(nb - 1, col_tau) = (e * fm1 - t * fm1 * f) * id;
  blk(nb - 1, col_psi + m) = -t * id;

  // interior sites 0..m: E psi(s) - t [psi(s-1) + psi(s+1)] - V(s) psi(s) = 0
  for (int s = 0; s <= m; ++s) {
    int row = 1 + s;
    SpinOperator v = SpinOperator::Zero();
    if (s == 0) v += v_left;
    if (s == m) v += v_right;
    blk(row, col_psi + s) = e * id - v;
    if (s == 0) {
      blk(row, col_r) = -t * f * id; // psi(-1) = chi/f + f r
      rhs.segment<8>(8 * row) += (t / f) * initial;
    } else {
      blk(row, col_psi + s - 1) = -t * id;
    }
    if (s == m)
      blk(row, col_tau) = -t * fm1 * id;
    else
      blk(row, col_psi + s + 1) = -t * id;
  }

  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(a);
  if (!(lu.rcond() > 1e-12)) throw resonance_singularity(k0);
  Eigen::VectorXcd x = lu.solve(rhs);

  WaveMatchOutcome out;
  out.reflected = x.segment<8>(8 * col_r);
  out.transmitted = x.segment<8>(8 * col_tau);
  out.R = out.reflected.squaredNorm();
  out.T = out.transmitted.squaredNorm();
  return out;
}

double spinless_transfer(double u_eff, int separation, double k0, double t) {
  require_band_interior(k0);
  if (separation < 0) throw std::domain_error("spinless_transfer: separation must be >= 0");
  const double e = 2.0 * t * std::cos(k0);
  const cplx f = std::polar(1.0, k0);

  using M2 = Eigen::Matrix2cd;
  auto site = [&](double u) {
    M2 s;
    s << (e - u) / t, -1.0, 1.0, 0.0; // (psi(x+1), psi(x)) = s (psi(x), psi(x-1))
    return s;
  };

  M2 prod = site(separation == 0 ? 2.0 * u_eff : u_eff);
  for (int s = 1; s <= separation; ++s)
    prod = site(s == separation ? u_eff : 0.0) * prod;

  // incoming + reflected on the left, transmitted-only on the right:
  // prod (a + r b) = tau c with a = (1, 1/f), b = (1, f),
  // c = (f^{m+1}, f^m)
  Eigen::Vector2cd va(1.0, 1.0 / f), vb(1.0, f);
  Eigen::Vector2cd vc(std::pow(f, separation + 1), std::pow(f, separation));
  M2 lin;
  lin.col(0) = prod * vb;
  lin.col(1) = -vc;
  Eigen::Vector2cd sol = lin.partialPivLu().solve(-(prod * va));
  return std::norm(sol(1));
}

double spinless_single_defect(double u_eff, double k0, double t) {
  require_band_interior(k0);
  double q = u_eff / (2.0 * t * std::sin(k0));
  return 1.0 / (1.0 + q * q);
}

namespace {

// fixed-block pairwise sum: deterministic for a given length
cplx pairwise_sum(std::vector<cplx>& v) {
  for (size_t len = v.size(); len > 1;) {
    size_t half = (len + 1) / 2;
    for (size_t i = 0; i + half < len; ++i) v[i] += v[i + half];
    len = half;
  }
  return v.empty() ? cplx{} : v[0];
}

constexpr long kBlock = 4096;

} // namespace

QuadratureResult quadrature_green(const ZpnrParams& p, long sep, double k0,
                                  const QuadratureSpec& spec) {
  require_band_interior(k0);
  if (!(spec.eta > 0.0) || spec.n_points < 2 || spec.levels < 2)
    throw std::invalid_argument("quadrature_green: bad spec");
  sep = std::labs(sep);

  const long n = spec.n_points;
  const double pi = std::numbers::pi;
  const double h = 2.0 * pi / static_cast<double>(n);
  const double te = p.t_eff();
  const double cos_k0 = std::cos(k0);

  // the eta-independent pieces: weight(k) = gamma^2(k) e^{i k sep} h / 2pi
  // and the real part of the resolvent denominator
  std::vector<cplx> weight(n);
  std::vector<double> den(n);
  for (long j = 0; j < n; ++j) {
    double k = -pi + (static_cast<double>(j) + 0.5) * h; // midpoint panels
    weight[j] = p.gamma_sq(k) * std::polar(h / (2.0 * pi), k * static_cast<double>(sep));
    den[j] = 2.0 * te * (std::cos(k) - cos_k0);
  }

  auto integral = [&](double eta) {
    std::vector<cplx> partial;
    partial.reserve((n + kBlock - 1) / kBlock);
    for (long b = 0; b < n; b += kBlock) {
      cplx acc{};
      long hi = std::min(n, b + kBlock);
      for (long j = b; j < hi; ++j) {
        double d = den[j];
        double inv = 1.0 / (d * d + eta * eta);
        acc += weight[j] * cplx(d * inv, -eta * inv);
      }
      partial.push_back(acc);
    }
    return pairwise_sum(partial);
  };

  // eta-halving extrapolation to the i0+ limit (leading error is linear in eta)
  QuadratureResult res;
  std::vector<cplx> tab(spec.levels);
  cplx prev_diag{};
  for (int lvl = 0; lvl < spec.levels; ++lvl) {
    cplx cur = integral(spec.eta / static_cast<double>(1L << lvl));
    if (lvl == 0) res.raw = cur;
    cplx carry = tab[0];
    tab[0] = cur;
    for (int i = 1; i <= lvl; ++i) {
      cplx next = tab[i - 1] + (tab[i - 1] - carry) / static_cast<double>((1L << i) - 1);
      carry = tab[i];
      tab[i] = next;
    }
    if (lvl == spec.levels - 1) res.refine_error = std::abs(tab[lvl] - prev_diag);
    prev_diag = tab[lvl];
  }
  res.value = tab[spec.levels - 1];
  if (!(res.refine_error < spec.tolerance))
    throw std::runtime_error("quadrature_green: extrapolation did not converge");
  return res;
}

} // namespace edgescatter
