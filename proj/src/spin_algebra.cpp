#include "edgescatter/spin_algebra.hpp"

#include <Eigen/Eigenvalues>
#include <stdexcept>

namespace edgescatter {

PairMatrix heisenberg_pair() {
  PairMatrix h = PairMatrix::Zero();
  h(0, 0) = 0.25;
  h(1, 1) = -0.25;
  h(2, 2) = -0.25;
  h(3, 3) = 0.25;
  h(1, 2) = 0.5;
  h(2, 1) = 0.5;
  return h;
}

namespace {

// bit of qubit q (1-based, qubit 1 = most significant) in basis index b
inline int bit_of(int b, int q) { return (b >> (3 - q)) & 1; }

} // namespace

SpinOperator embed_pair(const PairMatrix& pair_op, int i, int j) {
  if (i < 1 || j > 3 || i >= j)
    throw std::invalid_argument("embed_pair: qubit pair must satisfy 1 <= i < j <= 3");
  int k = 6 - i - j; // the spectator qubit
  SpinOperator out = SpinOperator::Zero();
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) {
      if (bit_of(r, k) != bit_of(c, k)) continue;
      int pr = 2 * bit_of(r, i) + bit_of(r, j);
      int pc = 2 * bit_of(c, i) + bit_of(c, j);
      out(r, c) = pair_op(pr, pc);
    }
  return out;
}

PairMatrix partial_trace_electron(const SpinOperator& m) {
  PairMatrix out = PairMatrix::Zero();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      out(r, c) = m(r, c) + m(r + 4, c + 4);
  return out;
}

PairMatrix partial_trace_electron(const SpinVector& v, const SpinVector& w) {
  PairMatrix out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      out(r, c) = v(r) * std::conj(w(c)) + v(r + 4) * std::conj(w(c + 4));
  return out;
}

PairMatrix partial_transpose(const PairMatrix& rho, Impurity sub) {
  // pair index p = 2*a2 + a3
  PairMatrix out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      int r2 = r >> 1, r3 = r & 1, c2 = c >> 1, c3 = c & 1;
      if (sub == Impurity::left)
        out(2 * c2 + r3, 2 * r2 + c3) = rho(r, c);
      else
        out(2 * r2 + c3, 2 * c2 + r3) = rho(r, c);
    }
  return out;
}

std::array<double, 4> hermitian_eigenvalues(const PairMatrix& m) {
  double dev = (m - m.adjoint().eval()).cwiseAbs().maxCoeff();
  if (dev > 1e-10)
    throw std::runtime_error("hermitian_eigenvalues: input not Hermitian");
  PairMatrix sym = 0.5 * (m + m.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<PairMatrix> solver(sym, Eigen::EigenvaluesOnly);
  auto ev = solver.eigenvalues(); // ascending
  return {ev(0), ev(1), ev(2), ev(3)};
}

int spin_index(const std::string& label) {
  if (label.size() != 3)
    throw std::invalid_argument("spin label must have 3 characters over {u,d}");
  int idx = 0;
  for (char ch : label) {
    idx <<= 1;
    if (ch == 'd' || ch == 'D')
      idx |= 1;
    else if (ch != 'u' && ch != 'U')
      throw std::invalid_argument("spin label must have 3 characters over {u,d}");
  }
  return idx;
}

std::string spin_label(int index) {
  if (index < 0 || index > 7) throw std::invalid_argument("spin index out of range");
  std::string s(3, 'u');
  for (int q = 0; q < 3; ++q)
    if ((index >> (2 - q)) & 1) s[q] = 'd';
  return s;
}

SpinVector basis_state(int index) {
  if (index < 0 || index > 7) throw std::invalid_argument("spin index out of range");
  SpinVector v = SpinVector::Zero();
  v(index) = 1.0;
  return v;
}

double total_sz(int index) {
  double sz = 0.0;
  for (int q = 1; q <= 3; ++q)
    sz += bit_of(index, q) ? -0.5 : 0.5;
  return sz;
}

} // namespace edgescatter
