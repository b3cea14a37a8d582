#include "edgescatter/entanglement.hpp"

#include <stdexcept>

namespace edgescatter {

namespace {
constexpr double kEmptyChannel = 1e-14;
}

double negativity(const PairMatrix& rho) {
  auto ev = hermitian_eigenvalues(partial_transpose(rho, Impurity::right));
  double n = 0.0;
  for (double lambda : ev)
    if (lambda < 0.0) n -= lambda;
  return n;
}

EntanglementReport density_matrices(const SpinVector& S_R, const SpinVector& S_T,
                                    CombineMode mode) {
  double nr = S_R.squaredNorm();
  double nt = S_T.squaredNorm();
  if (nr <= kEmptyChannel && nt <= kEmptyChannel)
    throw std::invalid_argument("density_matrices: both channels are empty");

  EntanglementReport rep;
  rep.mode = mode;
  rep.rho_R = nr > kEmptyChannel ? PairMatrix(partial_trace_electron(S_R, S_R) / nr)
                                 : PairMatrix(PairMatrix::Zero());
  rep.rho_T = nt > kEmptyChannel ? PairMatrix(partial_trace_electron(S_T, S_T) / nt)
                                 : PairMatrix(PairMatrix::Zero());
  if (mode == CombineMode::weighted)
    rep.rho_total = nr * rep.rho_R + nt * rep.rho_T; // trace R + T
  else
    rep.rho_total = rep.rho_R + rep.rho_T; // trace 2 (or 1 with an empty channel)
  return rep;
}

EntanglementReport analyze(const SpinVector& S_R, const SpinVector& S_T,
                           CombineMode mode) {
  EntanglementReport rep = density_matrices(S_R, S_T, mode);
  rep.neg_R = negativity(rep.rho_R);
  rep.neg_T = negativity(rep.rho_T);
  rep.neg_total = negativity(rep.rho_total);
  return rep;
}

} // namespace edgescatter
