#pragma once
// Reduced impurity-pair density matrices of the scattered states and the
// negativity entanglement monotone.

#include "edgescatter/spin_algebra.hpp"

namespace edgescatter {

// How the reflected and transmitted channels are combined into rho_total:
//  - weighted:  R*rho_R + T*rho_T  (trace 1, physical mixture; default)
//  - plain_sum: rho_R + rho_T      (trace 2, literal channel sum)
enum class CombineMode { weighted, plain_sum };

struct EntanglementReport {
  PairMatrix rho_R{};     // normalized, zero matrix if the channel is empty
  PairMatrix rho_T{};
  PairMatrix rho_total{};
  double neg_R = 0.0;
  double neg_T = 0.0;
  double neg_total = 0.0;
  CombineMode mode = CombineMode::weighted;
};

// N = sum |negative eigenvalues| of the partial transpose (right impurity;
// the value is the same for either choice on these states). 0 for separable,
// 1/2 for a Bell pair at trace 1.
double negativity(const PairMatrix& rho);

// Build rho_R, rho_T, rho_total from the sub-normalized scattered states.
// A channel with squared norm below 1e-14 contributes a zero matrix; both
// channels empty throws std::invalid_argument.
EntanglementReport density_matrices(const SpinVector& S_R, const SpinVector& S_T,
                                    CombineMode mode);

// density_matrices + negativities in one go.
EntanglementReport analyze(const SpinVector& S_R, const SpinVector& S_T,
                           CombineMode mode);

} // namespace edgescatter
