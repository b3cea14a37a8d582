#pragma once
// Kernel algebra on the 3-qubit space (electron spin + two impurity spins):
// exchange operator embedding, partial trace/transpose, Hermitian eigenvalues.

#include <array>
#include <string>

#include "edgescatter/types.hpp"

namespace edgescatter {

// Which impurity qubit a 2-qubit operation singles out.
enum class Impurity { left, right };

// S1.S2 on two spin-1/2 in the computational basis {uu, ud, du, dd}:
// diag(1/4, -1/4, -1/4, 1/4) plus 1/2 on the ud<->du off-diagonal.
// Spectrum: triplet 1/4 (x3), singlet -3/4.
PairMatrix heisenberg_pair();

// Lift a 2-qubit operator onto qubits (i, j) of the 3-qubit space, identity on
// the remaining qubit. i < j, both in {1, 2, 3}; qubit 1 is the electron.
SpinOperator embed_pair(const PairMatrix& pair_op, int i, int j);

// Trace out the electron (qubit 1): 4x4 matrix over the impurity pair.
PairMatrix partial_trace_electron(const SpinOperator& m);

// Convenience: partial trace of |v><w| without forming the 8x8 outer product.
PairMatrix partial_trace_electron(const SpinVector& v, const SpinVector& w);

// Transpose the indices of one impurity qubit only.
PairMatrix partial_transpose(const PairMatrix& rho, Impurity sub);

// Eigenvalues of a (near-)Hermitian 4x4, ascending. Input is symmetrized
// first; deviation ||M - M^dag|| > 1e-10 throws.
std::array<double, 4> hermitian_eigenvalues(const PairMatrix& m);

// Basis helpers. Labels are 3-char strings over {u,d}, e.g. "udd" -> index 3.
int spin_index(const std::string& label);
std::string spin_label(int index);
SpinVector basis_state(int index);

// Total S_z (in units of hbar) of basis state `index`.
double total_sz(int index);

} // namespace edgescatter
