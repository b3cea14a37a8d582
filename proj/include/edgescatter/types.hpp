#pragma once
// Shared dense types for the 3-spin scattering problem.

#include <Eigen/Dense>
#include <complex>

namespace edgescatter {

using cplx = std::complex<double>;

// 8 amplitudes over the (electron, left impurity, right impurity) basis,
// index b = 4*a1 + 2*a2 + a3 with a = 0 for up, 1 for down.
using SpinVector = Eigen::Matrix<cplx, 8, 1>;
using SpinOperator = Eigen::Matrix<cplx, 8, 8>;

// two-impurity reduced state
using PairMatrix = Eigen::Matrix<cplx, 4, 4>;

// site-block space: (site 0, site m) x spin
using SiteSpinVector = Eigen::Matrix<cplx, 16, 1>;
using SiteSpinMatrix = Eigen::Matrix<cplx, 16, 16>;

inline constexpr cplx I{0.0, 1.0};

} // namespace edgescatter
