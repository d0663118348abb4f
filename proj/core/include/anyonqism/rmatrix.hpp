#pragma once

#include "anyonqism/grading.hpp"
#include "anyonqism/types.hpp"

namespace anyonqism {

/// Spectral-parameter family R(lambda) = constant + lambda * slope on V (x) V,
/// bundled with the grading of V. Entries are affine in lambda by
/// construction, so polynomial manipulations downstream are exact.
struct RMatrixSpec {
  int local_dim;
  cplx eta;
  GradingTable grading;
  Matrix constant;
  Matrix slope;

  Matrix operator()(cplx lambda) const { return constant + lambda * slope; }
};

/// Rational 6-vertex check matrix: corners lambda+eta, middle [[eta,lambda],[lambda,eta]].
RMatrixSpec xxx_r_matrix(cplx eta, cplx q = 1.0);

/// Rational su(3) check matrix: a(u)=u+eta on the diagonal repeats, 2x2
/// [[c,b],[b,c]] blocks with b(u)=u, c=eta on the index-swapping pairs.
RMatrixSpec tj_r_matrix(cplx eta, cplx q1 = 1.0, cplx q2 = 1.0, cplx q3 = 1.0);

}  // namespace anyonqism
