#pragma once

#include "anyonqism/grading.hpp"
#include "anyonqism/types.hpp"

namespace anyonqism {

/// Lax family on aux (x) quantum, affine in the spectral parameter.
/// Regularity: evaluator(0) = eta * (anyonic permutation of aux and quantum).
struct LaxSpec {
  int aux_dim;
  int quantum_dim;
  cplx eta;
  GradingTable grading;
  Matrix constant;
  Matrix slope;

  Matrix operator()(cplx lambda) const { return constant + lambda * slope; }
};

/// Hard-core anyon Lax operator, 2x2 auxiliary blocks over the local basis
/// {|0> , |1>}:  [[lambda+eta(1-n), eta a^dag], [eta a, lambda+(lambda(q-1)+q eta)n]].
LaxSpec xxx_lax(cplx eta, cplx q);

/// t-J Lax operator, 3x3 auxiliary blocks over the local basis
/// {|down>, |up>, |hole>}; double occupancy absent by construction.
LaxSpec tj_lax(cplx eta, cplx q1, cplx q2, cplx q3);

/// Nested (spin-level) Lax operator on aux(2) (x) quantum(3):
/// [[q1 n_dn + (b/a) q3 n_up, (c/a) q3 S+], [(c/a) q3 S-, q2 n_up + (b/a) q3 n_dn]]
/// with a(u)=u+eta, b(u)=u, c=eta. Entries are rational in u, not affine.
Matrix tj_nested_lax(cplx u, cplx eta, cplx q1, cplx q2, cplx q3);

}  // namespace anyonqism
