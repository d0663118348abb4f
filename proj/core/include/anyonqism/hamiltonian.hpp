#pragma once

#include "anyonqism/site_ops.hpp"

namespace anyonqism {

/// H = eta^{-1} sum_j (adag_{j+1} a_j + adag_j a_{j+1} + 2 n_{j+1} n_j - 2 n_j),
/// periodic (L+1 == 1), built from the graded site operators.
ChainOperator build_xxx_hamiltonian(const ModelSpec& model);

enum class TjExchangeForm { q3_over_q1, q3_over_q2 };

/// Returns eta*H for the t-J chain (J=2, t=1, periodic):
///   eta H = t sum (adag a' + h.c.) + J sum (S.S + n n'/4) + sum (1-n)(1-n').
/// The transverse exchange coefficients follow site-index order: S+_i S-_j
/// carries (J/2) q3/q1 for i > j and (J/2) q1/q3 for i < j (the second form
/// swaps the spin-operator definitions and uses q3/q2; both agree).
ChainOperator build_tj_hamiltonian(const ModelSpec& model,
                                   TjExchangeForm form = TjExchangeForm::q3_over_q1);

}  // namespace anyonqism
