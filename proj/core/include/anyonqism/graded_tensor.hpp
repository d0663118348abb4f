#pragma once

#include <span>
#include <vector>

#include "anyonqism/grading.hpp"
#include "anyonqism/types.hpp"

namespace anyonqism {

struct GradedOperand {
  Matrix op;
  GradingTable grading;
};

/// Graded tensor product of square operators, left-fold convention:
///   e^i_j (x)_a f^k_l = w(j,k) w^{-1}(j,l) e^i_j (x) f^k_l,
/// extended to n factors so that the cross phase between factor p (column
/// label j_p) and a later factor r (row/column labels i_r, j_r) is
/// w(j_p,i_r) w^{-1}(j_p,j_r). All operands must share one grading table.
Matrix graded_tensor(std::span<const GradedOperand> operands);

/// Binary convenience overload.
Matrix graded_tensor(const Matrix& a, const Matrix& b, const GradingTable& g);

struct TransparencyReport {
  bool transparent;
  double worst_violation;
};

/// True when every nonzero entry A^{(ik)}_{(jl)} satisfies, for all probe
/// labels m, w(m,i)w(m,k) = w(m,j)w(m,l). Operators with this property embed
/// into chains without acquiring string phases from bystander factors.
TransparencyReport string_transparency_check(const Matrix& a, const GradingTable& g,
                                             double entry_cutoff = 1e-13);

}  // namespace anyonqism
