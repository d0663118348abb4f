#pragma once

#include <span>
#include <vector>

#include "anyonqism/types.hpp"

namespace anyonqism {

struct GradingEntry {
  int i;  // 1-based basis label
  int j;  // 1-based basis label
  cplx phase;
};

/// Symmetric table of unimodular phases w(i,j) grading a local basis.
/// Indices are 0-based in the C++ API; serialized entries use 1-based labels.
class GradingTable {
public:
  explicit GradingTable(int dim);  // trivial (all-ones) grading

  int dim() const { return dim_; }
  cplx w(int i, int j) const { return w_(i, j); }
  cplx w_inv(int i, int j) const { return 1.0 / w_(i, j); }
  const Matrix& table() const { return w_; }

  bool operator==(const GradingTable& other) const;

private:
  friend GradingTable make_grading_table(int, std::span<const GradingEntry>);
  int dim_;
  Matrix w_;
};

GradingTable make_grading_table(int dim, std::span<const GradingEntry> entries);

/// XXX preset: w(2,2)=q, all other entries 1.
GradingTable xxx_grading(cplx q);

/// t-J preset: w(1,1)=q1, w(2,2)=q2, w(1,2)=w(2,1)=q3, entries involving 3 all 1.
GradingTable tj_grading(cplx q1, cplx q2, cplx q3);

/// Restriction of the t-J grading to the spin labels {1,2} (nested level).
GradingTable tj_nested_grading(cplx q1, cplx q2, cplx q3);

enum class PermutationVariant { P, P_inverse, P_dual };

/// Anyonic permutation on U (x) V :  P(u^i (x) v^j) = w(i,j) v^j (x) u^i.
/// Both factors carry the same grading table; lexicographic product basis.
Matrix anyonic_permutation(const GradingTable& g_u, const GradingTable& g_v,
                           PermutationVariant variant = PermutationVariant::P);

}  // namespace anyonqism
