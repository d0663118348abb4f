#pragma once

#include "anyonqism/chain_space.hpp"
#include "anyonqism/grading.hpp"
#include "anyonqism/lax.hpp"
#include "anyonqism/rmatrix.hpp"

namespace anyonqism {

enum class ModelKind { xxx, tj };

/// Lattice model instance: chain length, quasiclassical parameter and the
/// statistical phases. The t-J couplings are fixed at J=2, t=1.
struct ModelSpec {
  ModelKind kind = ModelKind::xxx;
  int num_sites = 2;
  cplx eta = 1.0;
  cplx q = 1.0;             // xxx
  cplx q1 = 1.0, q2 = 1.0, q3 = 1.0;  // tj

  static constexpr double coupling_t = 1.0;
  static constexpr double coupling_j = 2.0;

  int local_dim() const { return kind == ModelKind::xxx ? 2 : 3; }
  GradingTable grading() const;
  RMatrixSpec rmatrix() const;
  LaxSpec lax() const;
  ChainLayout chain_layout(bool with_aux = false) const;

  void validate() const;  // unimodularity and L >= 1
};

ModelSpec make_xxx_model(int num_sites, cplx eta, cplx q);
ModelSpec make_tj_model(int num_sites, cplx eta, cplx q1, cplx q2, cplx q3);

/// Dimension cap for dense chain algebra; the environment variable
/// ANYONQISM_DIM_CAP overrides the default of 20000 rows.
long dimension_cap();
void require_within_cap(long dim);

}  // namespace anyonqism
