#include "anyonqism/grading.hpp"

#include <cmath>

namespace anyonqism {

GradingTable::GradingTable(int dim) : dim_(dim), w_(Matrix::Ones(dim, dim)) {
  if (dim < 1) throw error(errc::dimension_mismatch, "grading dimension must be >= 1");
}

bool GradingTable::operator==(const GradingTable& other) const {
  return dim_ == other.dim_ && (w_ - other.w_).cwiseAbs().maxCoeff() < 1e-14;
}

GradingTable make_grading_table(int dim, std::span<const GradingEntry> entries) {
  GradingTable g(dim);
  Eigen::MatrixXi set = Eigen::MatrixXi::Zero(dim, dim);
  for (const auto& e : entries) {
    if (e.i < 1 || e.i > dim || e.j < 1 || e.j > dim)
      throw error(errc::dimension_mismatch, "grading entry label out of range");
    if (std::abs(std::abs(e.phase) - 1.0) > tol::unimodular)
      throw error(errc::non_unimodular_entry, "grading entry is not unimodular");
    const int i = e.i - 1, j = e.j - 1;
    if (set(i, j) && std::abs(g.w_(i, j) - e.phase) > 1e-14)
      throw error(errc::symmetry_conflict, "conflicting values for mirrored grading entry");
    g.w_(i, j) = e.phase;
    g.w_(j, i) = e.phase;
    set(i, j) = set(j, i) = 1;
  }
  return g;
}

GradingTable xxx_grading(cplx q) {
  const GradingEntry e[] = {{2, 2, q}};
  return make_grading_table(2, e);
}

GradingTable tj_grading(cplx q1, cplx q2, cplx q3) {
  const GradingEntry e[] = {{1, 1, q1}, {2, 2, q2}, {1, 2, q3}};
  return make_grading_table(3, e);
}

GradingTable tj_nested_grading(cplx q1, cplx q2, cplx q3) {
  const GradingEntry e[] = {{1, 1, q1}, {2, 2, q2}, {1, 2, q3}};
  return make_grading_table(2, e);
}

Matrix anyonic_permutation(const GradingTable& g_u, const GradingTable& g_v,
                           PermutationVariant variant) {
  if (g_u.dim() != g_v.dim())
    throw error(errc::dimension_mismatch, "permutation requires equal factor dimensions");
  if (!(g_u == g_v))
    throw error(errc::grading_mismatch, "permutation requires a shared grading table");
  const int n = g_u.dim();
  Matrix p = Matrix::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      switch (variant) {
        case PermutationVariant::P:
          p(j * n + i, i * n + j) = g_u.w(i, j);
          break;
        case PermutationVariant::P_inverse:
          p(i * n + j, j * n + i) = g_u.w_inv(i, j);
          break;
        case PermutationVariant::P_dual:
          p(j * n + i, i * n + j) = g_u.w_inv(i, j);
          break;
      }
    }
  }
  return p;
}

}  // namespace anyonqism
