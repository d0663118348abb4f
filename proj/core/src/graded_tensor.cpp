#include "anyonqism/graded_tensor.hpp"

namespace anyonqism {

namespace {

// Fold step: M (square, rows/cols indexed by label tuples) with op on an
// elementary factor. 'labels' maps each composite index to the per-factor
// elementary labels accumulated so far; phases pair those against op's labels.
Matrix fold_one(const Matrix& acc, const std::vector<std::vector<int>>& acc_labels,
                const Matrix& op, const GradingTable& g) {
  const long da = acc.rows();
  const long db = op.rows();
  Matrix out = Matrix::Zero(da * db, da * db);
  for (long j1 = 0; j1 < da; ++j1) {
    // phase w(tuple, k) = prod over tuple components of w(component, k)
    std::vector<cplx> wcol(g.dim());
    for (int k = 0; k < g.dim(); ++k) {
      cplx v = 1.0;
      for (int lab : acc_labels[static_cast<std::size_t>(j1)]) v *= g.w(lab, k);
      wcol[static_cast<std::size_t>(k)] = v;
    }
    for (long i1 = 0; i1 < da; ++i1) {
      const cplx a = acc(i1, j1);
      if (a == 0.0) continue;
      for (long i2 = 0; i2 < db; ++i2) {
        for (long j2 = 0; j2 < db; ++j2) {
          const cplx b = op(i2, j2);
          if (b == 0.0) continue;
          const cplx phase = wcol[static_cast<std::size_t>(i2)] /
                             wcol[static_cast<std::size_t>(j2)];
          out(i1 * db + i2, j1 * db + j2) = a * b * phase;
        }
      }
    }
  }
  return out;
}

}  // namespace

Matrix graded_tensor(std::span<const GradedOperand> operands) {
  if (operands.empty()) throw error(errc::dimension_mismatch, "graded_tensor of no operands");
  const GradingTable& g = operands.front().grading;
  for (const auto& o : operands) {
    if (o.op.rows() != o.op.cols())
      throw error(errc::dimension_mismatch, "graded_tensor operand is not square");
    if (o.op.rows() != o.grading.dim())
      throw error(errc::dimension_mismatch, "operand dimension does not match its grading");
    if (!(o.grading == g))
      throw error(errc::grading_mismatch, "graded_tensor operands must share one grading");
  }
  Matrix acc = operands.front().op;
  std::vector<std::vector<int>> labels(static_cast<std::size_t>(acc.rows()));
  for (int i = 0; i < acc.rows(); ++i) labels[static_cast<std::size_t>(i)] = {i};
  for (std::size_t p = 1; p < operands.size(); ++p) {
    const Matrix& op = operands[p].op;
    acc = fold_one(acc, labels, op, g);
    std::vector<std::vector<int>> next;
    next.reserve(labels.size() * static_cast<std::size_t>(op.rows()));
    for (const auto& t : labels) {
      for (int k = 0; k < op.rows(); ++k) {
        auto u = t;
        u.push_back(k);
        next.push_back(std::move(u));
      }
    }
    labels = std::move(next);
  }
  return acc;
}

Matrix graded_tensor(const Matrix& a, const Matrix& b, const GradingTable& g) {
  const GradedOperand ops[] = {{a, g}, {b, g}};
  return graded_tensor(ops);
}

TransparencyReport string_transparency_check(const Matrix& a, const GradingTable& g,
                                             double entry_cutoff) {
  const int n = g.dim();
  if (a.rows() != static_cast<long>(n) * n || a.cols() != a.rows())
    throw error(errc::dimension_mismatch, "string_transparency_check expects an n^2 x n^2 matrix");
  const double scale = std::max(1.0, max_abs(a));
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
          if (std::abs(a(i * n + k, j * n + l)) <= entry_cutoff * scale) continue;
          for (int m = 0; m < n; ++m)
            worst = std::max(worst, std::abs(g.w(m, i) * g.w(m, k) - g.w(m, j) * g.w(m, l)));
        }
  return {worst <= 1e-12, worst};
}

}  // namespace anyonqism
