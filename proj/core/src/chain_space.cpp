#include "anyonqism/chain_space.hpp"

namespace anyonqism {

long ChainLayout::chain_dim() const {
  long d = 1;
  for (int j = 0; j < num_sites; ++j) d *= local_dim;
  return d;
}

long ChainLayout::total_dim() const { return std::max(aux_dim, 1) * chain_dim(); }

int ChainLayout::site_digit(long chain_index, int site) const {
  long step = 1;
  for (int j = 1; j < site; ++j) step *= local_dim;
  return static_cast<int>((chain_index / step) % local_dim);
}

namespace {

long site_step(const ChainLayout& layout, int site) {
  long step = 1;
  for (int j = 1; j < site; ++j) step *= layout.local_dim;
  return step;
}

// String phase over sites strictly left of `site` (higher site numbers) for a
// local transition with row label i and column label k, in the environment
// fixed by chain state `env`.
cplx string_phase(const ChainLayout& layout, const GradingTable& g, long env, int site,
                  int i, int k) {
  cplx phase = 1.0;
  for (int m = site + 1; m <= layout.num_sites; ++m) {
    const int lab = layout.site_digit(env, m);
    phase *= g.w(lab, i) * g.w_inv(lab, k);
  }
  return phase;
}

}  // namespace

ChainOperator embed_local(const Matrix& x, int site, const ChainLayout& layout,
                          const GradingTable& g, const std::optional<Matrix>& aux_operand) {
  const int d = layout.local_dim;
  if (site < 1 || site > layout.num_sites)
    throw error(errc::site_out_of_range, "embed_local: site out of range");
  if (x.rows() != d || x.cols() != d)
    throw error(errc::dimension_mismatch, "embed_local: local operator has wrong dimension");
  if (g.dim() != d)
    throw error(errc::grading_mismatch, "embed_local: grading table does not match local_dim");
  const int n = std::max(layout.aux_dim, 1);
  if (aux_operand) {
    if (layout.aux_dim < 1)
      throw error(errc::no_auxiliary_factor, "embed_local: layout has no auxiliary factor");
    if (aux_operand->rows() != n || aux_operand->cols() != n)
      throw error(errc::dimension_mismatch, "embed_local: aux operand has wrong dimension");
  }
  const long dc = layout.chain_dim();
  const long step = site_step(layout, site);

  ChainOperator out{layout, Matrix::Zero(layout.total_dim(), layout.total_dim())};
  for (long env = 0; env < dc; ++env) {
    if ((env / step) % d != 0) continue;  // canonical environment: target digit zero
    for (int i = 0; i < d; ++i) {
      for (int k = 0; k < d; ++k) {
        const cplx v = x(i, k);
        if (v == 0.0) continue;
        const cplx ph = string_phase(layout, g, env, site, i, k);
        const long r = env + i * step;
        const long c = env + k * step;
        if (aux_operand) {
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
              const cplx av = (*aux_operand)(a, b);
              if (av == 0.0) continue;
              out.mat(a * dc + r, b * dc + c) += av * v * ph;
            }
        } else {
          out.mat(r, c) += v * ph;
        }
      }
    }
  }
  return out;
}

ChainOperator embed_lax(const Matrix& lax, int site, const ChainLayout& layout,
                        const GradingTable& g) {
  const int d = layout.local_dim;
  const int n = layout.aux_dim;
  if (n < 1) throw error(errc::no_auxiliary_factor, "embed_lax: layout has no auxiliary factor");
  if (site < 1 || site > layout.num_sites)
    throw error(errc::site_out_of_range, "embed_lax: site out of range");
  if (lax.rows() != static_cast<long>(n) * d || lax.cols() != lax.rows())
    throw error(errc::dimension_mismatch, "embed_lax: lax matrix has wrong dimension");
  const long dc = layout.chain_dim();
  const long step = site_step(layout, site);

  ChainOperator out{layout, Matrix::Zero(layout.total_dim(), layout.total_dim())};
  for (long env = 0; env < dc; ++env) {
    if ((env / step) % d != 0) continue;
    for (int i = 0; i < d; ++i) {
      for (int k = 0; k < d; ++k) {
        const cplx ph = string_phase(layout, g, env, site, i, k);
        const long r = env + i * step;
        const long c = env + k * step;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            const cplx v = lax(a * d + i, b * d + k);
            if (v == 0.0) continue;
            out.mat(a * dc + r, b * dc + c) += v * ph;
          }
      }
    }
  }
  return out;
}

ChainOperator graded_partial_trace(const ChainOperator& t_big, const GradingTable& g_aux) {
  const int n = t_big.layout.aux_dim;
  if (n < 1)
    throw error(errc::no_auxiliary_factor, "graded_partial_trace: no auxiliary factor");
  if (g_aux.dim() != n)
    throw error(errc::grading_mismatch, "graded_partial_trace: aux grading dimension mismatch");
  const long dc = t_big.layout.chain_dim();
  ChainLayout out_layout = t_big.layout;
  out_layout.aux_dim = 0;
  Matrix acc = Matrix::Zero(dc, dc);
  for (int a = 0; a < n; ++a)
    acc += g_aux.w_inv(a, a) * t_big.mat.block(a * dc, a * dc, dc, dc);
  return {out_layout, std::move(acc)};
}

}  // namespace anyonqism
