#pragma once

#include <optional>
#include <vector>

#include "anyonqism/grading.hpp"
#include "anyonqism/types.hpp"

namespace anyonqism {

/// Fixed factor convention for chain operators: auxiliary factor leftmost
/// (most significant), then sites L, L-1, ..., 1 left to right, so site 1 is
/// the least significant base-d digit of a chain basis index. Basis order
/// inside each factor: label 1 first (0-based index 0), lexicographic
/// product basis overall.
struct ChainLayout {
  int num_sites = 1;
  int local_dim = 2;
  int aux_dim = 0;  // 0 = no auxiliary factor

  long chain_dim() const;
  long total_dim() const;  // max(aux_dim,1) * local_dim^num_sites
  int site_digit(long chain_index, int site) const;  // site is 1-based

  bool operator==(const ChainLayout&) const = default;
};

struct ChainOperator {
  ChainLayout layout;
  Matrix mat;
};

/// Graded embedding of a local operator at one site: identity on the other
/// sites, string phases w(m,i)w^{-1}(m,j) from every chain site standing left
/// of the target. An optional auxiliary operand multiplies in as the leftmost
/// factor; the auxiliary label carries no grading phase (see transfer.hpp).
ChainOperator embed_local(const Matrix& x, int site, const ChainLayout& layout,
                          const GradingTable& g,
                          const std::optional<Matrix>& aux_operand = std::nullopt);

/// Graded embedding of an (aux x quantum) Lax matrix acting at one site,
/// sharing the leftmost auxiliary factor. Equivalent to summing embed_local
/// over the auxiliary matrix units e^a_b with the corresponding Lax blocks.
ChainOperator embed_lax(const Matrix& lax, int site, const ChainLayout& layout,
                        const GradingTable& g);

/// Grading-weighted trace over the auxiliary factor:
/// sum_a w(a,a)^{-1} (diagonal aux block a).
ChainOperator graded_partial_trace(const ChainOperator& t_big, const GradingTable& g_aux);

}  // namespace anyonqism
