#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anyonqism/chain_space.hpp"
#include "anyonqism/model.hpp"

namespace anyonqism {

/// Conserved-charge sector: particle count, and down-spin count for the t-J
/// model (absent for xxx).
struct Sector {
  int particles = 0;
  std::optional<int> down_spins;

  bool operator==(const Sector&) const = default;
};

struct Spectrum {
  std::vector<cplx> eigenvalues;
  std::optional<Sector> sector;
  std::string source;
};

/// Basis indices (within the chain space) belonging to a sector; the number
/// operators are diagonal in the product basis so this is a digit filter.
std::vector<long> sector_indices(const ChainLayout& layout, const Sector& sector);

Matrix project_to_sector(const Matrix& m, const ChainLayout& layout, const Sector& sector);

/// Dense eigenvalues. Hermitian inputs are routed to the self-adjoint solver;
/// general inputs use the complex Schur-based solver. Convergence failures
/// are reported, never silently dropped.
Spectrum exact_spectrum(const ChainOperator& op, const std::optional<Sector>& sector = {});

std::vector<double> sorted_real_eigenvalues(const Spectrum& s);

}  // namespace anyonqism
