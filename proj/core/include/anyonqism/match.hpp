#pragma once

#include <string>
#include <vector>

#include "anyonqism/bethe.hpp"
#include "anyonqism/spectrum.hpp"

namespace anyonqism {

struct MatchRow {
  std::vector<cplx> charge_roots;  // xxx magnon roots live here
  std::vector<cplx> spin_roots;    // tj only
  int infinite_charge_roots = 0;
  int infinite_spin_roots = 0;
  double energy = 0.0;
  double energy_residual = 0.0;
  long matched_level = -1;  // index into the sorted sector energies
  std::vector<double> lambda_residuals;
  bool matched = false;
  bool ill_conditioned = false;
  std::string note;
};

struct MatchReport {
  Sector sector;
  long sector_dimension = 0;
  std::vector<cplx> test_lambdas;
  double tolerance = tol::match;
  std::vector<MatchRow> rows;
  std::vector<double> sector_energies;          // sorted ED energies
  std::vector<long> unmatched_levels;           // completeness deficit
  int matched_count = 0;
};

/// Pairs Bethe predictions with exact-diagonalization data: the energy against
/// the sector spectrum of H (xxx) or eta*H (tj), and Lambda against the sector
/// spectrum of tau at each test point. A row matches when every residual is
/// below tolerance; unmatched ED levels are reported, not asserted away.
MatchReport match_spectrum(const ModelSpec& model, const Sector& sector,
                           const std::vector<BetheRootsXXX>& root_sets,
                           const std::vector<cplx>& test_lambdas, double tolerance = tol::match);

MatchReport match_spectrum(const ModelSpec& model, const Sector& sector,
                           const std::vector<BetheRootsTJ>& root_sets,
                           const std::vector<cplx>& test_lambdas, double tolerance = tol::match);

}  // namespace anyonqism
