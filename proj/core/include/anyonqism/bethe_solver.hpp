#pragma once

#include <cstdint>
#include <vector>

#include "anyonqism/bethe.hpp"

namespace anyonqism {

enum class SolveStrategy { log_newton, multistart, homotopy };

struct SolveOptions {
  SolveStrategy strategy = SolveStrategy::multistart;
  int seeds = 4000;                    // multistart sample count
  std::uint64_t rng_seed = 2024;
  int max_iterations = 160;
  double newton_tolerance = 1e-13;     // log/Newton convergence target
  double residual_tolerance = 1e-9;    // product-form acceptance threshold
  double dedup_tolerance = 1e-7;
  double pole_guard = 1e-6;            // reject roots this close to +-i eta/2
  double separation_guard = 1e-8;      // degenerate-root flag threshold
  int homotopy_steps = 64;
  int threads = 0;                     // 0 = choose automatically
};

struct SolveDiagnostics {
  int seeds_tried = 0;
  int converged = 0;
  int rejected_residual = 0;
  int rejected_degenerate = 0;
  int rejected_pole = 0;
  int degenerate_paths = 0;  // homotopy collisions
};

/// Root sets for the M-magnon sector, deduplicated under permutation and
/// canonically ordered. Sentinel (infinite) rapidities are included whenever
/// their limiting equations are satisfied.
std::vector<BetheRootsXXX> solve_bae_xxx(const ModelSpec& model, int magnons,
                                         const SolveOptions& opts,
                                         SolveDiagnostics* diag = nullptr);

/// Root sets for the (N particles, M down spins) sector of the t-J chain.
std::vector<BetheRootsTJ> solve_bae_tj(const ModelSpec& model, int particles, int down_spins,
                                       const SolveOptions& opts,
                                       SolveDiagnostics* diag = nullptr);

}  // namespace anyonqism
