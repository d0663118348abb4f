#pragma once

#include <vector>

#include "anyonqism/model.hpp"
#include "anyonqism/verify.hpp"

namespace anyonqism {

/// Chain-embedded annihilation/creation/number operators, one per site
/// (index 0 is site 1). For the t-J model the constrained operators
/// a^dag(1-n_{-sigma}) coincide with the plain ones in the 3-dim local space.
struct SiteOperators {
  ModelSpec model;

  // xxx
  std::vector<Matrix> a, adag, n;

  // tj (spin operators built from the first displayed exchange convention)
  std::vector<Matrix> a_dn, a_up, adag_dn, adag_up, n_dn, n_up, n_tot;
  std::vector<Matrix> s_plus, s_minus, s_z;
};

SiteOperators build_site_operators(const ModelSpec& model);

/// Evaluates every exchange relation for all site pairs i > j plus the
/// on-site hard-core relations, as matrix identities; returns the worst
/// residual. For the t-J model this includes both four-operator identities.
ResidualReport commutation_suite(const ModelSpec& model, double tolerance = 1e-13);

}  // namespace anyonqism
