#pragma once

#include <vector>

#include "anyonqism/model.hpp"

namespace anyonqism {

/// Rapidity set of the hard-core anyon chain, stored in the rescaled
/// (real-axis-centered) convention. Divergent rapidities are counted by the
/// explicit sentinel `infinite_roots`; magnons = roots.size() + infinite_roots.
struct BetheRootsXXX {
  int num_sites = 0;
  int magnons = 0;
  cplx eta = 1.0;
  cplx q = 1.0;
  std::vector<cplx> roots;
  int infinite_roots = 0;
};

/// Nested rapidities of the t-J chain, rescaled as printed
/// (u_i -> u_i - eta/2, v_l -> v_l - eta applied to the unrescaled variables).
struct BetheRootsTJ {
  int num_sites = 0;
  int particles = 0;   // N
  int down_spins = 0;  // M
  cplx eta = 1.0;
  cplx q1 = 1.0, q2 = 1.0, q3 = 1.0;
  std::vector<cplx> charge_roots;
  std::vector<cplx> spin_roots;
  int infinite_charge_roots = 0;
  int infinite_spin_roots = 0;
};

/// Branch indices of the logarithmic-form equations, stored as doubled
/// (half-)integers so both parity classes are exact.
struct QuantumNumberSet {
  std::vector<int> twice_charge;  // 2*I per charge / magnon root
  std::vector<int> twice_spin;    // 2*J per spin root (t-J only)
};

/// Residuals of the product-form equations, one per magnon. Finite roots use
///   ((v+i eta/2)/(v-i eta/2))^L - q^{M-1} prod_{b!=a} (v_a-v_b+i eta)/(v_a-v_b-i eta);
/// each sentinel contributes its limiting constraint 1 - q^{M-1}.
std::vector<cplx> xxx_bae_residual(const BetheRootsXXX& r);

/// Transfer eigenvalue Lambda(lambda) in the unrescaled variables
/// w_a = -i v_a - eta/2 (sentinel factors are 1).
cplx xxx_lambda(cplx lambda, const BetheRootsXXX& r);

/// E = -eta sum_a 1/(v_a^2 + eta^2/4) over finite roots.
double xxx_energy(const BetheRootsXXX& r);
double xxx_energy_imaginary_defect(const BetheRootsXXX& r);

/// Charge residuals (N of them) followed by spin residuals (M of them),
/// exactly as printed; sentinels contribute their limiting constraints.
std::vector<cplx> tj_bae_residual(const BetheRootsTJ& r);

/// Three-term transfer eigenvalue in the unrescaled variables
/// w_i = -i u_i - eta/2, z_l = -i v_l - eta.
cplx tj_lambda(cplx u, const BetheRootsTJ& r);

/// E = L - eta^2 sum_i 1/(u_i^2 + eta^2/4) (an eigenvalue of eta*H).
double tj_energy(const BetheRootsTJ& r);
double tj_energy_imaginary_defect(const BetheRootsTJ& r);

/// Smallest pairwise distance within a root list (infinity when fewer than 2).
double min_root_separation(const std::vector<cplx>& roots);

/// True when the set is closed under complex conjugation within `tolerance`.
bool conjugation_closed(const std::vector<cplx>& roots, double tolerance = 1e-8);

}  // namespace anyonqism
