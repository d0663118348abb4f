#include "anyonqism/bethe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace anyonqism {

namespace {

cplx ipow(cplx base, int n) {
  cplx out = 1.0;
  if (n < 0) return 1.0 / ipow(base, -n);
  for (int k = 0; k < n; ++k) out *= base;
  return out;
}

void guard_pole(const std::vector<cplx>& roots, cplx eta, const char* what) {
  const cplx p = cplx(0, 0.5) * eta;
  for (cplx v : roots)
    if (std::abs(v - p) < 1e-12 || std::abs(v + p) < 1e-12)
      throw error(errc::pole_at_root, std::string(what) + ": rapidity at +-i eta/2");
}

}  // namespace

double min_root_separation(const std::vector<cplx>& roots) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t b = a + 1; b < roots.size(); ++b)
      best = std::min(best, std::abs(roots[a] - roots[b]));
  return best;
}

bool conjugation_closed(const std::vector<cplx>& roots, double tolerance) {
  for (cplx v : roots) {
    double best = std::numeric_limits<double>::infinity();
    for (cplx w : roots) best = std::min(best, std::abs(std::conj(v) - w));
    if (best > tolerance) return false;
  }
  return true;
}

std::vector<cplx> xxx_bae_residual(const BetheRootsXXX& r) {
  guard_pole(r.roots, r.eta, "xxx_bae_residual");
  const int mfin = static_cast<int>(r.roots.size());
  const cplx half = cplx(0, 0.5) * r.eta;
  const cplx full = cplx(0, 1) * r.eta;
  const cplx pref = ipow(r.q, r.magnons - 1);
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(r.magnons));
  for (int a = 0; a < mfin; ++a) {
    const cplx v = r.roots[static_cast<std::size_t>(a)];
    const cplx lhs = ipow((v + half) / (v - half), r.num_sites);
    cplx rhs = pref;
    for (int b = 0; b < mfin; ++b) {
      if (b == a) continue;
      const cplx d = v - r.roots[static_cast<std::size_t>(b)];
      if (std::abs(d - full) < 1e-14 || std::abs(d + full) < 1e-14)
        throw error(errc::pole_at_root, "xxx_bae_residual: scattering pole");
      rhs *= (d + full) / (d - full);
    }
    out.push_back(lhs - rhs);
  }
  for (int s = 0; s < r.infinite_roots; ++s) out.push_back(1.0 - pref);
  return out;
}

cplx xxx_lambda(cplx lambda, const BetheRootsXXX& r) {
  const int L = r.num_sites;
  cplx t1 = ipow(lambda + r.eta, L);
  cplx t2 = ipow(lambda, L) * ipow(r.q, r.magnons - 1);
  for (cplx v : r.roots) {
    const cplx w = cplx(0, -1) * v - 0.5 * r.eta;  // unrescaled rapidity
    if (std::abs(lambda - w) < 1e-12)
      throw error(errc::pole_at_lambda, "xxx_lambda: evaluation point hits a rapidity");
    t1 *= (lambda - w - r.eta) / (lambda - w);
    t2 *= (lambda - w + r.eta) / (lambda - w);
  }
  return t1 + t2;
}

double xxx_energy(const BetheRootsXXX& r) {
  guard_pole(r.roots, r.eta, "xxx_energy");
  cplx sum = 0.0;
  for (cplx v : r.roots) sum += 1.0 / (v * v + 0.25 * r.eta * r.eta);
  return std::real(-r.eta * sum);
}

double xxx_energy_imaginary_defect(const BetheRootsXXX& r) {
  cplx sum = 0.0;
  for (cplx v : r.roots) sum += 1.0 / (v * v + 0.25 * r.eta * r.eta);
  return std::abs(std::imag(-r.eta * sum));
}

std::vector<cplx> tj_bae_residual(const BetheRootsTJ& r) {
  guard_pole(r.charge_roots, r.eta, "tj_bae_residual");
  const int N = r.particles, M = r.down_spins;
  const int nfin = static_cast<int>(r.charge_roots.size());
  const int mfin = static_cast<int>(r.spin_roots.size());
  const cplx half = cplx(0, 0.5) * r.eta;
  const cplx full = cplx(0, 1) * r.eta;
  const cplx charge_pref = ipow(r.q2, N - M - 1) * ipow(r.q3, M);
  const cplx spin_pref = ipow(r.q1, M - 1) * ipow(r.q2, -(N - M - 1)) * ipow(r.q3, N - 2 * M);
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(N + M));
  for (int i = 0; i < nfin; ++i) {
    const cplx u = r.charge_roots[static_cast<std::size_t>(i)];
    const cplx lhs = ipow((u + half) / (u - half), r.num_sites);
    cplx rhs = charge_pref;
    for (int l = 0; l < nfin; ++l) {
      if (l == i) continue;
      const cplx d = u - r.charge_roots[static_cast<std::size_t>(l)];
      rhs *= (d + full) / (d - full);
    }
    for (int l = 0; l < mfin; ++l) {
      const cplx d = u - r.spin_roots[static_cast<std::size_t>(l)];
      if (std::abs(d + half) < 1e-14)
        throw error(errc::pole_at_root, "tj_bae_residual: charge/spin pole");
      rhs *= (d - half) / (d + half);
    }
    out.push_back(lhs - rhs);
  }
  for (int s = 0; s < r.infinite_charge_roots; ++s) out.push_back(1.0 - charge_pref);
  for (int j = 0; j < mfin; ++j) {
    const cplx v = r.spin_roots[static_cast<std::size_t>(j)];
    cplx lhs = spin_pref;
    for (int i = 0; i < nfin; ++i) {
      const cplx d = v - r.charge_roots[static_cast<std::size_t>(i)];
      if (std::abs(d + half) < 1e-14)
        throw error(errc::pole_at_root, "tj_bae_residual: spin/charge pole");
      lhs *= (d - half) / (d + half);
    }
    cplx rhs = 1.0;
    for (int l = 0; l < mfin; ++l) {
      if (l == j) continue;
      const cplx d = v - r.spin_roots[static_cast<std::size_t>(l)];
      if (std::abs(d + full) < 1e-14)
        throw error(errc::pole_at_root, "tj_bae_residual: spin/spin pole");
      rhs *= (d - full) / (d + full);
    }
    out.push_back(lhs - rhs);
  }
  for (int s = 0; s < r.infinite_spin_roots; ++s) out.push_back(spin_pref - 1.0);
  return out;
}

cplx tj_lambda(cplx u, const BetheRootsTJ& r) {
  const int L = r.num_sites;
  const int N = r.particles, M = r.down_spins;
  cplx t1 = ipow(u + r.eta, L);
  cplx t2 = ipow(u, L) * ipow(r.q1, M - 1) * ipow(r.q3, N - M);
  cplx t3 = ipow(u, L) * ipow(r.q2, N - M - 1) * ipow(r.q3, M);
  for (cplx ui : r.charge_roots) {
    const cplx w = cplx(0, -1) * ui - 0.5 * r.eta;
    if (std::abs(u - w) < 1e-12)
      throw error(errc::pole_at_lambda, "tj_lambda: evaluation point hits a charge rapidity");
    t1 *= (u - w - r.eta) / (u - w);
    t3 *= (u - w + r.eta) / (u - w);
  }
  for (cplx vl : r.spin_roots) {
    const cplx z = cplx(0, -1) * vl - r.eta;
    if (std::abs(u - z) < 1e-12)
      throw error(errc::pole_at_lambda, "tj_lambda: evaluation point hits a spin rapidity");
    t2 *= (u - z + r.eta) / (u - z);
    t3 *= (u - z - r.eta) / (u - z);
  }
  return t1 + t2 + t3;
}

double tj_energy(const BetheRootsTJ& r) {
  guard_pole(r.charge_roots, r.eta, "tj_energy");
  cplx sum = 0.0;
  for (cplx u : r.charge_roots) sum += 1.0 / (u * u + 0.25 * r.eta * r.eta);
  return std::real(cplx(r.num_sites) - r.eta * r.eta * sum);
}

double tj_energy_imaginary_defect(const BetheRootsTJ& r) {
  cplx sum = 0.0;
  for (cplx u : r.charge_roots) sum += 1.0 / (u * u + 0.25 * r.eta * r.eta);
  return std::abs(std::imag(r.eta * r.eta * sum));
}

}  // namespace anyonqism
