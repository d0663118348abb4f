#include "anyonqism/bethe_solver.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include <Eigen/Dense>

namespace anyonqism {

namespace {

// splitmix64: deterministic across platforms, cheap to seed per task
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double normalish() {
    // sum of uniforms, enough for seeding purposes
    return (uniform() + uniform() + uniform() + uniform() - 2.0) * 1.732;
  }
};

using ResidualFn = std::function<Vector(const Vector&)>;
using JacobianFn = std::function<Matrix(const Vector&)>;

bool newton_polish(Vector& x, const ResidualFn& f, const JacobianFn& jac, int max_iter,
                   double target) {
  Vector fx = f(x);
  double best = fx.cwiseAbs().maxCoeff();
  for (int it = 0; it < max_iter; ++it) {
    if (best < target) return true;
    const Matrix j = jac(x);
    const Vector dx = j.fullPivLu().solve(fx);
    if (!dx.allFinite()) return false;
    double step = 1.0;
    bool improved = false;
    for (int h = 0; h < 6; ++h) {
      Vector cand = x - step * dx;
      Vector fc = f(cand);
      const double norm = fc.cwiseAbs().maxCoeff();
      if (std::isfinite(norm) && norm < best) {
        x = std::move(cand);
        fx = std::move(fc);
        best = norm;
        improved = true;
        break;
      }
      step *= 0.5;
    }
    if (!improved) return best < target;
    if (x.cwiseAbs().maxCoeff() > 1e8) return false;
  }
  return best < target;
}

cplx ipow(cplx base, int n) {
  cplx out = 1.0;
  if (n < 0) return 1.0 / ipow(base, -n);
  for (int k = 0; k < n; ++k) out *= base;
  return out;
}

// ---------------- xxx product form ----------------

struct XxxSystem {
  int num_sites;
  int magnons;  // sector value entering the prefactor
  cplx eta;
  cplx q;

  Vector residual(const Vector& v) const {
    const int m = static_cast<int>(v.size());
    const cplx half = cplx(0, 0.5) * eta, full = cplx(0, 1) * eta;
    const cplx pref = ipow(q, magnons - 1);
    Vector out(m);
    for (int a = 0; a < m; ++a) {
      cplx lhs = ipow((v(a) + half) / (v(a) - half), num_sites);
      cplx rhs = pref;
      for (int b = 0; b < m; ++b) {
        if (b == a) continue;
        rhs *= (v(a) - v(b) + full) / (v(a) - v(b) - full);
      }
      out(a) = lhs - rhs;
    }
    return out;
  }

  Matrix jacobian(const Vector& v) const {
    const int m = static_cast<int>(v.size());
    const cplx half = cplx(0, 0.5) * eta, full = cplx(0, 1) * eta;
    const cplx pref = ipow(q, magnons - 1);
    Matrix j = Matrix::Zero(m, m);
    for (int a = 0; a < m; ++a) {
      cplx lhs = ipow((v(a) + half) / (v(a) - half), num_sites);
      cplx rhs = pref;
      for (int b = 0; b < m; ++b) {
        if (b == a) continue;
        rhs *= (v(a) - v(b) + full) / (v(a) - v(b) - full);
      }
      const cplx dlhs = lhs * cplx(num_sites) * (1.0 / (v(a) + half) - 1.0 / (v(a) - half));
      j(a, a) += dlhs;
      for (int b = 0; b < m; ++b) {
        if (b == a) continue;
        const cplx d = v(a) - v(b);
        const cplx dlog = 1.0 / (d + full) - 1.0 / (d - full);
        j(a, a) -= rhs * dlog;
        j(a, b) += rhs * dlog;
      }
    }
    return j;
  }
};

// ---------------- tj product form ----------------

struct TjSystem {
  int num_sites;
  int particles;   // N entering the prefactors
  int down_spins;  // M entering the prefactors
  int n_fin, m_fin;
  cplx eta;
  cplx q1, q2, q3;

  // unknown vector: first n_fin charge roots, then m_fin spin roots
  Vector residual(const Vector& x) const {
    const cplx half = cplx(0, 0.5) * eta, full = cplx(0, 1) * eta;
    const cplx cpref = ipow(q2, particles - down_spins - 1) * ipow(q3, down_spins);
    const cplx spref = ipow(q1, down_spins - 1) * ipow(q2, -(particles - down_spins - 1)) *
                       ipow(q3, particles - 2 * down_spins);
    Vector out(n_fin + m_fin);
    for (int i = 0; i < n_fin; ++i) {
      const cplx u = x(i);
      cplx lhs = ipow((u + half) / (u - half), num_sites);
      cplx rhs = cpref;
      for (int l = 0; l < n_fin; ++l)
        if (l != i) rhs *= (u - x(l) + full) / (u - x(l) - full);
      for (int l = 0; l < m_fin; ++l)
        rhs *= (u - x(n_fin + l) - half) / (u - x(n_fin + l) + half);
      out(i) = lhs - rhs;
    }
    for (int jj = 0; jj < m_fin; ++jj) {
      const cplx v = x(n_fin + jj);
      cplx lhs = spref;
      for (int i = 0; i < n_fin; ++i) lhs *= (v - x(i) - half) / (v - x(i) + half);
      cplx rhs = 1.0;
      for (int l = 0; l < m_fin; ++l)
        if (l != jj) rhs *= (v - x(n_fin + l) - full) / (v - x(n_fin + l) + full);
      out(n_fin + jj) = lhs - rhs;
    }
    return out;
  }

  Matrix jacobian(const Vector& x) const {
    // forward differences on the analytic residual; systems are tiny
    const int k = n_fin + m_fin;
    const double h = 1e-7;
    const Vector f0 = residual(x);
    Matrix j(k, k);
    for (int c = 0; c < k; ++c) {
      Vector xp = x;
      xp(c) += h;
      j.col(c) = (residual(xp) - f0) / h;
    }
    return j;
  }
};

// ---------------- shared helpers ----------------

std::vector<cplx> canonical_order(std::vector<cplx> roots) {
  std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
    if (std::abs(a.real() - b.real()) > 1e-9) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

bool same_set(const std::vector<cplx>& a, const std::vector<cplx>& b, double tolerance) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tolerance) return false;
  return true;
}

int pick_threads(int requested, int tasks) {
  if (requested > 0) return std::min(requested, tasks);
  const int hw = static_cast<int>(std::thread::hardware_concurrency());
  return std::max(1, std::min({hw, tasks, 8}));
}

// Runs fn(i) for i in [0,total) on a few threads; per-index outputs are
// collected into a preallocated vector so results are scheduling-independent.
template <typename F>
void indexed_parallel_for(int total, int threads, F&& fn) {
  if (total <= 0) return;
  const int nt = pick_threads(threads, total);
  if (nt <= 1) {
    for (int i = 0; i < total; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(nt));
  for (int t = 0; t < nt; ++t) {
    pool.emplace_back([&, t]() {
      for (int i = t; i < total; i += nt) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

struct XxxCandidate {
  std::vector<cplx> roots;
  bool ok = false;
};

}  // namespace

// ---------------- xxx solver ----------------

namespace {

std::vector<std::vector<cplx>> xxx_finite_sets(const ModelSpec& model, int magnons, int n_fin,
                                               const SolveOptions& opts, SolveDiagnostics* diag) {
  XxxSystem sys{model.num_sites, magnons, model.eta, model.q};
  const double scale = std::abs(model.eta);
  std::vector<std::vector<cplx>> found;
  if (n_fin == 0) {
    found.push_back({});
    return found;
  }
  auto try_accept = [&](Vector x) -> std::vector<cplx> {
    // polish and filter
    ResidualFn f = [&](const Vector& y) { return sys.residual(y); };
    JacobianFn j = [&](const Vector& y) { return sys.jacobian(y); };
    if (!newton_polish(x, f, j, opts.max_iterations, opts.newton_tolerance)) {
      const double res = sys.residual(x).cwiseAbs().maxCoeff();
      if (!(res < opts.residual_tolerance)) return {};
    }
    std::vector<cplx> roots(x.data(), x.data() + x.size());
    const cplx half = cplx(0, 0.5) * model.eta;
    for (cplx v : roots)
      if (std::abs(v - half) < opts.pole_guard || std::abs(v + half) < opts.pole_guard) {
        if (diag) ++diag->rejected_pole;
        return {};
      }
    if (roots.size() > 1 && min_root_separation(roots) < opts.separation_guard) {
      if (diag) ++diag->rejected_degenerate;
      return {};
    }
    if (sys.residual(Eigen::Map<const Vector>(roots.data(), static_cast<long>(roots.size())))
            .cwiseAbs()
            .maxCoeff() > opts.residual_tolerance) {
      if (diag) ++diag->rejected_residual;
      return {};
    }
    return canonical_order(roots);
  };

  const double theta = std::arg(model.q);

  std::vector<XxxCandidate> pool;
  int total = 0;
  if (opts.strategy == SolveStrategy::multistart || opts.strategy == SolveStrategy::homotopy) {
    total = opts.seeds;
    pool.resize(static_cast<std::size_t>(total));
    indexed_parallel_for(total, opts.threads, [&](int s) {
      Rng rng(opts.rng_seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(s) + 1);
      Vector x(n_fin);
      const double mag = std::pow(10.0, -0.7 + 1.8 * rng.uniform());
      for (int k = 0; k < n_fin; ++k)
        x(k) = scale * mag * cplx(rng.normalish(), 0.7 * rng.normalish());
      auto roots = try_accept(std::move(x));
      pool[static_cast<std::size_t>(s)] = {std::move(roots), true};
    });
  } else {
    // log-form enumeration over quantum-number candidates
    const int L = model.num_sites;
    std::vector<std::vector<int>> qnum_sets;
    std::vector<int> current;
    // strictly increasing doubled quantum numbers in [-2L, 2L]
    std::function<void(int)> rec = [&](int start) {
      if (static_cast<int>(current.size()) == n_fin) {
        qnum_sets.push_back(current);
        return;
      }
      for (int t = start; t <= 2 * L; ++t) {
        current.push_back(t);
        rec(t + 1);
        current.pop_back();
      }
    };
    rec(-2 * L);
    total = static_cast<int>(qnum_sets.size());
    pool.resize(static_cast<std::size_t>(total));
    indexed_parallel_for(total, opts.threads, [&](int s) {
      const auto& twice_i = qnum_sets[static_cast<std::size_t>(s)];
      Vector x(n_fin);
      bool usable = true;
      for (int k = 0; k < n_fin; ++k) {
        const double phi = (M_PI * twice_i[static_cast<std::size_t>(k)] +
                            (magnons - 1) * theta) /
                           (2.0 * L);
        if (std::abs(phi) > 0.49 * M_PI * 2.0) {
          usable = false;
          break;
        }
        x(k) = 0.5 * scale * std::tan(phi);
      }
      if (!usable) {
        pool[static_cast<std::size_t>(s)] = {{}, true};
        return;
      }
      auto roots = try_accept(std::move(x));
      pool[static_cast<std::size_t>(s)] = {std::move(roots), true};
    });
  }
  if (diag) diag->seeds_tried += total;
  for (auto& cand : pool) {
    if (cand.roots.empty()) continue;
    bool dup = false;
    for (const auto& f : found)
      if (same_set(f, cand.roots, opts.dedup_tolerance)) {
        dup = true;
        break;
      }
    if (!dup) {
      found.push_back(std::move(cand.roots));
      if (diag) ++diag->converged;
    }
  }
  return found;
}

}  // namespace

std::vector<BetheRootsXXX> solve_bae_xxx(const ModelSpec& model, int magnons,
                                         const SolveOptions& opts, SolveDiagnostics* diag) {
  model.validate();
  if (model.kind != ModelKind::xxx)
    throw error(errc::config_error, "solve_bae_xxx requires an xxx model");
  if (magnons < 0 || magnons > model.num_sites)
    throw error(errc::config_error, "magnon count outside 0..L");

  if (opts.strategy == SolveStrategy::homotopy && std::abs(model.q - 1.0) > 1e-14) {
    // continue every q=1 solution along the unit circle
    SolveOptions base = opts;
    base.strategy = SolveStrategy::multistart;
    ModelSpec ref = model;
    ref.q = 1.0;
    auto start = solve_bae_xxx(ref, magnons, base, diag);
    const double theta = std::arg(model.q);
    std::vector<BetheRootsXXX> out;
    for (auto& s0 : start) {
      if (s0.roots.empty()) {
        // purely-sentinel sets are re-derived at the target point below
        continue;
      }
      Vector x = Eigen::Map<const Vector>(s0.roots.data(), static_cast<long>(s0.roots.size()));
      bool alive = true;
      for (int step = 1; step <= opts.homotopy_steps && alive; ++step) {
        XxxSystem sys{model.num_sites, magnons, model.eta,
                      std::polar(1.0, theta * step / opts.homotopy_steps)};
        ResidualFn f = [&](const Vector& y) { return sys.residual(y); };
        JacobianFn j = [&](const Vector& y) { return sys.jacobian(y); };
        if (!newton_polish(x, f, j, opts.max_iterations, opts.newton_tolerance)) alive = false;
        std::vector<cplx> cur(x.data(), x.data() + x.size());
        if (alive && cur.size() > 1 && min_root_separation(cur) < opts.separation_guard) {
          alive = false;  // DegenerateRoots along the path
          if (diag) ++diag->degenerate_paths;
        }
      }
      if (!alive) continue;
      BetheRootsXXX r{model.num_sites, magnons, model.eta, model.q,
                      canonical_order({x.data(), x.data() + x.size()}), s0.infinite_roots};
      out.push_back(std::move(r));
    }
    // sentinel families handled by the direct path
    SolveOptions direct = opts;
    direct.strategy = SolveStrategy::multistart;
    direct.seeds = 0;
    for (auto& extra : solve_bae_xxx(model, magnons, direct, nullptr)) out.push_back(extra);
    // dedup
    std::vector<BetheRootsXXX> dedup;
    for (auto& r : out) {
      bool dup = false;
      for (const auto& d : dedup)
        if (d.infinite_roots == r.infinite_roots &&
            same_set(d.roots, r.roots, opts.dedup_tolerance))
          dup = true;
      if (!dup) dedup.push_back(std::move(r));
    }
    return dedup;
  }

  std::vector<BetheRootsXXX> out;
  const cplx pref = ipow(model.q, magnons - 1);
  for (int s = 0; s <= magnons; ++s) {
    if (s >= 1 && std::abs(pref - 1.0) > opts.residual_tolerance) break;
    for (auto& roots : xxx_finite_sets(model, magnons, magnons - s, opts, diag)) {
      BetheRootsXXX r{model.num_sites, magnons, model.eta, model.q, std::move(roots), s};
      // final product-form acceptance on the full set
      const auto res = xxx_bae_residual(r);
      double worst = 0.0;
      for (cplx c : res) worst = std::max(worst, std::abs(c));
      if (worst <= opts.residual_tolerance) out.push_back(std::move(r));
    }
  }
  return out;
}

// ---------------- tj solver ----------------

std::vector<BetheRootsTJ> solve_bae_tj(const ModelSpec& model, int particles, int down_spins,
                                       const SolveOptions& opts, SolveDiagnostics* diag) {
  model.validate();
  if (model.kind != ModelKind::tj)
    throw error(errc::config_error, "solve_bae_tj requires a tj model");
  if (particles < 0 || particles > model.num_sites || down_spins < 0 || down_spins > particles)
    throw error(errc::config_error, "sector (N, M) outside 0 <= M <= N <= L");

  if (opts.strategy == SolveStrategy::homotopy &&
      (std::abs(model.q1 - 1.0) > 1e-14 || std::abs(model.q2 - 1.0) > 1e-14 ||
       std::abs(model.q3 - 1.0) > 1e-14)) {
    SolveOptions base = opts;
    base.strategy = SolveStrategy::multistart;
    ModelSpec ref = model;
    ref.q1 = ref.q2 = ref.q3 = 1.0;
    auto start = solve_bae_tj(ref, particles, down_spins, base, diag);
    const double t1 = std::arg(model.q1), t2 = std::arg(model.q2), t3 = std::arg(model.q3);
    std::vector<BetheRootsTJ> out;
    for (auto& s0 : start) {
      const int nf = static_cast<int>(s0.charge_roots.size());
      const int mf = static_cast<int>(s0.spin_roots.size());
      if (nf + mf == 0) continue;
      Vector x(nf + mf);
      for (int i = 0; i < nf; ++i) x(i) = s0.charge_roots[static_cast<std::size_t>(i)];
      for (int i = 0; i < mf; ++i) x(nf + i) = s0.spin_roots[static_cast<std::size_t>(i)];
      bool alive = true;
      for (int step = 1; step <= opts.homotopy_steps && alive; ++step) {
        const double f = static_cast<double>(step) / opts.homotopy_steps;
        TjSystem sys{model.num_sites, particles, down_spins, nf, mf, model.eta,
                     std::polar(1.0, t1 * f), std::polar(1.0, t2 * f), std::polar(1.0, t3 * f)};
        ResidualFn rf = [&](const Vector& y) { return sys.residual(y); };
        JacobianFn jf = [&](const Vector& y) { return sys.jacobian(y); };
        if (!newton_polish(x, rf, jf, opts.max_iterations, opts.newton_tolerance)) alive = false;
      }
      if (!alive) {
        if (diag) ++diag->degenerate_paths;
        continue;
      }
      BetheRootsTJ r{model.num_sites, particles, down_spins, model.eta,
                     model.q1, model.q2, model.q3,
                     canonical_order({x.data(), x.data() + nf}),
                     canonical_order({x.data() + nf, x.data() + nf + mf}),
                     s0.infinite_charge_roots, s0.infinite_spin_roots};
      out.push_back(std::move(r));
    }
    SolveOptions direct = opts;
    direct.strategy = SolveStrategy::multistart;
    direct.seeds = 0;
    for (auto& extra : solve_bae_tj(model, particles, down_spins, direct, nullptr))
      out.push_back(extra);
    std::vector<BetheRootsTJ> dedup;
    for (auto& r : out) {
      bool dup = false;
      for (const auto& d : dedup)
        if (d.infinite_charge_roots == r.infinite_charge_roots &&
            d.infinite_spin_roots == r.infinite_spin_roots &&
            same_set(d.charge_roots, r.charge_roots, opts.dedup_tolerance) &&
            same_set(d.spin_roots, r.spin_roots, opts.dedup_tolerance))
          dup = true;
      if (!dup) dedup.push_back(std::move(r));
    }
    return dedup;
  }

  const cplx cpref = ipow(model.q2, particles - down_spins - 1) * ipow(model.q3, down_spins);
  const cplx spref = ipow(model.q1, down_spins - 1) *
                     ipow(model.q2, -(particles - down_spins - 1)) *
                     ipow(model.q3, particles - 2 * down_spins);
  const double scale = std::abs(model.eta);
  std::vector<BetheRootsTJ> out;
  for (int su = 0; su <= particles; ++su) {
    if (su >= 1 && std::abs(1.0 - cpref) > opts.residual_tolerance) break;
    for (int sv = 0; sv <= down_spins; ++sv) {
      if (sv >= 1 && std::abs(spref - 1.0) > opts.residual_tolerance) break;
      const int nf = particles - su, mf = down_spins - sv;
      TjSystem sys{model.num_sites, particles, down_spins, nf, mf, model.eta,
                   model.q1, model.q2, model.q3};
      std::vector<std::vector<cplx>> finite_sets;
      if (nf + mf == 0) {
        finite_sets.push_back({});
      } else {
        std::vector<XxxCandidate> pool(static_cast<std::size_t>(opts.seeds));
        indexed_parallel_for(opts.seeds, opts.threads, [&](int s) {
          Rng rng(opts.rng_seed * 0x2545F4914F6CDD1DULL +
                  static_cast<std::uint64_t>(s) * 977 + static_cast<std::uint64_t>(su * 31 + sv));
          Vector x(nf + mf);
          const double mag = std::pow(10.0, -0.7 + 1.8 * rng.uniform());
          for (int k = 0; k < nf + mf; ++k)
            x(k) = scale * mag * cplx(rng.normalish(), 0.7 * rng.normalish());
          ResidualFn f = [&](const Vector& y) { return sys.residual(y); };
          JacobianFn j = [&](const Vector& y) { return sys.jacobian(y); };
          if (!newton_polish(x, f, j, opts.max_iterations, opts.newton_tolerance)) {
            pool[static_cast<std::size_t>(s)] = {{}, true};
            return;
          }
          std::vector<cplx> all(x.data(), x.data() + x.size());
          const cplx half = cplx(0, 0.5) * model.eta;
          for (int i = 0; i < nf; ++i)
            if (std::abs(all[static_cast<std::size_t>(i)] - half) < opts.pole_guard ||
                std::abs(all[static_cast<std::size_t>(i)] + half) < opts.pole_guard) {
              pool[static_cast<std::size_t>(s)] = {{}, true};
              return;
            }
          std::vector<cplx> cr(all.begin(), all.begin() + nf);
          std::vector<cplx> sr(all.begin() + nf, all.end());
          if ((cr.size() > 1 && min_root_separation(cr) < opts.separation_guard) ||
              (sr.size() > 1 && min_root_separation(sr) < opts.separation_guard)) {
            pool[static_cast<std::size_t>(s)] = {{}, true};
            return;
          }
          auto c = canonical_order(cr);
          auto v = canonical_order(sr);
          std::vector<cplx> packed;
          packed.insert(packed.end(), c.begin(), c.end());
          packed.insert(packed.end(), v.begin(), v.end());
          pool[static_cast<std::size_t>(s)] = {std::move(packed), true};
        });
        if (diag) diag->seeds_tried += opts.seeds;
        for (auto& cand : pool) {
          if (cand.roots.empty()) continue;
          bool dup = false;
          for (const auto& f : finite_sets)
            if (same_set(f, cand.roots, opts.dedup_tolerance)) {
              dup = true;
              break;
            }
          if (!dup) {
            finite_sets.push_back(std::move(cand.roots));
            if (diag) ++diag->converged;
          }
        }
      }
      for (auto& packed : finite_sets) {
        BetheRootsTJ r{model.num_sites, particles, down_spins, model.eta,
                       model.q1, model.q2, model.q3,
                       {packed.begin(), packed.begin() + nf},
                       {packed.begin() + nf, packed.end()},
                       su, sv};
        const auto res = tj_bae_residual(r);
        double worst = 0.0;
        for (cplx c : res) worst = std::max(worst, std::abs(c));
        if (worst <= opts.residual_tolerance) out.push_back(std::move(r));
      }
    }
  }
  return out;
}

}  // namespace anyonqism
