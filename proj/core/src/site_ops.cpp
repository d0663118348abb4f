#include "anyonqism/site_ops.hpp"

namespace anyonqism {

namespace {

Matrix unit(int i, int j, int d) {
  Matrix m = Matrix::Zero(d, d);
  m(i, j) = 1.0;
  return m;
}

}  // namespace

SiteOperators build_site_operators(const ModelSpec& model) {
  model.validate();
  const ChainLayout layout = model.chain_layout();
  require_within_cap(layout.total_dim());
  const GradingTable g = model.grading();
  SiteOperators ops;
  ops.model = model;
  const int L = model.num_sites;
  auto embed = [&](const Matrix& x, int site) { return embed_local(x, site, layout, g).mat; };
  if (model.kind == ModelKind::xxx) {
    for (int j = 1; j <= L; ++j) {
      ops.a.push_back(embed(unit(0, 1, 2), j));
      ops.adag.push_back(embed(unit(1, 0, 2), j));
      ops.n.push_back(embed(unit(1, 1, 2), j));
    }
  } else {
    for (int j = 1; j <= L; ++j) {
      ops.a_dn.push_back(embed(unit(2, 0, 3), j));
      ops.a_up.push_back(embed(unit(2, 1, 3), j));
      ops.adag_dn.push_back(embed(unit(0, 2, 3), j));
      ops.adag_up.push_back(embed(unit(1, 2, 3), j));
      ops.n_dn.push_back(embed(unit(0, 0, 3), j));
      ops.n_up.push_back(embed(unit(1, 1, 3), j));
      ops.n_tot.push_back(ops.n_dn.back() + ops.n_up.back());
      ops.s_plus.push_back(ops.adag_up.back() * ops.a_dn.back());
      ops.s_minus.push_back(ops.adag_dn.back() * ops.a_up.back());
      ops.s_z.push_back(0.5 * (ops.n_up.back() - ops.n_dn.back()));
    }
  }
  return ops;
}

namespace {

double rel(const Matrix& lhs, const Matrix& rhs) { return max_abs(lhs - rhs); }

}  // namespace

ResidualReport commutation_suite(const ModelSpec& model, double tolerance) {
  const SiteOperators ops = build_site_operators(model);
  const int L = model.num_sites;
  const long dim = model.chain_layout().total_dim();
  const Matrix id = Matrix::Identity(dim, dim);
  double worst = 0.0;
  auto check = [&](const Matrix& lhs, const Matrix& rhs) {
    worst = std::max(worst, rel(lhs, rhs));
  };
  if (model.kind == ModelKind::xxx) {
    const cplx q = model.q;
    for (int j = 0; j < L; ++j) {
      check(ops.a[j] * ops.a[j], Matrix::Zero(dim, dim));
      check(ops.adag[j] * ops.adag[j], Matrix::Zero(dim, dim));
      check(ops.a[j] * ops.adag[j] + ops.adag[j] * ops.a[j], id);
    }
    for (int i = 1; i < L; ++i) {
      for (int j = 0; j < i; ++j) {
        // site index i+1 > j+1, matching the printed i > j convention
        check(ops.adag[i] * ops.a[j], q * ops.a[j] * ops.adag[i]);
        check(ops.adag[j] * ops.a[i], (1.0 / q) * ops.a[i] * ops.adag[j]);
        check(ops.adag[j] * ops.adag[i], q * ops.adag[i] * ops.adag[j]);
        check(ops.a[j] * ops.a[i], q * ops.a[i] * ops.a[j]);
      }
    }
  } else {
    const cplx q1 = model.q1, q2 = model.q2, q3 = model.q3;
    for (int j = 0; j < L; ++j) {
      for (const auto* dn : {&ops.a_dn, &ops.a_up}) {
        check((*dn)[j] * (*dn)[j], Matrix::Zero(dim, dim));
      }
      for (const auto* up : {&ops.adag_dn, &ops.adag_up}) {
        check((*up)[j] * (*up)[j], Matrix::Zero(dim, dim));
      }
      // constrained local space: {a_s, adag_s} = 1 - n_{-s}
      check(ops.a_dn[j] * ops.adag_dn[j] + ops.adag_dn[j] * ops.a_dn[j], id - ops.n_up[j]);
      check(ops.a_up[j] * ops.adag_up[j] + ops.adag_up[j] * ops.a_up[j], id - ops.n_dn[j]);
    }
    for (int i = 1; i < L; ++i) {
      for (int j = 0; j < i; ++j) {
        check(ops.adag_dn[i] * ops.a_dn[j], q1 * ops.a_dn[j] * ops.adag_dn[i]);
        check(ops.adag_up[i] * ops.a_up[j], q2 * ops.a_up[j] * ops.adag_up[i]);
        check(ops.adag_up[i] * ops.a_dn[j], q3 * ops.a_dn[j] * ops.adag_up[i]);
        check(ops.adag_dn[i] * ops.a_up[j], q3 * ops.a_up[j] * ops.adag_dn[i]);
        check(ops.adag_dn[j] * ops.adag_dn[i], q1 * ops.adag_dn[i] * ops.adag_dn[j]);
        check(ops.adag_up[j] * ops.adag_up[i], q2 * ops.adag_up[i] * ops.adag_up[j]);
        check(ops.adag_dn[j] * ops.adag_up[i], q3 * ops.adag_up[i] * ops.adag_dn[j]);
        check(ops.adag_up[j] * ops.adag_dn[i], q3 * ops.adag_dn[i] * ops.adag_up[j]);
        // four-operator identities
        check(q1 / q3 * ops.s_plus[j] * ops.s_minus[i],
              q3 / q2 * ops.s_minus[i] * ops.s_plus[j]);
        check(q3 / q1 * ops.s_plus[i] * ops.s_minus[j],
              q2 / q3 * ops.s_minus[j] * ops.s_plus[i]);
      }
    }
  }
  auto rep = make_report("commutation_suite", {}, worst, tolerance);
  return rep;
}

}  // namespace anyonqism
