#include "anyonqism/model.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace anyonqism {

GradingTable ModelSpec::grading() const {
  return kind == ModelKind::xxx ? xxx_grading(q) : tj_grading(q1, q2, q3);
}

RMatrixSpec ModelSpec::rmatrix() const {
  return kind == ModelKind::xxx ? xxx_r_matrix(eta, q) : tj_r_matrix(eta, q1, q2, q3);
}

LaxSpec ModelSpec::lax() const {
  return kind == ModelKind::xxx ? xxx_lax(eta, q) : tj_lax(eta, q1, q2, q3);
}

ChainLayout ModelSpec::chain_layout(bool with_aux) const {
  return {num_sites, local_dim(), with_aux ? local_dim() : 0};
}

void ModelSpec::validate() const {
  if (num_sites < 1) throw error(errc::config_error, "L must be >= 1");
  if (eta == 0.0) throw error(errc::zero_eta, "eta must be nonzero");
  auto uni = [](cplx v) { return std::abs(std::abs(v) - 1.0) <= tol::unimodular; };
  if (kind == ModelKind::xxx) {
    if (!uni(q)) throw error(errc::non_unimodular_q, "q must be unimodular");
  } else {
    if (!uni(q1) || !uni(q2) || !uni(q3))
      throw error(errc::non_unimodular_q, "q1,q2,q3 must be unimodular");
  }
}

ModelSpec make_xxx_model(int num_sites, cplx eta, cplx q) {
  ModelSpec m{ModelKind::xxx, num_sites, eta, q};
  m.validate();
  return m;
}

ModelSpec make_tj_model(int num_sites, cplx eta, cplx q1, cplx q2, cplx q3) {
  ModelSpec m;
  m.kind = ModelKind::tj;
  m.num_sites = num_sites;
  m.eta = eta;
  m.q1 = q1;
  m.q2 = q2;
  m.q3 = q3;
  m.validate();
  return m;
}

long dimension_cap() {
  if (const char* env = std::getenv("ANYONQISM_DIM_CAP")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return v;
  }
  return 20000;
}

void require_within_cap(long dim) {
  const long cap = dimension_cap();
  if (dim > cap)
    throw error(errc::resource_limit, "matrix dimension " + std::to_string(dim) +
                                          " exceeds cap " + std::to_string(cap));
}

}  // namespace anyonqism
