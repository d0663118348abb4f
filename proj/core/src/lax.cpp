#include "anyonqism/lax.hpp"

#include <cmath>

namespace anyonqism {

namespace {

void require_unimodular(cplx q, const char* what) {
  if (std::abs(std::abs(q) - 1.0) > tol::unimodular)
    throw error(errc::non_unimodular_q, std::string(what) + ": statistical parameter must be unimodular");
}

}  // namespace

LaxSpec xxx_lax(cplx eta, cplx q) {
  if (eta == 0.0) throw error(errc::zero_eta, "xxx_lax: eta must be nonzero");
  require_unimodular(q, "xxx_lax");
  // Index (a,alpha) -> 2a+alpha; local basis {|0>,|1>} with a=e^1_2, adag=e^2_1, n=e^2_2.
  Matrix c = Matrix::Zero(4, 4);
  Matrix s = Matrix::Zero(4, 4);
  c(0, 0) = eta;      // block(1,1) = lambda + eta(1-n)
  s(0, 0) = 1.0;
  s(1, 1) = 1.0;
  c(1, 2) = eta;      // block(1,2) = eta adag
  c(2, 1) = eta;      // block(2,1) = eta a
  s(2, 2) = 1.0;      // block(2,2) = lambda + (lambda(q-1)+q eta) n
  c(3, 3) = q * eta;
  s(3, 3) = q;
  return {2, 2, eta, xxx_grading(q), std::move(c), std::move(s)};
}

LaxSpec tj_lax(cplx eta, cplx q1, cplx q2, cplx q3) {
  if (eta == 0.0) throw error(errc::zero_eta, "tj_lax: eta must be nonzero");
  require_unimodular(q1, "tj_lax");
  require_unimodular(q2, "tj_lax");
  require_unimodular(q3, "tj_lax");
  // Local basis 0=down, 1=up, 2=hole; index (a,alpha) -> 3a+alpha.
  Matrix c = Matrix::Zero(9, 9);
  Matrix s = Matrix::Zero(9, 9);
  auto idx = [](int a, int al) { return 3 * a + al; };
  // block(1,1) = q1(eta+u) n_dn + u(q3 n_up + 1 - n)
  c(idx(0, 0), idx(0, 0)) = q1 * eta;
  s(idx(0, 0), idx(0, 0)) = q1;
  s(idx(0, 1), idx(0, 1)) = q3;
  s(idx(0, 2), idx(0, 2)) = 1.0;
  // block(1,2) = q3 eta adag_up a_dn
  c(idx(0, 1), idx(1, 0)) = q3 * eta;
  // block(1,3) = eta (1-n_up) a_dn
  c(idx(0, 2), idx(2, 0)) = eta;
  // block(2,1) = q3 eta adag_dn a_up
  c(idx(1, 0), idx(0, 1)) = q3 * eta;
  // block(2,2) = u(q3 n_dn + 1 - n) + q2(u+eta) n_up
  s(idx(1, 0), idx(1, 0)) = q3;
  c(idx(1, 1), idx(1, 1)) = q2 * eta;
  s(idx(1, 1), idx(1, 1)) = q2;
  s(idx(1, 2), idx(1, 2)) = 1.0;
  // block(2,3) = eta (1-n_dn) a_up
  c(idx(1, 2), idx(2, 1)) = eta;
  // block(3,1) = eta adag_dn (1-n_up)
  c(idx(2, 0), idx(0, 2)) = eta;
  // block(3,2) = eta adag_up (1-n_dn)
  c(idx(2, 1), idx(1, 2)) = eta;
  // block(3,3) = u + eta(1-n)
  s(idx(2, 0), idx(2, 0)) = 1.0;
  s(idx(2, 1), idx(2, 1)) = 1.0;
  c(idx(2, 2), idx(2, 2)) = eta;
  s(idx(2, 2), idx(2, 2)) = 1.0;
  return {3, 3, eta, tj_grading(q1, q2, q3), std::move(c), std::move(s)};
}

Matrix tj_nested_lax(cplx u, cplx eta, cplx q1, cplx q2, cplx q3) {
  if (eta == 0.0) throw error(errc::zero_eta, "tj_nested_lax: eta must be nonzero");
  require_unimodular(q1, "tj_nested_lax");
  require_unimodular(q2, "tj_nested_lax");
  require_unimodular(q3, "tj_nested_lax");
  const cplx a = u + eta;
  if (std::abs(a) <= 1e-8)
    throw error(errc::singular_denominator, "tj_nested_lax: a(u) vanishes");
  const cplx ba = u / a;
  const cplx ca = eta / a;
  Matrix out = Matrix::Zero(6, 6);
  // quantum basis 0=down, 1=up, 2=hole; the hole state is annihilated by all blocks
  out(0 * 3 + 0, 0 * 3 + 0) = q1;       // q1 n_dn
  out(0 * 3 + 1, 0 * 3 + 1) = ba * q3;  // (b/a) q3 n_up
  out(0 * 3 + 1, 1 * 3 + 0) = ca * q3;  // (c/a) q3 adag_up a_dn
  out(1 * 3 + 0, 0 * 3 + 1) = ca * q3;  // (c/a) q3 adag_dn a_up
  out(1 * 3 + 1, 1 * 3 + 1) = q2;       // q2 n_up
  out(1 * 3 + 0, 1 * 3 + 0) = ba * q3;  // (b/a) q3 n_dn
  return out;
}

}  // namespace anyonqism
