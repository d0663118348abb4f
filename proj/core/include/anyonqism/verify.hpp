#pragma once

#include <string>
#include <vector>

#include "anyonqism/lax.hpp"
#include "anyonqism/rmatrix.hpp"

namespace anyonqism {

struct ResidualReport {
  std::string identity;
  std::vector<cplx> sampled_parameters;
  double max_residual = 0.0;
  double tolerance = tol::identity;
  bool pass = false;
  bool applicable = true;  // false when the evenness premise fails
  bool nan_flag = false;
  std::string note;
};

ResidualReport make_report(std::string identity, std::vector<cplx> params, double residual,
                           double tolerance);

/// Yang-Baxter check at one parameter pair. Evaluates
///  - the component YBE in braid form with ordinary embeddings (valid because
///    the check matrix is string-transparent; the premise is verified and a
///    failure downgrades the report to not-applicable),
///  - the same identity with graded tensor embeddings,
///  - the R = P*Rcheck form through the RLL component identity with L := P*Rcheck.
/// The reported residual is the worst of the three.
ResidualReport check_ybe(const RMatrixSpec& r, cplx lambda, cplx mu,
                         double tolerance = tol::identity);

/// RLL component identity with the explicit grading factors
/// w(b1,c2)w^{-1}(c1,c2) and w(c1,a2)w^{-1}(a1,a2), repeated indices summed:
///   sum R(l-m)^{a1a2}_{c1c2} L(l)^{c1 an}_{b1 rn} L(m)^{c2 rn}_{b2 bn} w(b1,c2)/w(c1,c2)
/// = sum L(m)^{a1 an}_{c1 rn} L(l)^{a2 rn}_{c2 bn} R(l-m)^{c1c2}_{b1b2} w(c1,a2)/w(a1,a2).
ResidualReport check_rll(const RMatrixSpec& r, const LaxSpec& l, const GradingTable& g,
                         cplx lambda, cplx mu, double tolerance = tol::identity);

/// Same identity for explicitly supplied matrices (used for the nested Lax,
/// whose entries are rational in the spectral parameter).
double rll_component_residual(const Matrix& r_check, const Matrix& l_lambda,
                              const Matrix& l_mu, const GradingTable& g, int aux_dim,
                              int quantum_dim);

/// Nested-level RLL: a(u)*r^(1) (numerically the 6-vertex check matrix)
/// against the nested Lax under the 2-dim spin grading. A systematic failure
/// is reported in the note as a convention diagnostic, never patched over.
ResidualReport check_nested_rll(cplx eta, cplx q1, cplx q2, cplx q3, cplx lambda, cplx mu,
                                double tolerance = 1e-10);

}  // namespace anyonqism
