#pragma once

#include <vector>

#include "anyonqism/model.hpp"
#include "anyonqism/site_ops.hpp"

namespace anyonqism {

/// Monodromy matrix T(lambda) = E_L E_{L-1} ... E_1 on aux (x) chain, each
/// E_j the graded embedding of the model Lax at site j sharing the leftmost
/// auxiliary factor.
ChainOperator build_monodromy(const ModelSpec& model, cplx lambda);

/// Transfer matrix tau(lambda) = atr T(lambda) = sum_a w(a,a)^{-1} T^a_a.
ChainOperator transfer_matrix(const ModelSpec& model, cplx lambda);

/// Relative Frobenius residual of [tau(lambda), tau(mu)].
ResidualReport commutation_of_transfers(const ModelSpec& model, cplx lambda, cplx mu,
                                        double tolerance = tol::transfer_commute);

/// Exact matrix coefficients of the degree-<=L polynomial tau(lambda),
/// recovered by interpolation at L+1 Chebyshev nodes.
std::vector<ChainOperator> transfer_polynomial_coeffs(const ModelSpec& model);

/// H_trans = tau'(0) tau(0)^{-1} from the exact polynomial coefficients.
/// Throws SingularShift when cond(tau(0)) exceeds 1e8.
ChainOperator hamiltonian_from_transfer(const ModelSpec& model);

struct AffineFit {
  cplx alpha, beta;
  double residual;  // max-entry residual of target - alpha*basis - beta*I
};

/// Least-squares fit target ~= alpha * basis + beta * I.
AffineFit fit_affine(const Matrix& target, const Matrix& basis);

}  // namespace anyonqism
