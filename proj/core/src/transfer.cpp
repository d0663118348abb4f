#include "anyonqism/transfer.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace anyonqism {

ChainOperator build_monodromy(const ModelSpec& model, cplx lambda) {
  model.validate();
  const ChainLayout layout = model.chain_layout(true);
  require_within_cap(layout.total_dim());
  const GradingTable g = model.grading();
  const Matrix lax = model.lax()(lambda);
  Matrix t = Matrix::Identity(layout.total_dim(), layout.total_dim());
  for (int j = model.num_sites; j >= 1; --j) t *= embed_lax(lax, j, layout, g).mat;
  return {layout, std::move(t)};
}

ChainOperator transfer_matrix(const ModelSpec& model, cplx lambda) {
  return graded_partial_trace(build_monodromy(model, lambda), model.grading());
}

ResidualReport commutation_of_transfers(const ModelSpec& model, cplx lambda, cplx mu,
                                        double tolerance) {
  const Matrix a = transfer_matrix(model, lambda).mat;
  const Matrix b = transfer_matrix(model, mu).mat;
  const double na = a.norm(), nb = b.norm();
  const double resid = (a * b - b * a).norm() / std::max(na * nb, 1e-300);
  return make_report("transfer_commute", {lambda, mu}, resid, tolerance);
}

std::vector<ChainOperator> transfer_polynomial_coeffs(const ModelSpec& model) {
  const int deg = model.num_sites;
  std::vector<double> nodes(static_cast<std::size_t>(deg) + 1);
  for (int k = 0; k <= deg; ++k)
    nodes[static_cast<std::size_t>(k)] = deg == 0 ? 0.0 : std::cos(M_PI * k / deg);
  std::vector<ChainOperator> values;
  values.reserve(nodes.size());
  for (double x : nodes) values.push_back(transfer_matrix(model, x));

  // Vandermonde solve; entries of tau are exact degree-<=L polynomials so the
  // only error is the conditioning of the Chebyshev-node system.
  const int m = deg + 1;
  Matrix v(m, m);
  for (int r = 0; r < m; ++r) {
    cplx p = 1.0;
    for (int c = 0; c < m; ++c) {
      v(r, c) = p;
      p *= nodes[static_cast<std::size_t>(r)];
    }
  }
  const Eigen::PartialPivLU<Matrix> lu(v);
  const long dim = values.front().mat.rows();
  Matrix rhs(m, dim * dim);
  for (int r = 0; r < m; ++r)
    rhs.row(r) = values[static_cast<std::size_t>(r)].mat.reshaped().transpose();
  const Matrix sol = lu.solve(rhs);
  std::vector<ChainOperator> coeffs;
  coeffs.reserve(static_cast<std::size_t>(m));
  for (int p = 0; p < m; ++p) {
    Matrix c = sol.row(p).reshaped(dim, dim);
    coeffs.push_back({values.front().layout, std::move(c)});
  }
  return coeffs;
}

ChainOperator hamiltonian_from_transfer(const ModelSpec& model) {
  auto coeffs = transfer_polynomial_coeffs(model);
  const Matrix& tau0 = coeffs[0].mat;
  const Matrix& tau1 = coeffs[1].mat;
  const Eigen::JacobiSVD<Matrix> svd(tau0);
  const double cond = svd.singularValues()(0) /
                      std::max(svd.singularValues()(svd.singularValues().size() - 1), 1e-300);
  if (cond > 1e8)
    throw error(errc::singular_shift, "tau(0) condition number exceeds 1e8");
  Matrix h = tau1 * tau0.partialPivLu().inverse();
  return {coeffs[0].layout, std::move(h)};
}

AffineFit fit_affine(const Matrix& target, const Matrix& basis) {
  // normal equations of min || target - alpha*basis - beta*I ||_F
  const long dim = target.rows();
  const Matrix id = Matrix::Identity(dim, dim);
  const cplx bb = (basis.adjoint() * basis).trace();
  const cplx bi = basis.adjoint().trace();
  const cplx ib = basis.trace();
  const cplx ii = static_cast<double>(dim);
  const cplx bt = (basis.adjoint() * target).trace();
  const cplx it = target.trace();
  Eigen::Matrix2cd m;
  m << bb, bi, ib, ii;
  Eigen::Vector2cd r;
  r << bt, it;
  const Eigen::Vector2cd sol = m.fullPivLu().solve(r);
  const double resid = max_abs(target - sol(0) * basis - sol(1) * id);
  return {sol(0), sol(1), resid};
}

}  // namespace anyonqism
