#include "anyonqism/rmatrix.hpp"

namespace anyonqism {

RMatrixSpec xxx_r_matrix(cplx eta, cplx q) {
  if (eta == 0.0) throw error(errc::zero_eta, "xxx_r_matrix: eta must be nonzero");
  Matrix c = Matrix::Zero(4, 4);
  Matrix s = Matrix::Zero(4, 4);
  c(0, 0) = eta;
  c(3, 3) = eta;
  c(1, 1) = eta;
  c(2, 2) = eta;
  s(0, 0) = 1.0;
  s(3, 3) = 1.0;
  s(1, 2) = 1.0;
  s(2, 1) = 1.0;
  return {2, eta, xxx_grading(q), std::move(c), std::move(s)};
}

RMatrixSpec tj_r_matrix(cplx eta, cplx q1, cplx q2, cplx q3) {
  if (eta == 0.0) throw error(errc::zero_eta, "tj_r_matrix: eta must be nonzero");
  Matrix c = Matrix::Zero(9, 9);
  Matrix s = Matrix::Zero(9, 9);
  // a(u)=u+eta at the like-index positions (0-based lex 0, 4, 8)
  for (int p : {0, 4, 8}) {
    c(p, p) = eta;
    s(p, p) = 1.0;
  }
  // c=eta on the diagonal, b(u)=u off-diagonal, for each swapping pair
  for (auto [x, y] : {std::pair{1, 3}, std::pair{2, 6}, std::pair{5, 7}}) {
    c(x, x) = eta;
    c(y, y) = eta;
    s(x, y) = 1.0;
    s(y, x) = 1.0;
  }
  return {3, eta, tj_grading(q1, q2, q3), std::move(c), std::move(s)};
}

}  // namespace anyonqism
