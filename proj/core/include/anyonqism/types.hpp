#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace anyonqism {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

enum class errc {
  non_unimodular_entry,
  symmetry_conflict,
  dimension_mismatch,
  site_out_of_range,
  no_auxiliary_factor,
  zero_eta,
  non_unimodular_q,
  singular_denominator,
  grading_mismatch,
  resource_limit,
  singular_shift,
  pole_at_root,
  pole_at_lambda,
  no_convergence,
  degenerate_roots,
  convergence_failure,
  config_error,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

namespace tol {
// Default absolute tolerance on max-entry residuals of algebraic identities.
inline constexpr double identity = 1e-12;
inline constexpr double unimodular = 1e-12;
inline constexpr double transfer_commute = 1e-10;
inline constexpr double bethe_residual = 1e-9;
inline constexpr double match = 1e-7;
}  // namespace tol

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace anyonqism
