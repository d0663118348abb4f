#include "anyonqism/spectrum.hpp"

#include <algorithm>

#include <Eigen/Dense>

namespace anyonqism {

std::vector<long> sector_indices(const ChainLayout& layout, const Sector& sector) {
  std::vector<long> out;
  const long dc = layout.chain_dim();
  for (long s = 0; s < dc; ++s) {
    int particles = 0, down = 0;
    for (int site = 1; site <= layout.num_sites; ++site) {
      const int lab = layout.site_digit(s, site);
      if (layout.local_dim == 2) {
        particles += (lab == 1);
      } else {
        // local basis 0=down, 1=up, 2=hole
        if (lab != 2) ++particles;
        if (lab == 0) ++down;
      }
    }
    if (particles != sector.particles) continue;
    if (sector.down_spins && down != *sector.down_spins) continue;
    out.push_back(s);
  }
  return out;
}

Matrix project_to_sector(const Matrix& m, const ChainLayout& layout, const Sector& sector) {
  const auto idx = sector_indices(layout, sector);
  Matrix out(idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c)
      out(static_cast<long>(r), static_cast<long>(c)) =
          m(idx[r], idx[c]);
  return out;
}

Spectrum exact_spectrum(const ChainOperator& op, const std::optional<Sector>& sector) {
  if (op.layout.aux_dim != 0 && sector)
    throw error(errc::dimension_mismatch, "sector projection expects a chain-only operator");
  Matrix m = sector ? project_to_sector(op.mat, op.layout, *sector) : op.mat;
  require_within_cap(m.rows());
  Spectrum out;
  out.sector = sector;
  const double scale = std::max(1.0, max_abs(m));
  const bool hermitian = max_abs(Matrix(m - m.adjoint())) <= 1e-12 * scale;
  if (hermitian) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
      throw error(errc::convergence_failure, "self-adjoint eigensolver failed to converge");
    out.source = "hermitian";
    for (long i = 0; i < solver.eigenvalues().size(); ++i)
      out.eigenvalues.emplace_back(solver.eigenvalues()(i), 0.0);
  } else {
    Eigen::ComplexEigenSolver<Matrix> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
      throw error(errc::convergence_failure, "complex eigensolver failed to converge");
    out.source = "general";
    for (long i = 0; i < solver.eigenvalues().size(); ++i)
      out.eigenvalues.push_back(solver.eigenvalues()(i));
  }
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), [](cplx a, cplx b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

std::vector<double> sorted_real_eigenvalues(const Spectrum& s) {
  std::vector<double> out;
  out.reserve(s.eigenvalues.size());
  for (cplx v : s.eigenvalues) out.push_back(v.real());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace anyonqism
