#pragma once

#include "rosto/periodic.hpp"

#include <vector>

namespace rosto {

/// Fourier-Galerkin truncation of L = P0 (dz^{-2} + c* - U*) P0 in the
/// exponential basis, modes -N..-1, 1..N (mode 0 removed by the projection).
/// Entry (j, k) = -delta_{jk}/k^2 + m_{j-k} with m_0 = pi^2/9 and
/// m_n = (-1)^{n+1}/(3 n^2) for n != 0.
struct GalerkinMatrix {
  int n_modes;                  // N
  std::vector<double> entries;  // (2N)x(2N), row-major

  int dim() const { return 2 * n_modes; }
  int mode(int idx) const { return idx < n_modes ? idx - n_modes : idx - n_modes + 1; }
  double at(int i, int j) const { return entries[size_t(i) * size_t(dim()) + size_t(j)]; }
};

GalerkinMatrix build_matrix(int n_modes);  // requires N >= 8

struct SpectrumResult {
  std::vector<double> eigenvalues;  // sorted ascending, 2N values
  double lambda1;                   // smallest (the isolated negative eigenvalue)
  double band_low, band_high;       // extrema of the remaining eigenvalues
  double transcendental_root;
};

/// Full symmetric eigensolve. L commutes with parity, so the matrix is
/// reduced to its cosine and sine blocks before calling LAPACK.
SpectrumResult eigen_solve(const GalerkinMatrix& a);

/// (pi^2 + 3 lambda) log[(sqrt(pi^2-6 lambda)+pi)/(sqrt(pi^2-6 lambda)-pi)]
///   - 3 pi sqrt(pi^2 - 6 lambda), for lambda < 0.
double transcendental_fn(double lambda);

/// Unique zero of transcendental_fn, by bisection on [-1, -1e-6] to an
/// interval of width 1e-12. Approximately -0.2262.
double transcendental_root();

/// Mean of the even solution w2 of the spectral ODE; defined off the band
/// [0, pi^2/6] and vanishing exactly where transcendental_fn does.
double zero_mean_fn(double lambda);

/// Samples of the even eigenfunction candidate w2 for lambda < 0.
Profile eigenfunction_w2(double lambda, const PeriodicGrid& grid);

/// ||(1/6) P0[(pi^2 - z^2) w] + P0 dz^{-2} w - lambda w||_2 / ||w||_2,
/// with dz^{-2} evaluated as the antiderivative applied twice.
double residual_eigenpair(double lambda, const Profile& w);

/// Quadratic form v^T A v in the exponential basis, normalised so that it
/// matches the integral form of <L v, v> for band-limited v.
double galerkin_quadratic_form(const GalerkinMatrix& a, const Profile& v);

}  // namespace rosto
