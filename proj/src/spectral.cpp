#include "rosto/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

extern "C" {
void dsyev_(const char* jobz, const char* uplo, const int* n, double* a, const int* lda, double* w,
            double* work, const int* lwork, int* info);
}

namespace rosto {

namespace {

// Exponential Fourier coefficients of the multiplier c* - U* = (pi^2 - z^2)/6.
double multiplier_coeff(int n) {
  if (n == 0) return kPi * kPi / 9.0;
  const int a = std::abs(n);
  return ((a % 2 == 0) ? -1.0 : 1.0) / (3.0 * double(a) * double(a));
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n) {
  std::vector<double> w(static_cast<size_t>(n));
  int lwork = std::max(1, 34 * n);
  std::vector<double> work(static_cast<size_t>(lwork));
  int info = 0;
  const char jobz = 'N', uplo = 'U';
  dsyev_(&jobz, &uplo, &n, a.data(), &n, w.data(), work.data(), &lwork, &info);
  if (info != 0) throw std::runtime_error("dsyev failed to converge");
  return w;
}

}  // namespace

GalerkinMatrix build_matrix(int n_modes) {
  if (n_modes < 8) throw std::invalid_argument("build_matrix: need at least 8 modes");
  GalerkinMatrix a{n_modes, std::vector<double>(size_t(2 * n_modes) * size_t(2 * n_modes))};
  const int dim = a.dim();
  for (int i = 0; i < dim; ++i) {
    const int j = a.mode(i);
    for (int k = 0; k < dim; ++k) {
      const int l = a.mode(k);
      double v = multiplier_coeff(j - l);
      if (j == l) v -= 1.0 / (double(j) * double(j));
      a.entries[size_t(i) * size_t(dim) + size_t(k)] = v;
    }
  }
  return a;
}

SpectrumResult eigen_solve(const GalerkinMatrix& a) {
  const int n = a.n_modes;
  // Parity blocks: symmetric coefficient vectors (c_{-k} = c_k, the cosine
  // span, where w2 lives) and antisymmetric ones (the sine span, w1).
  std::vector<double> cos_block(size_t(n) * size_t(n)), sin_block(size_t(n) * size_t(n));
  for (int j = 1; j <= n; ++j) {
    for (int k = 1; k <= n; ++k) {
      const double diff = multiplier_coeff(j - k);
      const double sum = multiplier_coeff(j + k);
      double diag = (j == k) ? -1.0 / (double(j) * double(j)) : 0.0;
      cos_block[size_t(j - 1) * size_t(n) + size_t(k - 1)] = diag + diff + sum;
      sin_block[size_t(j - 1) * size_t(n) + size_t(k - 1)] = diag + diff - sum;
    }
  }
  std::vector<double> evs = symmetric_eigenvalues(std::move(cos_block), n);
  std::vector<double> odd = symmetric_eigenvalues(std::move(sin_block), n);
  evs.insert(evs.end(), odd.begin(), odd.end());
  std::sort(evs.begin(), evs.end());

  SpectrumResult r;
  r.lambda1 = evs.front();
  r.band_low = evs[1];
  r.band_high = evs.back();
  r.eigenvalues = std::move(evs);
  r.transcendental_root = transcendental_root();
  return r;
}

double transcendental_fn(double lambda) {
  if (!(lambda < 0.0)) throw std::invalid_argument("transcendental_fn: requires lambda < 0");
  const double root = std::sqrt(kPi * kPi - 6.0 * lambda);
  return (kPi * kPi + 3.0 * lambda) * std::log((root + kPi) / (root - kPi)) - 3.0 * kPi * root;
}

double transcendental_root() {
  double lo = -1.0, hi = -1e-6;
  double f_lo = transcendental_fn(lo);
  if (!(f_lo < 0.0) || !(transcendental_fn(hi) > 0.0))
    throw std::runtime_error("transcendental_root: bracket has no sign change");
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if ((transcendental_fn(mid) < 0.0) == (f_lo < 0.0))
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double zero_mean_fn(double lambda) {
  if (lambda < 0.0) {
    const double root = std::sqrt(kPi * kPi - 6.0 * lambda);
    return -0.75 + (kPi * kPi + 3.0 * lambda) / (4.0 * kPi * root) *
                       std::log((root + kPi) / (root - kPi));
  }
  if (lambda > kPi * kPi / 6.0) {
    const double root = std::sqrt(6.0 * lambda - kPi * kPi);
    return -0.75 -
           (kPi * kPi + 3.0 * lambda) / (2.0 * kPi * root) * std::atan(kPi / root);
  }
  throw std::invalid_argument("zero_mean_fn: lambda lies in the band [0, pi^2/6]");
}

Profile eigenfunction_w2(double lambda, const PeriodicGrid& grid) {
  if (!(lambda < 0.0)) throw std::invalid_argument("eigenfunction_w2: requires lambda < 0");
  const double root = std::sqrt(kPi * kPi - 6.0 * lambda);
  // root > pi, so the log argument stays positive on [-pi, pi].
  return sample(grid, [lambda, root](double z) {
    return -1.0 + z * z / (2.0 * (kPi * kPi - z * z - 6.0 * lambda)) +
           3.0 * z / (4.0 * root) * std::log((root + z) / (root - z));
  });
}

double residual_eigenpair(double lambda, const Profile& w) {
  const Profile w0 = project_zero_mean(w);
  Profile mult = w0;
  for (int j = 0; j < w0.grid.m; ++j) {
    const double z = w0.grid.node(j);
    mult.values[size_t(j)] = (kPi * kPi - z * z) * w0.values[size_t(j)] / 6.0;
  }
  mult = project_zero_mean(mult);
  const Profile dzm2 = antiderivative(antiderivative(w0));
  Profile res = w0;
  for (int j = 0; j < w0.grid.m; ++j)
    res.values[size_t(j)] =
        mult.values[size_t(j)] + dzm2.values[size_t(j)] - lambda * w0.values[size_t(j)];
  return norm_l2(res) / norm_l2(w0);
}

double galerkin_quadratic_form(const GalerkinMatrix& a, const Profile& v) {
  const FourierSeries f = dft(v);
  if (f.n_max < a.n_modes)
    throw std::invalid_argument("galerkin_quadratic_form: grid too coarse for the matrix");
  const int dim = a.dim();
  std::complex<double> q = 0.0;
  for (int i = 0; i < dim; ++i) {
    const std::complex<double> ci = std::conj(f.at(a.mode(i)));
    for (int k = 0; k < dim; ++k) q += ci * a.at(i, k) * f.at(a.mode(k));
  }
  return kTwoPi * q.real();
}

}  // namespace rosto
