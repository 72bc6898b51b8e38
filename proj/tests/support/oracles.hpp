#pragma once

// Independent quadrature and helper oracles used to freeze expected values.
// These stay deliberately separate from the library's own integration paths.

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "rosto/periodic.hpp"

namespace oracles {

inline double adaptive_simpson_impl(const std::function<double(double)>& f, double a, double b,
                                    double fa, double fm, double fb, double whole, double tol,
                                    int depth) {
  const double m = 0.5 * (a + b);
  const double flm = f(0.5 * (a + m)), frm = f(0.5 * (m + b));
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson_impl(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         adaptive_simpson_impl(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson_impl(f, a, b, fa, fm, fb, whole, tol, 48);
}

/// Zero-mean band-limited profile with O(1/n) mode amplitudes.
inline rosto::Profile random_profile(const rosto::PeriodicGrid& grid, std::mt19937_64& rng,
                                     int n_modes) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::vector<double> ac(size_t(n_modes) + 1), as(size_t(n_modes) + 1);
  for (int n = 1; n <= n_modes; ++n) {
    ac[size_t(n)] = coeff(rng) / n;
    as[size_t(n)] = coeff(rng) / n;
  }
  return rosto::sample(grid, [&](double z) {
    double v = 0.0;
    for (int n = 1; n <= n_modes; ++n)
      v += ac[size_t(n)] * std::cos(n * z) + as[size_t(n)] * std::sin(n * z);
    return v;
  });
}

}  // namespace oracles
