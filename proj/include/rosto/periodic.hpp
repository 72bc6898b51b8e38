#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace rosto {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Uniform grid z_j = -pi + 2*pi*j/m, j = 0..m-1. The +pi endpoint is not
/// stored; by 2*pi-periodicity its value is the value at -pi.
struct PeriodicGrid {
  int m;

  explicit PeriodicGrid(int m_);  // requires m >= 4 and m even

  double spacing() const { return kTwoPi / m; }
  double node(int j) const { return -kPi + kTwoPi * j / m; }
  std::vector<double> nodes() const;

  bool operator==(const PeriodicGrid&) const = default;
};

/// Real samples of a 2*pi-periodic function on a PeriodicGrid.
struct Profile {
  PeriodicGrid grid;
  std::vector<double> values;

  Profile(PeriodicGrid g, std::vector<double> v);

  /// Trapezoid mean; on a periodic uniform grid this is the plain average.
  double mean() const;
  double max_abs() const;
  /// |mean| <= rel * (1 + max|values|)
  bool is_zero_mean(double rel = 1e-12) const;
};

/// Exponential-basis Fourier coefficients for modes -n_max..n_max.
struct FourierSeries {
  int n_max = 0;
  std::vector<std::complex<double>> coeffs;  // index n + n_max

  FourierSeries() = default;
  explicit FourierSeries(int n_max_);

  std::complex<double>& at(int n) { return coeffs[size_t(n + n_max)]; }
  const std::complex<double>& at(int n) const { return coeffs[size_t(n + n_max)]; }
};

Profile sample(const PeriodicGrid& grid, const std::function<double(double)>& f);

/// Subtract the discrete mean (the projection P0 onto zero-mean functions).
Profile project_zero_mean(const Profile& p);

/// Zero-mean antiderivative: mode n maps to coeff/(i n), mode 0 (and the
/// Nyquist mode) to zero. Rejects input whose discrete mean exceeds
/// rel_tol * (1 + max|values|).
Profile antiderivative(const Profile& p, double rel_tol = 1e-12);

/// Fourier derivative (mode n maps to i n * coeff, Nyquist dropped).
Profile derivative(const Profile& p);

/// DFT to exponential coefficients. Default cutoff is the largest valid one,
/// m/2 - 1. Throws if n_max exceeds the Nyquist limit.
FourierSeries dft(const Profile& p, int n_max = -1);
Profile idft(const FourierSeries& f, const PeriodicGrid& grid);

double norm_l1(const Profile& p);
double norm_l2(const Profile& p);
double norm_linf(const Profile& p);

/// Trapezoid inner product over [-pi, pi].
double inner(const Profile& a, const Profile& b);

/// Periodic cubic (4-point Lagrange) interpolation; exact at nodes.
double interp(const Profile& p, double x);
double interp(const PeriodicGrid& grid, const std::vector<double>& values, double x);

/// CSV with header `z,value`, 17 significant digits per entry.
void write_profile_csv(const Profile& p, const std::string& path);

}  // namespace rosto
