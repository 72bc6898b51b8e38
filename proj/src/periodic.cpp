#include "rosto/periodic.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <stdexcept>

namespace rosto {

namespace {

// FFTW's planner is not thread-safe; execution is.
std::mutex& fftw_mutex() {
  static std::mutex m;
  return m;
}

// Forward half-complex spectrum a_k = (1/m) sum_j v_j e^{-2 pi i j k / m},
// k = 0..m/2.
std::vector<std::complex<double>> half_spectrum(const std::vector<double>& v) {
  const int m = int(v.size());
  std::vector<double> in(v);
  std::vector<std::complex<double>> out(size_t(m / 2 + 1));
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(fftw_mutex());
    plan = fftw_plan_dft_r2c_1d(m, in.data(), reinterpret_cast<fftw_complex*>(out.data()),
                                FFTW_ESTIMATE);
  }
  // The planner may overwrite `in`; restore before executing.
  std::copy(v.begin(), v.end(), in.begin());
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(fftw_mutex());
    fftw_destroy_plan(plan);
  }
  for (auto& c : out) c /= double(m);
  return out;
}

std::vector<double> from_half_spectrum(std::vector<std::complex<double>> half, int m) {
  for (auto& c : half) c *= double(m);
  std::vector<double> out(static_cast<size_t>(m));
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(fftw_mutex());
    plan = fftw_plan_dft_c2r_1d(m, reinterpret_cast<fftw_complex*>(half.data()), out.data(),
                                FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(fftw_mutex());
    fftw_destroy_plan(plan);
  }
  for (auto& x : out) x /= double(m);
  return out;
}

}  // namespace

PeriodicGrid::PeriodicGrid(int m_) : m(m_) {
  if (m < 4 || m % 2 != 0) throw std::invalid_argument("PeriodicGrid: m must be even and >= 4");
}

std::vector<double> PeriodicGrid::nodes() const {
  std::vector<double> z(static_cast<size_t>(m));
  for (int j = 0; j < m; ++j) z[size_t(j)] = node(j);
  return z;
}

Profile::Profile(PeriodicGrid g, std::vector<double> v) : grid(g), values(std::move(v)) {
  if (int(values.size()) != grid.m)
    throw std::invalid_argument("Profile: values length must equal grid.m");
}

double Profile::mean() const {
  double s = 0.0;
  for (double v : values) s += v;
  return s / double(grid.m);
}

double Profile::max_abs() const {
  double s = 0.0;
  for (double v : values) s = std::max(s, std::abs(v));
  return s;
}

bool Profile::is_zero_mean(double rel) const { return std::abs(mean()) <= rel * (1.0 + max_abs()); }

FourierSeries::FourierSeries(int n_max_) : n_max(n_max_), coeffs(size_t(2 * n_max_ + 1)) {
  if (n_max_ < 0) throw std::invalid_argument("FourierSeries: n_max must be >= 0");
}

Profile sample(const PeriodicGrid& grid, const std::function<double(double)>& f) {
  std::vector<double> v(size_t(grid.m));
  for (int j = 0; j < grid.m; ++j) v[size_t(j)] = f(grid.node(j));
  return Profile(grid, std::move(v));
}

Profile project_zero_mean(const Profile& p) {
  const double mu = p.mean();
  std::vector<double> v(p.values);
  for (double& x : v) x -= mu;
  return Profile(p.grid, std::move(v));
}

Profile antiderivative(const Profile& p, double rel_tol) {
  if (!p.is_zero_mean(rel_tol))
    throw std::invalid_argument("antiderivative: input is not zero-mean");
  const int m = p.grid.m;
  auto half = half_spectrum(p.values);
  half[0] = 0.0;
  for (int k = 1; k < m / 2; ++k) half[size_t(k)] /= std::complex<double>(0.0, double(k));
  half[size_t(m / 2)] = 0.0;  // antiderivative drops the Nyquist mode
  return Profile(p.grid, from_half_spectrum(std::move(half), m));
}

Profile derivative(const Profile& p) {
  const int m = p.grid.m;
  auto half = half_spectrum(p.values);
  for (int k = 0; k <= m / 2; ++k) {
    if (k == m / 2)
      half[size_t(k)] = 0.0;
    else
      half[size_t(k)] *= std::complex<double>(0.0, double(k));
  }
  return Profile(p.grid, from_half_spectrum(std::move(half), m));
}

FourierSeries dft(const Profile& p, int n_max) {
  const int m = p.grid.m;
  if (n_max < 0) n_max = m / 2 - 1;
  if (n_max > m / 2 - 1) throw std::invalid_argument("dft: cutoff exceeds the Nyquist limit");
  auto half = half_spectrum(p.values);
  FourierSeries f(n_max);
  for (int n = 0; n <= n_max; ++n) {
    // Nodes start at -pi, not 0; the shift contributes (-1)^n per mode.
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    f.at(n) = sign * half[size_t(n)];
    f.at(-n) = std::conj(f.at(n));
  }
  return f;
}

Profile idft(const FourierSeries& f, const PeriodicGrid& grid) {
  const int m = grid.m;
  if (f.n_max > m / 2 - 1) throw std::invalid_argument("idft: cutoff exceeds the Nyquist limit");
  std::vector<std::complex<double>> half(size_t(m / 2 + 1), 0.0);
  for (int n = 0; n <= f.n_max; ++n) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    half[size_t(n)] = sign * f.at(n);
  }
  // c2r assumes conjugate symmetry, which encodes coeffs at -n.
  return Profile(grid, from_half_spectrum(std::move(half), m));
}

double norm_l1(const Profile& p) {
  double s = 0.0;
  for (double v : p.values) s += std::abs(v);
  return s * p.grid.spacing();
}

double norm_l2(const Profile& p) {
  double s = 0.0;
  for (double v : p.values) s += v * v;
  return std::sqrt(s * p.grid.spacing());
}

double norm_linf(const Profile& p) { return p.max_abs(); }

double inner(const Profile& a, const Profile& b) {
  if (!(a.grid == b.grid)) throw std::invalid_argument("inner: grids differ");
  double s = 0.0;
  for (int j = 0; j < a.grid.m; ++j) s += a.values[size_t(j)] * b.values[size_t(j)];
  return s * a.grid.spacing();
}

double interp(const PeriodicGrid& grid, const std::vector<double>& values, double x) {
  if (int(values.size()) != grid.m) throw std::invalid_argument("interp: values length mismatch");
  const int m = grid.m;
  const double h = grid.spacing();
  double u = (x + kPi) / h;
  u -= std::floor(u / m) * m;  // wrap into [0, m)
  int j1 = int(std::floor(u));
  if (j1 >= m) j1 -= m;
  const double th = u - j1;
  const auto wrap = [m](int j) { return ((j % m) + m) % m; };
  const double v0 = values[size_t(wrap(j1 - 1))];
  const double v1 = values[size_t(wrap(j1))];
  const double v2 = values[size_t(wrap(j1 + 1))];
  const double v3 = values[size_t(wrap(j1 + 2))];
  // Equispaced 4-point Lagrange weights in th over [0, 1].
  const double w0 = -th * (th - 1.0) * (th - 2.0) / 6.0;
  const double w1 = (th + 1.0) * (th - 1.0) * (th - 2.0) / 2.0;
  const double w2 = -(th + 1.0) * th * (th - 2.0) / 2.0;
  const double w3 = (th + 1.0) * th * (th - 1.0) / 6.0;
  return w0 * v0 + w1 * v1 + w2 * v2 + w3 * v3;
}

double interp(const Profile& p, double x) { return interp(p.grid, p.values, x); }

void write_profile_csv(const Profile& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "z,value\n";
  char buf[128];
  for (int j = 0; j < p.grid.m; ++j) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", p.grid.node(j), p.values[size_t(j)]);
    out << buf;
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace rosto
