#include "rosto/characteristics.hpp"
#include <algorithm>

#include <cmath>
#include <stdexcept>

namespace rosto {

namespace {

// All hyperbolic factors reduce to the decaying exponential q = e^{-pi t/3}
// after pulling out e^{pi t/6}; this form never overflows for t >= 0.
double position_stable(double s, double t) {
  const double q = std::exp(-kPi * t / 3.0);
  const double num = (s - kPi) + (s + kPi) * q;
  const double den = (kPi - s) + (kPi + s) * q;
  return kPi * num / den;
}

double jacobian_stable(double s, double t) {
  const double q = std::exp(-kPi * t / 3.0);
  const double den = (kPi - s) + (kPi + s) * q;
  return 4.0 * kPi * kPi * q / (den * den);
}

}  // namespace

double char_position(double s, double t) {
  // Z(s, -t) = -Z(-s, t) by the symmetry of dZ/dt = (Z^2 - pi^2)/6.
  if (t < 0.0) return -position_stable(-s, -t);
  return position_stable(s, t);
}

double char_inverse(double z, double t) { return char_position(z, -t); }

double char_jacobian(double s, double t) {
  if (t < 0.0) return jacobian_stable(-s, -t);
  return jacobian_stable(s, t);
}

std::vector<double> truncated_solution(const Profile& v0, double t) {
  const int m = v0.grid.m;
  const double c = std::cosh(kPi * t / 6.0);
  const double s = std::sinh(kPi * t / 6.0);
  std::vector<double> v(static_cast<size_t>(m));
  for (int j = 0; j < m; ++j) {
    const double d = kPi * c - v0.grid.node(j) * s;
    v[size_t(j)] = d * d * v0.values[size_t(j)] / (kPi * kPi);
  }
  return v;
}

TruncatedNorms truncated_norms(const Profile& v0, double t) {
  const int m = v0.grid.m;
  const double h = v0.grid.spacing();
  const double c = std::cosh(kPi * t / 6.0);
  const double s = std::sinh(kPi * t / 6.0);
  double l2sq = 0.0, l1 = 0.0, en = 0.0;
  for (int j = 0; j < m; ++j) {
    const double z = v0.grid.node(j);
    const double v = v0.values[size_t(j)];
    const double d = kPi * c - z * s;
    l2sq += d * d * v * v;
    l1 += std::abs(v);
    en += (kPi * kPi - z * z) * v * v;
  }
  return TruncatedNorms{std::sqrt(h * l2sq) / kPi, h * l1, h * en};
}

namespace {

// Cubic interpolation of the label function on [-pi, pi]. V(s, t) is not
// periodic in s once t > 0 (the transported solution keeps a jump across the
// +-pi identification), so stencils are clamped at the ends instead of
// wrapping; the last cell extrapolates from the left, which matches the
// one-sided limit the change of variables uses.
double label_interp(const PeriodicGrid& grid, const std::vector<double>& values, double s) {
  const int m = grid.m;
  const double h = grid.spacing();
  double u = (s + kPi) / h;
  u = std::clamp(u, 0.0, double(m) - 1e-12);
  int j1 = int(std::floor(u));
  j1 = std::clamp(j1, 1, m - 3);
  const double th = u - j1;
  const double v0 = values[size_t(j1 - 1)];
  const double v1 = values[size_t(j1)];
  const double v2 = values[size_t(j1 + 1)];
  const double v3 = values[size_t(j1 + 2)];
  const double w0 = -th * (th - 1.0) * (th - 2.0) / 6.0;
  const double w1 = (th + 1.0) * (th - 1.0) * (th - 2.0) / 2.0;
  const double w2 = -(th + 1.0) * th * (th - 2.0) / 2.0;
  const double w3 = (th + 1.0) * th * (th - 1.0) / 6.0;
  return w0 * v0 + w1 * v1 + w2 * v2 + w3 * v3;
}

}  // namespace

Profile pushforward(const std::vector<double>& v_labels, double t, const PeriodicGrid& grid) {
  if (int(v_labels.size()) != grid.m)
    throw std::invalid_argument("pushforward: label values length mismatch");
  std::vector<double> v(size_t(grid.m));
  for (int j = 0; j < grid.m; ++j)
    v[size_t(j)] = label_interp(grid, v_labels, char_inverse(grid.node(j), t));
  return Profile(grid, std::move(v));
}

}  // namespace rosto
