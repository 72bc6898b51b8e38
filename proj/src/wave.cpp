#include "rosto/wave.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rosto {

namespace {

// Cubic under the square root: Q(U) = 2E - c U^2 + (2/3) U^3.
double cubic_q(double c, double e, double u) { return 2.0 * e - c * u * u + (2.0 / 3.0) * u * u * u; }

struct TurningPoints {
  double u1, u2, u3;  // u1 < u2 < u3; the wave runs between u1 and u2
};

// Roots of (2/3)U^3 - cU^2 + 2E for 0 < E < c^3/6: one root below 0, one in
// (0, c), one above c. Trigonometric solution of the depressed cubic, then a
// Newton polish per root.
TurningPoints turning_points(double c, double e) {
  // U = y + c/2 removes the quadratic term: y^3 + p y + q = 0.
  const double p = -3.0 * c * c / 4.0;
  const double q = 3.0 * e - c * c * c / 4.0;
  const double r = std::sqrt(-p / 3.0);
  double arg = q / (2.0 * r * r * r);
  arg = std::clamp(arg, -1.0, 1.0);
  const double phi = std::acos(arg);
  double roots[3];
  for (int k = 0; k < 3; ++k)
    roots[k] = -2.0 * r * std::cos((phi - 2.0 * kPi * k) / 3.0) + c / 2.0;
  std::sort(roots, roots + 3);
  for (double& u : roots) {
    for (int it = 0; it < 3; ++it) {
      const double f = cubic_q(c, e, u);
      const double df = 2.0 * u * u - 2.0 * c * u;
      if (df != 0.0) u -= f / df;
    }
  }
  return TurningPoints{roots[0], roots[1], roots[2]};
}

// Half-period integrand after U = u1 + (u2 - u1) sin^2(theta):
//   dz = sqrt(6) (c - U)/sqrt(u3 - U) dtheta.
// The substitution makes the integrand smooth on [0, pi/2]; its even periodic
// extension makes the midpoint rule spectrally convergent.
double theta_integrand(double c, const TurningPoints& tp, double theta) {
  const double s2 = std::sin(theta) * std::sin(theta);
  const double u = tp.u1 + (tp.u2 - tp.u1) * s2;
  return std::sqrt(6.0) * (c - u) / std::sqrt(tp.u3 - u);
}

double half_period(double c, double e, int n = 384) {
  const TurningPoints tp = turning_points(c, e);
  const double h = (kPi / 2.0) / n;
  double sum = 0.0;
  for (int k = 0; k < n; ++k) sum += theta_integrand(c, tp, (k + 0.5) * h);
  return sum * h;
}

}  // namespace

Profile peaked_profile(const PeriodicGrid& grid) {
  return sample(grid, [](double z) { return (3.0 * z * z - kPi * kPi) / 18.0; });
}

double first_integral(const WaveParams& params, double u, double u_prime) {
  const double c = params.c;
  const double d = c - u;
  return 0.5 * d * d * u_prime * u_prime + 0.5 * c * u * u - u * u * u / 3.0;
}

SmoothWave smooth_wave_solve(double c, const PeriodicGrid& grid) {
  if (!(c > 1.0 && c < WaveConstants::c_star))
    throw std::invalid_argument("smooth_wave_solve: c must lie in (1, pi^2/9)");

  const double e_max = c * c * c / 6.0;
  const double eps = 1e-12 * c * c * c;
  double lo = eps, hi = e_max - eps;
  double f_lo = half_period(c, lo) - kPi;
  double f_hi = half_period(c, hi) - kPi;
  if (f_lo * f_hi > 0.0)
    throw std::runtime_error("smooth_wave_solve: half-period condition does not bracket");
  // T(E) runs from pi*sqrt(c) > pi down to 3*sqrt(c) < pi; bisection is safe.
  for (int it = 0; it < 200 && hi - lo > 1e-15 * e_max; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = half_period(c, mid) - kPi;
    if (f_mid == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  const double e = 0.5 * (lo + hi);
  const TurningPoints tp = turning_points(c, e);

  // z(theta) by cumulative Simpson on a fine theta grid, normalised so the
  // half period lands exactly on pi.
  const int n = 2048;
  const double ht = (kPi / 2.0) / n;
  std::vector<double> u_of(size_t(n + 1)), z_of(size_t(n + 1)), du_dz(size_t(n + 1));
  for (int k = 0; k <= n; ++k) {
    const double th = k * ht;
    const double s2 = std::sin(th) * std::sin(th);
    u_of[size_t(k)] = tp.u1 + (tp.u2 - tp.u1) * s2;
  }
  z_of[0] = 0.0;
  for (int k = 0; k < n; ++k) {
    const double a = theta_integrand(c, tp, k * ht);
    const double mid = theta_integrand(c, tp, (k + 0.5) * ht);
    const double b = theta_integrand(c, tp, (k + 1) * ht);
    z_of[size_t(k + 1)] = z_of[size_t(k)] + ht * (a + 4.0 * mid + b) / 6.0;
  }
  const double scale = kPi / z_of[size_t(n)];
  for (auto& z : z_of) z *= scale;
  for (int k = 0; k <= n; ++k) {
    const double q = std::max(0.0, cubic_q(c, e, u_of[size_t(k)]));
    du_dz[size_t(k)] = std::sqrt(q) / (c - u_of[size_t(k)]);  // exact slope, 0 at both ends
  }

  // Monotone inversion U(|z|) with cubic Hermite segments.
  const auto eval = [&](double z) -> double {
    z = std::abs(z);
    if (z >= kPi) return u_of[size_t(n)];
    const auto it = std::upper_bound(z_of.begin(), z_of.end(), z);
    size_t k = size_t(std::max<std::ptrdiff_t>(0, (it - z_of.begin()) - 1));
    if (k >= size_t(n)) k = size_t(n - 1);
    const double dz = z_of[k + 1] - z_of[k];
    const double x = (z - z_of[k]) / dz;
    const double h00 = (1.0 + 2.0 * x) * (1.0 - x) * (1.0 - x);
    const double h10 = x * (1.0 - x) * (1.0 - x);
    const double h01 = x * x * (3.0 - 2.0 * x);
    const double h11 = x * x * (x - 1.0);
    return h00 * u_of[k] + h10 * dz * du_dz[k] + h01 * u_of[k + 1] + h11 * dz * du_dz[k + 1];
  };

  std::vector<double> values(size_t(grid.m));
  for (int j = 0; j < grid.m; ++j) values[size_t(j)] = eval(grid.node(j));
  Profile profile = project_zero_mean(Profile(grid, std::move(values)));
  return SmoothWave{std::move(profile), WaveParams{c, e}};
}

Profile residual(double c, const Profile& u) {
  const Profile u0 = project_zero_mean(u);
  const Profile g = antiderivative(u0);
  const int m = u.grid.m;
  const double h = u.grid.spacing();
  const auto& v = u0.values;
  // No stencil crosses the +-pi seam, where peaked candidates lose smoothness.
  std::vector<double> r(static_cast<size_t>(m));
  for (int j = 0; j < m; ++j) {
    double du;
    if (j == 0)  // one-sided second-order stencils at the nodes touching +-pi
      du = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
    else if (j == m - 1)
      du = (3.0 * v[size_t(m - 1)] - 4.0 * v[size_t(m - 2)] + v[size_t(m - 3)]) / (2.0 * h);
    else if (j == 1 || j == m - 2)
      du = (v[size_t(j + 1)] - v[size_t(j - 1)]) / (2.0 * h);
    else
      du = (-v[size_t(j + 2)] + 8.0 * v[size_t(j + 1)] - 8.0 * v[size_t(j - 1)] +
            v[size_t(j - 2)]) /
           (12.0 * h);
    r[size_t(j)] = (c - v[size_t(j)]) * du + g.values[size_t(j)];
  }
  return Profile(u.grid, std::move(r));
}

double residual_interior_sup(double c, const Profile& u) {
  const Profile r = residual(c, u);
  double sup = 0.0;
  for (int j = 2; j <= u.grid.m - 2; ++j) sup = std::max(sup, std::abs(r.values[size_t(j)]));
  return sup;
}

double holder_exponent(const Profile& u, double c) {
  const int m = u.grid.m;
  const double h0 = u.grid.spacing();
  const int k_max = int(std::floor((kPi / 32.0) / h0));
  std::vector<double> xs, ys;
  for (int k = 8; k <= k_max; ++k) {
    const double gap = std::abs(c - u.values[size_t(m - k)]);  // node at pi - k*h0
    if (gap <= 0.0) continue;
    xs.push_back(std::log(k * h0));
    ys.push_back(std::log(gap));
  }
  if (xs.size() < 8) throw std::runtime_error("holder_exponent: fewer than 8 usable sample pairs");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = double(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

EnergyMomentum energy_momentum(const Profile& u) {
  const Profile u0 = project_zero_mean(u);
  const Profile g = antiderivative(u0);
  const double h = u.grid.spacing();
  double he = 0.0, q = 0.0;
  for (int j = 0; j < u.grid.m; ++j) {
    const double uj = u0.values[size_t(j)];
    const double gj = g.values[size_t(j)];
    he += -gj * gj - uj * uj * uj / 3.0;
    q += uj * uj;
  }
  return EnergyMomentum{h * he, h * q};
}

std::vector<PhasePlanePoint> phase_plane_data(double c, const std::vector<double>& e_levels,
                                              int scan_points) {
  if (!(c > 0.0)) throw std::invalid_argument("phase_plane_data: c must be positive");
  std::vector<PhasePlanePoint> out;
  for (double e : e_levels) {
    std::vector<double> us;
    // stay 1e-6 c below the singular line: Q(c - eps) = c eps^2 + O(eps^3)
    // must sit above the double-precision floor of the cubic's cancellation
    const double u_lo = -1.5 * c, u_hi = c - 1e-6 * c;
    for (int k = 0; k < scan_points; ++k)
      us.push_back(u_lo + (u_hi - u_lo) * k / double(scan_points - 1));
    // Turning points make the U' = 0 crossings exact in the emitted data.
    if (e > 0.0 && e <= c * c * c / 6.0) {
      const TurningPoints tp = turning_points(c, e);
      if (tp.u1 > u_lo && tp.u1 < u_hi) us.push_back(tp.u1);
      if (tp.u2 > u_lo && tp.u2 < u_hi) us.push_back(tp.u2);
    }
    if (e == 0.0) us.push_back(0.0);
    std::sort(us.begin(), us.end());
    const double tol = 1e-13 * (1.0 + c * c * c);  // roundoff floor at turning points
    for (double u : us) {
      const double q = cubic_q(c, e, u);
      if (q < -tol) continue;
      const double up = std::sqrt(std::max(0.0, q)) / (c - u);
      out.push_back(PhasePlanePoint{e, u, up, +1});
      out.push_back(PhasePlanePoint{e, u, -up, -1});
    }
  }
  return out;
}

Profile sqrt_singular_profile(double c, const PeriodicGrid& grid) {
  Profile p = sample(grid, [c](double z) {
    const double arg = std::max(0.0, kPi * kPi - z * z);
    return c * (1.0 - std::sqrt(arg) / kPi);
  });
  return project_zero_mean(p);
}

Profile tapered_peak_slope(const PeriodicGrid& grid, double delta) {
  return sample(grid, [delta](double z) {
    const double a = std::abs(z);
    double rho = 1.0;
    if (a > kPi - delta) {
      const double x = std::cos(kPi * (a - (kPi - delta)) / (2.0 * delta));
      rho = x * x;
    }
    return z / 3.0 * rho;
  });
}

}  // namespace rosto
