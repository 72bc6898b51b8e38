#pragma once

#include "rosto/periodic.hpp"

#include <vector>

namespace rosto {

/// Wave speed and first-integral level identifying a travelling-wave orbit.
struct WaveParams {
  double c;
  double e_level;
};

/// Constants attached to the peaked parabolic wave.
struct WaveConstants {
  static constexpr double c_star = kPi * kPi / 9.0;
  static constexpr double band_edge = kPi * kPi / 6.0;
  static constexpr double growth_rate = kPi / 6.0;
  static constexpr double peak_slope = kPi / 3.0;
  static double peak_angle() { return kPi - 2.0 * std::atan(kPi / 3.0); }
  static constexpr double e_peaked = c_star * c_star * c_star / 6.0;  // pi^6/4374
};

/// Samples of U*(z) = (3 z^2 - pi^2)/18, the peaked wave with speed c*.
/// Values are pointwise exact; the discrete trapezoid mean is pi^2/(9 m^2)
/// (the derivative jump at +-pi caps the quadrature at second order), so
/// callers needing an exactly zero-mean profile apply project_zero_mean.
Profile peaked_profile(const PeriodicGrid& grid);

/// First-order invariant E = (1/2)(c-u)^2 u'^2 + (c/2) u^2 - u^3/3.
double first_integral(const WaveParams& params, double u, double u_prime);

struct SmoothWave {
  Profile profile;
  WaveParams params;
};

/// Construct the smooth single-lobe wave of speed c in (1, c*): the level E
/// is located by bisection on the half-period condition
///   int_{Umin}^{Umax} (c-U)/sqrt(2E - cU^2 + (2/3)U^3) dU = pi,
/// then z(U) is rebuilt by quadrature on the sin^2-substituted integrand and
/// inverted onto the grid with monotone cubic Hermite segments.
SmoothWave smooth_wave_solve(double c, const PeriodicGrid& grid);

/// Samples of (c - U)U' + dz^{-1}U with centered differences on interior
/// nodes and one-sided differences at the nodes touching +-pi.
Profile residual(double c, const Profile& u);

/// Sup of |residual| over nodes excluding the peak node and its neighbours,
/// the convention used for peaked profiles whose derivative jumps at +-pi.
double residual_interior_sup(double c, const Profile& u);

/// Least-squares slope of log|c - u(pi - h)| against log h, sampled at node
/// offsets h = k*(2pi/m) for 8 <= k <= floor(pi/32 / (2pi/m)). Throws when
/// fewer than 8 usable pairs exist.
double holder_exponent(const Profile& u, double c);

struct EnergyMomentum {
  double h;  // -int[(dz^{-1}u)^2 + u^3/3]
  double q;  // int u^2
};
EnergyMomentum energy_momentum(const Profile& u);

struct PhasePlanePoint {
  double e;
  double u;
  double u_prime;
  int branch;  // +1 upper, -1 lower
};

/// Level-curve data of the first-order invariant: both branches
/// U' = +-sqrt(max(0, 2E - cU^2 + (2/3)U^3))/(c - U) on a U-scan below U = c.
std::vector<PhasePlanePoint> phase_plane_data(double c, const std::vector<double>& e_levels,
                                              int scan_points = 512);

/// Mean-corrected samples of c(1 - sqrt(pi^2 - z^2)/pi): the square-root
/// peak shape that the travelling-wave equation rejects. Used as a negative
/// control for residual and Hölder diagnostics.
Profile sqrt_singular_profile(double c, const PeriodicGrid& grid);

/// dU*/dz = z/3 with a cosine taper to zero on |z| > pi - delta. The
/// translation direction of the peaked wave, smoothed across its jump at
/// +-pi; an approximate kernel direction of the Hessian operator.
Profile tapered_peak_slope(const PeriodicGrid& grid, double delta = 0.05);

}  // namespace rosto
