#pragma once

#include "rosto/periodic.hpp"

namespace rosto {

/// Characteristic position Z(s, t) of dZ/dt = (Z^2 - pi^2)/6, Z(s, 0) = s.
/// Z(+-pi, t) = +-pi exactly; interior labels drift toward -pi as t grows.
double char_position(double s, double t);

/// Inverse map: char_position(char_inverse(z, t), t) = z (flow group law).
double char_inverse(double z, double t);

/// dZ/ds = pi^2 / (pi cosh(pi t/6) - s sinh(pi t/6))^2 > 0.
double char_jacobian(double s, double t);

/// The flow frozen at one time.
struct CharMap {
  double t = 0.0;
  double position(double s) const { return char_position(s, t); }
  double inverse(double z) const { return char_inverse(z, t); }
  double jacobian(double s) const { return char_jacobian(s, t); }
};

/// Closed-form solution of the source-free linearized equation on the label
/// grid: V(s, t) = (pi cosh(pi t/6) - s sinh(pi t/6))^2 v0(s) / pi^2.
std::vector<double> truncated_solution(const Profile& v0, double t);

struct TruncatedNorms {
  double l2;      // exact change-of-variables L2 norm at time t
  double l1;      // conserved: integral of |v0|
  double energy;  // conserved: integral of (pi^2 - s^2) v0^2
};
TruncatedNorms truncated_norms(const Profile& v0, double t);

/// Physical-space view v(z, t) = V(char_inverse(z, t), t), cubic-interpolated
/// from the label grid. Loses resolution once the flow has compressed the
/// pullback labels below the grid spacing (t of order (3/pi) log m).
Profile pushforward(const std::vector<double>& v_labels, double t, const PeriodicGrid& grid);

}  // namespace rosto
