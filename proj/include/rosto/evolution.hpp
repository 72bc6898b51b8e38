#pragma once

#include "rosto/characteristics.hpp"
#include "rosto/periodic.hpp"

#include <vector>

namespace rosto {

enum class EvolveMode { truncated, full, full_no_source };

/// Perturbation values V(s_j, t) on the fixed label grid, plus the value at
/// the label s = +pi. The physical solution keeps a jump across +-pi for
/// t > 0 (v(-pi+) evolves with coefficient +pi/3, v(pi-) with -pi/3), so the
/// +pi endpoint is carried as its own degree of freedom; label-space
/// integrals then use genuine trapezoid weights over [-pi, pi].
struct EvolutionState {
  double t = 0.0;
  PeriodicGrid grid;
  std::vector<double> v_labels;
  double v_plus_pi = 0.0;
};

/// State at t = 0 from a periodic profile (v(+pi) = v(-pi)).
EvolutionState initial_state(const Profile& v0);

struct AdmissibilityFlags {
  bool odd_first_moment = false;   // |int s v0^2| small
  bool odd_second_moment = false;  // |int s^2 v0| small
  bool l1_l2_inequality = false;   // ||v0||_1 <= sqrt(pi)(1-4C^2)/(48 sqrt 2) ||v0||_2
};

struct DiagnosticsRow {
  double t;
  double l2;
  double l1;
  double linf;
  double energy_l;      // <L v, v>
  double x1_seminorm;   // ||d/dz[(pi^2 - z^2) v]||_2
  double inner_uv;      // <U*, v>
};

struct GrowthFit {
  double rate = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // rms of the log-linear fit residuals
};

struct RunDiagnostics {
  std::vector<DiagnosticsRow> series;
  GrowthFit fit;
  AdmissibilityFlags flags;
  double c_used = 0.0;  // largest C admissible for the lower bound (0 if none)
  double l2_0 = 0.0;
  bool passed_upper = false;
  bool passed_lower = false;
};

/// Odd test perturbation x (pi^2 - x^2) / (1 + a^2 x^2).
Profile example_v0(double a, const PeriodicGrid& grid);

struct ClosedFormNorms {
  double l1;
  double l2;
};
/// Closed-form L1 and L2 norms of example_v0 on [-pi, pi].
ClosedFormNorms example_v0_norms(double a);

AdmissibilityFlags check_admissible(const Profile& v0, double c_constant);

/// Largest C in (0, 1/2) for which the L1/L2 inequality holds; 0 when the
/// ratio l1/l2 exceeds sqrt(pi)/(48 sqrt 2) and no admissible C exists.
double largest_admissible_c(double l1, double l2);

/// One classical RK4 step of dV/dt = -(1/3) Z V + G on the labels. Advection
/// is exact (Z, dZ/ds are closed forms); the nonlocal source G = dz^{-1}v at
/// the characteristic positions is evaluated per stage by change of variables
/// on the label grid: the raw antiderivative is the cumulative integral of
/// V dZ/ds, and the zero-mean shift is the dZ/ds-weighted average, which
/// keeps the discrete mean of v conserved exactly.
EvolutionState step(const EvolutionState& state, double dt, bool with_source = true);

/// Run to t_final sampling every max(dt, t_final/2000). The truncated mode
/// evaluates the closed-form solution at the sample times (no stepping
/// error); full mode integrates with `step`. Aborts if l2 exceeds
/// 1e12 * l2(0). `c_constant` only feeds the reported admissibility flags.
RunDiagnostics evolve(const Profile& v0, double t_final, double dt, EvolveMode mode,
                      double c_constant = 0.25);

/// Quadratic form <L v, v> = int (c* - U*) v^2 dz - ||dz^{-1} v||_2^2 of a
/// physical-space profile.
double linear_energy(const Profile& v);

/// Least squares on log l2 over the final third of the series.
GrowthFit growth_rate_fit(const std::vector<double>& t, const std::vector<double>& l2);

/// Diagnostics of a label state (exposed for tests and the truncated mode).
DiagnosticsRow diagnose(const EvolutionState& state);

/// The scheme's conserved discrete mean of v: the trapezoid of V dZ/ds over
/// [-pi, pi] divided by 2 pi. Stays at machine precision along `step`.
double conserved_mean(const EvolutionState& state);

/// The nonlocal source G(s_j, t) = (dz^{-1} v)(Z(s_j, t)) the stepper uses,
/// on the m grid labels followed by the +pi endpoint.
std::vector<double> nonlocal_source(const EvolutionState& state);

}  // namespace rosto
