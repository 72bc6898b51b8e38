#include "rosto/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rosto {

namespace {

// Fourth-order cumulative integral of samples on a uniform grid, W_0 = 0.
// Interior intervals use the centered four-point rule, the two end intervals
// its one-sided mirror.
std::vector<double> cumulative_integral(const std::vector<double>& f, double h) {
  const size_t m = f.size();
  std::vector<double> w(m);
  w[0] = 0.0;
  if (m < 4) {
    for (size_t j = 0; j + 1 < m; ++j) w[j + 1] = w[j] + 0.5 * h * (f[j] + f[j + 1]);
    return w;
  }
  w[1] = w[0] + h * (9.0 * f[0] + 19.0 * f[1] - 5.0 * f[2] + f[3]) / 24.0;
  for (size_t j = 1; j + 2 < m; ++j)
    w[j + 1] = w[j] + h * (-f[j - 1] + 13.0 * f[j] + 13.0 * f[j + 1] - f[j + 2]) / 24.0;
  w[m - 1] = w[m - 2] + h * (9.0 * f[m - 1] + 19.0 * f[m - 2] - 5.0 * f[m - 3] + f[m - 4]) / 24.0;
  return w;
}

// Internally the state is the m grid labels plus the +pi endpoint: m+1
// samples of V on [-pi, pi]. Label-space integrals are genuine trapezoid
// sums (half weights at both ends); the integrands jump across +-pi for
// t > 0, so periodic quadrature would be first-order wrong.
struct FlowSlice {
  std::vector<double> z;   // Z(s_j, t), j = 0..m (s_m = +pi)
  std::vector<double> zs;  // dZ/ds(s_j, t)
};

// Same closed forms as char_position/char_jacobian with the shared
// exponential hoisted out of the node loop (the stepper calls this a lot).
FlowSlice flow_slice(const PeriodicGrid& grid, double t) {
  const size_t n = size_t(grid.m) + 1;
  FlowSlice f;
  f.z.resize(n);
  f.zs.resize(n);
  const double q = std::exp(-kPi * std::abs(t) / 3.0);
  for (size_t j = 0; j < n; ++j) {
    double s = (j == n - 1) ? kPi : grid.node(int(j));
    const double sign = (t < 0.0) ? -1.0 : 1.0;
    s *= sign;
    const double den = (kPi - s) + (kPi + s) * q;
    f.z[j] = sign * kPi * ((s - kPi) + (s + kPi) * q) / den;
    f.zs[j] = 4.0 * kPi * kPi * q / (den * den);
  }
  return f;
}

double trapezoid(const std::vector<double>& f, double h) {
  double s = 0.5 * (f.front() + f.back());
  for (size_t j = 1; j + 1 < f.size(); ++j) s += f[j];
  return s * h;
}

// Source G(s_j) = g(Z(s_j)) with g = dz^{-1} v: the raw antiderivative in
// physical coordinates is W(s) = int_{-pi}^{s} V dZ/ds' ds', and subtracting
// the dZ/ds-weighted average of W makes g zero-mean. Using the same discrete
// weights for W's average and for the mean of v makes the trapezoid sum of
// G dZ/ds vanish exactly, so the scheme conserves the discrete mean of v.
std::vector<double> source_at_labels(const std::vector<double>& v, const FlowSlice& flow,
                                     double h) {
  const size_t n = v.size();
  std::vector<double> f(n), wzs(n);
  for (size_t j = 0; j < n; ++j) f[j] = v[j] * flow.zs[j];
  std::vector<double> w = cumulative_integral(f, h);
  for (size_t j = 0; j < n; ++j) wzs[j] = w[j] * flow.zs[j];
  const double gbar = trapezoid(wzs, h) / trapezoid(flow.zs, h);
  for (size_t j = 0; j < n; ++j) w[j] -= gbar;
  return w;
}

std::vector<double> stage_derivative(const std::vector<double>& v, const FlowSlice& flow,
                                     double h, bool with_source) {
  std::vector<double> dv(v.size());
  if (with_source) {
    const std::vector<double> g = source_at_labels(v, flow, h);
    for (size_t j = 0; j < v.size(); ++j) dv[j] = -flow.z[j] * v[j] / 3.0 + g[j];
  } else {
    for (size_t j = 0; j < v.size(); ++j) dv[j] = -flow.z[j] * v[j] / 3.0;
  }
  return dv;
}

std::vector<double> pack(const EvolutionState& state) {
  std::vector<double> v = state.v_labels;
  v.push_back(state.v_plus_pi);
  return v;
}

double peaked_value(double z) { return (3.0 * z * z - kPi * kPi) / 18.0; }

}  // namespace

EvolutionState initial_state(const Profile& v0) {
  return EvolutionState{0.0, v0.grid, v0.values, v0.values.front()};
}

Profile example_v0(double a, const PeriodicGrid& grid) {
  if (!(a > 0.0)) throw std::invalid_argument("example_v0: a must be positive");
  return sample(grid, [a](double x) {
    return x * (kPi * kPi - x * x) / (1.0 + a * a * x * x);
  });
}

ClosedFormNorms example_v0_norms(double a) {
  if (!(a > 0.0)) throw std::invalid_argument("example_v0_norms: a must be positive");
  const double p2 = kPi * kPi;
  const double a2 = a * a;
  const double l1 = (p2 / a2 + 1.0 / (a2 * a2)) * std::log(1.0 + p2 * a2) - p2 / a2;
  const double l2sq =
      ((p2 * p2 + 6.0 * p2 / a2 + 5.0 / (a2 * a2)) * std::atan(kPi * a) -
       kPi * (15.0 + 13.0 * p2 * a2) / (3.0 * a2 * a)) /
      (a2 * a);
  return ClosedFormNorms{l1, std::sqrt(l2sq)};
}

AdmissibilityFlags check_admissible(const Profile& v0, double c_constant) {
  if (!(c_constant > 0.0 && c_constant < 0.5))
    throw std::invalid_argument("check_admissible: C must lie in (0, 1/2)");
  const double h = v0.grid.spacing();
  double s_moment = 0.0, s2_moment = 0.0;
  for (int j = 0; j < v0.grid.m; ++j) {
    const double s = v0.grid.node(j);
    const double v = v0.values[size_t(j)];
    s_moment += s * v * v;
    s2_moment += s * s * v;
  }
  s_moment *= h;
  s2_moment *= h;
  const double l1 = norm_l1(v0);
  const double l2 = norm_l2(v0);
  AdmissibilityFlags flags;
  flags.odd_first_moment = std::abs(s_moment) <= 1e-8 * l2 * l2;
  flags.odd_second_moment = std::abs(s2_moment) <= 1e-8 * l2 * kPi * kPi;
  const double bound = std::sqrt(kPi) * (1.0 - 4.0 * c_constant * c_constant) / (48.0 * std::sqrt(2.0));
  flags.l1_l2_inequality = l1 <= bound * l2;
  return flags;
}

double largest_admissible_c(double l1, double l2) {
  const double r_max = std::sqrt(kPi) / (48.0 * std::sqrt(2.0));
  const double c_sq = 0.25 * (1.0 - (l1 / l2) / r_max);
  return c_sq > 0.0 ? std::sqrt(c_sq) : 0.0;
}

EvolutionState step(const EvolutionState& state, double dt, bool with_source) {
  if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be positive");
  const std::vector<double> v = pack(state);
  const size_t n = v.size();
  const double h = state.grid.spacing();
  const FlowSlice flow_a = flow_slice(state.grid, state.t);
  const FlowSlice flow_b = flow_slice(state.grid, state.t + 0.5 * dt);
  const FlowSlice flow_c = flow_slice(state.grid, state.t + dt);
  const std::vector<double> k1 = stage_derivative(v, flow_a, h, with_source);
  std::vector<double> tmp(n);
  for (size_t j = 0; j < n; ++j) tmp[j] = v[j] + 0.5 * dt * k1[j];
  const std::vector<double> k2 = stage_derivative(tmp, flow_b, h, with_source);
  for (size_t j = 0; j < n; ++j) tmp[j] = v[j] + 0.5 * dt * k2[j];
  const std::vector<double> k3 = stage_derivative(tmp, flow_b, h, with_source);
  for (size_t j = 0; j < n; ++j) tmp[j] = v[j] + dt * k3[j];
  const std::vector<double> k4 = stage_derivative(tmp, flow_c, h, with_source);
  std::vector<double> out(n);
  for (size_t j = 0; j < n; ++j)
    out[j] = v[j] + dt / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
  const double v_end = out.back();
  out.pop_back();
  return EvolutionState{state.t + dt, state.grid, std::move(out), v_end};
}

DiagnosticsRow diagnose(const EvolutionState& state) {
  const PeriodicGrid& grid = state.grid;
  const double h = grid.spacing();
  const FlowSlice flow = flow_slice(grid, state.t);
  const std::vector<double> v = pack(state);
  const size_t n = v.size();

  const std::vector<double> g = source_at_labels(v, flow, h);

  std::vector<double> f_l2(n), f_l1(n), f_mult(n), f_gsq(n), f_uv(n);
  double linf = 0.0;
  for (size_t j = 0; j < n; ++j) {
    const double z = flow.z[j];
    const double w = v[j] * v[j] * flow.zs[j];
    f_l2[j] = w;
    f_l1[j] = std::abs(v[j]) * flow.zs[j];
    linf = std::max(linf, std::abs(v[j]));
    f_mult[j] = (kPi * kPi - z * z) / 6.0 * w;
    f_gsq[j] = g[j] * g[j] * flow.zs[j];
    f_uv[j] = peaked_value(z) * v[j] * flow.zs[j];
  }

  // ||d/dz[(pi^2 - z^2) v]||_2 via d/ds of (pi^2 - Z^2) V over dZ/ds.
  std::vector<double> psi(n), f_x1(n);
  for (size_t j = 0; j < n; ++j) psi[j] = (kPi * kPi - flow.z[j] * flow.z[j]) * v[j];
  for (size_t j = 0; j < n; ++j) {
    double dpsi;
    if (j == 0)
      dpsi = (psi[1] - psi[0]) / h;
    else if (j == n - 1)
      dpsi = (psi[n - 1] - psi[n - 2]) / h;
    else
      dpsi = (psi[j + 1] - psi[j - 1]) / (2.0 * h);
    f_x1[j] = dpsi * dpsi / flow.zs[j];
  }

  DiagnosticsRow row;
  row.t = state.t;
  row.l2 = std::sqrt(trapezoid(f_l2, h));
  row.l1 = trapezoid(f_l1, h);
  row.linf = linf;
  row.energy_l = trapezoid(f_mult, h) - trapezoid(f_gsq, h);
  row.x1_seminorm = std::sqrt(trapezoid(f_x1, h));
  row.inner_uv = trapezoid(f_uv, h);
  return row;
}

double conserved_mean(const EvolutionState& state) {
  const FlowSlice flow = flow_slice(state.grid, state.t);
  const std::vector<double> v = pack(state);
  std::vector<double> f(v.size());
  for (size_t j = 0; j < v.size(); ++j) f[j] = v[j] * flow.zs[j];
  return trapezoid(f, state.grid.spacing()) / kTwoPi;
}

std::vector<double> nonlocal_source(const EvolutionState& state) {
  const FlowSlice flow = flow_slice(state.grid, state.t);
  return source_at_labels(pack(state), flow, state.grid.spacing());
}

RunDiagnostics evolve(const Profile& v0, double t_final, double dt, EvolveMode mode,
                      double c_constant) {
  if (!v0.is_zero_mean(1e-9)) throw std::invalid_argument("evolve: v0 must be zero-mean");
  if (!(t_final > 0.0)) throw std::invalid_argument("evolve: t_final must be positive");
  if (!(dt > 0.0 && dt <= 0.01)) throw std::invalid_argument("evolve: require 0 < dt <= 0.01");

  RunDiagnostics run;
  run.flags = check_admissible(v0, c_constant);
  run.c_used = largest_admissible_c(norm_l1(v0), norm_l2(v0));

  const double sample_dt = std::max(dt, t_final / 2000.0);
  const int sample_every = std::max(1, int(std::lround(sample_dt / dt)));
  const long n_steps = std::lround(t_final / dt);

  EvolutionState state = initial_state(v0);
  run.series.push_back(diagnose(state));
  run.l2_0 = run.series.front().l2;

  if (mode == EvolveMode::truncated) {
    const long n_samples = std::lround(t_final / sample_dt);
    for (long k = 1; k <= n_samples; ++k) {
      state.t = k * sample_dt;
      state.v_labels = truncated_solution(v0, state.t);
      // closed form at the +pi endpoint: prefactor e^{-pi t/3}
      state.v_plus_pi = std::exp(-kPi * state.t / 3.0) * v0.values.front();
      run.series.push_back(diagnose(state));
    }
  } else {
    const bool with_source = (mode == EvolveMode::full);
    for (long k = 1; k <= n_steps; ++k) {
      state = step(state, dt, with_source);
      if (k % sample_every == 0 || k == n_steps) {
        DiagnosticsRow row = diagnose(state);
        if (row.l2 > 1e12 * run.l2_0)
          throw std::runtime_error("evolve: L2 norm exceeded 1e12 of its initial value");
        if (std::abs(conserved_mean(state)) > 1e-6 * (1.0 + row.linf))
          throw std::runtime_error("evolve: the conserved mean of v drifted");
        run.series.push_back(row);
      }
    }
  }

  std::vector<double> ts, l2s;
  for (const auto& row : run.series) {
    ts.push_back(row.t);
    l2s.push_back(row.l2);
  }
  try {
    run.fit = growth_rate_fit(ts, l2s);
  } catch (const std::invalid_argument&) {
    run.fit = GrowthFit{};  // short or degenerate series go unfitted
  }

  run.passed_upper = true;
  run.passed_lower = true;
  for (const auto& row : run.series) {
    if (row.t <= 0.0) continue;
    const double envelope = std::exp(kPi * row.t / 6.0) * run.l2_0;
    if (row.l2 > envelope * (1.0 + 1e-3)) run.passed_upper = false;
    if (row.l2 < run.c_used * envelope) run.passed_lower = false;
  }
  return run;
}

double linear_energy(const Profile& v) {
  const Profile v0 = project_zero_mean(v);
  const Profile g = antiderivative(v0);
  const double h = v0.grid.spacing();
  double mult = 0.0, gsq = 0.0;
  for (int j = 0; j < v0.grid.m; ++j) {
    const double z = v0.grid.node(j);
    const double vj = v0.values[size_t(j)];
    mult += (kPi * kPi - z * z) / 6.0 * vj * vj;
    gsq += g.values[size_t(j)] * g.values[size_t(j)];
  }
  // Euler-Maclaurin endpoint correction: the periodized multiplier has a
  // slope jump of -(2 pi/3) v^2 at +-pi, which otherwise caps the trapezoid
  // at second order even for smooth v.
  const double v_end = v0.values.front();
  const double correction = h * h * kPi / 18.0 * v_end * v_end;
  return h * (mult - gsq) + correction;
}

GrowthFit growth_rate_fit(const std::vector<double>& t, const std::vector<double>& l2) {
  if (t.size() != l2.size()) throw std::invalid_argument("growth_rate_fit: length mismatch");
  if (t.empty()) throw std::invalid_argument("growth_rate_fit: empty series");
  const double t_lo = t.back() - (t.back() - t.front()) / 3.0;
  std::vector<double> xs, ys;
  for (size_t i = 0; i < t.size(); ++i) {
    if (t[i] < t_lo) continue;
    if (!(l2[i] > 0.0)) throw std::invalid_argument("growth_rate_fit: non-positive norm in window");
    xs.push_back(t[i]);
    ys.push_back(std::log(l2[i]));
  }
  if (xs.size() < 20) throw std::invalid_argument("growth_rate_fit: fewer than 20 samples in window");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = double(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  GrowthFit fit;
  fit.rate = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.intercept = (sy - fit.rate * sx) / n;
  double ss = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.intercept + fit.rate * xs[i]);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);
  return fit;
}

}  // namespace rosto
