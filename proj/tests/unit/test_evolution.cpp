#include "doctest.h"

#include "rosto/evolution.hpp"
#include "rosto/wave.hpp"
#include "support/oracles.hpp"

#include <cmath>

using namespace rosto;

TEST_CASE("example datum: roots, oddness, closed-form L1") {
  const PeriodicGrid g(8192);
  const Profile v0 = example_v0(20.0, g);
  CHECK(v0.values[size_t(g.m / 2)] == 0.0);  // x = 0
  CHECK(v0.values[0] == 0.0);                // x = -pi
  for (int j = 1; j < g.m; ++j)
    CHECK(v0.values[size_t(j)] == doctest::Approx(-v0.values[size_t(g.m - j)]).epsilon(1e-14));
  CHECK(std::abs(v0.mean()) <= 1e-12);
  const ClosedFormNorms cf = example_v0_norms(20.0);
  CHECK(norm_l1(v0) == doctest::Approx(cf.l1).epsilon(1e-4));
  CHECK_THROWS_AS(example_v0(0.0, g), std::invalid_argument);
  CHECK_THROWS_AS(example_v0_norms(-1.0), std::invalid_argument);
}

TEST_CASE("closed-form norms against quadrature and their large-a scalings") {
  const PeriodicGrid g(8192);
  for (double a : {1.0, 20.0, 100.0}) {
    const Profile v0 = example_v0(a, g);
    const ClosedFormNorms cf = example_v0_norms(a);
    CHECK(norm_l1(v0) == doctest::Approx(cf.l1).epsilon(1e-4));
    CHECK(norm_l2(v0) == doctest::Approx(cf.l2).epsilon(1e-4));
  }
  const ClosedFormNorms n2 = example_v0_norms(1e2);
  const ClosedFormNorms n3 = example_v0_norms(1e3);
  const double r2 = n2.l1 * 1e4 / std::log(1e4);
  const double r3 = n3.l1 * 1e6 / std::log(1e6);
  CHECK(r3 <= r2);             // L1 ~ log(a)/a^2: the scaled value stays bounded
  CHECK(r3 >= kPi * kPi * 0.9);
  const double c_lim = std::sqrt(std::pow(kPi, 4) * kPi / 2.0);
  CHECK(n2.l2 * std::pow(1e2, 1.5) == doctest::Approx(c_lim).epsilon(1e-2));
  CHECK(n3.l2 * std::pow(1e3, 1.5) == doctest::Approx(c_lim).epsilon(1e-2));
}

TEST_CASE("admissibility: odd moments pass, the L1/L2 inequality is very restrictive") {
  const PeriodicGrid g(4096);
  const AdmissibilityFlags f20 = check_admissible(example_v0(20.0, g), 0.25);
  CHECK(f20.odd_first_moment);
  CHECK(f20.odd_second_moment);
  CHECK_FALSE(f20.l1_l2_inequality);

  const AdmissibilityFlags f100 = check_admissible(example_v0(100.0, g), 0.25);
  CHECK_FALSE(f100.l1_l2_inequality);  // ratio 0.843 vs threshold 0.0196

  const AdmissibilityFlags fsin =
      check_admissible(sample(g, [](double z) { return std::sin(z); }), 0.25);
  CHECK(fsin.odd_first_moment);
  CHECK(fsin.odd_second_moment);
  CHECK_FALSE(fsin.l1_l2_inequality);  // ||sin||_1/||sin||_2 = 4/sqrt(pi) >> 0.0196

  CHECK_THROWS_AS(check_admissible(example_v0(20.0, g), 0.5), std::invalid_argument);
  CHECK_THROWS_AS(check_admissible(example_v0(20.0, g), -0.1), std::invalid_argument);

  CHECK(largest_admissible_c(norm_l1(example_v0(20.0, g)), norm_l2(example_v0(20.0, g))) == 0.0);
  const ClosedFormNorms big = example_v0_norms(1e6);
  const double c_big = largest_admissible_c(big.l1, big.l2);
  CHECK(c_big > 0.0);
  CHECK(c_big < 0.5);
}

TEST_CASE("a single source-free step reproduces the closed form at fifth order") {
  const PeriodicGrid g(512);
  const Profile v0 = example_v0(20.0, g);
  const auto local_error = [&](double dt) {
    const EvolutionState next = step(initial_state(v0), dt, /*with_source=*/false);
    const std::vector<double> exact = truncated_solution(v0, dt);
    double err = 0.0;
    for (int j = 0; j < g.m; ++j)
      err = std::max(err, std::abs(next.v_labels[size_t(j)] - exact[size_t(j)]));
    return err;
  };
  // order fit over a dt range where the error sits well above roundoff
  const double e1 = local_error(0.32), e2 = local_error(0.16), e3 = local_error(0.08),
               e4 = local_error(0.04);
  const double order = std::log2(e1 / e2 + 1e-300);
  CHECK(order >= 4.0);
  CHECK(std::log2(e2 / e3) >= 4.0);
  CHECK(std::log2(e3 / e4) >= 4.0);
  // production-size steps land at (or below) double-precision floors
  CHECK(local_error(1e-2) <= 1e-10);
  CHECK(local_error(1e-3) <= 1e-12);
  CHECK_THROWS_AS(step(initial_state(v0), -0.1), std::invalid_argument);
}

TEST_CASE("zero datum stays zero and a step preserves the mean") {
  const PeriodicGrid g(512);
  const Profile zero = sample(g, [](double) { return 0.0; });
  EvolutionState state = initial_state(zero);
  for (int k = 0; k < 5; ++k) state = step(state, 1e-2);
  for (double v : state.v_labels) CHECK(v == 0.0);

  EvolutionState s2 = initial_state(example_v0(20.0, g));
  const double m0 = conserved_mean(s2);
  for (int k = 0; k < 10; ++k) s2 = step(s2, 1e-2);
  CHECK(std::abs(conserved_mean(s2) - m0) <= 1e-8);
  CHECK(std::abs(conserved_mean(s2)) <= 1e-8);
}

TEST_CASE("truncated evolution: sharp rate and two-sided envelope") {
  const PeriodicGrid g(1024);
  const Profile v0 = example_v0(20.0, g);
  const RunDiagnostics run = evolve(v0, 30.0, 1e-3, EvolveMode::truncated);
  CHECK(std::abs(run.fit.rate - kPi / 6.0) <= 1e-3);
  CHECK(run.passed_upper);
  for (const auto& row : run.series) {
    if (row.t <= 0.0) continue;
    const double envelope = std::exp(kPi * row.t / 6.0) * run.l2_0;
    CHECK(row.l2 <= envelope * (1.0 + 1e-12));
    CHECK(row.l2 >= 0.5 * envelope);
  }
}

TEST_CASE("full evolution on a small grid: bounds, mean, L1-Linfty estimate") {
  const PeriodicGrid g(512);
  const Profile v0 = example_v0(20.0, g);
  const RunDiagnostics run = evolve(v0, 6.0, 5e-3, EvolveMode::full);
  CHECK(run.passed_upper);
  CHECK(run.passed_lower);  // C_used = 0 for this datum: degenerate lower bound
  CHECK(run.c_used == 0.0);
  CHECK(std::abs(run.fit.rate - kPi / 6.0) <= 0.05 * (kPi / 6.0));
  // the full machinery with the source disabled must match the closed form
  const RunDiagnostics ns = evolve(v0, 5.0, 1e-3, EvolveMode::full_no_source);
  const double expected = truncated_norms(v0, 5.0).l2;
  CHECK(ns.series.back().l2 == doctest::Approx(expected).epsilon(1e-6));
}

TEST_CASE("the nonlocal source obeys ||g||_inf <= ||v||_1 at every sample") {
  const PeriodicGrid g(512);
  EvolutionState state = initial_state(example_v0(20.0, g));
  for (int block = 0; block < 8; ++block) {
    for (int k = 0; k < 25; ++k) state = step(state, 5e-3);
    const std::vector<double> source = nonlocal_source(state);
    double g_sup = 0.0;
    for (double x : source) g_sup = std::max(g_sup, std::abs(x));
    CHECK(g_sup <= diagnose(state).l1 * (1.0 + 1e-9));
  }
  // at t = 0 the source is the plain zero-mean antiderivative of v0; the
  // cumulative-integral and Fourier routes must agree once the 1/a feature
  // is resolved
  const PeriodicGrid fine(2048);
  const EvolutionState fresh = initial_state(example_v0(20.0, fine));
  const std::vector<double> s0 = nonlocal_source(fresh);
  const Profile ref = antiderivative(example_v0(20.0, fine));
  double worst = 0.0;
  for (int j = 0; j < fine.m; ++j)
    worst = std::max(worst, std::abs(s0[size_t(j)] - ref.values[size_t(j)]));
  CHECK(worst <= 1e-6);
}

TEST_CASE("the upper growth bound holds for non-odd data too") {
  const PeriodicGrid g(512);
  // odd datum plus an even zero-mean component vanishing at the peak
  const Profile v0 = sample(g, [](double x) {
    const double odd = x * (kPi * kPi - x * x) / (1.0 + 400.0 * x * x);
    const double even = 0.3 * (kPi * kPi - x * x) * std::cos(x);
    return odd + even;
  });
  const Profile w0 = project_zero_mean(v0);
  const RunDiagnostics run = evolve(w0, 5.0, 5e-3, EvolveMode::full);
  CHECK(run.passed_upper);
  CHECK_FALSE(run.flags.odd_first_moment);  // genuinely non-odd
  const RunDiagnostics trunc = evolve(w0, 5.0, 5e-3, EvolveMode::truncated);
  CHECK(trunc.passed_upper);
}

TEST_CASE("evolve validates its inputs and guards blow-up") {
  const PeriodicGrid g(128);
  const Profile v0 = example_v0(20.0, g);
  CHECK_THROWS_AS(evolve(v0, -1.0, 1e-3, EvolveMode::full), std::invalid_argument);
  CHECK_THROWS_AS(evolve(v0, 1.0, 0.02, EvolveMode::full), std::invalid_argument);
  CHECK_THROWS_AS(evolve(v0, 1.0, 0.0, EvolveMode::full), std::invalid_argument);
  const Profile biased = sample(g, [](double) { return 1.0; });
  CHECK_THROWS_AS(evolve(biased, 1.0, 1e-3, EvolveMode::full), std::invalid_argument);
}

TEST_CASE("growth-rate fit") {
  std::vector<double> t, l2, flat;
  for (int k = 0; k <= 100; ++k) {
    t.push_back(0.3 * k);
    l2.push_back(7.0 * std::exp(kPi * 0.3 * k / 6.0));
    flat.push_back(2.5);
  }
  const GrowthFit fit = growth_rate_fit(t, l2);
  CHECK(fit.rate == doctest::Approx(kPi / 6.0).epsilon(1e-12));
  CHECK(fit.residual <= 1e-12);
  CHECK(std::abs(growth_rate_fit(t, flat).rate) <= 1e-12);

  std::vector<double> short_t(t.begin(), t.begin() + 10), short_l2(l2.begin(), l2.begin() + 10);
  CHECK_THROWS_AS(growth_rate_fit(short_t, short_l2), std::invalid_argument);
  std::vector<double> bad = l2;
  bad.back() = 0.0;
  CHECK_THROWS_AS(growth_rate_fit(t, bad), std::invalid_argument);
}

TEST_CASE("conserved quantities of the full run drift slowly on short horizons") {
  const PeriodicGrid g(1024);
  const Profile v0 = example_v0(20.0, g);
  const RunDiagnostics run = evolve(v0, 2.0, 1e-3, EvolveMode::full);
  const DiagnosticsRow& a = run.series.front();
  const DiagnosticsRow& b = run.series.back();
  CHECK(std::abs(b.energy_l - a.energy_l) / (b.l2 * b.l2) <= 1e-4);
  const double u_norm = std::sqrt(2.0 * std::pow(kPi, 5) / 405.0);
  CHECK(std::abs(b.inner_uv - a.inner_uv) / (u_norm * b.l2) <= 5e-5);
}
