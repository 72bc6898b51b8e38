#include "doctest.h"

#include "rosto/evolution.hpp"
#include "rosto/spectral.hpp"
#include "rosto/wave.hpp"
#include "support/oracles.hpp"

#include <cmath>

using namespace rosto;

TEST_CASE("Galerkin matrix entries") {
  const GalerkinMatrix a = build_matrix(16);
  CHECK(a.dim() == 32);
  // multiplier coefficients: mean from an independent quadrature oracle
  const double m0 =
      oracles::integrate([](double z) { return (kPi * kPi - z * z) / 6.0; }, -kPi, kPi) / kTwoPi;
  CHECK(m0 == doctest::Approx(kPi * kPi / 9.0).epsilon(1e-12));
  const int i1 = a.n_modes;  // mode +1
  CHECK(a.mode(i1) == 1);
  CHECK(a.at(i1, i1) == doctest::Approx(-1.0 + kPi * kPi / 9.0).epsilon(1e-14));
  const int i2 = a.n_modes + 1;  // mode +2
  CHECK(a.at(i2, i1) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));   // m_1
  CHECK(a.at(a.n_modes + 2, i1) == doctest::Approx(-1.0 / 12.0).epsilon(1e-14));  // m_2
  double asym = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) asym = std::max(asym, std::abs(a.at(i, j) - a.at(j, i)));
  CHECK(asym <= 1e-14);
  CHECK_THROWS_AS(build_matrix(4), std::invalid_argument);
}

TEST_CASE("spectrum at N=256: one isolated negative eigenvalue plus the band") {
  const SpectrumResult r = eigen_solve(build_matrix(256));
  CHECK(r.lambda1 >= -0.24);
  CHECK(r.lambda1 <= -0.21);
  CHECK(std::abs(r.lambda1 - r.transcendental_root) <= 1e-2);
  int below = 0;
  for (double ev : r.eigenvalues)
    if (ev < -1e-3) ++below;
  CHECK(below == 1);
  CHECK(r.band_low >= -1e-3);
  CHECK(r.band_high <= kPi * kPi / 6.0 + 1e-2);
}

TEST_CASE("transcendental function: bracketing, asymptotics, domain") {
  CHECK(transcendental_fn(-0.3) * transcendental_fn(-0.1) < 0.0);
  CHECK(transcendental_fn(-1e-6) > 1.0);  // log divergence toward 0-
  CHECK(transcendental_fn(-1e3) < 0.0);
  CHECK_THROWS_AS(transcendental_fn(0.0), std::invalid_argument);
  CHECK_THROWS_AS(transcendental_fn(0.5), std::invalid_argument);
}

TEST_CASE("transcendental root") {
  const double root = transcendental_root();
  CHECK(std::abs(root - (-0.2262)) <= 5e-5);
  CHECK(std::abs(transcendental_fn(root)) <= 1e-9);
  int sign_changes = 0;
  double prev = transcendental_fn(-50.0);
  for (int k = 1; k <= 10000; ++k) {
    const double lam = -50.0 + (50.0 - 1e-6) * k / 10000.0;
    const double f = transcendental_fn(lam);
    if ((f > 0.0) != (prev > 0.0)) ++sign_changes;
    prev = f;
  }
  CHECK(sign_changes == 1);
}

TEST_CASE("zero-mean function: equivalent root, no zeros on the upper branch") {
  const double root = transcendental_root();
  CHECK(std::abs(zero_mean_fn(root)) <= 1e-9);
  CHECK(zero_mean_fn(-10.0) < 0.0);
  for (int k = 0; k < 10000; ++k) {
    const double lam =
        kPi * kPi / 6.0 + 1e-6 + (1e3 - kPi * kPi / 6.0) * k / 9999.0;
    CHECK(zero_mean_fn(lam) < -0.75);
  }
  CHECK_THROWS_AS(zero_mean_fn(0.5), std::invalid_argument);
  CHECK_THROWS_AS(zero_mean_fn(0.0), std::invalid_argument);
}

TEST_CASE("even eigenfunction w2 at the isolated eigenvalue") {
  const double root = transcendental_root();
  const PeriodicGrid g(8192);
  const Profile w2 = eigenfunction_w2(root, g);
  for (int j = 1; j < g.m; ++j)
    CHECK(w2.values[size_t(j)] == doctest::Approx(w2.values[size_t(g.m - j)]).epsilon(1e-14));
  CHECK(std::abs(w2.mean()) <= 1e-6);

  const double h = g.spacing();
  double ode_res = 0.0;
  for (int j = 1; j < g.m - 1; ++j) {
    const double z = g.node(j);
    const double d1 = (w2.values[size_t(j + 1)] - w2.values[size_t(j - 1)]) / (2.0 * h);
    const double d2 =
        (w2.values[size_t(j + 1)] - 2.0 * w2.values[size_t(j)] + w2.values[size_t(j - 1)]) /
        (h * h);
    ode_res = std::max(ode_res, std::abs((kPi * kPi - z * z - 6.0 * root) * d2 - 4.0 * z * d1 +
                                         4.0 * w2.values[size_t(j)]));
  }
  CHECK(ode_res <= 1e-4);
  CHECK_THROWS_AS(eigenfunction_w2(0.1, g), std::invalid_argument);
}

TEST_CASE("eigenpair residuals") {
  const double root = transcendental_root();
  const PeriodicGrid g(8192);
  CHECK(residual_eigenpair(root, eigenfunction_w2(root, g)) <= 1e-4);
  const PeriodicGrid mid(4096);
  CHECK(residual_eigenpair(0.0, tapered_peak_slope(mid)) <= 1e-2);
  CHECK(residual_eigenpair(0.5, eigenfunction_w2(root, mid)) >= 0.1);
}

TEST_CASE("Galerkin eigenvalue refinement and band densification") {
  const double root = transcendental_root();
  const SpectrumResult s64 = eigen_solve(build_matrix(64));
  const SpectrumResult s128 = eigen_solve(build_matrix(128));
  const SpectrumResult s256 = eigen_solve(build_matrix(256));
  CHECK(std::abs(s128.lambda1 - root) <= std::abs(s64.lambda1 - root) + 1e-6);
  CHECK(std::abs(s256.lambda1 - root) <= std::abs(s128.lambda1 - root) + 1e-6);
  const auto max_gap = [](const SpectrumResult& s) {
    double gap = 0.0;
    for (size_t i = 1; i < s.eigenvalues.size(); ++i)
      if (s.eigenvalues[i - 1] >= 0.1 && s.eigenvalues[i] <= 1.5)
        gap = std::max(gap, s.eigenvalues[i] - s.eigenvalues[i - 1]);
    return gap;
  };
  CHECK(max_gap(s128) < max_gap(s64));
  CHECK(max_gap(s256) < max_gap(s128));
}

TEST_CASE("quadratic form agrees with the integral energy on band-limited data") {
  std::mt19937_64 rng(5150);
  const PeriodicGrid g(8192);
  const GalerkinMatrix a = build_matrix(64);
  for (int rep = 0; rep < 10; ++rep) {
    const Profile p = oracles::random_profile(g, rng, 32);
    const double q_matrix = galerkin_quadratic_form(a, p);
    const double q_integral = linear_energy(p);
    CHECK(std::abs(q_matrix - q_integral) <= 1e-8 * std::max(1.0, std::abs(q_integral)));
  }
}

TEST_CASE("linear energy: zero datum, sine datum against the matrix, kernel direction") {
  const PeriodicGrid g(4096);
  CHECK(linear_energy(sample(g, [](double) { return 0.0; })) == 0.0);

  const Profile sine = sample(g, [](double z) { return std::sin(z); });
  const double expected = std::pow(kPi, 3) / 9.0 + kPi / 12.0 - kPi;
  CHECK(linear_energy(sine) == doctest::Approx(expected).epsilon(1e-10));
  CHECK(galerkin_quadratic_form(build_matrix(16), sine) ==
        doctest::Approx(expected).epsilon(1e-6));

  const Profile kernel = tapered_peak_slope(g);
  CHECK(std::abs(linear_energy(kernel)) <= 1e-2 * norm_l2(kernel) * norm_l2(kernel));
}
