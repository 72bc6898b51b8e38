#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rosto/evolution.hpp"
#include "rosto/report.hpp"
#include "rosto/spectral.hpp"
#include "rosto/wave.hpp"

namespace py = pybind11;
using namespace rosto;

namespace {

Profile from_values(const std::vector<double>& values) {
  return Profile(PeriodicGrid(int(values.size())), values);
}

py::dict run_to_dict(const RunDiagnostics& run) {
  std::vector<double> t, l2, l1, linf, energy_l, x1, inner_uv;
  for (const auto& row : run.series) {
    t.push_back(row.t);
    l2.push_back(row.l2);
    l1.push_back(row.l1);
    linf.push_back(row.linf);
    energy_l.push_back(row.energy_l);
    x1.push_back(row.x1_seminorm);
    inner_uv.push_back(row.inner_uv);
  }
  py::dict d;
  d["t"] = t;
  d["l2"] = l2;
  d["l1"] = l1;
  d["linf"] = linf;
  d["energy_l"] = energy_l;
  d["x1_seminorm"] = x1;
  d["inner_uv"] = inner_uv;
  d["rate"] = run.fit.rate;
  d["rate_residual"] = run.fit.residual;
  d["c_used"] = run.c_used;
  d["l2_0"] = run.l2_0;
  d["passed_upper"] = run.passed_upper;
  d["passed_lower"] = run.passed_lower;
  d["odd_first_moment"] = run.flags.odd_first_moment;
  d["odd_second_moment"] = run.flags.odd_second_moment;
  d["l1_l2_inequality"] = run.flags.l1_l2_inequality;
  return d;
}

}  // namespace

PYBIND11_MODULE(_rosto, m) {
  m.doc() = "Peaked periodic waves of the reduced Ostrovsky equation: travelling-wave "
            "construction, characteristics, linearized evolution and the Hessian spectrum.";

  m.attr("C_STAR") = WaveConstants::c_star;
  m.attr("BAND_EDGE") = WaveConstants::band_edge;
  m.attr("GROWTH_RATE") = WaveConstants::growth_rate;
  m.attr("PEAK_SLOPE") = WaveConstants::peak_slope;

  m.def("grid_nodes", [](int n) { return PeriodicGrid(n).nodes(); }, py::arg("m"));
  m.def("peaked_profile", [](int n) { return peaked_profile(PeriodicGrid(n)).values; },
        py::arg("m"));
  m.def("sqrt_singular_profile",
        [](double c, int n) { return sqrt_singular_profile(c, PeriodicGrid(n)).values; },
        py::arg("c"), py::arg("m"));
  m.def("smooth_wave_solve", [](double c, int n) {
          const SmoothWave w = smooth_wave_solve(c, PeriodicGrid(n));
          py::dict d;
          d["values"] = w.profile.values;
          d["c"] = w.params.c;
          d["e_level"] = w.params.e_level;
          return d;
        },
        py::arg("c"), py::arg("m"));
  m.def("residual", [](double c, const std::vector<double>& u) {
          return residual(c, from_values(u)).values;
        },
        py::arg("c"), py::arg("values"));
  m.def("holder_exponent",
        [](const std::vector<double>& u, double c) { return holder_exponent(from_values(u), c); },
        py::arg("values"), py::arg("c"));
  m.def("energy_momentum", [](const std::vector<double>& u) {
          const EnergyMomentum em = energy_momentum(from_values(u));
          return py::make_tuple(em.h, em.q);
        },
        py::arg("values"));
  m.def("first_integral", [](double c, double e, double u, double up) {
          return first_integral(WaveParams{c, e}, u, up);
        },
        py::arg("c"), py::arg("e_level"), py::arg("u"), py::arg("u_prime"));

  m.def("project_zero_mean",
        [](const std::vector<double>& p) { return project_zero_mean(from_values(p)).values; },
        py::arg("values"));
  m.def("antiderivative",
        [](const std::vector<double>& p) { return antiderivative(from_values(p)).values; },
        py::arg("values"));
  m.def("norm_l1", [](const std::vector<double>& p) { return norm_l1(from_values(p)); });
  m.def("norm_l2", [](const std::vector<double>& p) { return norm_l2(from_values(p)); });
  m.def("norm_linf", [](const std::vector<double>& p) { return norm_linf(from_values(p)); });
  m.def("interp", [](const std::vector<double>& p, double x) { return interp(from_values(p), x); },
        py::arg("values"), py::arg("x"));

  m.def("char_position", &char_position, py::arg("s"), py::arg("t"));
  m.def("char_inverse", &char_inverse, py::arg("z"), py::arg("t"));
  m.def("char_jacobian", &char_jacobian, py::arg("s"), py::arg("t"));
  m.def("truncated_solution",
        [](const std::vector<double>& v0, double t) {
          return truncated_solution(from_values(v0), t);
        },
        py::arg("v0"), py::arg("t"));
  m.def("truncated_norms", [](const std::vector<double>& v0, double t) {
          const TruncatedNorms n = truncated_norms(from_values(v0), t);
          return py::make_tuple(n.l2, n.l1, n.energy);
        },
        py::arg("v0"), py::arg("t"));
  m.def("pushforward", [](const std::vector<double>& v_labels, double t) {
          const PeriodicGrid grid(int(v_labels.size()));
          return pushforward(v_labels, t, grid).values;
        },
        py::arg("v_labels"), py::arg("t"));

  m.def("example_v0", [](double a, int n) { return example_v0(a, PeriodicGrid(n)).values; },
        py::arg("a"), py::arg("m"));
  m.def("example_v0_norms", [](double a) {
          const ClosedFormNorms n = example_v0_norms(a);
          return py::make_tuple(n.l1, n.l2);
        },
        py::arg("a"));
  m.def("largest_admissible_c", &largest_admissible_c, py::arg("l1"), py::arg("l2"));
  m.def("linear_energy",
        [](const std::vector<double>& p) { return linear_energy(from_values(p)); },
        py::arg("values"));
  m.def("evolve", [](const std::vector<double>& v0, double t_final, double dt,
                     const std::string& mode, double c_constant) {
          EvolveMode em = EvolveMode::full;
          if (mode == "truncated")
            em = EvolveMode::truncated;
          else if (mode == "full_no_source")
            em = EvolveMode::full_no_source;
          else if (mode != "full")
            throw std::invalid_argument("mode must be truncated | full | full_no_source");
          return run_to_dict(evolve(from_values(v0), t_final, dt, em, c_constant));
        },
        py::arg("v0"), py::arg("t_final"), py::arg("dt"), py::arg("mode") = "full",
        py::arg("C") = 0.25);

  m.def("transcendental_fn", &transcendental_fn, py::arg("lam"));
  m.def("transcendental_root", &transcendental_root);
  m.def("zero_mean_fn", &zero_mean_fn, py::arg("lam"));
  m.def("eigenfunction_w2",
        [](double lam, int n) { return eigenfunction_w2(lam, PeriodicGrid(n)).values; },
        py::arg("lam"), py::arg("m"));
  m.def("residual_eigenpair", [](double lam, const std::vector<double>& w) {
          return residual_eigenpair(lam, from_values(w));
        },
        py::arg("lam"), py::arg("values"));
  m.def("spectrum", [](int n_modes) {
          const SpectrumResult r = eigen_solve(build_matrix(n_modes));
          py::dict d;
          d["eigenvalues"] = r.eigenvalues;
          d["lambda1"] = r.lambda1;
          d["band_low"] = r.band_low;
          d["band_high"] = r.band_high;
          d["transcendental_root"] = r.transcendental_root;
          return d;
        },
        py::arg("n_modes"));
}
