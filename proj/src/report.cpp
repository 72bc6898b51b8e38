#include "rosto/report.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

namespace rosto {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path);
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

void load_config_file(const std::string& path, RunConfig& config) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("config file " + path + ": " + e.what());
  }
  if (j.contains("m")) config.m = j["m"].get<int>();
  if (j.contains("modes")) config.modes = j["modes"].get<int>();
  if (j.contains("c")) config.c = j["c"].get<double>();
  if (j.contains("a")) config.a = j["a"].get<double>();
  if (j.contains("t_final")) config.t_final = j["t_final"].get<double>();
  if (j.contains("dt")) config.dt = j["dt"].get<double>();
  if (j.contains("C")) config.c_constant = j["C"].get<double>();
  if (j.contains("mode")) config.mode = j["mode"].get<std::string>();
  if (j.contains("kind")) config.kind = j["kind"].get<std::string>();
  if (j.contains("out")) config.out = j["out"].get<std::string>();
  if (j.contains("seed")) config.seed = j["seed"].get<unsigned long>();
}

std::string output_path(const RunConfig& config, const std::string& default_name) {
  std::string dir = config.out_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("ROSTO_OUT_DIR")) dir = env;
  }
  if (dir.empty()) dir = ".";
  std::string name = config.out.empty() ? default_name : config.out;
  if (name.find('/') != std::string::npos) return name;  // explicit path wins
  return dir + "/" + name;
}

std::string sibling(const std::string& path, const std::string& name) {
  const auto slash = path.rfind('/');
  if (slash == std::string::npos) return name;
  return path.substr(0, slash + 1) + name;
}

}  // namespace

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig config;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size())
      load_config_file(args[i + 1], config);
    else if (args[i].rfind("--config=", 0) == 0)
      load_config_file(args[i].substr(9), config);
  }

  CLI::App app{"rosto: peaked periodic waves of the reduced Ostrovsky equation"};
  app.require_subcommand(1);
  std::string config_path;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "flat JSON config file");
    cmd->add_option("-o,--out", config.out, "output file name");
    cmd->add_option("--out-dir", config.out_dir, "output directory (ROSTO_OUT_DIR overrides)");
    cmd->add_option("--seed", config.seed, "seed for randomized property checks");
    cmd->add_option("--m", config.m, "grid size (even, >= 4)")->check(CLI::PositiveNumber);
  };

  CLI::App* wave = app.add_subcommand("wave", "emit a travelling-wave profile");
  add_common(wave);
  wave->add_option("--kind", config.kind, "peaked | smooth | sqrt-test")
      ->check(CLI::IsMember({"peaked", "smooth", "sqrt-test"}));
  wave->add_option("--c", config.c, "wave speed for --kind smooth");

  CLI::App* chars = app.add_subcommand("characteristics", "emit the characteristic mesh");
  add_common(chars);
  chars->add_option("--t-final", config.t_final, "mesh end time")->check(CLI::PositiveNumber);

  CLI::App* evolve_cmd = app.add_subcommand("evolve", "run the linearized evolution");
  add_common(evolve_cmd);
  evolve_cmd->add_option("--mode", config.mode, "truncated | full")
      ->check(CLI::IsMember({"truncated", "full"}));
  evolve_cmd->add_option("--a", config.a, "parameter of the odd initial datum")
      ->check(CLI::PositiveNumber);
  evolve_cmd->add_option("--t-final", config.t_final, "final time")->check(CLI::PositiveNumber);
  evolve_cmd->add_option("--dt", config.dt, "time step (<= 0.01)")->check(CLI::PositiveNumber);
  evolve_cmd->add_option("--C", config.c_constant, "constant of the lower-bound inequality")
      ->check(CLI::Range(1e-9, 0.4999999));

  CLI::App* spectrum = app.add_subcommand("spectrum", "Galerkin spectrum of the Hessian operator");
  add_common(spectrum);
  spectrum->add_option("--modes", config.modes, "Fourier cutoff N")->check(CLI::PositiveNumber);

  CLI::App* figure = app.add_subcommand("figure", "emit figure data");
  add_common(figure);
  figure->add_option("target", config.figure, "phase-plane | root-function")
      ->required()
      ->check(CLI::IsMember({"phase-plane", "root-function"}));
  figure->add_option("--c", config.c, "wave speed for phase-plane levels");

  CLI::App* verify = app.add_subcommand("verify", "run the full invariant suite");
  add_common(verify);
  verify->add_option("--t-final", config.t_final, "full-run horizon used by the suite")
      ->check(CLI::PositiveNumber);
  verify->add_option("--dt", config.dt, "time step for the full run")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    msg << e.what() << "\n\n" << app.help();
    throw std::invalid_argument(msg.str());
  }

  for (CLI::App* cmd : {wave, chars, evolve_cmd, spectrum, figure, verify})
    if (cmd->parsed()) config.subcommand = cmd->get_name();

  if (config.m < 4 || config.m % 2 != 0)
    throw std::invalid_argument("grid size m must be even and >= 4");
  if (config.dt > 0.01) throw std::invalid_argument("dt must be <= 0.01");
  return config;
}

void write_norms_csv(const RunDiagnostics& run, const std::string& path) {
  auto out = open_out(path);
  out << "t,l2,l1,linf,energyL,x1seminorm,innerUv,upper_bound,lower_bound\n";
  for (const auto& row : run.series) {
    const double envelope = std::exp(kPi * row.t / 6.0) * run.l2_0;
    out << fmt17(row.t) << ',' << fmt17(row.l2) << ',' << fmt17(row.l1) << ',' << fmt17(row.linf)
        << ',' << fmt17(row.energy_l) << ',' << fmt17(row.x1_seminorm) << ','
        << fmt17(row.inner_uv) << ',' << fmt17(envelope) << ',' << fmt17(run.c_used * envelope)
        << '\n';
  }
  finish(out, path);
}

void write_evolve_summary_json(const RunDiagnostics& run, const std::string& path) {
  auto out = open_out(path);
  out << "{\n";
  out << "  \"rate\": " << fmt17(run.fit.rate) << ",\n";
  out << "  \"rate_residual\": " << fmt17(run.fit.residual) << ",\n";
  out << "  \"C_used\": " << fmt17(run.c_used) << ",\n";
  out << "  \"admissible_flags\": {\n";
  out << "    \"odd_first_moment\": " << (run.flags.odd_first_moment ? "true" : "false") << ",\n";
  out << "    \"odd_second_moment\": " << (run.flags.odd_second_moment ? "true" : "false")
      << ",\n";
  out << "    \"l1_l2_inequality\": " << (run.flags.l1_l2_inequality ? "true" : "false") << "\n";
  out << "  },\n";
  out << "  \"passed_upper\": " << (run.passed_upper ? "true" : "false") << ",\n";
  out << "  \"passed_lower\": " << (run.passed_lower ? "true" : "false") << "\n";
  out << "}\n";
  finish(out, path);
}

void write_eigenvalues_csv(const SpectrumResult& result, const std::string& path) {
  auto out = open_out(path);
  out << "index,eigenvalue\n";
  for (size_t i = 0; i < result.eigenvalues.size(); ++i)
    out << i << ',' << fmt17(result.eigenvalues[i]) << '\n';
  finish(out, path);
}

void write_root_function_csv(const std::string& path) {
  auto out = open_out(path);
  out << "lambda,value,branch\n";
  const int n = 600;
  for (int k = 0; k < n; ++k) {
    const double lambda = -3.0 + (3.0 - 1e-3) * k / double(n - 1);
    out << fmt17(lambda) << ',' << fmt17(zero_mean_fn(lambda)) << ",negative\n";
  }
  const double lo = WaveConstants::band_edge + 1e-3;
  for (int k = 0; k < n; ++k) {
    const double lambda = lo + (5.0 - lo) * k / double(n - 1);
    out << fmt17(lambda) << ',' << fmt17(zero_mean_fn(lambda)) << ",positive\n";
  }
  finish(out, path);
}

void write_phase_plane_csv(const std::vector<PhasePlanePoint>& points, const std::string& path) {
  auto out = open_out(path);
  out << "E,U,Uprime,branch\n";
  for (const auto& p : points)
    out << fmt17(p.e) << ',' << fmt17(p.u) << ',' << fmt17(p.u_prime) << ',' << p.branch << '\n';
  finish(out, path);
}

void write_characteristics_csv(const PeriodicGrid& grid, double t_final, const std::string& path) {
  auto out = open_out(path);
  out << "s,t,Z,dZds\n";
  const int n_s = std::min(grid.m, 128);
  const int stride = grid.m / n_s;
  const int n_t = 64;
  for (int i = 0; i <= n_t; ++i) {
    const double t = t_final * i / double(n_t);
    for (int j = 0; j < grid.m; j += stride) {
      const double s = grid.node(j);
      out << fmt17(s) << ',' << fmt17(t) << ',' << fmt17(char_position(s, t)) << ','
          << fmt17(char_jacobian(s, t)) << '\n';
    }
  }
  finish(out, path);
}

namespace {

int run_wave(const RunConfig& config) {
  const PeriodicGrid grid(config.m);
  if (config.kind == "peaked") {
    write_profile_csv(peaked_profile(grid), output_path(config, "wave_peaked.csv"));
  } else if (config.kind == "sqrt-test") {
    write_profile_csv(sqrt_singular_profile(WaveConstants::c_star, grid),
                      output_path(config, "wave_sqrt_test.csv"));
  } else {
    const SmoothWave wave = smooth_wave_solve(config.c, grid);
    write_profile_csv(wave.profile, output_path(config, "wave_smooth.csv"));
    std::cout << "c=" << fmt17(wave.params.c) << " e_level=" << fmt17(wave.params.e_level)
              << "\n";
  }
  return kExitOk;
}

int run_characteristics(const RunConfig& config) {
  write_characteristics_csv(PeriodicGrid(config.m), config.t_final,
                            output_path(config, "characteristics.csv"));
  return kExitOk;
}

int run_evolve(const RunConfig& config) {
  const PeriodicGrid grid(config.m);
  const Profile v0 = example_v0(config.a, grid);
  const EvolveMode mode =
      (config.mode == "truncated") ? EvolveMode::truncated : EvolveMode::full;
  const RunDiagnostics run = evolve(v0, config.t_final, config.dt, mode, config.c_constant);
  const std::string norms_path = output_path(config, "evolve_norms.csv");
  write_norms_csv(run, norms_path);
  write_evolve_summary_json(run, sibling(norms_path, "evolve_summary.json"));
  std::cout << "rate=" << fmt17(run.fit.rate) << " C_used=" << fmt17(run.c_used)
            << " passed_upper=" << (run.passed_upper ? "true" : "false")
            << " passed_lower=" << (run.passed_lower ? "true" : "false") << "\n";
  return kExitOk;
}

int run_spectrum(const RunConfig& config) {
  const SpectrumResult result = eigen_solve(build_matrix(config.modes));
  write_eigenvalues_csv(result, output_path(config, "spectrum_eigenvalues.csv"));
  std::cout << "lambda1=" << fmt17(result.lambda1)
            << " transcendental_root=" << fmt17(result.transcendental_root)
            << " band=[" << fmt17(result.band_low) << ", " << fmt17(result.band_high) << "]\n";
  return kExitOk;
}

int run_figure(const RunConfig& config) {
  if (config.figure == "root-function") {
    write_root_function_csv(output_path(config, "root_function.csv"));
  } else {
    const double c = config.c;
    const double e_c = c * c * c / 6.0;
    const std::vector<double> levels = {0.0,       e_c / 6.0, e_c / 3.0, e_c / 2.0,
                                        2.0 * e_c / 3.0, 5.0 * e_c / 6.0, e_c};
    write_phase_plane_csv(phase_plane_data(c, levels), output_path(config, "phase_plane.csv"));
  }
  return kExitOk;
}

int run_verify(const RunConfig& config) {
  const std::vector<CheckResult> checks = run_verification(config);
  std::string group;
  int passed = 0;
  for (const auto& check : checks) {
    if (check.group != group) {
      group = check.group;
      std::cout << "[" << group << "]\n";
    }
    std::cout << "  " << (check.pass ? "PASS" : "FAIL") << "  " << check.name;
    if (!check.detail.empty()) std::cout << "  (" << check.detail << ")";
    std::cout << "\n";
    if (check.pass) ++passed;
  }
  std::cout << passed << "/" << checks.size() << " checks passed\n";
  return passed == int(checks.size()) ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_command(const RunConfig& config) {
  if (config.subcommand == "wave") return run_wave(config);
  if (config.subcommand == "characteristics") return run_characteristics(config);
  if (config.subcommand == "evolve") return run_evolve(config);
  if (config.subcommand == "spectrum") return run_spectrum(config);
  if (config.subcommand == "figure") return run_figure(config);
  if (config.subcommand == "verify") return run_verify(config);
  throw std::invalid_argument("unknown subcommand: " + config.subcommand);
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const HelpRequested& h) {
    std::cout << h.text;
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  try {
    return run_command(config);
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitIo;
  }
}

}  // namespace rosto
