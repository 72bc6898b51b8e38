#include "doctest.h"

#include "rosto/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

using namespace rosto;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
  const fs::path dir = fs::temp_directory_path() / "rosto_cli_tests";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("parse_args: flags override defaults") {
  const RunConfig c1 = parse_args({"spectrum", "--modes", "128"});
  CHECK(c1.subcommand == "spectrum");
  CHECK(c1.modes == 128);
  CHECK(c1.m == 4096);
  CHECK(c1.a == 20.0);
  CHECK(c1.dt == 1e-3);

  const RunConfig c2 = parse_args({"evolve", "--mode", "full", "--a", "20", "--t-final", "30"});
  CHECK(c2.mode == "full");
  CHECK(c2.a == 20.0);
  CHECK(c2.t_final == 30.0);
  CHECK(c2.c_constant == 0.25);
  CHECK(c2.m == 4096);
}

TEST_CASE("parse_args: malformed input is rejected") {
  CHECK_THROWS_AS(parse_args({"evolve", "--dt", "-1"}), std::invalid_argument);
  CHECK_THROWS_AS(parse_args({"evolve", "--frobnicate", "1"}), std::invalid_argument);
  CHECK_THROWS_AS(parse_args({"wave", "--kind", "cusped"}), std::invalid_argument);
  CHECK_THROWS_AS(parse_args({"spectrum", "--m", "37"}), std::invalid_argument);
  CHECK_THROWS_AS(parse_args({}), std::invalid_argument);
  CHECK_THROWS_AS(parse_args({"evolve", "--dt", "0.5"}), std::invalid_argument);
}

TEST_CASE("parse_args: config file values sit between defaults and flags") {
  const fs::path cfg = temp_dir() / "config.json";
  {
    std::ofstream out(cfg);
    out << "{\"m\": 512, \"a\": 7.5}\n";
  }
  const RunConfig from_file = parse_args({"evolve", "--config", cfg.string()});
  CHECK(from_file.m == 512);
  CHECK(from_file.a == 7.5);
  const RunConfig overridden = parse_args({"evolve", "--config", cfg.string(), "--m", "256"});
  CHECK(overridden.m == 256);
  CHECK(overridden.a == 7.5);
}

TEST_CASE("wave subcommand writes the peaked-profile CSV deterministically") {
  const fs::path dir = temp_dir();
  RunConfig config = parse_args({"wave", "--kind", "peaked", "--m", "128"});
  config.out_dir = dir.string();
  CHECK(run_command(config) == 0);
  const std::string first = slurp(dir / "wave_peaked.csv");
  CHECK(run_command(config) == 0);
  CHECK(slurp(dir / "wave_peaked.csv") == first);
  CHECK(first.rfind("z,value\n", 0) == 0);
  // matches the library emitter byte for byte
  const fs::path ref = dir / "reference.csv";
  write_profile_csv(peaked_profile(PeriodicGrid(128)), ref.string());
  CHECK(slurp(ref) == first);
}

TEST_CASE("figure root-function: the negative branch changes sign exactly once") {
  const fs::path dir = temp_dir();
  RunConfig config = parse_args({"figure", "root-function"});
  config.out_dir = dir.string();
  CHECK(run_command(config) == 0);
  std::ifstream in(dir / "root_function.csv");
  std::string line;
  std::getline(in, line);
  CHECK(line == "lambda,value,branch");
  int sign_changes = 0;
  double prev = 0.0;
  bool have_prev = false;
  while (std::getline(in, line)) {
    if (line.find("negative") == std::string::npos) continue;
    const double value = std::stod(line.substr(line.find(',') + 1));
    if (have_prev && (value > 0.0) != (prev > 0.0)) ++sign_changes;
    prev = value;
    have_prev = true;
  }
  CHECK(sign_changes == 1);
}

TEST_CASE("evolve subcommand emits the documented CSV and JSON schema") {
  const fs::path dir = temp_dir();
  RunConfig config = parse_args({"evolve", "--m", "256", "--t-final", "2", "--dt", "0.005"});
  config.out_dir = dir.string();
  CHECK(run_command(config) == 0);
  std::ifstream in(dir / "evolve_norms.csv");
  std::string header;
  std::getline(in, header);
  CHECK(header == "t,l2,l1,linf,energyL,x1seminorm,innerUv,upper_bound,lower_bound");

  const nlohmann::json summary = nlohmann::json::parse(slurp(dir / "evolve_summary.json"));
  const std::vector<std::string> keys = {"rate",         "rate_residual", "C_used",
                                         "admissible_flags", "passed_upper", "passed_lower"};
  CHECK(summary.size() == keys.size());
  for (const auto& k : keys) CHECK(summary.contains(k));
  CHECK(summary["admissible_flags"].size() == 3);
  CHECK(summary["admissible_flags"].contains("odd_first_moment"));
  CHECK(summary["admissible_flags"].contains("odd_second_moment"));
  CHECK(summary["admissible_flags"].contains("l1_l2_inequality"));
}

TEST_CASE("spectrum and characteristics emit their CSV surfaces") {
  const fs::path dir = temp_dir();
  RunConfig spec_config = parse_args({"spectrum", "--modes", "16"});
  spec_config.out_dir = dir.string();
  CHECK(run_command(spec_config) == 0);
  std::ifstream in(dir / "spectrum_eigenvalues.csv");
  std::string header;
  std::getline(in, header);
  CHECK(header == "index,eigenvalue");
  int rows = 0;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 32);

  RunConfig char_config = parse_args({"characteristics", "--m", "128", "--t-final", "4"});
  char_config.out_dir = dir.string();
  CHECK(run_command(char_config) == 0);
  std::ifstream cin_(dir / "characteristics.csv");
  std::getline(cin_, header);
  CHECK(header == "s,t,Z,dZds");
}

TEST_CASE("ROSTO_OUT_DIR redirects output when no directory is given") {
  const fs::path dir = temp_dir() / "env_redirect";
  fs::create_directories(dir);
  fs::remove(dir / "wave_peaked.csv");
  setenv("ROSTO_OUT_DIR", dir.c_str(), 1);
  RunConfig config = parse_args({"wave", "--kind", "peaked", "--m", "64"});
  const int rc = run_command(config);
  unsetenv("ROSTO_OUT_DIR");
  CHECK(rc == 0);
  CHECK(fs::exists(dir / "wave_peaked.csv"));
}

TEST_CASE("phase-plane figure emits both branches") {
  const fs::path dir = temp_dir();
  RunConfig config = parse_args({"figure", "phase-plane", "--c", "1.05"});
  config.out_dir = dir.string();
  CHECK(run_command(config) == 0);
  std::ifstream in(dir / "phase_plane.csv");
  std::string header;
  std::getline(in, header);
  CHECK(header == "E,U,Uprime,branch");
  bool plus = false, minus = false;
  std::string line;
  while (std::getline(in, line)) {
    if (line.size() < 2) continue;
    if (line.rfind(",1", line.size() - 2) != std::string::npos) plus = true;
    if (line.rfind(",-1", line.size() - 3) != std::string::npos) minus = true;
  }
  CHECK(plus);
  CHECK(minus);
}
