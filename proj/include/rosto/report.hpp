#pragma once

#include "rosto/evolution.hpp"
#include "rosto/spectral.hpp"
#include "rosto/wave.hpp"

#include <string>
#include <vector>

namespace rosto {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitIo = 3,
};

struct RunConfig {
  std::string subcommand;
  int m = 4096;
  int modes = 256;
  double c = 1.05;
  double a = 20.0;
  double t_final = 30.0;
  double dt = 1e-3;
  double c_constant = 0.25;  // the C of the lower-bound inequality
  std::string mode = "full";
  std::string kind = "peaked";
  std::string figure;
  std::string out;      // primary output file; empty means subcommand default
  std::string out_dir;  // ROSTO_OUT_DIR overrides, then "."
  unsigned long seed = 20180907;
};

/// Thrown by parse_args when the user asked for --help.
struct HelpRequested {
  std::string text;
};

/// Parse `rosto <subcommand> [flags]`. Flags override values from a flat JSON
/// config file (--config), which override the built-in defaults. Throws
/// std::invalid_argument with usage text on malformed input.
RunConfig parse_args(const std::vector<std::string>& args);

/// Execute a parsed configuration; returns a process exit code.
int run_command(const RunConfig& config);

/// Parse + run + map errors to exit codes (the main() body).
int run_cli(int argc, char** argv);

struct CheckResult {
  std::string group;  // table key, e.g. "lemma-spectrum"
  std::string name;
  bool pass = false;
  std::string detail;
};

/// The one-shot verification suite behind `rosto verify`.
std::vector<CheckResult> run_verification(const RunConfig& config);

/// 17-significant-digit formatting used by every CSV/JSON emitter.
std::string fmt17(double x);

void write_norms_csv(const RunDiagnostics& run, const std::string& path);
void write_evolve_summary_json(const RunDiagnostics& run, const std::string& path);
void write_eigenvalues_csv(const SpectrumResult& result, const std::string& path);
void write_root_function_csv(const std::string& path);
void write_phase_plane_csv(const std::vector<PhasePlanePoint>& points, const std::string& path);
void write_characteristics_csv(const PeriodicGrid& grid, double t_final, const std::string& path);

}  // namespace rosto
