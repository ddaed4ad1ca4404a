#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mmo::app {

/// MINIMAX_ONLINE_JOBS if set to a positive integer, else the hardware
/// concurrency (at least 1).
int default_jobs();

struct RunOptions {
  std::string spec_path;
  std::optional<std::string> out_dir;     // overrides outputs.dir
  std::optional<std::uint64_t> seed;      // overrides game.seed
  std::optional<std::string> format;      // "csv" or "json"
  int jobs = 1;
};

/// Runs every strategy x adversary x repeat cell and writes
///   <out>/traces/<run_id>.{csv,json}, <out>/summary.csv,
///   <out>/verdict.json, <out>/runs.json.
/// Returns 0 when every bound check holds, 1 on any violation or failed
/// run, 2 on a parse or validation error.
int run_command(const RunOptions& options, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::vector<std::string> lemmas;
  bool all = false;
  std::string regime = "all";  // one-round suite: orthogonal, parallel or all
};

struct CheckRow {
  std::string suite;
  std::string label;
  bool pass;
  std::string detail;
};

std::vector<std::string> verify_suite_names();

/// Throws std::invalid_argument for an unknown suite name.
std::vector<CheckRow> run_verify_suite(const std::string& name, const std::string& regime = "all");

/// Prints one line per check and a per-suite matrix. Returns 1 listing the
/// failing checks if any fail, 2 on a bad selector, else 0.
int verify_command(const VerifyOptions& options, std::ostream& out, std::ostream& err);

struct CurvesOptions {
  std::string trace_dir;              // directory holding runs.json
  std::optional<std::string> out;     // stdout when absent
};

/// Tidy CSV with columns t, run_id, regret_u, bound_u, u_norm, u_index:
/// cumulative regret against each comparator next to the envelope at t
/// (AdaptiveNormal and horizon-free OGD) or at the fixed horizon. Returns 2
/// when the manifest or a trace is missing.
int curves_command(const CurvesOptions& options, std::ostream& out, std::ostream& err);

}  // namespace mmo::app
