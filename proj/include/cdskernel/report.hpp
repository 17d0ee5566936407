#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cdskernel/oracles.hpp"

namespace cdskernel {

// exit codes shared by the library driver and the CLI
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitResourceCap = 3;
inline constexpr int kExitVerificationFailed = 4;

struct RunConfig {
  std::string pipeline;  // kdd-psaks | cds-framework | rds-nowhere-dense |
                         // ds-bikernel | reduce-setcover
  std::string input_file;  // edge list, or set cover file for reduce-setcover
  std::string generator;   // e.g. "grid_apex:2,6", "star:40", "path:9"
  std::uint64_t seed = 0;
  int k = 1;
  int r = 1;
  int d = 2;
  double eps = 1.0;
  double alpha = 2.0;
  bool verify = false;
  std::string out_path;  // empty: caller prints the report
  OracleCaps caps;
};

struct RunOutcome {
  int exit_code = kExitOk;
  std::string report_json;  // deterministic given config + seed
  std::string error;        // set when exit_code != 0
};

// Executes one pipeline run. Wall-clock time is deliberately not part of
// the report so identical configs produce byte-identical output.
RunOutcome run(const RunConfig& config);

// parameter lists for the cartesian sweep; empty lists yield no rows
struct SweepGrid {
  std::vector<int> k;
  std::vector<int> r;
  std::vector<int> d;
  std::vector<double> eps;
  std::vector<double> alpha;
};

// CSV of per-run reports, rows sorted by config key; per-run failures are
// recorded in the row and do not abort the sweep.
std::string sweep(const RunConfig& base, const SweepGrid& grid);

Graph instance_from_config(const RunConfig& config);

}  // namespace cdskernel
