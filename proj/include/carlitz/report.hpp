#pragma once

// Command reports shared by the CLI and the Python module.  Each command
// returns a JSON document whose content depends only on the configuration
// and the library version, plus human-readable lines and per-stage timings
// that are kept out of the JSON.

#include <carlitz/torsion.hpp>

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace carlitz {

inline constexpr const char* kVersion = "1.0.0";

struct Config {
  unsigned q = 2;
  std::string p = "theta";
  unsigned n = 0;
  std::int64_t digits = 40;       // v-digit floor for analytic comparisons
  unsigned series_degree = 8;     // N for truncated L-series
  bool analytic = true;           // include the analytic stages in verify
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// FNV-1a over the canonical config text and the version.
std::uint64_t config_seed(const Config& c);
std::string canonical_config(const Config& c);

// Builds the torsion field, mapping malformed input to ConfigError.
const TorsionField& open_field(const Config& c);

struct Timing {
  std::string stage;
  double ms = 0;
};

struct Report {
  nlohmann::json json;
  bool pass = true;
  std::vector<std::string> lines;
  std::vector<Timing> timings;
};

// command: verify, omega, valuations, basis, lmatrix, oracle, experiment.
// Throws ConfigError for bad configs and std::invalid_argument for an
// unknown command.
Report run_command(const std::string& command, const Config& c);

const std::vector<std::string>& command_names();

}  // namespace carlitz
