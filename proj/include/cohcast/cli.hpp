#pragma once

#include "cohcast/broadcast.hpp"
#include "cohcast/serialize.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cohcast {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIoError = 1;
inline constexpr int kExitInvalidState = 2;
inline constexpr int kExitTableMismatch = 3;
inline constexpr int kExitPropertyViolation = 4;

/// Parsed command-line configuration shared by all subcommands.
struct RunConfig {
  bool mode_set = false;
  CloneMode mode = CloneMode::local;
  bool both_modes = true;  // tables / crosscheck / verify default
  std::optional<double> lambda;

  std::optional<std::string> family;  // "mcs-mis" | "bds"
  std::optional<double> p;
  std::vector<double> beta;  // three entries when set
  std::optional<std::string> state_file;
  std::optional<std::string> density_file;
  std::string basis = "computational";  // or "bell" or a JSON unitary file

  std::string emit;  // "text" | "json" | "csv", per-command default
  std::optional<std::string> out;

  double resolution = 0.02;
  int samples = 500;
  std::uint64_t seed = 0;
};

/// Machine implied by the config: --lambda when given, else the
/// state-independent point of the mode.
MachineParam machine_from_config(const RunConfig& cfg);

/// Resolves the state specification (family parameters or a file).  Throws
/// std::invalid_argument / std::domain_error on malformed input; file-read
/// failures surface as std::ios_base::failure.
LoadedState load_state_from_config(const RunConfig& cfg);

/// Reference broadcasting-range rows for the Bell-diagonal family at the
/// state-independent machines, used as a regression fixture by `tables`.
struct PublishedRow {
  double beta1 = 0.0, beta3 = 0.0;
  std::vector<Beta2Interval> intervals;
};
const std::vector<PublishedRow>& published_ranges(CloneMode mode);

struct TableRowComparison {
  double beta1 = 0.0, beta3 = 0.0;
  Beta2Range computed;
  std::vector<Beta2Interval> published;
  bool match = false;
};

/// Recomputes every fixture row and compares at 3-decimal rounding.
std::vector<TableRowComparison> compare_published_tables(CloneMode mode);

int run_coherence(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_clone(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_tables(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_region(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_crosscheck(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace cohcast
