#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hecketl::cli {

enum class Command { group, kl, tl, verify, scan };
enum class Format { json, table };

struct RunConfig {
  Command command = Command::group;
  std::string graph;
  /// Check names for verify and scan.
  std::vector<std::string> targets;
  Format format = Format::table;
  std::optional<std::string> cache_dir;
  int jobs = 1;
  /// Largest group the run may enumerate.
  std::size_t max_order = 100000;
  /// group: one row per element.
  bool list = false;
  /// Leave wall-clock times out of reports.
  bool timing = true;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfigError = 2;

/// Targets accepted by `verify`; "lemma-2-1-3" is an alias for "b-bound".
const std::vector<std::string>& verify_targets();
/// Targets accepted by `scan`.
const std::vector<std::string>& scan_targets();

/// Executes the command, writing the report to `out` and diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace hecketl::cli
