#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "loopnr/io.hpp"

namespace loopnr {

/// Fixed process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalid = 1,
  kExitParse = 2,
  kExitBound = 3,
  kExitHypothesis = 4,
  kExitInternal = 5,  ///< two independent computations disagreed
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

struct AnalyzeOptions {
  bool subloops = false;
  bool local = false;
  bool radical = false;
  bool idempotents = false;
  bool text = false;
  bool timing = false;

  /// No analysis flag given: run every analysis that applies, recording the
  /// ones that are out of bounds or inapplicable instead of failing.
  bool all() const noexcept { return !subloops && !local && !radical && !idempotents; }
};

struct DecomposeOptions {
  bool verify_uniqueness = false;
  bool text = false;
};

struct HomOptions {
  bool transfer = false;
  bool text = false;
};

/// A path to an existing file is loaded; anything else is read as a generator spec.
Structure load_structure(const std::string& path_or_spec, const Limits& limits = {});

CommandResult cmd_check(const std::string& path, const Limits& limits = {});
CommandResult cmd_analyze(const std::string& path_or_spec, const AnalyzeOptions& options, const Limits& limits = {});
CommandResult cmd_decompose(const std::string& path_or_spec, const DecomposeOptions& options,
                            const Limits& limits = {});
CommandResult cmd_hom(const std::string& source, const std::string& target, const std::string& map_path,
                      const HomOptions& options, const Limits& limits = {});
CommandResult cmd_generate(const std::string& spec, const Limits& limits = {});
CommandResult cmd_catalog(bool text = false);

/// The analysis payload behind cmd_analyze, without timing.
nlohmann::json analysis_report(const Structure& s, const AnalyzeOptions& options, const Limits& limits = {});
nlohmann::json decomposition_report(const Structure& s, const DecomposeOptions& options, const Limits& limits = {});

/// Indented "key: value" rendering of a report.
std::string render_text(const nlohmann::json& report);

/// 16 hex digits of FNV-1a over the compact dump.
std::string payload_hash(const nlohmann::json& payload);

}  // namespace loopnr
