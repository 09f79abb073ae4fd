#pragma once

#include "flatkit_cli/io.hpp"

#include "flatkit/degeneracy.hpp"
#include "flatkit/verify.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace flatkit::report {

using nlohmann::json;

// Exit-code contract shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;  // a proven-theorem check failed
inline constexpr int kExitUsage = 2;      // usage or parse error
inline constexpr int kExitBudget = 3;     // search node budget exceeded

struct Options {
  int jobs = 1;
  SearchLimits limits;
  bool include_trivial = false;
  std::string format = "json";  // "json" or "csv"
};

extern const std::vector<std::string> kCheckNames;

json instance_json(const Instance& inst);

json flats_document(const Instance& inst, std::optional<int> rank, bool list,
                    const Options& opt);

json degeneracy_document(const Instance& inst, int k, bool stratify,
                         const Options& opt);

// Runs the requested checks (all applicable ones when `checks` is empty);
// inapplicable requested checks are reported as skipped. Sets `exit_code` to
// kExitViolation when a proven-theorem check fails.
json verify_document(const Instance& inst, const std::vector<std::string>& checks,
                     const Options& opt, int& exit_code);

// Consolidated document over every instance file in a directory, ordered by
// file name.
json corpus_document(const std::string& dir, const Options& opt, int& exit_code);

// Renders a document as pretty JSON or as the flat CSV table described in the
// README. Both renderings are byte-deterministic.
std::string render(const json& doc, const std::string& format);

}  // namespace flatkit::report
