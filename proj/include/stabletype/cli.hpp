#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stabletype/equivalence.hpp"

namespace stabletype::cli {

struct CommandRequest {
  std::string command;  ///< info, equiv, rep-table, weyl, pointwise, mw-decompose, burnside-rank, corpus
  std::vector<std::string> groups;
  std::optional<unsigned> prime;
  bool json = false;
  bool raw = false;
  bool regular = false;
  Method method = Method::Auto;
  std::string filter;
  std::optional<std::size_t> order_cap;
  std::optional<std::size_t> subgroup_cap;
};

struct CommandResult {
  int exit_code = 0;
  std::string out;  ///< report for stdout
  std::string err;  ///< single-line JSON error record, empty on success
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitError = 2;

/// Runs one command. Never throws: library errors become exit code 2 and
/// an error record naming the stage that failed.
CommandResult run(const CommandRequest& request);

/// Parses "auto", "general", "normal-sylow", "reduced-cyclic".
std::optional<Method> parse_method(const std::string& s);

struct CorpusCase {
  std::string name;
  /// Returns true on pass; may fill in a short detail.
  std::function<bool(std::string& detail)> check;
};

/// The built-in cases behind `corpus`.
const std::vector<CorpusCase>& builtin_corpus();

/// Runs cases whose name contains `filter` and prints one row per case.
CommandResult run_corpus(const std::vector<CorpusCase>& cases, const std::string& filter, bool json);

}  // namespace stabletype::cli
