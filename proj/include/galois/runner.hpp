#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "galois/core.hpp"
#include "galois/engine.hpp"

namespace galois {

inline constexpr std::string_view kToolVersion = "1.0.0";

enum class Command { check_order, check_spec, check_gc, check_laws, find_counterexample, oracle };
enum class Format { text, json };

std::string_view to_string(Command c) noexcept;
std::optional<Command> parse_command(std::string_view name) noexcept;

/// Bad flags, unknown targets, inputs outside the universe. Exit status 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  Command command = Command::check_laws;
  Universe universe;
  std::string target;
  /// Restricts check-laws to one subject (a spec, order or pair name).
  std::optional<std::string> subject;
  std::optional<Pred> pred;
  std::optional<std::uint64_t> n;
  /// Comma-separated elements; zip takes two lists separated by ';'.
  std::optional<std::string> input;
  Format format = Format::text;
  std::uint64_t budget = kDefaultBudget;
  unsigned workers = 1;
  /// Off by default so that reports are byte-identical across runs.
  bool timing = false;
};

struct RunResult {
  int exit_code = 0;  // 0 pass, 1 fail / not-applicable, 2 usage or budget, 3 internal
  std::string output;
  std::string error;
};

/// Never throws; every problem ends up in exit_code and error.
RunResult run(const RunConfig& config);

/// Registered targets, one group per line, names sorted within a group.
std::string list_targets();

}  // namespace galois
