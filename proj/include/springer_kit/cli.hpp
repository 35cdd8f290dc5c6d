#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "springer_kit/cuspidal.hpp"
#include "springer_kit/partition.hpp"

namespace springer_kit::cli {

enum class Verb { Help, Classes, Springer, Cuspidal, Verify, Series, Levi };
enum class OutputFormat { Json, Table };

struct Command {
  Verb verb = Verb::Help;
  Integer n = 0;
  Integer e = 0;
  Integer f = 0;
  Integer max_n = 0;
  std::optional<Bipartition> bipartition;
  OutputFormat format = OutputFormat::Json;
  /// Filled for Verb::Help.
  std::string usage;
};

/// Bad command line. The message names the offending flag or argument.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Enumeration bounds; SPRINGER_KIT_MAX_RANK replaces both.
struct Bounds {
  Integer class_bound = kDefaultClassBound;
  Integer sweep_bound = kDefaultSweepBound;
};

/// Throws UsageError when SPRINGER_KIT_MAX_RANK is set but not a
/// non-negative integer.
Bounds bounds_from_environment();

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name. `--help` yields Verb::Help.
Command parse_args(std::span<const std::string> args);

/// Writes one record per line to `out`; errors go to `err` as JSON records.
/// Returns kExitVerificationFailed iff some report has identity_holds false.
int run(const Command& cmd, std::ostream& out, std::ostream& err,
        const Bounds& bounds);

/// parse_args + bounds_from_environment + run, with usage errors reported on
/// `err`. This is the whole of main().
int main_entry(std::span<const std::string> args, std::ostream& out,
               std::ostream& err);

}  // namespace springer_kit::cli
