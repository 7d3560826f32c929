#pragma once

// Command-line front end. Exit codes: 0 success/match, 1 verification
// mismatch (or internal consistency failure), 2 invalid input, 3 work limit,
// 4 unsupported case.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cw/codes.hpp"
#include "cw/suite.hpp"

namespace cw {

enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitInvalid = 2,
  kExitWorkLimit = 3,
  kExitUnsupported = 4,
};

enum class Source { Theory, Empirical, Both };
enum class Format { Json, Csv, Table };

/// Everything a command needs, validated before dispatch.
struct RunConfig {
  std::string command;
  Digit p = 0;
  unsigned m = 0;
  unsigned k = 0;
  Family family = Family::C1;
  Source source = Source::Theory;
  Strategy strategy = Strategy::Transform;
  Format format = Format::Json;
  /// Unset: each sweep's own default bound (or CW_WORK_LIMIT if present).
  std::optional<std::uint64_t> work_limit;
  /// 0: available parallelism.
  unsigned workers = 0;
  /// Constant term first, monic.
  std::optional<Poly> modulus;
  /// classify only: a single a = alpha^a_log instead of every nonzero a.
  std::optional<std::uint64_t> a_log;
  /// Empty: write to the supplied stream.
  std::string out_path;
};

/// Parses "c0,c1,...,1".
Poly parse_modulus(const std::string& text);

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs an already-validated configuration.
int run_config(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// The paper-suite command with a caller-supplied suite configuration.
int cmd_paper_suite(const SuiteOptions& opts, Format format, std::ostream& out,
                    std::ostream& err);

}  // namespace cw
