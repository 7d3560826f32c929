#pragma once

// End-to-end reproduction of the five reference weight distributions:
// closed form vs enumeration vs the published table, plus the class-size
// check for each parameter set.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cw/codes.hpp"
#include "cw/theory.hpp"

namespace cw {

struct ReferenceCase {
  Family family;
  Digit p;
  unsigned m;
  unsigned k;
  std::uint64_t min_distance;
  std::map<std::uint64_t, std::uint64_t> counts;

  std::string name() const;
};

const std::vector<ReferenceCase>& reference_cases();

using TheoryFn = std::function<TheoreticalWD(Family, Digit, unsigned, unsigned)>;

struct SuiteOptions {
  Strategy strategy = Strategy::Transform;
  SweepOptions sweep;
  /// Replaceable for fault-injection tests.
  TheoryFn theory = theoretical_wd;
};

struct SuiteRow {
  std::string name;
  bool theory_matches_empirical = false;
  bool matches_reference = false;
  bool rsets_match = false;
  bool moments_ok = false;
  /// First (weight, theory count, empirical count) that differs.
  std::optional<CountMismatch> first_mismatch;

  bool pass() const {
    return theory_matches_empirical && matches_reference && rsets_match && moments_ok;
  }
};

struct SuiteReport {
  std::vector<SuiteRow> rows;

  bool all_pass() const;
  std::size_t passed() const;
};

SuiteReport run_reference_suite(const SuiteOptions& opts = {});

}  // namespace cw
