#pragma once

// The trace codes
//   C1 = { (Tr(a x^{p^k+1} + b x))_{x in F*} : a, b in F_{p^m} }
//   C2 = { (Tr(a x^{p^k+1}) - lambda)_{x in F*} : a in F_{p^m}, lambda in F_p }
// with coordinates ordered x = alpha^0, alpha^1, ..., alpha^{n-1}.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cw/gf.hpp"
#include "cw/parallel.hpp"

namespace cw {

enum class Family { C1, C2 };
enum class Strategy { Direct, Transform };

std::string to_string(Family f);
std::string to_string(Strategy s);

struct CodeSpec {
  Family family = Family::C1;
  Digit p = 0;
  unsigned m = 0;
  unsigned k = 0;
  std::uint64_t n = 0;
  unsigned dimension = 0;

  friend bool operator==(const CodeSpec&, const CodeSpec&) = default;
};

/// Length and dimension filled in from the parameters; validates m > k >= 1.
CodeSpec make_code_spec(Family family, Digit p, unsigned m, unsigned k);

struct WeightDistribution {
  CodeSpec spec;
  /// weight -> number of codewords; zero counts are never stored.
  std::map<std::uint64_t, std::uint64_t> counts;

  std::uint64_t count(std::uint64_t w) const {
    auto it = counts.find(w);
    return it == counts.end() ? 0 : it->second;
  }
  /// Least positive weight with a nonzero count (0 if none).
  std::uint64_t min_distance() const;

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

std::uint64_t weight_c1(const FieldCtx& ctx, unsigned k, FieldElement a, FieldElement b);
std::uint64_t weight_c2(const FieldCtx& ctx, unsigned k, FieldElement a, Digit lambda);

std::vector<Digit> codeword_c1(const FieldCtx& ctx, unsigned k, FieldElement a,
                               FieldElement b);
std::vector<Digit> codeword_c2(const FieldCtx& ctx, unsigned k, FieldElement a,
                               Digit lambda);

std::uint64_t hamming_weight(const std::vector<Digit>& word);

/// Default bound on enumerated (a, b) pairs (or (a, x) evaluations for C2).
inline constexpr std::uint64_t kDefaultPairLimit = std::uint64_t{1} << 32;

/// Empirical weight distribution of C1 by enumerating all (a, b).
/// When m = 2k each codeword is produced p^{m/2} times and the counts are
/// divided accordingly (ConsistencyFault if not exactly divisible).
/// The transform strategy throws PrecisionExhausted if rounding fails.
WeightDistribution empirical_wd_c1(const FieldCtx& ctx, unsigned k, Strategy strategy,
                                   const SweepOptions& opts = {});

/// Empirical weight distribution of C2 from one trace histogram per a.
WeightDistribution empirical_wd_c2(const FieldCtx& ctx, unsigned k,
                                   const SweepOptions& opts = {});

struct CountMismatch {
  std::uint64_t weight = 0;
  std::uint64_t left = 0;
  std::uint64_t right = 0;

  friend bool operator==(const CountMismatch&, const CountMismatch&) = default;
};

/// Weights whose counts differ, ascending.
std::vector<CountMismatch> diff_counts(const std::map<std::uint64_t, std::uint64_t>& left,
                                       const std::map<std::uint64_t, std::uint64_t>& right);

}  // namespace cw
