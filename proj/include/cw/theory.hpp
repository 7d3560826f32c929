#pragma once

// Closed-form weight distributions of C1 (s even) and C2 (all cases).

#include <cstdint>
#include <string>
#include <utility>

#include "cw/codes.hpp"
#include "cw/specdist.hpp"

namespace cw {

/// (n, dimension). The dimension drops to 3m/2 (C1) or m/2 + 1 (C2) when
/// m = 2k. Throws InvalidInput unless p is an odd prime and m > k >= 1.
std::pair<std::uint64_t, unsigned> params(Digit p, unsigned m, unsigned k, Family family);

struct TheoreticalWD {
  WeightDistribution wd;
  CaseLabel label = CaseLabel::OddSOddM;
  /// Which closed form produced the counts, e.g. "c1-boundary".
  std::string formula;
};

/// C1 for even s. UnsupportedCase when s is odd.
TheoreticalWD wd_c1(Digit p, unsigned m, unsigned k);
TheoreticalWD wd_c2(Digit p, unsigned m, unsigned k);
TheoreticalWD theoretical_wd(Family family, Digit p, unsigned m, unsigned k);

struct MomentReport {
  bool zero_ok = false;          // counts[0] == 1
  bool total_ok = false;         // sum counts == p^dimension
  bool first_moment_ok = false;  // sum w counts == n (p-1) p^{dimension-1}

  bool all() const { return zero_ok && total_ok && first_moment_ok; }
};

MomentReport moment_checks(const WeightDistribution& wd);

}  // namespace cw
