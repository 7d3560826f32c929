#pragma once

// Parameter case analysis for (p, m, k), and the distribution of the
// quadratic-form classes over all nonzero a.

#include <cstdint>
#include <string>
#include <vector>

#include "cw/gf.hpp"
#include "cw/parallel.hpp"

namespace cw {

enum class CaseLabel { OddSOddM, OddSEvenM, Boundary, Deep };

std::string to_string(CaseLabel label);

/// Largest e with 2^e | n (n > 0).
unsigned two_adic_valuation(std::uint64_t n);

struct CaseInfo {
  Digit p = 0;
  unsigned m = 0;
  unsigned k = 0;
  unsigned d = 0;  // gcd(k, m)
  unsigned s = 0;  // m / d
  unsigned v2m = 0;
  unsigned v2k = 0;
  CaseLabel label = CaseLabel::OddSOddM;
  bool is_semiprimitive_degenerate = false;  // m == 2k

  bool s_even() const { return label == CaseLabel::Boundary || label == CaseLabel::Deep; }
};

/// Throws InvalidInput unless p is an odd prime and m > k >= 1.
CaseInfo case_of(Digit p, unsigned m, unsigned k);

/// Cardinalities of the rank classes R_i (rank m - 2di) and their sign
/// subclasses R_{i,+1}, R_{i,-1}.
struct RSetSizes {
  std::uint64_t r0 = 0;
  std::uint64_t r1 = 0;
  std::uint64_t r0_plus = 0;
  std::uint64_t r0_minus = 0;
  std::uint64_t r1_plus = 0;
  std::uint64_t r1_minus = 0;

  friend bool operator==(const RSetSizes&, const RSetSizes&) = default;
};

/// Closed-form class sizes for the case of (p, m, k).
RSetSizes lemma3_expected(Digit p, unsigned m, unsigned k);

inline constexpr std::uint64_t kDefaultSweepLimit = std::uint64_t{1} << 20;

/// Classifies every nonzero a and tallies the classes. The work measure is
/// p^m (default bound kDefaultSweepLimit).
RSetSizes empirical_rsets(const FieldCtx& ctx, unsigned k, const SweepOptions& opts = {});

/// Tr(alpha^j) for all j, plus the exponent p^k + 1, so that
/// Tr(a x^{p^k+1}) at x = alpha^i is values[(log a + i (p^k+1)) mod (p^m-1)].
/// Requires a field with tables.
class PowerTraceTable {
 public:
  PowerTraceTable(const FieldCtx& ctx, unsigned k);

  const FieldCtx& field() const { return *ctx_; }
  unsigned k() const { return k_; }
  /// Tr(alpha^j), j in [0, p^m - 1).
  const std::vector<Digit>& trace_of_power() const { return trexp_; }

  /// out[i] = Tr(a alpha^{i (p^k+1)}) for i in [0, p^m - 1); zeros for a = 0.
  void form_values(FieldElement a, std::vector<Digit>& out) const;

 private:
  const FieldCtx* ctx_;
  unsigned k_;
  std::uint64_t exponent_;  // (p^k + 1) mod (p^m - 1)
  std::vector<Digit> trexp_;
};

/// N_a(beta) for beta = 0..p-1 (any a, including 0).
std::vector<std::uint64_t> trace_histogram(const PowerTraceTable& table, FieldElement a);
std::vector<std::uint64_t> trace_histogram(const FieldCtx& ctx, unsigned k, FieldElement a);

}  // namespace cw
