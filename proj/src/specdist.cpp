#include "cw/specdist.hpp"

#include <numeric>

#include "cw/errors.hpp"
#include "cw/quadform.hpp"

namespace cw {

std::string to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::OddSOddM:
      return "ODD_S_ODD_M";
    case CaseLabel::OddSEvenM:
      return "ODD_S_EVEN_M";
    case CaseLabel::Boundary:
      return "BOUNDARY";
    case CaseLabel::Deep:
      return "DEEP";
  }
  return "?";
}

unsigned two_adic_valuation(std::uint64_t n) {
  if (n == 0) throw InvalidInput("2-adic valuation of zero");
  unsigned e = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++e;
  }
  return e;
}

CaseInfo case_of(Digit p, unsigned m, unsigned k) {
  if (!is_prime(p) || p == 2) throw InvalidInput("p must be an odd prime");
  if (k < 1 || m <= k) throw InvalidInput("parameters require m > k >= 1");
  CaseInfo c;
  c.p = p;
  c.m = m;
  c.k = k;
  c.d = std::gcd(k, m);
  c.s = m / c.d;
  c.v2m = two_adic_valuation(m);
  c.v2k = two_adic_valuation(k);
  if (c.v2m <= c.v2k) {
    c.label = m % 2 == 1 ? CaseLabel::OddSOddM : CaseLabel::OddSEvenM;
  } else if (c.v2m == c.v2k + 1) {
    c.label = CaseLabel::Boundary;
  } else {
    c.label = CaseLabel::Deep;
  }
  c.is_semiprimitive_degenerate = (m == 2 * k);
  return c;
}

RSetSizes lemma3_expected(Digit p, unsigned m, unsigned k) {
  const CaseInfo c = case_of(p, m, k);
  const std::uint64_t n = checked_pow(p, m) - 1;
  RSetSizes r;
  if (!c.s_even()) {
    r.r0_plus = n / 2;
    r.r0_minus = n / 2;
  } else {
    const std::uint64_t pd = checked_pow(p, c.d);
    if (n % (pd + 1) != 0) throw ConsistencyFault("p^d + 1 does not divide p^m - 1");
    const std::uint64_t small = n / (pd + 1);
    const std::uint64_t large = pd * small;
    if (c.label == CaseLabel::Boundary) {
      r.r0_minus = large;
      r.r1_plus = small;
    } else {
      r.r0_plus = large;
      r.r1_minus = small;
    }
  }
  r.r0 = r.r0_plus + r.r0_minus;
  r.r1 = r.r1_plus + r.r1_minus;
  return r;
}

RSetSizes empirical_rsets(const FieldCtx& ctx, unsigned k, const SweepOptions& opts) {
  case_of(ctx.p(), ctx.m(), k);
  const std::uint64_t limit = opts.work_limit.value_or(kDefaultSweepLimit);
  if (ctx.size() > limit) {
    throw WorkLimitExceeded("classification sweep over " + std::to_string(ctx.size()) +
                            " elements exceeds work limit " + std::to_string(limit));
  }
  const unsigned workers = resolve_workers(opts.workers);
  std::vector<RSetSizes> partial(workers);
  parallel_blocks(ctx.mult_order(), workers,
                  [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
                    RSetSizes& acc = partial[w];
                    for (std::uint64_t i = begin; i < end; ++i) {
                      // a ranges over F* as codes 1..p^m-1
                      QuadFormProfile prof = classify(ctx, k, FieldElement{i + 1});
                      if (prof.i == 0) {
                        (prof.eps > 0 ? acc.r0_plus : acc.r0_minus) += 1;
                      } else {
                        (prof.eps > 0 ? acc.r1_plus : acc.r1_minus) += 1;
                      }
                    }
                  });
  RSetSizes total;
  for (const auto& s : partial) {
    total.r0_plus += s.r0_plus;
    total.r0_minus += s.r0_minus;
    total.r1_plus += s.r1_plus;
    total.r1_minus += s.r1_minus;
  }
  total.r0 = total.r0_plus + total.r0_minus;
  total.r1 = total.r1_plus + total.r1_minus;
  return total;
}

PowerTraceTable::PowerTraceTable(const FieldCtx& ctx, unsigned k) : ctx_(&ctx), k_(k) {
  if (k < 1 || k >= ctx.m()) throw InvalidInput("need 1 <= k < m");
  if (!ctx.has_tables()) {
    throw InvalidInput("field too large for tabulated enumeration");
  }
  const std::uint64_t n = ctx.mult_order();
  exponent_ = (checked_pow(ctx.p(), k % ctx.m()) + 1) % n;
  trexp_.resize(n);
  auto exp = ctx.exp_table();
  for (std::uint64_t j = 0; j < n; ++j) trexp_[j] = ctx.trace(FieldElement{exp[j]});
}

void PowerTraceTable::form_values(FieldElement a, std::vector<Digit>& out) const {
  const std::uint64_t n = ctx_->mult_order();
  out.assign(n, 0);
  if (a.code == 0) return;
  std::uint64_t idx = ctx_->log(a);
  for (std::uint64_t i = 0; i < n; ++i) {
    out[i] = trexp_[idx];
    idx += exponent_;
    if (idx >= n) idx -= n;
  }
}

std::vector<std::uint64_t> trace_histogram(const PowerTraceTable& table, FieldElement a) {
  const FieldCtx& ctx = table.field();
  std::vector<std::uint64_t> hist(ctx.p(), 0);
  hist[0] = 1;  // x = 0
  std::vector<Digit> values;
  table.form_values(a, values);
  for (Digit v : values) ++hist[v];
  return hist;
}

std::vector<std::uint64_t> trace_histogram(const FieldCtx& ctx, unsigned k, FieldElement a) {
  return trace_histogram(PowerTraceTable(ctx, k), a);
}

}  // namespace cw
