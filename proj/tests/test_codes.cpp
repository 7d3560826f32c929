#include <gtest/gtest.h>

#include <set>

#include "cw/codes.hpp"
#include "cw/errors.hpp"
#include "cw/theory.hpp"

using namespace cw;

namespace {

struct Pmk {
  Digit p;
  unsigned m, k;
};

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Distinct codewords generated by all parameters, tallied by weight.
struct Codebook {
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t distinct = 0;
};

Codebook codebook(const FieldCtx& ctx, unsigned k, Family family) {
  std::set<std::vector<Digit>> words;
  for (std::uint64_t a = 0; a < ctx.size(); ++a) {
    if (family == Family::C1) {
      for (std::uint64_t b = 0; b < ctx.size(); ++b)
        words.insert(codeword_c1(ctx, k, FieldElement{a}, FieldElement{b}));
    } else {
      for (Digit l = 0; l < ctx.p(); ++l) words.insert(codeword_c2(ctx, k, FieldElement{a}, l));
    }
  }
  Codebook out;
  out.distinct = words.size();
  for (const auto& w : words) ++out.counts[hamming_weight(w)];
  return out;
}

std::vector<Digit> shifted(const std::vector<Digit>& w) {
  std::vector<Digit> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[(i + 1) % w.size()];
  return out;
}

Poly second_irreducible(Digit p, unsigned m) {
  const Poly first = find_irreducible(p, m);
  const std::uint64_t total = ipow(p, m);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Poly f(m + 1, 0);
    std::uint64_t t = idx;
    for (unsigned i = 0; i < m; ++i) {
      f[i] = static_cast<Digit>(t % p);
      t /= p;
    }
    f[m] = 1;
    if (f != first && is_irreducible(p, f)) return f;
  }
  throw std::runtime_error("no second irreducible");
}

const std::vector<Pmk> kSmall = {{3, 2, 1}, {3, 3, 1}, {3, 3, 2}, {3, 4, 1}, {3, 4, 2},
                                 {3, 4, 3}, {5, 2, 1}, {7, 2, 1}, {5, 3, 1}, {5, 3, 2}};

}  // namespace

TEST(Codes, SpecParameters) {
  const CodeSpec c1 = make_code_spec(Family::C1, 3, 6, 1);
  EXPECT_EQ(c1.n, 728u);
  EXPECT_EQ(c1.dimension, 12u);
  EXPECT_EQ(make_code_spec(Family::C1, 3, 6, 3).dimension, 9u);
  EXPECT_EQ(make_code_spec(Family::C2, 3, 6, 3).dimension, 4u);
  EXPECT_EQ(make_code_spec(Family::C2, 3, 8, 1).dimension, 9u);
  EXPECT_THROW(make_code_spec(Family::C1, 3, 1, 1), InvalidInput);
  EXPECT_THROW(make_code_spec(Family::C2, 3, 4, 4), InvalidInput);
}

TEST(Codes, SingleWeightExamples) {
  const FieldCtx ctx = make_field(3, 4);
  EXPECT_EQ(weight_c1(ctx, 1, ctx.zero(), ctx.zero()), 0u);
  EXPECT_EQ(weight_c2(ctx, 1, ctx.zero(), 0), 0u);
  for (std::uint64_t b = 1; b < ctx.size(); ++b) {
    EXPECT_EQ(weight_c1(ctx, 1, ctx.zero(), FieldElement{b}), 2u * 27u);
  }
  for (Digit l = 1; l < 3; ++l) EXPECT_EQ(weight_c2(ctx, 1, ctx.zero(), l), 80u);
  EXPECT_EQ(hamming_weight(codeword_c1(ctx, 1, ctx.zero(), ctx.zero())), 0u);
  EXPECT_EQ(codeword_c2(ctx, 1, ctx.zero(), 0), std::vector<Digit>(80, 0));
}

TEST(Codes, CodewordWeightMatchesSingleWeight) {
  for (auto [p, m, k] : std::vector<Pmk>{{3, 2, 1}, {3, 3, 1}, {5, 2, 1}}) {
    const FieldCtx ctx = make_field(p, m);
    for (std::uint64_t a = 0; a < ctx.size(); ++a) {
      for (std::uint64_t b = 0; b < ctx.size(); ++b) {
        EXPECT_EQ(hamming_weight(codeword_c1(ctx, k, FieldElement{a}, FieldElement{b})),
                  weight_c1(ctx, k, FieldElement{a}, FieldElement{b}));
      }
      for (Digit l = 0; l < p; ++l) {
        EXPECT_EQ(hamming_weight(codeword_c2(ctx, k, FieldElement{a}, l)),
                  weight_c2(ctx, k, FieldElement{a}, l));
      }
    }
  }
}

TEST(Codes, CyclicShiftIdentities) {
  for (auto [p, m, k] : kSmall) {
    const FieldCtx ctx = make_field(p, m);
    if (ctx.size() > 100) continue;
    std::uint64_t e = ipow(p, k) + 1;
    const FieldElement ashift = ctx.pow(ctx.alpha(), e);
    for (std::uint64_t a = 0; a < ctx.size(); ++a) {
      const FieldElement fa{a};
      for (std::uint64_t b = 0; b < ctx.size(); ++b) {
        const FieldElement fb{b};
        ASSERT_EQ(shifted(codeword_c1(ctx, k, fa, fb)),
                  codeword_c1(ctx, k, ctx.mul(fa, ashift), ctx.mul(fb, ctx.alpha())));
      }
      for (Digit l = 0; l < p; ++l) {
        ASSERT_EQ(shifted(codeword_c2(ctx, k, fa, l)), codeword_c2(ctx, k, ctx.mul(fa, ashift), l));
      }
    }
  }
}

TEST(Codes, EnumerationMatchesDistinctCodebook) {
  for (auto [p, m, k] : kSmall) {
    const FieldCtx ctx = make_field(p, m);
    for (Family family : {Family::C1, Family::C2}) {
      const Codebook book = codebook(ctx, k, family);
      const CodeSpec spec = make_code_spec(family, p, m, k);
      EXPECT_EQ(book.distinct, ipow(p, spec.dimension)) << to_string(family) << ' ' << p << m << k;
      const WeightDistribution wd = family == Family::C1
                                        ? empirical_wd_c1(ctx, k, Strategy::Direct)
                                        : empirical_wd_c2(ctx, k);
      EXPECT_EQ(wd.counts, book.counts) << to_string(family) << ' ' << p << m << k;
      EXPECT_EQ(wd.spec, spec);
    }
  }
}

TEST(Codes, DegenerateSmallCase) {
  const FieldCtx ctx = make_field(3, 2);
  const WeightDistribution wd = empirical_wd_c1(ctx, 1, Strategy::Direct);
  std::uint64_t total = 0;
  for (const auto& [w, c] : wd.counts) total += c;
  EXPECT_EQ(total, 27u);
  EXPECT_EQ(wd.counts, (std::map<std::uint64_t, std::uint64_t>{{0, 1}, {5, 16}, {6, 8}, {8, 2}}));
}

TEST(Codes, StrategiesAgree) {
  for (auto [p, m, k] : std::vector<Pmk>{{3, 2, 1}, {3, 3, 1}, {3, 4, 1}, {3, 4, 2}, {5, 2, 1},
                                         {5, 3, 1}, {7, 2, 1}, {3, 5, 1}, {3, 5, 2}, {5, 4, 2},
                                         {11, 2, 1}, {13, 2, 1}}) {
    const FieldCtx ctx = make_field(p, m);
    EXPECT_EQ(empirical_wd_c1(ctx, k, Strategy::Direct), empirical_wd_c1(ctx, k, Strategy::Transform))
        << p << ' ' << m << ' ' << k;
  }
}

TEST(Codes, BasisIndependence) {
  for (auto [p, m, k] : std::vector<Pmk>{{3, 4, 1}, {3, 4, 2}, {5, 2, 1}, {3, 3, 1}, {3, 6, 1}, {5, 3, 1}}) {
    const FieldCtx a = make_field(p, m);
    const FieldCtx b = make_field(p, m, second_irreducible(p, m));
    ASSERT_NE(a.modulus(), b.modulus());
    EXPECT_EQ(empirical_wd_c1(a, k, Strategy::Transform), empirical_wd_c1(b, k, Strategy::Transform));
    EXPECT_EQ(empirical_wd_c2(a, k), empirical_wd_c2(b, k));
  }
}

TEST(Codes, WorkerCountDoesNotChangeResult) {
  const FieldCtx ctx = make_field(3, 5);
  for (Strategy s : {Strategy::Direct, Strategy::Transform}) {
    const auto one = empirical_wd_c1(ctx, 1, s, SweepOptions{1, std::nullopt});
    for (unsigned w : {2u, 5u, 8u}) EXPECT_EQ(empirical_wd_c1(ctx, 1, s, SweepOptions{w, std::nullopt}), one);
  }
  const auto c2 = empirical_wd_c2(ctx, 2, SweepOptions{1, std::nullopt});
  EXPECT_EQ(empirical_wd_c2(ctx, 2, SweepOptions{4, std::nullopt}), c2);
}

TEST(Codes, WorkLimit) {
  const FieldCtx ctx = make_field(3, 4);
  EXPECT_THROW(empirical_wd_c1(ctx, 1, Strategy::Direct, SweepOptions{1, 1000}), WorkLimitExceeded);
  EXPECT_THROW(empirical_wd_c2(ctx, 1, SweepOptions{1, 1000}), WorkLimitExceeded);
  EXPECT_NO_THROW(empirical_wd_c1(ctx, 1, Strategy::Direct, SweepOptions{1, 6561}));
}

TEST(Codes, MinimumDistances) {
  const FieldCtx f729 = make_field(3, 6);
  EXPECT_EQ(empirical_wd_c1(f729, 1, Strategy::Transform).min_distance(), 432u);
  EXPECT_EQ(empirical_wd_c2(f729, 2).min_distance(), 468u);
}

TEST(Codes, DiffCounts) {
  const std::map<std::uint64_t, std::uint64_t> l{{0, 1}, {4, 2}, {6, 3}};
  const std::map<std::uint64_t, std::uint64_t> r{{0, 1}, {4, 3}, {7, 1}};
  EXPECT_EQ(diff_counts(l, r),
            (std::vector<CountMismatch>{{4, 2, 3}, {6, 3, 0}, {7, 0, 1}}));
  EXPECT_TRUE(diff_counts(l, l).empty());
}
