#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "cw/errors.hpp"
#include "cw/gf.hpp"

using namespace cw;

namespace {

// Independent polynomial helpers (coefficients constant term first).

Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Poly rem(Poly f, const Poly& g, Digit p) {
  f = trim(f);
  const Poly gg = trim(g);
  const Digit lead_inv = mod_inv(gg.back(), p);
  while (f.size() >= gg.size()) {
    const Digit c = mod_mul(f.back(), lead_inv, p);
    const std::size_t shift = f.size() - gg.size();
    for (std::size_t i = 0; i < gg.size(); ++i) {
      f[shift + i] = mod_sub(f[shift + i], mod_mul(c, gg[i], p), p);
    }
    f = trim(f);
  }
  return f;
}

Poly monic_from_index(Digit p, unsigned deg, std::uint64_t idx) {
  Poly f(deg + 1, 0);
  for (unsigned i = 0; i < deg; ++i) {
    f[i] = static_cast<Digit>(idx % p);
    idx /= p;
  }
  f[deg] = 1;
  return f;
}

// Irreducible iff no monic factor of degree 1..deg/2 divides it.
bool irreducible_by_trial_division(Digit p, const Poly& f) {
  const unsigned deg = static_cast<unsigned>(trim(f).size() - 1);
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (rem(f, monic_from_index(p, d, idx), p).empty()) return false;
    }
  }
  return true;
}

// Schoolbook product reduced mod the field modulus.
std::vector<Digit> slow_mul(const FieldCtx& ctx, const std::vector<Digit>& x,
                            const std::vector<Digit>& y) {
  const Digit p = ctx.p();
  Poly prod(x.size() + y.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      prod[i + j] = mod_add(prod[i + j], mod_mul(x[i], y[j], p), p);
  Poly r = rem(prod, ctx.modulus(), p);
  r.resize(ctx.m(), 0);
  return r;
}

std::uint64_t slow_order(const FieldCtx& ctx, FieldElement x) {
  FieldElement y = x;
  std::uint64_t e = 1;
  while (y != ctx.one()) {
    y = ctx.mul(y, x);
    ++e;
  }
  return e;
}

FieldElement el(const FieldCtx& ctx, std::vector<Digit> c) { return ctx.from_coeffs(c); }

}  // namespace

TEST(Gf, IsPrime) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t n = 0; n < 60; ++n)
    if (is_prime(n)) primes.push_back(n);
  EXPECT_EQ(primes, (std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41,
                                                43, 47, 53, 59}));
}

TEST(Gf, QuadraticCharacter) {
  EXPECT_EQ(quad_char(3, 1), 1);
  EXPECT_EQ(quad_char(3, 0), 0);
  EXPECT_EQ(quad_char(3, 2), -1);
  for (Digit p : {3u, 5u, 7u, 11u, 13u}) {
    std::set<Digit> squares;
    for (Digit x = 1; x < p; ++x) squares.insert(mod_mul(x, x, p));
    int sum = 0;
    for (Digit c = 0; c < p; ++c) {
      sum += quad_char(p, c);
      if (c) EXPECT_EQ(quad_char(p, c), squares.count(c) ? 1 : -1) << p << ' ' << c;
      for (Digit d = 1; d < p; ++d) {
        if (c) EXPECT_EQ(quad_char(p, mod_mul(c, d, p)), quad_char(p, c) * quad_char(p, d));
      }
    }
    EXPECT_EQ(sum, 0);
  }
}

TEST(Gf, FindIrreducibleSmall) {
  EXPECT_EQ(find_irreducible(3, 2), (Poly{1, 0, 1}));
  EXPECT_EQ(find_irreducible(5, 2), (Poly{2, 0, 1}));
}

TEST(Gf, FindIrreducibleMatchesTrialDivision) {
  for (auto [p, m] : std::vector<std::pair<Digit, unsigned>>{
           {3, 2}, {3, 3}, {3, 4}, {3, 5}, {3, 6}, {3, 8}, {5, 2}, {5, 3}, {5, 4}, {7, 2}, {7, 3}}) {
    std::uint64_t idx = 0;
    while (!irreducible_by_trial_division(p, monic_from_index(p, m, idx))) ++idx;
    EXPECT_EQ(find_irreducible(p, m), monic_from_index(p, m, idx)) << p << "^" << m;
  }
}

TEST(Gf, RabinAgreesWithTrialDivision) {
  for (auto [p, m] : std::vector<std::pair<Digit, unsigned>>{{3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}}) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < m; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      const Poly f = monic_from_index(p, m, idx);
      EXPECT_EQ(is_irreducible(p, f), irreducible_by_trial_division(p, f));
    }
  }
}

TEST(Gf, FindIrreducibleRejectsBadInput) {
  EXPECT_THROW(find_irreducible(4, 2), InvalidInput);
  EXPECT_THROW(find_irreducible(2, 3), InvalidInput);
  EXPECT_THROW(find_irreducible(3, 1), InvalidInput);
}

TEST(Gf, MakeFieldExamples) {
  const FieldCtx f3 = make_field(3, 1);
  EXPECT_EQ(f3.alpha().code, 2u);
  EXPECT_EQ(f3.inv(f3.scalar(2)).code, 2u);

  const FieldCtx f5 = make_field(5, 1);
  EXPECT_EQ(f5.alpha().code, 2u);

  const FieldCtx f9 = make_field(3, 2, Poly{1, 0, 1});
  EXPECT_EQ(f9.coeffs(f9.alpha()), (std::vector<Digit>{1, 1}));
  const FieldElement x = el(f9, {0, 1});
  EXPECT_EQ(f9.mul(x, x), f9.scalar(2));
  EXPECT_EQ(f9.pow(el(f9, {1, 1}), 8), f9.one());
  EXPECT_EQ(slow_order(f9, x), 4u);
  EXPECT_EQ(slow_order(f9, el(f9, {1, 1})), 8u);

  EXPECT_THROW(make_field(3, 2, Poly{0, 1, 1}), InvalidInput);
  EXPECT_THROW(make_field(3, 2, Poly{1, 0, 2}), InvalidInput);
  EXPECT_THROW(make_field(4, 2), InvalidInput);
  EXPECT_THROW(make_field(3, 0), InvalidInput);
}

TEST(Gf, PrimitiveIsMinimalOfFullOrder) {
  for (auto [p, m] : std::vector<std::pair<Digit, unsigned>>{{3, 1}, {5, 1}, {3, 2}, {3, 3}, {5, 2}, {7, 2}, {3, 4}}) {
    const FieldCtx ctx = make_field(p, m);
    std::uint64_t expected = 0;
    for (std::uint64_t c = 1; c < ctx.size(); ++c) {
      if (slow_order(ctx, FieldElement{c}) == ctx.mult_order()) {
        expected = c;
        break;
      }
    }
    EXPECT_EQ(ctx.alpha().code, expected);
    EXPECT_EQ(find_primitive(ctx).code, expected);
    for (std::uint64_t c = 1; c < ctx.size(); ++c) {
      EXPECT_EQ(element_order(ctx, FieldElement{c}), slow_order(ctx, FieldElement{c}));
    }
  }
}

TEST(Gf, ArithmeticMatchesSchoolbook) {
  for (auto [p, m] : std::vector<std::pair<Digit, unsigned>>{{3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
    const FieldCtx ctx = make_field(p, m);
    for (std::uint64_t a = 0; a < ctx.size(); ++a) {
      for (std::uint64_t b = 0; b < ctx.size(); ++b) {
        const FieldElement x{a}, y{b};
        EXPECT_EQ(ctx.coeffs(ctx.mul(x, y)), slow_mul(ctx, ctx.coeffs(x), ctx.coeffs(y)));
        auto cx = ctx.coeffs(x), cy = ctx.coeffs(y);
        std::vector<Digit> sum(m);
        for (unsigned j = 0; j < m; ++j) sum[j] = mod_add(cx[j], cy[j], p);
        EXPECT_EQ(ctx.coeffs(ctx.add(x, y)), sum);
        EXPECT_EQ(ctx.add(ctx.sub(x, y), y), x);
        EXPECT_EQ(ctx.add(x, ctx.neg(x)), ctx.zero());
      }
      if (a) EXPECT_EQ(ctx.mul(FieldElement{a}, ctx.inv(FieldElement{a})), ctx.one());
    }
    EXPECT_THROW(ctx.inv(ctx.zero()), InvalidInput);
  }
}

TEST(Gf, TablesAndNonTableFieldAgree) {
  const FieldCtx with = make_field(3, 4);
  const FieldCtx without = make_field(3, 4, nullptr, 1);
  ASSERT_TRUE(with.has_tables());
  ASSERT_FALSE(without.has_tables());
  EXPECT_EQ(with.alpha(), without.alpha());
  for (std::uint64_t a = 0; a < with.size(); a += 7) {
    for (std::uint64_t b = 0; b < with.size(); b += 3) {
      EXPECT_EQ(with.mul(FieldElement{a}, FieldElement{b}), without.mul(FieldElement{a}, FieldElement{b}));
    }
    if (a) EXPECT_EQ(with.log(FieldElement{a}), without.log(FieldElement{a}));
    EXPECT_EQ(with.pow(FieldElement{a}, 1234567), without.pow(FieldElement{a}, 1234567));
  }
}

TEST(Gf, ExpLogRoundTrip) {
  for (auto [p, m] : std::vector<std::pair<Digit, unsigned>>{{3, 2}, {3, 6}, {5, 4}, {3, 8}}) {
    const FieldCtx ctx = make_field(p, m);
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < ctx.mult_order(); ++i) {
      const FieldElement x = ctx.exp(i);
      EXPECT_EQ(ctx.log(x), i);
      seen.insert(x.code);
    }
    EXPECT_EQ(seen.size(), ctx.mult_order());
    EXPECT_EQ(seen.count(0), 0u);
  }
}

TEST(Gf, TraceExamples) {
  const FieldCtx f9 = make_field(3, 2, Poly{1, 0, 1});
  EXPECT_EQ(f9.trace(f9.one()), 2u);
  EXPECT_EQ(f9.trace(el(f9, {0, 1})), 0u);
  EXPECT_EQ(f9.trace(el(f9, {1, 1})), 2u);
}

TEST(Gf, TraceIsSumOfConjugates) {
  for (auto [p, m] : std::vector<std::pair<Digit, unsigned>>{{3, 2}, {3, 3}, {5, 2}, {3, 4}, {7, 2}}) {
    const FieldCtx ctx = make_field(p, m);
    for (std::uint64_t a = 0; a < ctx.size(); ++a) {
      FieldElement conj{a}, sum = ctx.zero();
      for (unsigned i = 0; i < m; ++i) {
        sum = ctx.add(sum, conj);
        FieldElement next = ctx.one();
        for (Digit t = 0; t < p; ++t) next = ctx.mul(next, conj);
        conj = next;
      }
      ASSERT_LT(sum.code, p) << "trace not in the prime field";
      EXPECT_EQ(ctx.trace(FieldElement{a}), sum.code);
    }
  }
}

TEST(Gf, TraceLinearityAndFrobenius) {
  for (auto [p, m] : std::vector<std::pair<Digit, unsigned>>{{3, 2}, {3, 4}, {5, 2}, {7, 2}}) {
    const FieldCtx ctx = make_field(p, m);
    for (std::uint64_t a = 0; a < ctx.size(); ++a) {
      const FieldElement x{a};
      EXPECT_EQ(ctx.trace(ctx.pow(x, p)), ctx.trace(x));
      EXPECT_EQ(ctx.trace(ctx.frobenius(x, 1)), ctx.trace(x));
      EXPECT_EQ(ctx.frobenius(x, m), x);
      for (Digit c = 0; c < p; ++c) {
        EXPECT_EQ(ctx.trace(ctx.scale(x, c)), mod_mul(c, ctx.trace(x), p));
      }
      for (std::uint64_t b = 0; b < ctx.size(); ++b) {
        const FieldElement y{b};
        EXPECT_EQ(ctx.trace(ctx.add(x, y)), mod_add(ctx.trace(x), ctx.trace(y), p));
      }
    }
  }
}

TEST(Gf, NonzeroFunctionalsAreBalanced) {
  for (auto [p, m] : std::vector<std::pair<Digit, unsigned>>{{3, 2}, {3, 4}, {5, 2}, {7, 2}, {3, 6}}) {
    const FieldCtx ctx = make_field(p, m);
    const std::uint64_t each = ctx.size() / p;
    std::set<std::vector<std::uint64_t>> functionals;
    for (std::uint64_t b = 1; b < ctx.size(); ++b) {
      std::vector<std::uint64_t> hist(p, 0);
      for (std::uint64_t x = 0; x < ctx.size(); ++x) {
        ++hist[ctx.trace(ctx.mul(FieldElement{b}, FieldElement{x}))];
      }
      for (auto h : hist) ASSERT_EQ(h, each);
      if (ctx.size() <= 81) {
        std::vector<std::uint64_t> values;
        for (std::uint64_t x = 0; x < ctx.size(); ++x)
          values.push_back(ctx.trace(ctx.mul(FieldElement{b}, FieldElement{x})));
        functionals.insert(values);
      }
    }
    if (ctx.size() <= 81) EXPECT_EQ(functionals.size(), ctx.size() - 1);
  }
}

TEST(Gf, ElementValidation) {
  const FieldCtx f9 = make_field(3, 2);
  EXPECT_THROW(f9.element(9), InvalidInput);
  EXPECT_EQ(f9.element(8).code, 8u);
  EXPECT_THROW(f9.from_coeffs(std::vector<Digit>{3, 0}), InvalidInput);
}
