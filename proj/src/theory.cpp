#include "cw/theory.hpp"

#include <limits>
#include <vector>

#include "cw/errors.hpp"

namespace cw {

namespace {

using Int = __int128;

Int ipow(Int base, unsigned e) {
  constexpr Int kMax = static_cast<Int>(std::numeric_limits<std::int64_t>::max()) << 32;
  Int r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > kMax / base) throw InvalidInput("closed-form evaluation overflows");
    r *= base;
  }
  return r;
}

Int exact_div(Int num, Int den) {
  if (den == 0 || num % den != 0) {
    throw ConsistencyFault("closed-form frequency is not an integer");
  }
  return num / den;
}

struct Term {
  Int weight;
  Int count;
};

WeightDistribution assemble(Family family, Digit p, unsigned m, unsigned k,
                            const std::vector<Term>& terms) {
  WeightDistribution wd;
  wd.spec = make_code_spec(family, p, m, k);
  wd.counts[0] = 1;
  for (const Term& t : terms) {
    if (t.count < 0 || t.weight < 0 || t.weight > static_cast<Int>(wd.spec.n)) {
      throw ConsistencyFault("closed form produced an invalid (weight, count) term");
    }
    if (t.count == 0) continue;
    Int merged = static_cast<Int>(wd.count(static_cast<std::uint64_t>(t.weight))) + t.count;
    if (merged > static_cast<Int>(std::numeric_limits<std::uint64_t>::max())) {
      throw InvalidInput("weight count exceeds 64-bit range");
    }
    wd.counts[static_cast<std::uint64_t>(t.weight)] = static_cast<std::uint64_t>(merged);
  }
  return wd;
}

// Shared quantities; all exponents are integral whenever m is even.
struct Powers {
  Int p, q, n, top, pd, h, big_h, g, low, small, large;

  Powers(Digit prime, unsigned m, unsigned d) {
    p = prime;
    q = ipow(p, m);
    n = q - 1;
    top = ipow(p, m - 1);      // p^{m-1}
    pd = ipow(p, d);
    if (m % 2 == 0) {
      h = ipow(p, (m - 2) / 2);  // p^{(m-2)/2}
    } else {
      h = ipow(p, (m - 1) / 2);  // p^{(m-1)/2}
    }
    if (m % 2 == 0 && m >= 2 * d + 2) {
      big_h = ipow(p, (m + 2 * d - 2) / 2);
      g = ipow(p, (m - 2 * d - 2) / 2);
      low = ipow(p, m - 2 * d - 1);
    } else {
      big_h = g = low = 0;
    }
    small = 0;
    large = 0;
  }

  void rank_class_sizes() {
    small = exact_div(n, pd + 1);
    large = pd * small;
  }
};

}  // namespace

std::pair<std::uint64_t, unsigned> params(Digit p, unsigned m, unsigned k, Family family) {
  case_of(p, m, k);
  const std::uint64_t n = checked_pow(p, m) - 1;
  const bool degenerate = m == 2 * k;
  unsigned dim;
  if (family == Family::C1) {
    dim = degenerate ? 3 * m / 2 : 2 * m;
  } else {
    dim = degenerate ? m / 2 + 1 : m + 1;
  }
  return {n, dim};
}

TheoreticalWD wd_c1(Digit p, unsigned m, unsigned k) {
  const CaseInfo c = case_of(p, m, k);
  if (!c.s_even()) {
    throw UnsupportedCase("C1 closed form covers even s only; s = " + std::to_string(c.s) +
                          " is odd");
  }
  Powers w(p, m, c.d);
  w.rank_class_sizes();
  const Int pm1 = w.p - 1;
  const Int base = pm1 * w.top;  // (p-1) p^{m-1}
  std::vector<Term> t;
  std::string formula;

  if (c.is_semiprimitive_degenerate) {
    const Int half = ipow(w.p, m / 2) - 1;
    t = {
        {base, w.n},
        {pm1 * (w.top + w.h), (w.top - pm1 * w.h) * half},
        {base - w.h, pm1 * (w.top + w.h) * half},
    };
    formula = "c1-degenerate";
  } else if (c.label == CaseLabel::Boundary) {
    t = {
        {base, w.n * (1 + ipow(w.p, m - c.d) - ipow(w.p, m - 2 * c.d))},
        {pm1 * (w.top + w.h), (w.top - pm1 * w.h) * w.large},
        {base - w.h, pm1 * (w.top + w.h) * w.large},
        {pm1 * (w.top - w.big_h), (w.low + pm1 * w.g) * w.small},
        {base + w.big_h, pm1 * (w.low - w.g) * w.small},
    };
    formula = "c1-boundary";
  } else {
    t = {
        {base, w.n * (1 + ipow(w.p, m - c.d) - ipow(w.p, m - 2 * c.d))},
        {pm1 * (w.top - w.h), (w.top + pm1 * w.h) * w.large},
        {base + w.h, pm1 * (w.top - w.h) * w.large},
        {pm1 * (w.top + w.big_h), (w.low - pm1 * w.g) * w.small},
        {base - w.big_h, pm1 * (w.low + w.g) * w.small},
    };
    formula = "c1-deep";
  }
  return TheoreticalWD{assemble(Family::C1, p, m, k, t), c.label, formula};
}

TheoreticalWD wd_c2(Digit p, unsigned m, unsigned k) {
  const CaseInfo c = case_of(p, m, k);
  Powers w(p, m, c.d);
  const Int pm1 = w.p - 1;
  const Int base = pm1 * w.top;
  std::vector<Term> t{{w.n, pm1}};  // nonzero constant words
  std::string formula;

  switch (c.label) {
    case CaseLabel::OddSOddM: {
      const Int half = exact_div(pm1 * w.n, 2);
      t.push_back({base, w.n});
      t.push_back({base - w.h - 1, half});
      t.push_back({base + w.h - 1, half});
      formula = "c2-odd-m";
      break;
    }
    case CaseLabel::OddSEvenM: {
      const Int half = exact_div(pm1 * w.n, 2);
      const Int half_n = exact_div(w.n, 2);
      t.push_back({base - w.h - 1, half});
      t.push_back({base + w.h - 1, half});
      t.push_back({pm1 * (w.top - w.h), half_n});
      t.push_back({pm1 * (w.top + w.h), half_n});
      formula = "c2-even-m-odd-s";
      break;
    }
    case CaseLabel::Boundary: {
      if (c.is_semiprimitive_degenerate) {
        const Int half = ipow(w.p, m / 2) - 1;
        t.push_back({pm1 * (w.top + w.h), half});
        t.push_back({base - w.h - 1, pm1 * half});
        formula = "c2-degenerate";
      } else {
        w.rank_class_sizes();
        t.push_back({pm1 * (w.top + w.h), w.large});
        t.push_back({base - w.h - 1, pm1 * w.large});
        t.push_back({pm1 * (w.top - w.big_h), w.small});
        t.push_back({base + w.big_h - 1, pm1 * w.small});
        formula = "c2-boundary";
      }
      break;
    }
    case CaseLabel::Deep: {
      w.rank_class_sizes();
      t.push_back({pm1 * (w.top - w.h), w.large});
      t.push_back({base + w.h - 1, pm1 * w.large});
      t.push_back({pm1 * (w.top + w.big_h), w.small});
      t.push_back({base - w.big_h - 1, pm1 * w.small});
      formula = "c2-deep";
      break;
    }
  }
  return TheoreticalWD{assemble(Family::C2, p, m, k, t), c.label, formula};
}

TheoreticalWD theoretical_wd(Family family, Digit p, unsigned m, unsigned k) {
  return family == Family::C1 ? wd_c1(p, m, k) : wd_c2(p, m, k);
}

MomentReport moment_checks(const WeightDistribution& wd) {
  using U = unsigned __int128;
  const auto& s = wd.spec;
  U total = 0, moment = 0;
  for (const auto& [w, c] : wd.counts) {
    total += c;
    moment += static_cast<U>(w) * c;
  }
  U pdim = 1;
  for (unsigned i = 0; i + 1 < s.dimension; ++i) pdim *= s.p;
  MomentReport r;
  r.zero_ok = wd.count(0) == 1;
  r.total_ok = total == pdim * s.p;
  r.first_moment_ok = moment == static_cast<U>(s.n) * (s.p - 1) * pdim;
  return r;
}

}  // namespace cw
