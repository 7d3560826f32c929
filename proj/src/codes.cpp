#include "cw/codes.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "cw/errors.hpp"
#include "cw/specdist.hpp"
#include "cw/theory.hpp"

namespace cw {

std::string to_string(Family f) { return f == Family::C1 ? "C1" : "C2"; }

std::string to_string(Strategy s) {
  return s == Strategy::Direct ? "direct" : "transform";
}

CodeSpec make_code_spec(Family family, Digit p, unsigned m, unsigned k) {
  auto [n, dim] = params(p, m, k, family);
  return CodeSpec{family, p, m, k, n, dim};
}

std::uint64_t WeightDistribution::min_distance() const {
  for (const auto& [w, c] : counts) {
    if (w > 0 && c > 0) return w;
  }
  return 0;
}

namespace {

void check_k(const FieldCtx& ctx, unsigned k) {
  if (k < 1 || k >= ctx.m()) throw InvalidInput("need 1 <= k < m");
}

// Tr(a x^{p^k+1}) by plain field arithmetic.
Digit form_value(const FieldCtx& ctx, unsigned k, FieldElement a, FieldElement x) {
  return ctx.trace(ctx.mul(a, ctx.mul(x, ctx.frobenius(x, k))));
}

std::uint64_t pair_work(const FieldCtx& ctx) {
  return static_cast<std::uint64_t>(
      std::min<unsigned __int128>(static_cast<unsigned __int128>(ctx.size()) * ctx.size(),
                                  ~std::uint64_t{0}));
}

void check_work(const FieldCtx& ctx, const SweepOptions& opts, const char* what) {
  const std::uint64_t limit = opts.work_limit.value_or(kDefaultPairLimit);
  const std::uint64_t work = pair_work(ctx);
  if (work > limit) {
    throw WorkLimitExceeded(std::string(what) + " enumeration of " + std::to_string(work) +
                            " pairs exceeds work limit " + std::to_string(limit));
  }
}

using Histogram = std::vector<std::uint64_t>;  // indexed by weight

WeightDistribution finish(const FieldCtx& ctx, unsigned k, Family family,
                          const std::vector<Histogram>& partial) {
  WeightDistribution wd;
  wd.spec = make_code_spec(family, ctx.p(), ctx.m(), k);
  const std::uint64_t multiplicity =
      ctx.m() == 2 * k ? checked_pow(ctx.p(), ctx.m() / 2) : 1;
  for (std::size_t w = 0; w < partial.front().size(); ++w) {
    std::uint64_t c = 0;
    for (const auto& h : partial) c += h[w];
    if (c == 0) continue;
    if (c % multiplicity != 0) {
      throw ConsistencyFault("weight " + std::to_string(w) + " count " + std::to_string(c) +
                             " not divisible by kernel size " + std::to_string(multiplicity));
    }
    wd.counts[w] = c / multiplicity;
  }
  return wd;
}

// Direct counting. With x = alpha^i and b = alpha^j, Tr(bx) = Tr(alpha^{i+j}),
// so zero counts reduce to comparing two lookup rows.
template <class T>
void direct_block(const PowerTraceTable& table, std::uint64_t begin, std::uint64_t end,
                  Histogram& hist) {
  const FieldCtx& ctx = table.field();
  const Digit p = ctx.p();
  const std::uint64_t n = ctx.mult_order();
  const std::uint64_t q = ctx.size();
  const auto& tr = table.trace_of_power();
  std::vector<T> lin(2 * n);
  for (std::uint64_t i = 0; i < 2 * n; ++i) lin[i] = static_cast<T>(tr[i % n]);
  std::vector<Digit> values;
  std::vector<T> neg(n);
  for (std::uint64_t a = begin; a < end; ++a) {
    table.form_values(FieldElement{a}, values);
    std::uint64_t zeros = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
      neg[i] = static_cast<T>(values[i] == 0 ? 0 : p - values[i]);
      zeros += values[i] == 0;
    }
    ++hist[q - zeros];  // b = 0
    const T* negp = neg.data();
    for (std::uint64_t j = 0; j < n; ++j) {
      const T* row = lin.data() + j;
      std::uint64_t cnt = 1;
      for (std::uint64_t i = 0; i < n; ++i) cnt += row[i] == negp[i];
      ++hist[q - cnt];
    }
  }
}

// Transform path. For fixed a and y in F_p^*, V_y[u] = sum_x zeta^{y Tr(a x^{p^k+1}) + <u,x>}
// over coordinate vectors x. With phi(b)_j = Tr(b x^j) we have Tr(bx) = <phi(b), x>, so
//   N_{a,b}(0) = (p^m + sum_{y != 0} V_y[y phi(b)]) / p.
class TransformKernel {
 public:
  explicit TransformKernel(const PowerTraceTable& table) : table_(table) {
    const FieldCtx& ctx = table.field();
    const Digit p = ctx.p();
    const std::uint64_t q = ctx.size();
    zeta_.resize(p);
    for (Digit t = 0; t < p; ++t) {
      zeta_[t] = std::polar(1.0, 2.0 * std::numbers::pi * t / p);
    }
    // index_[y-1][b] = code of y * phi(b)
    std::vector<std::uint64_t> phi(q);
    std::vector<FieldElement> basis(ctx.m());
    for (unsigned j = 0; j < ctx.m(); ++j) {
      std::vector<Digit> e(ctx.m(), 0);
      e[j] = 1;
      basis[j] = ctx.from_coeffs(e);
    }
    std::vector<Digit> coords(ctx.m());
    for (std::uint64_t b = 0; b < q; ++b) {
      for (unsigned j = 0; j < ctx.m(); ++j) {
        coords[j] = ctx.trace(ctx.mul(FieldElement{b}, basis[j]));
      }
      phi[b] = ctx.from_coeffs(coords).code;
    }
    index_.assign(p - 1, std::vector<std::uint64_t>(q));
    for (Digit y = 1; y < p; ++y) {
      for (std::uint64_t b = 0; b < q; ++b) {
        index_[y - 1][b] = ctx.scale(FieldElement{phi[b]}, y).code;
      }
    }
  }

  void run(std::uint64_t begin, std::uint64_t end, Histogram& hist) const {
    const FieldCtx& ctx = table_.field();
    const Digit p = ctx.p();
    const std::uint64_t q = ctx.size();
    const std::uint64_t n = ctx.mult_order();
    auto exp = ctx.exp_table();
    std::vector<Digit> values;
    std::vector<Digit> by_code(q);
    std::vector<std::complex<double>> buf(q), acc(q), scratch(p);
    for (std::uint64_t a = begin; a < end; ++a) {
      table_.form_values(FieldElement{a}, values);
      by_code[0] = 0;
      for (std::uint64_t i = 0; i < n; ++i) by_code[exp[i]] = values[i];
      std::fill(acc.begin(), acc.end(), std::complex<double>(0.0, 0.0));
      for (Digit y = 1; y < p; ++y) {
        for (std::uint64_t x = 0; x < q; ++x) {
          buf[x] = zeta_[static_cast<std::uint64_t>(y) * by_code[x] % p];
        }
        transform(buf, scratch);
        const auto& idx = index_[y - 1];
        for (std::uint64_t b = 0; b < q; ++b) acc[b] += buf[idx[b]];
      }
      for (std::uint64_t b = 0; b < q; ++b) {
        const double re = (static_cast<double>(q) + acc[b].real()) / p;
        const double im = acc[b].imag() / p;
        const double rounded = std::nearbyint(re);
        if (std::abs(re - rounded) >= 1e-3 || std::abs(im) >= 1e-3 || rounded < 0 ||
            rounded > static_cast<double>(q)) {
          throw PrecisionExhausted("transform residual too large at a=" +
                                   std::to_string(a) + ", b=" + std::to_string(b));
        }
        ++hist[q - static_cast<std::uint64_t>(rounded)];
      }
    }
  }

 private:
  // In-place DFT over (Z_p)^m along each base-p digit.
  void transform(std::vector<std::complex<double>>& v,
                 std::vector<std::complex<double>>& scratch) const {
    const Digit p = table_.field().p();
    const std::uint64_t q = v.size();
    for (std::uint64_t stride = 1; stride < q; stride *= p) {
      const std::uint64_t block = stride * p;
      for (std::uint64_t base = 0; base < q; base += block) {
        for (std::uint64_t off = 0; off < stride; ++off) {
          const std::uint64_t start = base + off;
          for (Digit u = 0; u < p; ++u) {
            std::complex<double> s(0.0, 0.0);
            for (Digit t = 0; t < p; ++t) {
              s += v[start + t * stride] * zeta_[static_cast<std::uint64_t>(u) * t % p];
            }
            scratch[u] = s;
          }
          for (Digit u = 0; u < p; ++u) v[start + u * stride] = scratch[u];
        }
      }
    }
  }

  const PowerTraceTable& table_;
  std::vector<std::complex<double>> zeta_;
  std::vector<std::vector<std::uint64_t>> index_;
};

}  // namespace

std::uint64_t weight_c1(const FieldCtx& ctx, unsigned k, FieldElement a, FieldElement b) {
  check_k(ctx, k);
  std::uint64_t zeros = 0;
  for (std::uint64_t code = 0; code < ctx.size(); ++code) {
    FieldElement x{code};
    Digit v = mod_add(form_value(ctx, k, a, x), ctx.trace(ctx.mul(b, x)), ctx.p());
    zeros += v == 0;
  }
  return ctx.size() - zeros;
}

std::uint64_t weight_c2(const FieldCtx& ctx, unsigned k, FieldElement a, Digit lambda) {
  check_k(ctx, k);
  if (lambda >= ctx.p()) throw InvalidInput("lambda must lie in F_p");
  std::uint64_t hits = 0;
  for (std::uint64_t code = 0; code < ctx.size(); ++code) {
    hits += form_value(ctx, k, a, FieldElement{code}) == lambda;
  }
  return lambda == 0 ? ctx.size() - hits : ctx.size() - 1 - hits;
}

std::vector<Digit> codeword_c1(const FieldCtx& ctx, unsigned k, FieldElement a,
                               FieldElement b) {
  check_k(ctx, k);
  std::vector<Digit> word(ctx.mult_order());
  for (std::uint64_t i = 0; i < word.size(); ++i) {
    FieldElement x = ctx.exp(i);
    word[i] = mod_add(form_value(ctx, k, a, x), ctx.trace(ctx.mul(b, x)), ctx.p());
  }
  return word;
}

std::vector<Digit> codeword_c2(const FieldCtx& ctx, unsigned k, FieldElement a,
                               Digit lambda) {
  check_k(ctx, k);
  if (lambda >= ctx.p()) throw InvalidInput("lambda must lie in F_p");
  std::vector<Digit> word(ctx.mult_order());
  for (std::uint64_t i = 0; i < word.size(); ++i) {
    word[i] = mod_sub(form_value(ctx, k, a, ctx.exp(i)), lambda, ctx.p());
  }
  return word;
}

std::uint64_t hamming_weight(const std::vector<Digit>& word) {
  std::uint64_t w = 0;
  for (Digit c : word) w += c != 0;
  return w;
}

WeightDistribution empirical_wd_c1(const FieldCtx& ctx, unsigned k, Strategy strategy,
                                   const SweepOptions& opts) {
  check_k(ctx, k);
  check_work(ctx, opts, "C1");
  const PowerTraceTable table(ctx, k);
  const unsigned workers = resolve_workers(opts.workers);
  std::vector<Histogram> partial(workers, Histogram(ctx.size() + 1, 0));

  if (strategy == Strategy::Direct) {
    parallel_blocks(ctx.size(), workers, [&](unsigned w, std::uint64_t b, std::uint64_t e) {
      if (ctx.p() < 256) {
        direct_block<std::uint8_t>(table, b, e, partial[w]);
      } else {
        direct_block<std::uint32_t>(table, b, e, partial[w]);
      }
    });
  } else {
    const TransformKernel kernel(table);
    parallel_blocks(ctx.size(), workers, [&](unsigned w, std::uint64_t b, std::uint64_t e) {
      kernel.run(b, e, partial[w]);
    });
  }
  return finish(ctx, k, Family::C1, partial);
}

WeightDistribution empirical_wd_c2(const FieldCtx& ctx, unsigned k, const SweepOptions& opts) {
  check_k(ctx, k);
  check_work(ctx, opts, "C2");
  const PowerTraceTable table(ctx, k);
  const unsigned workers = resolve_workers(opts.workers);
  std::vector<Histogram> partial(workers, Histogram(ctx.size() + 1, 0));
  const std::uint64_t q = ctx.size();
  parallel_blocks(q, workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t a = begin; a < end; ++a) {
      auto hist = trace_histogram(table, FieldElement{a});
      ++partial[w][q - hist[0]];
      for (Digit lambda = 1; lambda < ctx.p(); ++lambda) {
        ++partial[w][q - 1 - hist[lambda]];
      }
    }
  });
  return finish(ctx, k, Family::C2, partial);
}

std::vector<CountMismatch> diff_counts(const std::map<std::uint64_t, std::uint64_t>& left,
                                       const std::map<std::uint64_t, std::uint64_t>& right) {
  std::map<std::uint64_t, CountMismatch> merged;
  for (const auto& [w, c] : left) merged[w] = {w, c, 0};
  for (const auto& [w, c] : right) {
    auto& e = merged[w];
    e.weight = w;
    e.right = c;
  }
  std::vector<CountMismatch> out;
  for (const auto& [w, e] : merged) {
    if (e.left != e.right) out.push_back(e);
  }
  return out;
}

}  // namespace cw
