#include "cw/gf.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "cw/errors.hpp"

namespace cw {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::int64_t>::max();
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > kMax / base) {
      throw InvalidInput("integer overflow computing " + std::to_string(base) +
                         "^" + std::to_string(exp));
    }
    r *= base;
  }
  return r;
}

Digit mod_add(Digit x, Digit y, Digit p) {
  std::uint64_t s = std::uint64_t{x} + y;
  return static_cast<Digit>(s >= p ? s - p : s);
}

Digit mod_sub(Digit x, Digit y, Digit p) {
  return x >= y ? x - y : static_cast<Digit>(std::uint64_t{x} + p - y);
}

Digit mod_mul(Digit x, Digit y, Digit p) {
  return static_cast<Digit>(std::uint64_t{x} * y % p);
}

Digit mod_pow(Digit x, std::uint64_t e, Digit p) {
  Digit r = 1 % p;
  Digit b = x % p;
  while (e) {
    if (e & 1) r = mod_mul(r, b, p);
    b = mod_mul(b, b, p);
    e >>= 1;
  }
  return r;
}

Digit mod_inv(Digit x, Digit p) {
  if (x % p == 0) throw InvalidInput("inverse of zero in F_p");
  return mod_pow(x, p - 2, p);
}

int quad_char(Digit p, Digit c) {
  c %= p;
  if (c == 0) return 0;
  return mod_pow(c, (p - 1) / 2, p) == 1 ? 1 : -1;
}

namespace poly {

Poly normalized(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

int degree(const Poly& f) {
  for (std::size_t i = f.size(); i > 0; --i) {
    if (f[i - 1] != 0) return static_cast<int>(i - 1);
  }
  return -1;
}

Poly mul(const Poly& f, const Poly& g, Digit p) {
  int df = degree(f);
  int dg = degree(g);
  if (df < 0 || dg < 0) return {};
  Poly r(static_cast<std::size_t>(df + dg + 1), 0);
  for (int i = 0; i <= df; ++i) {
    if (f[i] == 0) continue;
    for (int j = 0; j <= dg; ++j) {
      r[i + j] = mod_add(r[i + j], mod_mul(f[i], g[j], p), p);
    }
  }
  return normalized(std::move(r));
}

Poly mod(const Poly& f, const Poly& g, Digit p) {
  int dg = degree(g);
  if (dg < 0) throw InvalidInput("polynomial division by zero");
  Poly r = normalized(f);
  Digit lead_inv = mod_inv(g[dg], p);
  for (int dr = degree(r); dr >= dg; dr = degree(r)) {
    Digit c = mod_mul(r[dr], lead_inv, p);
    int shift = dr - dg;
    for (int j = 0; j <= dg; ++j) {
      r[shift + j] = mod_sub(r[shift + j], mod_mul(c, g[j], p), p);
    }
    r = normalized(std::move(r));
  }
  return r;
}

Poly gcd(Poly f, Poly g, Digit p) {
  f = normalized(std::move(f));
  g = normalized(std::move(g));
  while (!g.empty()) {
    Poly r = mod(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  if (!f.empty()) {
    Digit li = mod_inv(f.back(), p);
    for (auto& c : f) c = mod_mul(c, li, p);
  }
  return f;
}

Poly pow_mod(Poly base, std::uint64_t e, const Poly& modulus, Digit p) {
  Poly r = mod(Poly{1}, modulus, p);
  base = mod(base, modulus, p);
  while (e) {
    if (e & 1) r = mod(mul(r, base, p), modulus, p);
    base = mod(mul(base, base, p), modulus, p);
    e >>= 1;
  }
  return r;
}

}  // namespace poly

namespace {

void require_odd_prime(std::uint64_t p) {
  if (!is_prime(p) || p == 2) {
    throw InvalidInput("p must be an odd prime, got " + std::to_string(p));
  }
  if (p >= (std::uint64_t{1} << 31)) {
    throw InvalidInput("p must be below 2^31");
  }
}

// x^{p^i} mod f, by i successive p-th powers.
Poly x_pow_p_iter(const Poly& f, unsigned i, Digit p) {
  Poly r = poly::mod(Poly{0, 1}, f, p);
  for (unsigned t = 0; t < i; ++t) r = poly::pow_mod(r, p, f, p);
  return r;
}

Poly sub_x(Poly g, Digit p) {
  if (g.size() < 2) g.resize(2, 0);
  g[1] = mod_sub(g[1], 1, p);
  return poly::normalized(std::move(g));
}

}  // namespace

bool is_irreducible(Digit p, const Poly& f) {
  Poly g = poly::normalized(f);
  int n = poly::degree(g);
  if (n < 1) return false;
  if (n == 1) return true;
  // x^{p^n} = x mod g
  if (!sub_x(x_pow_p_iter(g, static_cast<unsigned>(n), p), p).empty()) return false;
  for (auto q : prime_factors(static_cast<std::uint64_t>(n))) {
    Poly h = sub_x(x_pow_p_iter(g, static_cast<unsigned>(n / q), p), p);
    if (poly::degree(poly::gcd(h, g, p)) != 0) return false;
  }
  return true;
}

Poly find_irreducible(Digit p, unsigned m) {
  require_odd_prime(p);
  if (m < 2) throw InvalidInput("find_irreducible requires m >= 2");
  std::uint64_t count = checked_pow(p, m);
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f(m + 1, 0);
    std::uint64_t c = code;
    for (unsigned j = 0; j < m; ++j) {
      f[j] = static_cast<Digit>(c % p);
      c /= p;
    }
    f[m] = 1;
    if (is_irreducible(p, f)) return f;
  }
  // Unreachable: irreducibles exist in every degree.
  throw ConsistencyFault("no irreducible polynomial found");
}

FieldElement FieldCtx::element(std::uint64_t code) const {
  if (code >= size_) {
    throw InvalidInput("element code " + std::to_string(code) + " out of range");
  }
  return {code};
}

FieldElement FieldCtx::from_coeffs(std::span<const Digit> coeffs) const {
  if (coeffs.size() > m_) {
    throw InvalidInput("coefficient vector longer than extension degree");
  }
  std::uint64_t code = 0;
  for (std::size_t j = coeffs.size(); j > 0; --j) {
    if (coeffs[j - 1] >= p_) throw InvalidInput("coefficient out of range");
    code = code * p_ + coeffs[j - 1];
  }
  return {code};
}

std::vector<Digit> FieldCtx::coeffs(FieldElement x) const {
  std::vector<Digit> out(m_);
  std::uint64_t c = x.code;
  for (unsigned j = 0; j < m_; ++j) {
    out[j] = static_cast<Digit>(c % p_);
    c /= p_;
  }
  return out;
}

Digit FieldCtx::coeff(FieldElement x, unsigned j) const {
  std::uint64_t c = x.code;
  for (unsigned t = 0; t < j; ++t) c /= p_;
  return static_cast<Digit>(c % p_);
}

FieldElement FieldCtx::add(FieldElement x, FieldElement y) const {
  std::uint64_t a = x.code, b = y.code, out = 0, place = 1;
  for (unsigned j = 0; j < m_; ++j) {
    out += place * mod_add(static_cast<Digit>(a % p_), static_cast<Digit>(b % p_), p_);
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return {out};
}

FieldElement FieldCtx::scale(FieldElement x, Digit c) const {
  c %= p_;
  std::uint64_t a = x.code, out = 0, place = 1;
  for (unsigned j = 0; j < m_; ++j) {
    out += place * mod_mul(static_cast<Digit>(a % p_), c, p_);
    a /= p_;
    place *= p_;
  }
  return {out};
}

FieldElement FieldCtx::neg(FieldElement x) const { return scale(x, p_ - 1); }

FieldElement FieldCtx::sub(FieldElement x, FieldElement y) const {
  return add(x, neg(y));
}

FieldElement FieldCtx::mul_poly(FieldElement x, FieldElement y) const {
  Poly r = poly::mod(poly::mul(coeffs(x), coeffs(y), p_), modulus_, p_);
  return from_coeffs(r);
}

FieldElement FieldCtx::mul(FieldElement x, FieldElement y) const {
  if (x.code == 0 || y.code == 0) return zero();
  if (has_tables()) {
    std::uint64_t n = mult_order();
    std::uint64_t s = log_[x.code] + log_[y.code];
    return {exp_[s >= n ? s - n : s]};
  }
  return mul_poly(x, y);
}

FieldElement FieldCtx::pow_poly(FieldElement x, std::uint64_t e) const {
  FieldElement r = one();
  while (e) {
    if (e & 1) r = mul_poly(r, x);
    x = mul_poly(x, x);
    e >>= 1;
  }
  return r;
}

FieldElement FieldCtx::pow(FieldElement x, std::uint64_t e) const {
  if (x.code == 0) return e == 0 ? one() : zero();
  e %= mult_order();
  if (has_tables()) {
    auto s = static_cast<unsigned __int128>(log_[x.code]) * e % mult_order();
    return {exp_[static_cast<std::uint64_t>(s)]};
  }
  return pow_poly(x, e);
}

FieldElement FieldCtx::inv(FieldElement x) const {
  if (x.code == 0) throw InvalidInput("inverse of zero");
  if (has_tables()) {
    std::uint64_t l = log_[x.code];
    return {exp_[l == 0 ? 0 : mult_order() - l]};
  }
  return pow_poly(x, mult_order() - 1);
}

FieldElement FieldCtx::frobenius(FieldElement x, unsigned k) const {
  // p^k mod (p^m - 1) = p^{k mod m}
  return pow(x, checked_pow(p_, k % m_));
}

Digit FieldCtx::trace(FieldElement x) const {
  std::uint64_t c = x.code;
  std::uint64_t acc = 0;
  for (unsigned j = 0; j < m_; ++j) {
    acc += std::uint64_t{static_cast<Digit>(c % p_)} * basis_traces_[j] % p_;
    c /= p_;
  }
  return static_cast<Digit>(acc % p_);
}

FieldElement FieldCtx::exp(std::uint64_t i) const {
  i %= mult_order();
  if (has_tables()) return {exp_[i]};
  return pow_poly(alpha_, i);
}

std::uint64_t FieldCtx::log(FieldElement x) const {
  if (x.code == 0) throw InvalidInput("log of zero");
  if (has_tables()) return log_[x.code];
  FieldElement acc = one();
  for (std::uint64_t i = 0; i < mult_order(); ++i) {
    if (acc == x) return i;
    acc = mul_poly(acc, alpha_);
  }
  throw ConsistencyFault("discrete log not found; alpha is not primitive");
}

std::uint64_t element_order(const FieldCtx& ctx, FieldElement x) {
  if (x.code == 0) throw InvalidInput("order of zero");
  std::uint64_t ord = ctx.mult_order();
  for (auto q : prime_factors(ctx.mult_order())) {
    while (ord % q == 0 && ctx.pow(x, ord / q) == ctx.one()) ord /= q;
  }
  return ord;
}

FieldElement find_primitive(const FieldCtx& ctx) {
  const std::uint64_t n = ctx.mult_order();
  const auto factors = prime_factors(n);
  for (std::uint64_t code = 1; code < ctx.size(); ++code) {
    FieldElement g{code};
    bool ok = std::none_of(factors.begin(), factors.end(), [&](std::uint64_t q) {
      return ctx.pow(g, n / q) == ctx.one();
    });
    if (ok) return g;
  }
  throw ConsistencyFault("no primitive element; modulus is not irreducible");
}

FieldCtx make_field(Digit p, unsigned m, const Poly* modulus, std::uint64_t table_cap) {
  require_odd_prime(p);
  if (m < 1) throw InvalidInput("extension degree m must be >= 1");
  if (m > 62) throw InvalidInput("extension degree too large");

  FieldCtx ctx;
  ctx.p_ = p;
  ctx.m_ = m;
  ctx.size_ = checked_pow(p, m);
  if (ctx.size_ > (std::uint64_t{1} << 62)) {
    throw InvalidInput("p^m exceeds the element index range");
  }

  if (modulus != nullptr) {
    for (Digit c : *modulus) {
      if (c >= p) throw InvalidInput("modulus coefficient out of range");
    }
    Poly f = poly::normalized(*modulus);
    if (poly::degree(f) != static_cast<int>(m) || f.back() != 1) {
      throw InvalidInput("modulus must be monic of degree " + std::to_string(m));
    }
    if (!is_irreducible(p, f)) throw InvalidInput("modulus is reducible over F_p");
    ctx.modulus_ = std::move(f);
  } else if (m == 1) {
    ctx.modulus_ = {0, 1};
  } else {
    ctx.modulus_ = find_irreducible(p, m);
  }

  // Tr(x^j) = sum_i (x^j)^{p^i}; each summand lies in F_{p^m}, the sum in F_p.
  ctx.basis_traces_.assign(m, 0);
  for (unsigned j = 0; j < m; ++j) {
    std::vector<Digit> e(m, 0);
    e[j] = 1;
    FieldElement b = ctx.from_coeffs(e);
    FieldElement sum = ctx.zero();
    FieldElement term = b;
    for (unsigned i = 0; i < m; ++i) {
      sum = ctx.add(sum, term);
      term = ctx.pow_poly(term, p);
    }
    if (sum.code >= p) throw ConsistencyFault("trace left the prime field");
    ctx.basis_traces_[j] = static_cast<Digit>(sum.code);
  }

  ctx.alpha_ = find_primitive(ctx);

  if (ctx.size_ <= table_cap) {
    const std::uint64_t n = ctx.mult_order();
    std::vector<std::uint64_t> exp(n);
    std::vector<std::uint64_t> log(ctx.size_, n);  // n marks "unset"
    FieldElement cur = ctx.one();
    for (std::uint64_t i = 0; i < n; ++i) {
      if (log[cur.code] != n) throw ConsistencyFault("alpha is not primitive");
      exp[i] = cur.code;
      log[cur.code] = i;
      cur = ctx.mul_poly(cur, ctx.alpha_);
    }
    if (cur != ctx.one()) throw ConsistencyFault("alpha^(p^m-1) != 1");
    log[0] = 0;
    ctx.exp_ = std::move(exp);
    ctx.log_ = std::move(log);
  }
  return ctx;
}

}  // namespace cw
