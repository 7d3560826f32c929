#pragma once

// Exact arithmetic in F_p and F_{p^m} for odd primes p.
//
// Elements of F_{p^m} = F_p[x]/(f) are stored as a single integer code
//   code = c_0 + c_1 p + ... + c_{m-1} p^{m-1}
// where (c_0, ..., c_{m-1}) are the coordinates in the polynomial basis
// {1, x, ..., x^{m-1}}. Code order is therefore radix-p order of the
// coefficient vector, constant term least significant.

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace cw {

/// Element of the prime field, always reduced into [0, p).
using Digit = std::uint32_t;

/// Polynomial over F_p, constant term first. Trailing zeros are allowed on
/// input; helpers return normalized polynomials.
using Poly = std::vector<Digit>;

bool is_prime(std::uint64_t n);

/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// base^exp, throwing InvalidInput if the result does not fit in 63 bits.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

Digit mod_add(Digit x, Digit y, Digit p);
Digit mod_sub(Digit x, Digit y, Digit p);
Digit mod_mul(Digit x, Digit y, Digit p);
Digit mod_pow(Digit x, std::uint64_t e, Digit p);
/// Inverse in F_p; throws InvalidInput on zero.
Digit mod_inv(Digit x, Digit p);

/// Quadratic character of F_p: 0 for c = 0, otherwise c^{(p-1)/2} as +1/-1.
int quad_char(Digit p, Digit c);

namespace poly {

Poly normalized(Poly f);
int degree(const Poly& f);  // -1 for the zero polynomial
Poly mul(const Poly& f, const Poly& g, Digit p);
/// Remainder of f modulo a nonzero g.
Poly mod(const Poly& f, const Poly& g, Digit p);
/// Monic gcd (zero polynomial when both inputs vanish).
Poly gcd(Poly f, Poly g, Digit p);
Poly pow_mod(Poly base, std::uint64_t e, const Poly& modulus, Digit p);

}  // namespace poly

/// Rabin's irreducibility test for a polynomial of degree >= 1 over F_p.
bool is_irreducible(Digit p, const Poly& f);

/// The monic irreducible polynomial of degree m over F_p that is smallest in
/// radix-p order of its lower coefficients (c_0 + c_1 p + ...).
/// Throws InvalidInput unless p is an odd prime and m >= 2.
Poly find_irreducible(Digit p, unsigned m);

struct FieldElement {
  std::uint64_t code = 0;

  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

inline constexpr std::uint64_t kDefaultTableCap = std::uint64_t{1} << 24;

/// A constructed extension field F_{p^m}. Immutable after construction.
class FieldCtx {
 public:
  Digit p() const { return p_; }
  unsigned m() const { return m_; }
  /// p^m
  std::uint64_t size() const { return size_; }
  /// p^m - 1, the order of the multiplicative group.
  std::uint64_t mult_order() const { return size_ - 1; }
  const Poly& modulus() const { return modulus_; }
  FieldElement alpha() const { return alpha_; }
  bool has_tables() const { return !exp_.empty(); }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  /// Embedding of c in F_p.
  FieldElement scalar(Digit c) const { return {c % p_}; }
  /// Validated element from a raw code.
  FieldElement element(std::uint64_t code) const;
  FieldElement from_coeffs(std::span<const Digit> coeffs) const;
  std::vector<Digit> coeffs(FieldElement x) const;
  Digit coeff(FieldElement x, unsigned j) const;

  FieldElement add(FieldElement x, FieldElement y) const;
  FieldElement sub(FieldElement x, FieldElement y) const;
  FieldElement neg(FieldElement x) const;
  /// c * x for c in F_p.
  FieldElement scale(FieldElement x, Digit c) const;
  FieldElement mul(FieldElement x, FieldElement y) const;
  FieldElement inv(FieldElement x) const;
  FieldElement pow(FieldElement x, std::uint64_t e) const;
  /// x^{p^k}
  FieldElement frobenius(FieldElement x, unsigned k) const;

  /// Absolute trace to F_p.
  Digit trace(FieldElement x) const;
  /// Tr(x^j) for the basis element x^j, j = 0..m-1.
  const std::vector<Digit>& basis_traces() const { return basis_traces_; }

  /// alpha^i for any i (reduced mod p^m - 1).
  FieldElement exp(std::uint64_t i) const;
  /// Discrete log base alpha of a nonzero element, in [0, p^m - 1).
  std::uint64_t log(FieldElement x) const;

  /// Raw tables; empty when the field exceeds the table cap.
  std::span<const std::uint64_t> exp_table() const { return exp_; }
  std::span<const std::uint64_t> log_table() const { return log_; }

 private:
  friend FieldCtx make_field(Digit, unsigned, const Poly*, std::uint64_t);

  FieldElement mul_poly(FieldElement x, FieldElement y) const;
  FieldElement pow_poly(FieldElement x, std::uint64_t e) const;

  Digit p_ = 0;
  unsigned m_ = 0;
  std::uint64_t size_ = 0;
  Poly modulus_;
  FieldElement alpha_{};
  std::vector<Digit> basis_traces_;
  std::vector<std::uint64_t> exp_;
  std::vector<std::uint64_t> log_;
};

/// Builds F_{p^m}. With no modulus the radix-minimal irreducible is used
/// (the polynomial x for m = 1). Tables are populated when p^m <= table_cap.
FieldCtx make_field(Digit p, unsigned m, const Poly* modulus = nullptr,
                    std::uint64_t table_cap = kDefaultTableCap);

inline FieldCtx make_field(Digit p, unsigned m, const Poly& modulus,
                           std::uint64_t table_cap = kDefaultTableCap) {
  return make_field(p, m, &modulus, table_cap);
}

/// The primitive element of smallest code.
FieldElement find_primitive(const FieldCtx& ctx);

/// Multiplicative order of a nonzero element.
std::uint64_t element_order(const FieldCtx& ctx, FieldElement x);

}  // namespace cw
