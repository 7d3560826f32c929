#pragma once

// The quadratic form Q_a(x) = Tr(a x^{p^k + 1}) over F_p, its Gram matrix
// in the polynomial basis, rank, diagonalization and discriminant class.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cw/gf.hpp"

namespace cw {

/// Dense square matrix over F_p.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Digit p, std::size_t order) : p_(p), n_(order), a_(order * order, 0) {}

  static Matrix identity(Digit p, std::size_t order);

  Digit p() const { return p_; }
  std::size_t order() const { return n_; }
  Digit& operator()(std::size_t u, std::size_t v) { return a_[u * n_ + v]; }
  Digit operator()(std::size_t u, std::size_t v) const { return a_[u * n_ + v]; }

  Matrix transposed() const;
  bool is_symmetric() const;
  bool is_diagonal() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Digit p_ = 0;
  std::size_t n_ = 0;
  std::vector<Digit> a_;
};

Matrix multiply(const Matrix& x, const Matrix& y);
/// Rank by Gaussian elimination over F_p.
std::size_t matrix_rank(const Matrix& x);

/// A matrix that is known to equal its transpose.
class SymmetricMatrix {
 public:
  /// Throws InvalidInput if `m` is not symmetric.
  explicit SymmetricMatrix(Matrix m);

  const Matrix& matrix() const { return m_; }
  std::size_t order() const { return m_.order(); }
  Digit p() const { return m_.p(); }
  Digit operator()(std::size_t u, std::size_t v) const { return m_(u, v); }

 private:
  Matrix m_;
};

/// B[u][v] = Tr(a (b_u b_v^{p^k} + b_u^{p^k} b_v)) over the polynomial basis
/// b_u = x^u. For x with coordinate row X, Q_a(x) = 2^{-1} X B X^T.
/// Throws InvalidInput for a = 0 or k outside [1, m).
SymmetricMatrix gram_matrix(const FieldCtx& ctx, unsigned k, FieldElement a);

std::size_t form_rank(const SymmetricMatrix& b);

struct Diagonalization {
  Matrix transform;         // M, nonsingular
  std::vector<Digit> diag;  // diagonal of M B M^T, nonzero entries first
};

/// Congruence diagonalization by symmetric elimination (p odd).
Diagonalization diagonalize(const SymmetricMatrix& b);

struct QuadFormProfile {
  FieldElement a;
  unsigned k = 0;
  unsigned rank = 0;
  /// eta((-1)^{floor(rank/2)} * Delta), Delta the product of the nonzero
  /// coefficients of Q_a in diagonal form.
  int eps = 1;
  /// rank = m - 2 d i.
  unsigned i = 0;

  friend bool operator==(const QuadFormProfile&, const QuadFormProfile&) = default;
};

/// Rank and sign class of Q_a. The sign class is derived twice, from the
/// diagonal form and from exhaustive point counts; ConsistencyFault if the
/// two disagree or the counts do not match the predicted quadric sizes.
QuadFormProfile classify(const FieldCtx& ctx, unsigned k, FieldElement a);

/// N_a(beta) = #{x : Tr(a x^{p^k+1}) = beta} by brute force.
std::uint64_t count_quadric_points(const FieldCtx& ctx, unsigned k, FieldElement a,
                                   Digit beta);

/// All N_a(beta), beta = 0..p-1, from one brute-force pass over the field.
std::vector<std::uint64_t> quadric_point_counts(const FieldCtx& ctx, unsigned k,
                                                FieldElement a);

/// Solutions of f(x_1..x_l) = b for a nondegenerate quadratic form f over
/// F_q. `sign` must be eta((-1)^{l/2} det f) for even l and
/// eta((-1)^{(l-1)/2} b det f) for odd l (so 0 when b = 0).
std::uint64_t nondegenerate_solution_count(std::uint64_t q, unsigned l,
                                           bool b_is_zero, int sign);

/// Predicted N(beta) for a form over F_p in m variables with the given rank
/// and sign class; the radical contributes a factor p^{m - rank}.
std::vector<std::uint64_t> predicted_point_counts(Digit p, unsigned m, unsigned rank,
                                                  int eps);

/// Inverts predicted_point_counts: recovers eps from a histogram.
/// ConsistencyFault if the histogram has no valid sign class.
int eps_from_counts(Digit p, unsigned m, unsigned rank,
                    const std::vector<std::uint64_t>& counts);

}  // namespace cw
