#include "cw/quadform.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "cw/errors.hpp"

namespace cw {

Matrix Matrix::identity(Digit p, std::size_t order) {
  Matrix m(p, order);
  for (std::size_t i = 0; i < order; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(p_, n_);
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = 0; v < n_; ++v) t(v, u) = (*this)(u, v);
  }
  return t;
}

bool Matrix::is_symmetric() const {
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = u + 1; v < n_; ++v) {
      if ((*this)(u, v) != (*this)(v, u)) return false;
    }
  }
  return true;
}

bool Matrix::is_diagonal() const {
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = 0; v < n_; ++v) {
      if (u != v && (*this)(u, v) != 0) return false;
    }
  }
  return true;
}

Matrix multiply(const Matrix& x, const Matrix& y) {
  const Digit p = x.p();
  const std::size_t n = x.order();
  Matrix r(p, n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t w = 0; w < n; ++w) {
      if (x(u, w) == 0) continue;
      for (std::size_t v = 0; v < n; ++v) {
        r(u, v) = mod_add(r(u, v), mod_mul(x(u, w), y(w, v), p), p);
      }
    }
  }
  return r;
}

std::size_t matrix_rank(const Matrix& x) {
  Matrix a = x;
  const Digit p = a.p();
  const std::size_t n = a.order();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t piv = rank;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) continue;
    for (std::size_t v = 0; v < n; ++v) std::swap(a(piv, v), a(rank, v));
    Digit inv = mod_inv(a(rank, col), p);
    for (std::size_t u = rank + 1; u < n; ++u) {
      if (a(u, col) == 0) continue;
      Digit c = mod_mul(a(u, col), inv, p);
      for (std::size_t v = col; v < n; ++v) {
        a(u, v) = mod_sub(a(u, v), mod_mul(c, a(rank, v), p), p);
      }
    }
    ++rank;
  }
  return rank;
}

SymmetricMatrix::SymmetricMatrix(Matrix m) : m_(std::move(m)) {
  if (!m_.is_symmetric()) throw InvalidInput("matrix is not symmetric");
}

SymmetricMatrix gram_matrix(const FieldCtx& ctx, unsigned k, FieldElement a) {
  if (a == ctx.zero()) throw InvalidInput("gram_matrix: a must be nonzero");
  const unsigned m = ctx.m();
  if (k < 1 || k >= m) throw InvalidInput("gram_matrix: need 1 <= k < m");

  std::vector<FieldElement> basis(m), frob(m);
  for (unsigned u = 0; u < m; ++u) {
    std::vector<Digit> e(m, 0);
    e[u] = 1;
    basis[u] = ctx.from_coeffs(e);
    frob[u] = ctx.frobenius(basis[u], k);
  }
  Matrix b(ctx.p(), m);
  for (unsigned u = 0; u < m; ++u) {
    for (unsigned v = u; v < m; ++v) {
      FieldElement s = ctx.add(ctx.mul(basis[u], frob[v]), ctx.mul(frob[u], basis[v]));
      Digit t = ctx.trace(ctx.mul(a, s));
      b(u, v) = t;
      b(v, u) = t;
    }
  }
  return SymmetricMatrix(std::move(b));
}

std::size_t form_rank(const SymmetricMatrix& b) { return matrix_rank(b.matrix()); }

namespace {

// Applies the congruence a <- E a E^T, transform <- E transform for the
// elementary operation "row/col dst += c * row/col src".
void add_multiple(Matrix& a, Matrix& t, std::size_t dst, std::size_t src, Digit c) {
  const Digit p = a.p();
  const std::size_t n = a.order();
  for (std::size_t v = 0; v < n; ++v) {
    a(dst, v) = mod_add(a(dst, v), mod_mul(c, a(src, v), p), p);
    t(dst, v) = mod_add(t(dst, v), mod_mul(c, t(src, v), p), p);
  }
  for (std::size_t u = 0; u < n; ++u) {
    a(u, dst) = mod_add(a(u, dst), mod_mul(c, a(u, src), p), p);
  }
}

void swap_index(Matrix& a, Matrix& t, std::size_t i, std::size_t j) {
  if (i == j) return;
  const std::size_t n = a.order();
  for (std::size_t v = 0; v < n; ++v) {
    std::swap(a(i, v), a(j, v));
    std::swap(t(i, v), t(j, v));
  }
  for (std::size_t u = 0; u < n; ++u) std::swap(a(u, i), a(u, j));
}

}  // namespace

Diagonalization diagonalize(const SymmetricMatrix& b) {
  const Digit p = b.p();
  if (p == 2) throw InvalidInput("diagonalize requires odd characteristic");
  const std::size_t n = b.order();
  Matrix a = b.matrix();
  Matrix t = Matrix::identity(p, n);

  for (std::size_t i = 0; i < n; ++i) {
    std::size_t piv = i;
    while (piv < n && a(piv, piv) == 0) ++piv;
    if (piv == n) {
      // Pivot repair: a_uu = a_vv = 0 and a_uv != 0 gives a_uu + 2 a_uv != 0.
      std::size_t u = n, v = n;
      for (std::size_t r = i; r < n && u == n; ++r) {
        for (std::size_t c = r + 1; c < n; ++c) {
          if (a(r, c) != 0) {
            u = r;
            v = c;
            break;
          }
        }
      }
      if (u == n) break;  // remaining block is zero
      add_multiple(a, t, u, v, 1);
      piv = u;
    }
    swap_index(a, t, i, piv);
    Digit inv = mod_inv(a(i, i), p);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a(j, i) == 0) continue;
      add_multiple(a, t, j, i, mod_sub(0, mod_mul(a(j, i), inv, p), p));
    }
  }

  Diagonalization out{std::move(t), std::vector<Digit>(n)};
  for (std::size_t i = 0; i < n; ++i) out.diag[i] = a(i, i);
  return out;
}

std::vector<std::uint64_t> quadric_point_counts(const FieldCtx& ctx, unsigned k,
                                                FieldElement a) {
  std::vector<std::uint64_t> counts(ctx.p(), 0);
  for (std::uint64_t code = 0; code < ctx.size(); ++code) {
    FieldElement x{code};
    FieldElement y = ctx.mul(a, ctx.mul(x, ctx.frobenius(x, k)));
    ++counts[ctx.trace(y)];
  }
  return counts;
}

std::uint64_t count_quadric_points(const FieldCtx& ctx, unsigned k, FieldElement a,
                                   Digit beta) {
  if (beta >= ctx.p()) throw InvalidInput("beta must lie in F_p");
  return quadric_point_counts(ctx, k, a)[beta];
}

std::uint64_t nondegenerate_solution_count(std::uint64_t q, unsigned l, bool b_is_zero,
                                           int sign) {
  if (l == 0) return b_is_zero ? 1 : 0;
  const auto base = static_cast<std::int64_t>(checked_pow(q, l - 1));
  std::int64_t r;
  if (l % 2 == 0) {
    const auto upsilon = b_is_zero ? static_cast<std::int64_t>(q) - 1 : -1;
    r = base + upsilon * static_cast<std::int64_t>(checked_pow(q, (l - 2) / 2)) * sign;
  } else {
    r = base + static_cast<std::int64_t>(checked_pow(q, (l - 1) / 2)) * sign;
  }
  return static_cast<std::uint64_t>(r);
}

std::vector<std::uint64_t> predicted_point_counts(Digit p, unsigned m, unsigned rank,
                                                  int eps) {
  const std::uint64_t radical = checked_pow(p, m - rank);
  std::vector<std::uint64_t> out(p);
  for (Digit beta = 0; beta < p; ++beta) {
    int sign = (rank % 2 == 0) ? eps : eps * quad_char(p, beta);
    out[beta] = radical * nondegenerate_solution_count(p, rank, beta == 0, sign);
  }
  return out;
}

int eps_from_counts(Digit p, unsigned m, unsigned rank,
                    const std::vector<std::uint64_t>& counts) {
  if (counts.size() != p) throw InvalidInput("histogram length must equal p");
  int eps = 1;
  if (rank > 0) {
    const Digit probe = rank % 2 == 0 ? 0 : 1;
    const auto base = static_cast<std::int64_t>(checked_pow(p, m - 1));
    const auto diff = static_cast<std::int64_t>(counts[probe]) - base;
    if (diff == 0) throw ConsistencyFault("point counts carry no sign class");
    eps = diff > 0 ? 1 : -1;
  }
  if (predicted_point_counts(p, m, rank, eps) != counts) {
    throw ConsistencyFault("point counts do not match any quadric of rank " +
                           std::to_string(rank));
  }
  return eps;
}

QuadFormProfile classify(const FieldCtx& ctx, unsigned k, FieldElement a) {
  const Digit p = ctx.p();
  const unsigned m = ctx.m();
  SymmetricMatrix b = gram_matrix(ctx, k, a);
  const auto rank = static_cast<unsigned>(form_rank(b));
  Diagonalization dz = diagonalize(b);

  // Coefficients of Q_a itself are half the diagonal of M B M^T.
  const Digit half = mod_inv(2, p);
  Digit delta = 1;
  unsigned nonzero = 0;
  for (Digit c : dz.diag) {
    if (c == 0) continue;
    ++nonzero;
    delta = mod_mul(delta, mod_mul(c, half, p), p);
  }
  if (nonzero != rank) throw ConsistencyFault("diagonal form disagrees with rank");
  if ((rank / 2) % 2 == 1) delta = mod_sub(0, delta, p);
  const int eps_diag = rank == 0 ? 1 : quad_char(p, delta);

  const int eps_count = eps_from_counts(p, m, rank, quadric_point_counts(ctx, k, a));
  if (eps_diag != eps_count) {
    throw ConsistencyFault("sign class from diagonal form (" + std::to_string(eps_diag) +
                           ") differs from point counts (" + std::to_string(eps_count) +
                           ")");
  }

  const unsigned d = std::gcd(k, m);
  unsigned i;
  if (rank == m) {
    i = 0;
  } else if (rank + 2 * d == m) {
    i = 1;
  } else {
    throw ConsistencyFault("rank " + std::to_string(rank) + " is neither m nor m-2d");
  }
  return QuadFormProfile{a, k, rank, eps_diag, i};
}

}  // namespace cw
