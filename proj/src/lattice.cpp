#include "gerbes/lattice.hpp"

#include <numeric>

#include "gerbes/error.hpp"

namespace gerbes {

namespace {

// Row operation on (H, U): rows a, b replaced by
//   a' = x*a + y*b,  b' = u*a + v*b   with x*v - y*u = +-1.
void combine_rows(ZMatrix& m, std::size_t a, std::size_t b, const Integer& x, const Integer& y,
                  const Integer& u, const Integer& v) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const Integer ra = m(a, c);
    const Integer rb = m(b, c);
    m(a, c) = x * ra + y * rb;
    m(b, c) = u * ra + v * rb;
  }
}

void add_row_multiple(ZMatrix& m, std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) += k * m(src, c);
}

void negate_row(ZMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteForm hermite_normal_form(const ZMatrix& M) {
  HermiteForm out{M, ZMatrix::identity(M.rows()), 0, {}};
  ZMatrix& H = out.H;
  ZMatrix& U = out.U;
  std::size_t r = 0;
  for (std::size_t c = 0; c < H.cols() && r < H.rows(); ++c) {
    // Fold every lower row into row r with extended-gcd steps.
    for (std::size_t i = r + 1; i < H.rows(); ++i) {
      if (H(i, c) == 0) continue;
      if (H(r, c) == 0) {
        H.swap_rows(r, i);
        U.swap_rows(r, i);
        continue;
      }
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), H(r, c).get_mpz_t(), H(i, c).get_mpz_t());
      const Integer a = H(r, c) / g;
      const Integer b = H(i, c) / g;
      // [s t; -b a] has determinant s*a + t*b = 1.
      combine_rows(H, r, i, s, t, -b, a);
      combine_rows(U, r, i, s, t, -b, a);
    }
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0) {
      negate_row(H, r);
      negate_row(U, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Integer k = floor_div(H(i, c), H(r, c));
      if (k == 0) continue;
      add_row_multiple(H, i, r, -k);
      add_row_multiple(U, i, r, -k);
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::optional<std::vector<Integer>> lattice_membership(std::span<const QVector> generators,
                                                       const QVector& target) {
  const std::size_t dim = target.size();
  for (const auto& g : generators)
    if (g.size() != dim)
      throw Error(ErrorCode::DimensionMismatch, "exact-core", "lattice generator has wrong length");

  Integer denom = 1;
  auto absorb = [&denom](const QVector& v) {
    for (const auto& x : v) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), x.get_den_mpz_t());
  };
  for (const auto& g : generators) absorb(g);
  absorb(target);

  ZMatrix M(generators.size(), dim);
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t c = 0; c < dim; ++c) {
      const Rational scaled = generators[i][c] * denom;
      M(i, c) = scaled.get_num();
    }
  std::vector<Integer> rhs(dim);
  for (std::size_t c = 0; c < dim; ++c) rhs[c] = Rational(target[c] * denom).get_num();

  const HermiteForm hf = hermite_normal_form(M);
  // Solve x * H = rhs by forward substitution over the pivot columns.
  std::vector<Integer> residual = rhs;
  std::vector<Integer> x(generators.size(), 0);
  for (std::size_t k = 0; k < hf.rank; ++k) {
    const std::size_t col = hf.pivot_columns[k];
    if (!mpz_divisible_p(residual[col].get_mpz_t(), hf.H(k, col).get_mpz_t())) return std::nullopt;
    x[k] = residual[col] / hf.H(k, col);
    for (std::size_t c = 0; c < dim; ++c) residual[c] -= x[k] * hf.H(k, c);
  }
  for (const auto& v : residual)
    if (v != 0) return std::nullopt;

  std::vector<Integer> coeffs(generators.size(), 0);
  for (std::size_t k = 0; k < hf.rank; ++k)
    for (std::size_t j = 0; j < generators.size(); ++j) coeffs[j] += x[k] * hf.U(k, j);
  return coeffs;
}

std::vector<QVector> rational_nullspace(const QMatrix& A) {
  QMatrix R = A;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < R.cols() && r < R.rows(); ++c) {
    std::size_t p = r;
    while (p < R.rows() && sgn(R(p, c)) == 0) ++p;
    if (p == R.rows()) continue;
    R.swap_rows(r, p);
    const Rational inv = 1 / R(r, c);
    for (std::size_t k = 0; k < R.cols(); ++k) R(r, k) *= inv;
    for (std::size_t i = 0; i < R.rows(); ++i) {
      if (i == r || sgn(R(i, c)) == 0) continue;
      const Rational f = R(i, c);
      for (std::size_t k = 0; k < R.cols(); ++k) R(i, k) -= f * R(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(R.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < R.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v = zero_vector(R.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -R(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<QVector> integer_kernel(const QMatrix& A) {
  Integer den = 1;
  for (std::size_t r = 0; r < A.rows(); ++r)
    for (std::size_t c = 0; c < A.cols(); ++c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), A(r, c).get_den_mpz_t());
  ZMatrix M(A.cols(), A.rows());
  for (std::size_t r = 0; r < A.rows(); ++r)
    for (std::size_t c = 0; c < A.cols(); ++c) {
      const Rational scaled = A(r, c) * Rational(den);
      M(c, r) = scaled.get_num();
    }
  const HermiteForm h = hermite_normal_form(M);
  std::vector<QVector> basis;
  for (std::size_t r = h.rank; r < h.U.rows(); ++r) {
    QVector v(h.U.cols());
    for (std::size_t c = 0; c < v.size(); ++c) v[c] = Rational(h.U(r, c));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace gerbes
