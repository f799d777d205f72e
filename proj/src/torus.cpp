#include "gerbes/torus.hpp"

#include <algorithm>

#include "gerbes/error.hpp"
#include "gerbes/lattice.hpp"

namespace gerbes {

Torus Torus::from_complex_structure(QMatrix J) {
  if (!J.is_square() || J.rows() == 0 || J.rows() % 2 != 0)
    throw Error(ErrorCode::NotAComplexStructure, "torus", "J must be a square matrix of even size");
  const QMatrix sq = J * J;
  if (!(sq == -QMatrix::identity(J.rows())))
    throw Error(ErrorCode::NotAComplexStructure, "torus", "J*J is not -I");
  return Torus(std::move(J));
}

Torus Torus::standard(std::size_t n) {
  QMatrix J(2 * n, 2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    J(k + n, k) = 1;
    J(k, k + n) = -1;
  }
  return Torus(std::move(J));
}

AltForm2 AltForm2::from_matrix(QMatrix M) {
  if (!M.is_square() || !(M.transposed() == -M))
    throw Error(ErrorCode::InvalidArgument, "torus", "matrix is not antisymmetric");
  return AltForm2(std::move(M));
}

AltForm2 AltForm2::wedge(std::size_t dim, std::size_t a, std::size_t b, const Rational& coeff) {
  AltForm2 w(dim);
  w.add_wedge(a, b, coeff);
  return w;
}

void AltForm2::add_wedge(std::size_t a, std::size_t b, const Rational& coeff) {
  if (a == b || a >= dim() || b >= dim())
    throw Error(ErrorCode::InvalidArgument, "torus", "wedge indices must be distinct and in range");
  m_(a, b) += coeff;
  m_(b, a) -= coeff;
}

Rational AltForm2::operator()(const QVector& x, const QVector& y) const {
  if (x.size() != dim() || y.size() != dim())
    throw Error(ErrorCode::DimensionMismatch, "torus", "vector length does not match form");
  Rational s = 0;
  for (std::size_t a = 0; a < dim(); ++a) {
    if (sgn(x[a]) == 0) continue;
    for (std::size_t b = 0; b < dim(); ++b)
      if (sgn(m_(a, b)) != 0) s += x[a] * m_(a, b) * y[b];
  }
  return s;
}

bool AltForm2::is_integral() const {
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t b = a + 1; b < dim(); ++b)
      if (!is_integer(m_(a, b))) return false;
  return true;
}

std::vector<std::array<std::size_t, 2>> AltForm2::pairs(std::size_t dim) {
  std::vector<std::array<std::size_t, 2>> out;
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = a + 1; b < dim; ++b) out.push_back({a, b});
  return out;
}

QVector AltForm2::pair_coordinates() const {
  QVector out;
  for (const auto& [a, b] : pairs(dim())) out.push_back(m_(a, b));
  return out;
}

void AltForm3::add_term(std::size_t a, std::size_t b, std::size_t c, const Rational& coeff) {
  if (a >= dim_ || b >= dim_ || c >= dim_ || a == b || b == c || a == c)
    throw Error(ErrorCode::InvalidArgument, "torus", "trilinear term indices must be distinct and in range");
  Triple t{a, b, c};
  int sign = 1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j + 1 < 3 - i; ++j)
      if (t[j] > t[j + 1]) {
        std::swap(t[j], t[j + 1]);
        sign = -sign;
      }
  Rational& slot = terms_[t];
  slot += sign > 0 ? coeff : Rational(-coeff);
  if (sgn(slot) == 0) terms_.erase(t);
}

Rational AltForm3::coeff(const Triple& t) const {
  const auto it = terms_.find(t);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational AltForm3::operator()(const QVector& x, const QVector& y, const QVector& z) const {
  if (x.size() != dim_ || y.size() != dim_ || z.size() != dim_)
    throw Error(ErrorCode::DimensionMismatch, "torus", "vector length does not match form");
  Rational s = 0;
  for (const auto& [t, k] : terms_) {
    const auto [a, b, c] = t;
    // 3x3 minor on rows a, b, c of the matrix with columns x, y, z
    const Rational det = x[a] * (y[b] * z[c] - y[c] * z[b]) - x[b] * (y[a] * z[c] - y[c] * z[a]) +
                         x[c] * (y[a] * z[b] - y[b] * z[a]);
    s += k * det;
  }
  return s;
}

bool AltForm3::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return is_integer(kv.second); });
}

AltForm3 operator*(const Rational& s, const AltForm3& a) {
  AltForm3 out(a.dim_);
  if (sgn(s) == 0) return out;
  for (const auto& [t, k] : a.terms_) out.terms_[t] = s * k;
  return out;
}

std::optional<AltForm3::Triple> type_condition_violation(const Torus& T, const AltForm3& E) {
  const std::size_t d = T.real_dim();
  if (E.dim() != d) throw Error(ErrorCode::DimensionMismatch, "torus", "form and torus dimensions differ");
  std::vector<QVector> e, ie;
  for (std::size_t k = 0; k < d; ++k) {
    e.push_back(basis_vector(d, k));
    ie.push_back(T.mul_i(e.back()));
  }
  // The residual is alternating, so increasing triples suffice.
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      for (std::size_t c = b + 1; c < d; ++c) {
        const Rational lhs = E(e[a], e[b], e[c]);
        const Rational rhs = E(ie[a], ie[b], e[c]) + E(e[a], ie[b], ie[c]) + E(ie[a], e[b], ie[c]);
        if (lhs != rhs) return AltForm3::Triple{a, b, c};
      }
  return std::nullopt;
}

bool type_condition_check(const Torus& T, const AltForm3& E) { return !type_condition_violation(T, E); }

AltForm2 contract3(const AltForm3& E, const QVector& w) {
  if (w.size() != E.dim()) throw Error(ErrorCode::DimensionMismatch, "torus", "vector length does not match form");
  AltForm2 out(E.dim());
  for (const auto& [t, k] : E.terms()) {
    const auto [a, b, c] = t;
    if (sgn(w[a]) != 0) out.add_wedge(b, c, k * w[a]);
    if (sgn(w[b]) != 0) out.add_wedge(a, c, -k * w[b]);
    if (sgn(w[c]) != 0) out.add_wedge(a, b, k * w[c]);
  }
  return out;
}

AltForm2 j_pullback2(const Torus& T, const AltForm2& omega) {
  if (omega.dim() != T.real_dim()) throw Error(ErrorCode::DimensionMismatch, "torus", "form and torus dimensions differ");
  return AltForm2::from_matrix(T.J().transposed() * omega.matrix() * T.J());
}

AltForm2 anti_invariant_part(const Torus& T, const AltForm2& omega) {
  return Rational(1, 2) * (omega - j_pullback2(T, omega));
}

HodgeImage hodge_projection(const Torus& T, const AltForm2& omega) {
  if (omega.dim() != T.real_dim()) throw Error(ErrorCode::DimensionMismatch, "torus", "form and torus dimensions differ");
  const QMatrix& J = T.J();
  const QMatrix& M = omega.matrix();
  // omega(i x, y) + omega(x, i y) has matrix J^T M + M J.
  return {Rational(1, 4) * (omega - j_pullback2(T, omega)),
          AltForm2::from_matrix(Rational(1, 4) * (J.transposed() * M + M * J))};
}

std::optional<AltForm2> integral_mod_type11(const Torus& T, const AltForm2& omega) {
  const std::size_t d = T.real_dim();
  const auto pairs = AltForm2::pairs(d);
  std::vector<QVector> gens;
  gens.reserve(pairs.size());
  for (const auto& [a, b] : pairs) gens.push_back(anti_invariant_part(T, AltForm2::wedge(d, a, b)).pair_coordinates());
  const auto coeffs = lattice_membership(gens, anti_invariant_part(T, omega).pair_coordinates());
  if (!coeffs) return std::nullopt;
  AltForm2 eps(d);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if ((*coeffs)[i] != 0) eps.add_wedge(pairs[i][0], pairs[i][1], Rational((*coeffs)[i]));
  return eps;
}

}  // namespace gerbes
