#include "gerbes/gerbe.hpp"

#include "gerbes/error.hpp"

namespace gerbes {

GerbeData GerbeData::make(Torus torus, AltForm2 B, AltForm3 E) {
  if (B.dim() != torus.real_dim() || E.dim() != torus.real_dim())
    throw Error(ErrorCode::BadDimensions, "gerbe", "B and E must live on the torus lattice");
  if (!E.is_integral()) throw Error(ErrorCode::InvalidArgument, "gerbe", "E must have integer coefficients");
  if (const auto bad = type_condition_violation(torus, E)) {
    throw Error(ErrorCode::TypeConditionFailed, "gerbe",
                "type condition fails on basis triple (" + std::to_string((*bad)[0] + 1) + "," +
                    std::to_string((*bad)[1] + 1) + "," + std::to_string((*bad)[2] + 1) + ")");
  }
  return GerbeData{std::move(torus), std::move(B), std::move(E)};
}

bool ExponentFn::is_holomorphic(const Torus& T) const {
  // l = a + i b holomorphic  <=>  a(Jv) = -b(v) and b(Jv) = a(v).
  const QMatrix Jt = T.J().transposed();
  return Jt * lin_re == -lin_im && Jt * lin_im == lin_re;
}

UnitValue Character::operator()(const QVector& lambda) const {
  if (lambda.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "gerbe", "character argument has wrong length");
  if (!is_integral(lambda)) throw Error(ErrorCode::InvalidArgument, "gerbe", "characters are evaluated on lattice vectors");
  GaussianRational s;
  for (std::size_t k = 0; k < dim(); ++k) s += exponents_[k] * lambda[k];
  return UnitValue(s);
}

bool Character::equals(const Character& other) const {
  if (other.dim() != dim()) throw Error(ErrorCode::DimensionMismatch, "gerbe", "characters of different rank");
  for (std::size_t k = 0; k < dim(); ++k) {
    const GaussianRational diff = exponents_[k] - other.exponents_[k];
    if (sgn(diff.im) != 0 || !is_integer(diff.re)) return false;
  }
  return true;
}

std::optional<std::size_t> Character::first_nontrivial_index() const {
  for (std::size_t k = 0; k < dim(); ++k)
    if (sgn(exponents_[k].im) != 0 || !is_integer(exponents_[k].re)) return k;
  return std::nullopt;
}

Character Character::unitary_part(const Torus& T) const {
  if (T.real_dim() != dim()) throw Error(ErrorCode::DimensionMismatch, "gerbe", "character and torus differ");
  // The holomorphic linear function with imaginary part b has real part b o J.
  QVector b(dim());
  for (std::size_t k = 0; k < dim(); ++k) b[k] = exponents_[k].im;
  const QVector bJ = T.J().transposed() * b;
  std::vector<GaussianRational> out(dim());
  for (std::size_t k = 0; k < dim(); ++k) out[k] = GaussianRational(exponents_[k].re - bJ[k]);
  return Character(std::move(out));
}

Character operator*(const Character& a, const Character& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "gerbe", "characters of different rank");
  std::vector<GaussianRational> out(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) out[k] = a.exponents_[k] + b.exponents_[k];
  return Character(std::move(out));
}

Character Character::inverse() const {
  std::vector<GaussianRational> out(dim());
  for (std::size_t k = 0; k < dim(); ++k) out[k] = -exponents_[k];
  return Character(std::move(out));
}

Rational k_value(const Torus& T, const AltForm3& E, const QVector& l1, const QVector& l2, const QVector& l3) {
  const QVector i1 = T.mul_i(l1);
  const Rational half(1, 2);
  return Rational(1, 8) * (E(l1, l2, l3) + half * E(i1, T.mul_i(l2), l3) + half * E(i1, l2, T.mul_i(l3)));
}

Rational l_value(const Torus& T, const AltForm3& E, const QVector& l1, const QVector& l2, const QVector& l3) {
  const Rational half(1, 2);
  return Rational(1, 8) *
         (half * E(l1, T.mul_i(l2), l3) + half * E(l1, l2, T.mul_i(l3)) - E(T.mul_i(l1), l2, l3));
}

ExponentFn h_exponent(const GerbeData& G, const QVector& l1, const QVector& l2) {
  const std::size_t d = G.dim();
  ExponentFn h = ExponentFn::zero(d);
  for (std::size_t j = 0; j < d; ++j) {
    const QVector e = basis_vector(d, j);
    h.lin_re[j] = k_value(G.torus, G.E, e, l1, l2);
    h.lin_im[j] = l_value(G.torus, G.E, e, l1, l2);
  }
  return h;
}

ExponentFn phi_exponent(const GerbeData& G, const QVector& l1, const QVector& l2) {
  return h_exponent(G, l1, l2) + GaussianRational(Rational(1, 2) * G.B(l1, l2));
}

GaussianRational translation_factor(const GerbeData& G, const QVector& w, const QVector& l1, const QVector& l2) {
  return {k_value(G.torus, G.E, w, l1, l2), l_value(G.torus, G.E, w, l1, l2)};
}

AltForm2 translation_shift(const Torus& T, const AltForm3& E, const QVector& w) {
  const AltForm2 omega = contract3(E, w);
  return Rational(1, 8) * (Rational(5) * omega - Rational(3) * j_pullback2(T, omega));
}

GerbeData translate_gerbe(const GerbeData& G, const QVector& w) {
  return GerbeData{G.torus, G.B + translation_shift(G.torus, G.E, w), G.E};
}

bool gerbes_isomorphic(const GerbeData& G1, const GerbeData& G2) {
  if (!(G1.torus == G2.torus)) throw Error(ErrorCode::TorusMismatch, "gerbe", "gerbes live on different tori");
  if (!(G1.E == G2.E)) return false;
  return integral_mod_type11(G1.torus, G1.B - G2.B).has_value();
}

}  // namespace gerbes
