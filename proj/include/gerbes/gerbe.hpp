#pragma once

#include "gerbes/torus.hpp"

namespace gerbes {

/// Gerbe on a complex torus presented by its canonical cocycle data (B, E).
struct GerbeData {
  Torus torus;
  AltForm2 B;
  AltForm3 E;

  /// Validates dimensions, integrality of E and the type condition; throws
  /// Error(BadDimensions / InvalidArgument / TypeConditionFailed).
  static GerbeData make(Torus torus, AltForm2 B, AltForm3 E);

  std::size_t dim() const { return torus.real_dim(); }
};

/// v -> constant + lin_re . v + i (lin_im . v), a holomorphic-exponent function
/// on V (the cocycle value is exp of it).
struct ExponentFn {
  GaussianRational constant;
  QVector lin_re;
  QVector lin_im;

  static ExponentFn zero(std::size_t dim) { return {GaussianRational{}, zero_vector(dim), zero_vector(dim)}; }
  static ExponentFn constant_fn(std::size_t dim, GaussianRational c) {
    return {std::move(c), zero_vector(dim), zero_vector(dim)};
  }

  std::size_t dim() const { return lin_re.size(); }
  GaussianRational linear_at(const QVector& v) const { return {dot(lin_re, v), dot(lin_im, v)}; }
  GaussianRational operator()(const QVector& v) const { return constant + linear_at(v); }
  /// v -> f(v + w)
  ExponentFn shifted(const QVector& w) const { return {constant + linear_at(w), lin_re, lin_im}; }

  bool linear_part_zero() const { return gerbes::is_zero(lin_re) && gerbes::is_zero(lin_im); }
  bool is_zero() const { return constant.is_zero() && linear_part_zero(); }
  /// The linear part l satisfies l(i v) = i l(v).
  bool is_holomorphic(const Torus& T) const;

  friend ExponentFn operator+(const ExponentFn& a, const ExponentFn& b) {
    return {a.constant + b.constant, a.lin_re + b.lin_re, a.lin_im + b.lin_im};
  }
  friend ExponentFn operator-(const ExponentFn& a, const ExponentFn& b) {
    return {a.constant - b.constant, a.lin_re - b.lin_re, a.lin_im - b.lin_im};
  }
  friend ExponentFn operator+(ExponentFn a, const GaussianRational& c) {
    a.constant += c;
    return a;
  }
  friend bool operator==(const ExponentFn& a, const ExponentFn& b) {
    return a.constant == b.constant && a.lin_re == b.lin_re && a.lin_im == b.lin_im;
  }
};

/// A homomorphism Lambda -> C^x, lambda -> exp(sum_k exponents[k] * lambda_k).
class Character {
 public:
  Character() = default;
  explicit Character(std::vector<GaussianRational> exponents) : exponents_(std::move(exponents)) {}
  static Character trivial(std::size_t dim) { return Character(std::vector<GaussianRational>(dim)); }

  std::size_t dim() const { return exponents_.size(); }
  const std::vector<GaussianRational>& exponents() const { return exponents_; }
  const GaussianRational& exponent(std::size_t k) const { return exponents_.at(k); }

  /// Value on an integral lattice vector.
  UnitValue operator()(const QVector& lambda) const;

  /// Equal as homomorphisms: exponent differences are real integers.
  bool equals(const Character& other) const;
  bool is_trivial() const { return equals(trivial(dim())); }
  /// First basis index where the character is nontrivial.
  std::optional<std::size_t> first_nontrivial_index() const;

  /// Divides out the holomorphic linear function with the same imaginary part,
  /// leaving the unitary character that represents the same point of Pic^0.
  Character unitary_part(const Torus& T) const;

  friend Character operator*(const Character& a, const Character& b);
  Character inverse() const;

 private:
  std::vector<GaussianRational> exponents_;
};

Rational k_value(const Torus& T, const AltForm3& E, const QVector& l1, const QVector& l2, const QVector& l3);
Rational l_value(const Torus& T, const AltForm3& E, const QVector& l1, const QVector& l2, const QVector& l3);

/// H_{l1,l2}(v) as an exponent function of v.
ExponentFn h_exponent(const GerbeData& G, const QVector& l1, const QVector& l2);
/// (1/2) B(l1, l2) + H_{l1,l2}(v), without the beta', beta'' constants.
ExponentFn phi_exponent(const GerbeData& G, const QVector& l1, const QVector& l2);
/// H_{l1,l2}(w) = k(w,l1,l2) + i l(w,l1,l2), the factor translation by w
/// multiplies the cocycle by.
GaussianRational translation_factor(const GerbeData& G, const QVector& w, const QVector& l1, const QVector& l2);

/// (1/8)(5 E(w,.,.) - 3 E(w,i.,i.))
AltForm2 translation_shift(const Torus& T, const AltForm3& E, const QVector& w);
GerbeData translate_gerbe(const GerbeData& G, const QVector& w);
/// Throws Error(TorusMismatch) if the tori differ.
bool gerbes_isomorphic(const GerbeData& G1, const GerbeData& G2);

/// (delta c)_{l1,l2}(v) = c_{l2}(v + l1) - c_{l1+l2}(v) + c_{l1}(v) for a
/// 1-cochain of exponent functions.
template <class Cochain>
ExponentFn group_coboundary(Cochain&& c, const QVector& l1, const QVector& l2) {
  return c(l2).shifted(l1) - c(l1 + l2) + c(l1);
}

}  // namespace gerbes
