#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "gerbes/matrix.hpp"

namespace gerbes {

/// A complex torus V/Lambda with Lambda = Z^{2n} in the standard basis and the
/// complex structure given by a rational matrix J, J^2 = -I. Multiplication by
/// i on V is v -> J v.
class Torus {
 public:
  /// Throws Error(NotAComplexStructure) unless J is square of even size with
  /// J*J == -I.
  static Torus from_complex_structure(QMatrix J);

  /// The complex structure e_k -> e_{k+n}, e_{k+n} -> -e_k.
  static Torus standard(std::size_t n);

  std::size_t complex_dim() const { return J_.rows() / 2; }
  std::size_t real_dim() const { return J_.rows(); }
  const QMatrix& J() const { return J_; }

  /// i * v
  QVector mul_i(const QVector& v) const { return J_ * v; }

  friend bool operator==(const Torus& a, const Torus& b) { return a.J_ == b.J_; }

 private:
  explicit Torus(QMatrix J) : J_(std::move(J)) {}
  QMatrix J_;
};

inline Torus check_complex_structure(QMatrix J) { return Torus::from_complex_structure(std::move(J)); }

/// Alternating bilinear form on Q^d, stored as an antisymmetric matrix M with
/// omega(x, y) = x^T M y.
class AltForm2 {
 public:
  AltForm2() = default;
  explicit AltForm2(std::size_t dim) : m_(dim, dim) {}
  /// Throws Error(InvalidArgument) if M is not antisymmetric.
  static AltForm2 from_matrix(QMatrix M);
  /// coeff * e_a^* wedge e_b^* (0-based, a != b).
  static AltForm2 wedge(std::size_t dim, std::size_t a, std::size_t b, const Rational& coeff = 1);

  std::size_t dim() const { return m_.rows(); }
  const QMatrix& matrix() const { return m_; }
  /// omega(e_a, e_b)
  const Rational& coeff(std::size_t a, std::size_t b) const { return m_(a, b); }
  void add_wedge(std::size_t a, std::size_t b, const Rational& coeff);

  Rational operator()(const QVector& x, const QVector& y) const;

  bool is_zero() const { return m_.is_zero(); }
  bool is_integral() const;

  /// Coefficients on the pairs a < b in lexicographic order.
  QVector pair_coordinates() const;
  static std::vector<std::array<std::size_t, 2>> pairs(std::size_t dim);

  friend AltForm2 operator+(const AltForm2& a, const AltForm2& b) { return AltForm2(a.m_ + b.m_); }
  friend AltForm2 operator-(const AltForm2& a, const AltForm2& b) { return AltForm2(a.m_ - b.m_); }
  friend AltForm2 operator-(const AltForm2& a) { return AltForm2(-a.m_); }
  friend AltForm2 operator*(const Rational& s, const AltForm2& a) { return AltForm2(s * a.m_); }
  friend bool operator==(const AltForm2& a, const AltForm2& b) { return a.m_ == b.m_; }

 private:
  explicit AltForm2(QMatrix m) : m_(std::move(m)) {}
  QMatrix m_;
};

/// Alternating trilinear form on Q^d stored by its coefficients on strictly
/// increasing basis triples (0-based).
class AltForm3 {
 public:
  using Triple = std::array<std::size_t, 3>;

  AltForm3() = default;
  explicit AltForm3(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  const std::map<Triple, Rational>& terms() const { return terms_; }

  /// Adds coeff * e_a^* ^ e_b^* ^ e_c^* for distinct indices in any order; the
  /// sign of the sorting permutation is applied.
  void add_term(std::size_t a, std::size_t b, std::size_t c, const Rational& coeff);
  /// Coefficient on an increasing triple.
  Rational coeff(const Triple& t) const;

  Rational operator()(const QVector& x, const QVector& y, const QVector& z) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_integral() const;

  friend AltForm3 operator*(const Rational& s, const AltForm3& a);
  friend bool operator==(const AltForm3& a, const AltForm3& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t dim_ = 0;
  std::map<Triple, Rational> terms_;  // zero coefficients are never stored
};

/// omega^H = re + i * im, the image of omega under the Hodge projection.
struct HodgeImage {
  AltForm2 re;
  AltForm2 im;
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

/// The first basis triple (a < b < c) where
/// E(x,y,z) = E(ix,iy,z) + E(x,iy,iz) + E(ix,y,iz) fails, if any.
std::optional<AltForm3::Triple> type_condition_violation(const Torus& T, const AltForm3& E);
bool type_condition_check(const Torus& T, const AltForm3& E);

/// (x, y) -> E(w, x, y)
AltForm2 contract3(const AltForm3& E, const QVector& w);
/// (x, y) -> omega(i x, i y)
AltForm2 j_pullback2(const Torus& T, const AltForm2& omega);
/// (omega - j_pullback2(omega)) / 2; vanishes exactly on forms of type (1,1).
AltForm2 anti_invariant_part(const Torus& T, const AltForm2& omega);
HodgeImage hodge_projection(const Torus& T, const AltForm2& omega);

/// Decides omega in Alt^2(Z) + Alt^2(R)^{(1,1)}. On success returns an integral
/// form eps with omega - eps of type (1,1).
std::optional<AltForm2> integral_mod_type11(const Torus& T, const AltForm2& omega);

/// Sum over all k! permutations sigma of sign(sigma) * f(args permuted by sigma).
template <class Fn>
auto skew_symmetrize(Fn&& f, std::span<const QVector> args) {
  std::vector<std::size_t> idx(args.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  using Result = std::decay_t<decltype(f(std::span<const QVector>(args)))>;
  Result total{};
  std::vector<QVector> permuted(args.size());
  do {
    int sign = 1;
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = i + 1; j < idx.size(); ++j)
        if (idx[i] > idx[j]) sign = -sign;
    for (std::size_t i = 0; i < idx.size(); ++i) permuted[i] = args[idx[i]];
    const Result term = f(std::span<const QVector>(permuted));
    if (sign > 0)
      total = total + term;
    else
      total = total - term;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return total;
}

}  // namespace gerbes
