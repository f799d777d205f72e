#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace gerbes {

using Integer = mpz_class;
using Rational = mpq_class;
using QVector = std::vector<Rational>;

/// Parses "p/q", "p" or "-p/q" (surrounding whitespace allowed). The result is
/// canonicalized. Throws Error(MalformedRational) on anything else, including a
/// zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers are written without a denominator.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
Integer floor(const Rational& q);
/// q - floor(q), always in [0, 1).
Rational frac(const Rational& q);

struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  /// Multiplication by the imaginary unit.
  GaussianRational times_i() const { return {-im, re}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const Rational& s) {
    re *= s;
    im *= s;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(GaussianRational a, const Rational& s) { return a *= s; }
  friend GaussianRational operator*(const Rational& s, GaussianRational a) { return a *= s; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

std::string to_string(const GaussianRational& z);
std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// An element exp(z) = e^{2 pi i z} of C^x, stored by its exponent with the
/// real part reduced into [0, 1).
class UnitValue {
 public:
  UnitValue() = default;
  explicit UnitValue(const GaussianRational& exponent);

  const GaussianRational& exponent() const { return exponent_; }
  bool is_trivial() const { return exponent_.is_zero(); }
  /// Modulus one, i.e. no imaginary exponent part.
  bool is_unitary() const { return sgn(exponent_.im) == 0; }

  friend UnitValue operator*(const UnitValue& a, const UnitValue& b) {
    return UnitValue(a.exponent_ + b.exponent_);
  }
  friend bool operator==(const UnitValue& a, const UnitValue& b) { return a.exponent_ == b.exponent_; }

 private:
  GaussianRational exponent_;
};

UnitValue unit_reduce(const GaussianRational& z);
std::ostream& operator<<(std::ostream& os, const UnitValue& u);

// Dense rational vectors. Sizes are checked by the callers that build them.
QVector zero_vector(std::size_t dim);
/// The i-th standard basis vector (0-based) scaled by s.
QVector basis_vector(std::size_t dim, std::size_t i, const Rational& s = 1);
QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
QVector operator-(const QVector& a);
QVector operator*(const Rational& s, const QVector& a);
Rational dot(const QVector& a, const QVector& b);
bool is_zero(const QVector& v);
bool is_integral(const QVector& v);
std::string to_string(const QVector& v);

/// Parses a comma separated list of rationals, e.g. "1/2,0,0,-3".
QVector parse_vector(std::string_view text);

}  // namespace gerbes
