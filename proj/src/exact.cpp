#include "gerbes/exact.hpp"

#include <cctype>
#include <sstream>

#include "gerbes/error.hpp"

namespace gerbes {

namespace {

[[noreturn]] void malformed(std::string_view text) {
  throw Error(ErrorCode::MalformedRational, "exact-core",
              "malformed rational '" + std::string(text) + "'");
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    malformed(text);
  // mpz_class rejects a leading '+'.
  Integer p(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  Integer q(std::string(den), 10);
  if (q == 0) malformed(text);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer floor(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Rational frac(const Rational& q) { return q - Rational(floor(q)); }

std::string to_string(const GaussianRational& z) {
  if (sgn(z.im) == 0) return to_string(z.re);
  std::string out = sgn(z.re) == 0 ? "" : to_string(z.re) + (sgn(z.im) > 0 ? "+" : "");
  return out + to_string(z.im) + "i";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << to_string(z); }

UnitValue::UnitValue(const GaussianRational& exponent) : exponent_{frac(exponent.re), exponent.im} {}

UnitValue unit_reduce(const GaussianRational& z) { return UnitValue(z); }

std::ostream& operator<<(std::ostream& os, const UnitValue& u) {
  return os << "exp(" << to_string(u.exponent()) << ")";
}

QVector zero_vector(std::size_t dim) { return QVector(dim, Rational(0)); }

QVector basis_vector(std::size_t dim, std::size_t i, const Rational& s) {
  QVector v = zero_vector(dim);
  v.at(i) = s;
  return v;
}

QVector operator+(const QVector& a, const QVector& b) {
  QVector out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.at(i);
  return out;
}

QVector operator-(const QVector& a, const QVector& b) {
  QVector out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.at(i);
  return out;
}

QVector operator-(const QVector& a) {
  QVector out(a);
  for (auto& x : out) x = -x;
  return out;
}

QVector operator*(const Rational& s, const QVector& a) {
  QVector out(a);
  for (auto& x : out) x *= s;
  return out;
}

Rational dot(const QVector& a, const QVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b.at(i);
  return s;
}

bool is_zero(const QVector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

bool is_integral(const QVector& v) {
  for (const auto& x : v)
    if (!is_integer(x)) return false;
  return true;
}

std::string to_string(const QVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + ")";
}

QVector parse_vector(std::string_view text) {
  QVector v;
  while (true) {
    const auto comma = text.find(',');
    v.push_back(parse_rational(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return v;
}

}  // namespace gerbes
