#pragma once

#include "gerbes/obstruction.hpp"

namespace gerbes::testing {

// The oracle's torus: e1 -> e2, e2 -> -e1, e3 -> e4, e4 -> -e3.
inline Torus fixture_torus() {
  QMatrix J(4, 4);
  J(1, 0) = 1;
  J(0, 1) = -1;
  J(3, 2) = 1;
  J(2, 3) = -1;
  return Torus::from_complex_structure(J);
}

// 1-based basis vector scaled by s.
inline QVector e(std::size_t i, const Rational& s = 1, std::size_t dim = 4) { return basis_vector(dim, i - 1, s); }

inline QVector vec(std::initializer_list<Rational> xs) { return QVector(xs); }

// coeff * e1^ e2^ e3 on a 4-dimensional torus.
inline AltForm3 e123(const Rational& coeff = 1) {
  AltForm3 E(4);
  E.add_term(0, 1, 2, coeff);
  return E;
}

inline GerbeData fixture_gerbe(const Rational& coeff, const Torus& T = fixture_torus()) {
  return GerbeData::make(T, AltForm2(4), e123(coeff));
}

inline GaussianRational gr(const Rational& re, const Rational& im = 0) { return {re, im}; }

}  // namespace gerbes::testing
