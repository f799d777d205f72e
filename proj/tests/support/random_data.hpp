#pragma once

// Seeded generators for random tori, gerbes and subgroup elements, shared by
// the property tests and the acceptance suite.

#include <random>

#include "gerbes/lattice.hpp"
#include "gerbes/obstruction.hpp"

namespace gerbes::testing {

using Rng = std::mt19937_64;

// mpq_class(p, q) does not reduce; everything built from raw pairs goes
// through here.
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline Rational random_rational(Rng& rng, int num_bound = 3, int den_bound = 4) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound), den(1, den_bound);
  const int p = num(rng);
  return ratio(p, den(rng));
}

inline QMatrix inverse(QMatrix a) {
  const std::size_t d = a.rows();
  QMatrix inv = QMatrix::identity(d);
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (p < d && sgn(a(p, c)) == 0) ++p;
    if (p == d) throw std::runtime_error("singular matrix");
    a.swap_rows(p, c);
    inv.swap_rows(p, c);
    const Rational s = 1 / a(c, c);
    for (std::size_t k = 0; k < d; ++k) {
      a(c, k) *= s;
      inv(c, k) *= s;
    }
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || sgn(a(r, c)) == 0) continue;
      const Rational f = a(r, c);
      for (std::size_t k = 0; k < d; ++k) {
        a(r, k) -= f * a(c, k);
        inv(r, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

/// P J0 P^{-1} for a random integer matrix P with entries in [-2, 2].
inline Torus random_torus(std::size_t n, Rng& rng) {
  const std::size_t d = 2 * n;
  const QMatrix J0 = Torus::standard(n).J();
  std::uniform_int_distribution<int> entry(-2, 2);
  while (true) {
    QMatrix P(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) P(r, c) = entry(rng);
    try {
      return Torus::from_complex_structure(P * J0 * inverse(P));
    } catch (const std::runtime_error&) {
    }
  }
}

/// Integer coefficients in [-2, 2] on every basis triple, redrawn until the
/// type condition holds.
inline AltForm3 random_E(const Torus& T, Rng& rng) {
  const std::size_t d = T.real_dim();
  std::uniform_int_distribution<int> coeff(-2, 2);
  while (true) {
    AltForm3 E(d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a + 1; b < d; ++b)
        for (std::size_t c = b + 1; c < d; ++c) E.add_term(a, b, c, coeff(rng));
    if (!E.is_zero() && type_condition_check(T, E)) return E;
  }
}

inline AltForm2 random_B(std::size_t d, Rng& rng) {
  AltForm2 B(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) B.add_wedge(a, b, random_rational(rng));
  return B;
}

inline GerbeData random_gerbe(std::size_t n, Rng& rng) {
  Torus T = random_torus(n, rng);
  AltForm3 E = random_E(T, rng);
  AltForm2 B = random_B(T.real_dim(), rng);
  return GerbeData::make(std::move(T), std::move(B), std::move(E));
}

/// All r / D with r in {0..D-1}^d that lie in the integral subgroup, for
/// D = 2, 3, 4; never empty since 0 qualifies.
inline std::vector<QVector> integral_subgroup_residues(const GerbeData& G) {
  const std::size_t d = G.dim();
  std::vector<QVector> out;
  for (int D : {2, 3, 4}) {
    std::vector<int> r(d, 0);
    while (true) {
      QVector w(d);
      for (std::size_t i = 0; i < d; ++i) w[i] = ratio(r[i], D);
      if (in_subgroup(G.torus, G.E, w, SubgroupCase::Integral)) out.push_back(w);
      std::size_t i = 0;
      while (i < d && ++r[i] == D) r[i++] = 0;
      if (i == d) break;
    }
  }
  return out;
}

/// A basis of the rational subspace {w : E(w,.,.) is of type (1,1)}.
inline std::vector<QVector> oneone_subspace(const GerbeData& G) {
  return subgroup_lattice_basis(G.torus, G.E, SubgroupCase::TypeOneOne);
}

inline QVector random_lattice_vector(std::size_t d, Rng& rng, int bound = 2) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  QVector v(d);
  for (auto& x : v) x = entry(rng);
  return v;
}

/// A random element of the subgroup for the case: a residue class (integral)
/// or a small rational combination of the (1,1) subspace basis, plus a
/// lattice vector of the subgroup.
inline QVector random_subgroup_element(const GerbeData& G, SubgroupCase c, Rng& rng) {
  const std::size_t d = G.dim();
  std::uniform_int_distribution<int> small(-1, 1);
  QVector w = zero_vector(d);
  for (const auto& b : subgroup_lattice_basis(G.torus, G.E, c)) w = w + Rational(small(rng)) * b;
  if (c == SubgroupCase::Integral) {
    const auto residues = integral_subgroup_residues(G);
    std::uniform_int_distribution<std::size_t> pick(0, residues.size() - 1);
    return w + residues[pick(rng)];
  }
  for (const auto& b : oneone_subspace(G)) w = w + random_rational(rng, 2, 3) * b;
  return w;
}

/// A gerbe whose subgroup for the case contains more than the lattice.
inline GerbeData random_gerbe_with_subgroup(std::size_t n, SubgroupCase c, Rng& rng) {
  while (true) {
    GerbeData G = random_gerbe(n, rng);
    if (c == SubgroupCase::Integral ? integral_subgroup_residues(G).size() > 3 : !oneone_subspace(G).empty())
      return G;
  }
}

}  // namespace gerbes::testing
