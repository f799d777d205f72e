#include <doctest.h>

#include "gerbes/error.hpp"
#include "support/fixtures.hpp"
#include "support/random_data.hpp"

using namespace gerbes;
using namespace gerbes::testing;

TEST_CASE("k and l on the fixture torus") {
  const Torus T = fixture_torus();
  const AltForm3 E = e123();
  CHECK(k_value(T, E, e(1), e(2), e(3)) == Rational(3, 16));
  CHECK(l_value(T, E, e(4), e(1), e(2)) == Rational(1, 8));
  CHECK(l_value(T, E, e(1), e(2), e(3)) == 0);
}

TEST_CASE("H is holomorphic and alternating in the lattice arguments") {
  const GerbeData G = fixture_gerbe(1);
  const ExponentFn h = h_exponent(G, e(2), e(3));
  CHECK(h.lin_re == vec({Rational(3, 16), 0, 0, 0}));
  CHECK(h.lin_im == vec({0, Rational(3, 16), 0, 0}));
  CHECK(h.constant.is_zero());
  CHECK(h.is_holomorphic(G.torus));
  CHECK(h_exponent(G, e(1), e(1))(e(4)).is_zero());
  CHECK(h_exponent(G, e(3), e(2)) == ExponentFn::zero(4) - h);
}

TEST_CASE("H is holomorphic for random data") {
  Rng rng(17);
  for (int i = 0; i < 10; ++i) {
    const GerbeData G = random_gerbe(2, rng);
    const ExponentFn h = h_exponent(G, random_lattice_vector(4, rng), random_lattice_vector(4, rng));
    CHECK(h.is_holomorphic(G.torus));
  }
}

TEST_CASE("phi adds half of B") {
  AltForm2 B(4);
  B.add_wedge(0, 1, Rational(1, 3));
  const GerbeData G = GerbeData::make(fixture_torus(), B, e123());
  const ExponentFn phi = phi_exponent(G, e(1), e(2));
  CHECK(phi.constant == gr(Rational(1, 6)));
  CHECK(phi.lin_re == h_exponent(G, e(1), e(2)).lin_re);
}

TEST_CASE("GerbeData validation") {
  const Torus T = fixture_torus();
  CHECK_NOTHROW(GerbeData::make(T, AltForm2(4), e123(2)));
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InternalMismatch;
  };
  CHECK(code_of([&] { GerbeData::make(T, AltForm2(6), e123()); }) == ErrorCode::BadDimensions);
  CHECK(code_of([&] { GerbeData::make(T, AltForm2(4), e123(Rational(1, 2))); }) == ErrorCode::InvalidArgument);
  AltForm3 bad(6);
  bad.add_term(0, 1, 2, 1);
  CHECK(code_of([&] { GerbeData::make(Torus::standard(3), AltForm2(6), bad); }) == ErrorCode::TypeConditionFailed);
}

TEST_CASE("translation shifts B by (1/8)(5 w - 3 J*w)") {
  const GerbeData G = fixture_gerbe(2);
  const QVector w = e(1, Rational(1, 2));
  const AltForm2 omega = contract3(G.E, w);
  const AltForm2 shift = translation_shift(G.torus, G.E, w);
  CHECK(Rational(8) * shift == Rational(5) * omega - Rational(3) * j_pullback2(G.torus, omega));
  const GerbeData moved = translate_gerbe(G, w);
  CHECK(moved.B == shift);
  CHECK(gerbes_isomorphic(moved, G));
  CHECK_FALSE(gerbes_isomorphic(translate_gerbe(fixture_gerbe(1), e(1, Rational(1, 3))), fixture_gerbe(1)));
  CHECK_THROWS_AS(gerbes_isomorphic(G, GerbeData::make(Torus::standard(2), AltForm2(4), e123(2))), Error);
}

TEST_CASE("translation factor is H evaluated at w") {
  const GerbeData G = fixture_gerbe(1);
  const QVector w = vec({Rational(1, 3), -2, Rational(5, 7), 1});
  CHECK(translation_factor(G, w, e(2), e(3)) == h_exponent(G, e(2), e(3))(w));
}

TEST_CASE("group coboundary of a coboundary-like cochain") {
  // c_l(v) = B(v, l) is a homomorphism in l, so its coboundary is the
  // constant B(l1, l2).
  AltForm2 B(4);
  B.add_wedge(0, 2, Rational(1, 5));
  auto c = [&B](const QVector& l) {
    ExponentFn f = ExponentFn::zero(4);
    for (std::size_t j = 0; j < 4; ++j) f.lin_re[j] = B(basis_vector(4, j), l);
    return f;
  };
  const ExponentFn d = group_coboundary(c, e(1), e(3));
  CHECK(d.linear_part_zero());
  CHECK(d.constant == gr(Rational(1, 5)));
}

TEST_CASE("characters") {
  const Character a({gr(Rational(1, 2)), gr(3), gr(0, Rational(1, 4)), gr(Rational(-1, 3))});
  CHECK(a(e(1) + e(2)) == UnitValue(gr(Rational(1, 2))));
  CHECK(a.first_nontrivial_index() == 0);
  CHECK((a * a.inverse()).is_trivial());
  CHECK(Character({gr(2), gr(-1), gr(0), gr(5)}).is_trivial());
  CHECK_THROWS_AS(a(e(1, Rational(1, 2))), Error);

  // the unitary part differs from the original by a holomorphic linear function
  const Torus T = fixture_torus();
  const Character u = a.unitary_part(T);
  for (const auto& z : u.exponents()) CHECK(sgn(z.im) == 0);
  ExponentFn diff = ExponentFn::zero(4);
  for (std::size_t k = 0; k < 4; ++k) {
    diff.lin_re[k] = a.exponent(k).re - u.exponent(k).re;
    diff.lin_im[k] = a.exponent(k).im - u.exponent(k).im;
  }
  CHECK(diff.is_holomorphic(T));
}
