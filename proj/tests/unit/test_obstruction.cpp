#include <doctest.h>

#include "gerbes/error.hpp"
#include "support/fixtures.hpp"
#include "support/random_data.hpp"

using namespace gerbes;
using namespace gerbes::testing;

namespace {

const QVector h1 = e(1, Rational(1, 2));
const QVector h2 = e(2, Rational(1, 2));
const QVector h3 = e(3, Rational(1, 2));
const QVector h4 = e(4, Rational(1, 2));

ObstructionContext integral_ctx(const Rational& coeff) {
  return ObstructionContext(fixture_gerbe(coeff), SubgroupCase::Integral);
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalMismatch;
}

}  // namespace

TEST_CASE("S on the first-obstruction fixture") {
  const auto ctx = integral_ctx(2);
  CHECK(S_value(ctx, h1, h2, e(1)).is_zero());
  CHECK(S_value(ctx, h1, h2, e(3)) == gr(Rational(-3, 16)));
  CHECK(S_value(ctx, h1, h2, e(4)) == gr(0, Rational(1, 16)));
  CHECK(S_value(ctx, h2, h1, e(3)) == gr(Rational(3, 16)));
  CHECK(S_value(ctx, h2, h1, e(4)) == gr(0, Rational(-1, 16)));
  CHECK(S_value(ctx, zero_vector(4), h2, e(3)).is_zero());
  CHECK(S_value(ctx, h1, zero_vector(4), e(3)).is_zero());
  CHECK(S_value(ctx, h1, h2, zero_vector(4)).is_zero());
  CHECK(code_of([&] { S_value(ctx, h1, e(1, Rational(1, 3)), e(3)); }) == ErrorCode::NotInSubgroup);
}

TEST_CASE("S vanishes for the type (1,1) pair on the fixture") {
  const ObstructionContext ctx(fixture_gerbe(1), SubgroupCase::TypeOneOne);
  for (std::size_t j = 1; j <= 4; ++j) CHECK(S_value(ctx, h3, e(4, Rational(1, 3)), e(j)).is_zero());
}

TEST_CASE("Xi from tau equals exp S") {
  const auto ctx = integral_ctx(2);
  const Character x = xi_character(ctx, h1, h2);
  CHECK(x.exponents() == S_character(ctx, h1, h2).exponents());
  CHECK(x.exponents() == xi_from_tau(ctx, h1, h2).exponents());
  CHECK_FALSE(x.is_trivial());
  CHECK(xi_character(ctx, h1, zero_vector(4)).is_trivial());
}

TEST_CASE("first obstruction on the fixture") {
  const auto ctx = integral_ctx(2);
  const Character u12 = first_obstruction_unitary(ctx, h1, h2);
  const Character u21 = first_obstruction_unitary(ctx, h2, h1);
  CHECK(u12.exponent(2) == gr(Rational(-1, 4)));
  CHECK(u21.exponent(2) == gr(Rational(1, 4)));
  for (std::size_t k : {0, 1, 3}) CHECK(u12.exponent(k).is_zero());

  const FirstObstruction alt = first_obstruction_alternating(ctx, h1, h2);
  CHECK(alt.agree);
  CHECK(alt.closed_form.exponent(2) == gr(Rational(-1, 2)));
  CHECK(alt.skew(e(3)) == UnitValue(gr(Rational(1, 2))));
  CHECK(first_obstruction_alternating(ctx, h1, h1).skew.is_trivial());

  // on lattice translations only the alternating class is trivial; the
  // cochain itself can carry a symmetric half-integer part
  const Character lattice = first_obstruction_unitary(ctx, e(1), e(2) + e(4));
  CHECK(lattice.exponent(0) == gr(Rational(1, 2)));
  CHECK(lattice.exponent(2) == gr(-1));
  CHECK(first_obstruction_alternating(ctx, e(1), e(2) + e(4)).skew.is_trivial());
  Rng rng(31);
  for (int i = 0; i < 10; ++i)
    CHECK(first_obstruction_alternating(ctx, random_lattice_vector(4, rng), random_lattice_vector(4, rng)).skew.is_trivial());
}

TEST_CASE("S plus Theta at lambda is the unitary first-obstruction exponent") {
  Rng rng(8);
  for (SubgroupCase c : {SubgroupCase::Integral, SubgroupCase::TypeOneOne}) {
    for (int trial = 0; trial < 6; ++trial) {
      const GerbeData G = random_gerbe_with_subgroup(2, c, rng);
      const ObstructionContext ctx(G, c);
      const QVector w1 = random_subgroup_element(G, c, rng), w2 = random_subgroup_element(G, c, rng);
      const Character u = first_obstruction_unitary(ctx, w1, w2);
      for (std::size_t k = 0; k < 4; ++k) {
        const QVector l = basis_vector(4, k);
        CHECK(S_value(ctx, w1, w2, l) + theta_value(ctx, w1, w2, l) == u.exponent(k));
      }
      CHECK(theta_exponent(ctx, w1, w2).is_holomorphic(G.torus));
      CHECK(theta_value(ctx, w1, w2, zero_vector(4)).is_zero());
    }
  }
}

TEST_CASE("second obstruction on the fixture") {
  const auto ctx = integral_ctx(4);
  CHECK(theta_value(ctx, h1, h2, h3) == gr(Rational(-1, 16)));
  CHECK(second_obstruction_cocycle(ctx, h1, h2, h3) == gr(Rational(-3, 16)));
  CHECK(second_obstruction_cocycle(ctx, zero_vector(4), h2, h3).is_zero());

  const SecondObstruction s = second_obstruction_alternating(ctx, h1, h2, h3);
  CHECK(s.E_value == Rational(1, 2));
  CHECK(s.brute_force_exponent == gr(Rational(-1, 2)));
  CHECK(s.general_factor_exponent == gr(Rational(-9, 4)));
  CHECK(s.closed_form_exponent == gr(Rational(-9, 2)));
  CHECK(s.closed_form == UnitValue(gr(Rational(1, 2))));
  CHECK(s.brute_force_multiplier == gr(-1));
  CHECK(s.general_factor_multiplier == gr(Rational(-9, 2)));
  CHECK(s.brute_force_unitary);
  CHECK(s.all_nontrivial);
  CHECK_FALSE(s.all_agree);

  const SecondObstruction rep = second_obstruction_alternating(ctx, h1, h1, h3);
  CHECK(rep.brute_force.is_trivial());
  CHECK(second_obstruction_alternating(ctx, e(1), e(2), e(3) + e(4)).closed_form.is_trivial());
}

TEST_CASE("closed-form multipliers") {
  CHECK(second_obstruction_closed_form_multiplier(SubgroupCase::Integral) ==
        6 * gerbal_class_multiplier(SubgroupCase::Integral));
  CHECK(second_obstruction_closed_form_multiplier(SubgroupCase::TypeOneOne) ==
        6 * gerbal_class_multiplier(SubgroupCase::TypeOneOne));
}

TEST_CASE("gerbal class") {
  const auto ctx = integral_ctx(4);
  CHECK(gerbal_class(ctx, h1, h2, h3) == UnitValue(gr(Rational(1, 4))));
  CHECK(gerbal_class(ctx, e(1), zero_vector(4), zero_vector(4)).is_trivial());
  CHECK(gerbal_class(ctx, h1, h1, h3).is_trivial());
  CHECK(code_of([&] { gerbal_class(integral_ctx(2), h1, h2, e(3)); }) == ErrorCode::FirstObstructionNonzero);
}

TEST_CASE("theta group multiplication") {
  const auto ctx = integral_ctx(2);
  const ThetaGroupElement one{Character::trivial(4), zero_vector(4)};
  const ThetaGroupElement a{Character::trivial(4), h1}, b{Character::trivial(4), h2};
  const ThetaGroupElement x = theta_group_multiply(one, a, ctx);
  CHECK(x.w == a.w);
  CHECK(x.alpha.exponents() == a.alpha.exponents());

  const ThetaGroupElement ab = theta_group_multiply(a, b, ctx), ba = theta_group_multiply(b, a, ctx);
  CHECK(ab.w == ba.w);
  const Character commutator = (ab.alpha * ba.alpha.inverse()).unitary_part(ctx.torus());
  CHECK(commutator(e(3)) == UnitValue(gr(Rational(1, 2))));
  CHECK(commutator(e(1)).is_trivial());

  const ThetaGroupElement bad{Character::trivial(4), e(1, Rational(1, 3))};
  CHECK(code_of([&] { theta_group_multiply(a, bad, ctx); }) == ErrorCode::NotInSubgroup);
}

TEST_CASE("theta group multiplication is associative") {
  Rng rng(99);
  for (SubgroupCase c : {SubgroupCase::Integral, SubgroupCase::TypeOneOne}) {
    const GerbeData G = random_gerbe_with_subgroup(2, c, rng);
    const ObstructionContext ctx(G, c);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<ThetaGroupElement> g;
      for (int i = 0; i < 3; ++i) {
        std::vector<GaussianRational> ex;
        for (int k = 0; k < 4; ++k) ex.push_back(gr(random_rational(rng), random_rational(rng)));
        g.push_back({Character(ex), random_subgroup_element(G, c, rng)});
      }
      const auto left = theta_group_multiply(theta_group_multiply(g[0], g[1], ctx), g[2], ctx);
      const auto right = theta_group_multiply(g[0], theta_group_multiply(g[1], g[2], ctx), ctx);
      CHECK(left.w == right.w);
      CHECK(left.alpha.exponents() == right.alpha.exponents());
    }
  }
}

TEST_CASE("vanishing decisions on the worked examples") {
  const VanishingCertificate first =
      obstruction_vanishes({{h1, h2}, SubgroupCase::Integral}, fixture_gerbe(2), ObstructionKind::First);
  CHECK_FALSE(first.vanishes);
  CHECK(first.witness == std::vector<QVector>{h1, h2, e(3)});
  CHECK(first.value == UnitValue(gr(Rational(1, 2))));

  const SubgroupSpec half{{h1, h2, h3, h4}, SubgroupCase::Integral};
  CHECK(obstruction_vanishes(half, fixture_gerbe(4), ObstructionKind::First).vanishes);
  const VanishingCertificate second = obstruction_vanishes(half, fixture_gerbe(4), ObstructionKind::Second);
  CHECK_FALSE(second.vanishes);
  CHECK(second.witness == std::vector<QVector>{h1, h2, h3});
  CHECK(second.value == UnitValue(gr(Rational(1, 2))));
  CHECK_FALSE(second.notes.empty());

  const SubgroupSpec seventh{{e(4, Rational(1, 7))}, SubgroupCase::Integral};
  CHECK(obstruction_vanishes(seventh, fixture_gerbe(1), ObstructionKind::First).vanishes);
  CHECK(obstruction_vanishes(seventh, fixture_gerbe(1), ObstructionKind::Second).vanishes);

  const SubgroupSpec outside{{e(1, Rational(1, 3))}, SubgroupCase::Integral};
  CHECK(code_of([&] { obstruction_vanishes(outside, fixture_gerbe(1), ObstructionKind::First); }) ==
        ErrorCode::NotInSubgroup);
}

TEST_CASE("second-obstruction candidates on random data") {
  Rng rng(555);
  for (int trial = 0; trial < 10; ++trial) {
    const GerbeData G = random_gerbe_with_subgroup(2, SubgroupCase::Integral, rng);
    const ObstructionContext ctx(G, SubgroupCase::Integral);
    const QVector w1 = random_subgroup_element(G, SubgroupCase::Integral, rng);
    const QVector w2 = random_subgroup_element(G, SubgroupCase::Integral, rng);
    const QVector w3 = random_subgroup_element(G, SubgroupCase::Integral, rng);
    const SecondObstruction s = second_obstruction_alternating(ctx, w1, w2, w3);
    CHECK(s.brute_force_exponent == gr(-s.E_value));
    CHECK(s.general_factor_exponent == gr(Rational(-9, 2) * s.E_value));
    CHECK(s.brute_force_unitary);
  }
  for (int trial = 0; trial < 10; ++trial) {
    const GerbeData G = random_gerbe_with_subgroup(2, SubgroupCase::TypeOneOne, rng);
    const ObstructionContext ctx(G, SubgroupCase::TypeOneOne);
    const QVector w1 = random_subgroup_element(G, SubgroupCase::TypeOneOne, rng);
    const QVector w2 = random_subgroup_element(G, SubgroupCase::TypeOneOne, rng);
    const QVector w3 = random_subgroup_element(G, SubgroupCase::TypeOneOne, rng);
    const SecondObstruction s = second_obstruction_alternating(ctx, w1, w2, w3);
    CHECK(s.E_value == 0);
  }
}
