#include <doctest.h>

#include "gerbes/error.hpp"
#include "support/fixtures.hpp"
#include "support/random_data.hpp"

using namespace gerbes;
using namespace gerbes::testing;

TEST_CASE("eta factor coefficients") {
  const TauContext ctx = TauContext::make(fixture_gerbe(1), e(1), SubgroupCase::Integral);
  const ExponentFn eta = eta_exponent(ctx, e(2));
  CHECK(eta.lin_re == vec({0, 0, Rational(-1, 16), 0}));
  CHECK(eta.lin_im == vec({0, 0, 0, Rational(-1, 16)}));
  CHECK(eta.is_holomorphic(ctx.torus()));
}

TEST_CASE("mu factor") {
  const TauContext ctx = TauContext::make(fixture_gerbe(1), e(1), SubgroupCase::Integral);
  for (std::size_t j = 1; j <= 4; ++j) CHECK(mu_exponent(ctx, e(j)) == 0);
  CHECK(mu_exponent(ctx, e(2) + e(3)) == Rational(1, 16));
}

TEST_CASE("nu factor uses the integral part of the decomposition") {
  const TauContext ctx = TauContext::make(fixture_gerbe(2), e(1, Rational(1, 2)), SubgroupCase::Integral);
  // eps^w = e23, so nu(l) = -(1/2) l2 l3
  CHECK(nu_exponent(ctx, vec({5, 3, -2, 1})) == 3);
  CHECK(nu_exponent(ctx, e(2)) == 0);
  CHECK_THROWS_AS(nu_exponent(ctx, e(2, Rational(1, 2))), Error);
}

TEST_CASE("tau exponent against the oracle") {
  const TauContext a = TauContext::make(fixture_gerbe(1), e(4, Rational(1, 7)), SubgroupCase::Integral);
  CHECK(tau_exponent(a, e(2) + e(3))(zero_vector(4)) == gr(Rational(1, 112)));
  CHECK(tau_exponent(a, e(1) + e(2) + e(3))(e(1)) == gr(Rational(1, 28), Rational(-1, 56)));

  const TauContext b = TauContext::make(fixture_gerbe(2), e(1, Rational(1, 2)), SubgroupCase::Integral);
  const QVector v = vec({Rational(1, 3), -2, Rational(5, 7), 1});
  CHECK(tau_exponent(b, vec({0, 1, -2, 1}))(v) == gr(Rational(181, 84), Rational(1, 16)));
  CHECK(phi_factor_exponent(b, e(2)).constant.is_zero());

  const TauContext c = TauContext::make(fixture_gerbe(1), vec({0, 0, 1, Rational(1, 5)}), SubgroupCase::TypeOneOne);
  CHECK(tau_exponent(c, vec({1, 1, 0, -1}))(v) == gr(Rational(-37, 120), Rational(1, 40)));
}

TEST_CASE("every tau factor is holomorphic in v") {
  Rng rng(41);
  for (SubgroupCase c : {SubgroupCase::Integral, SubgroupCase::TypeOneOne}) {
    const GerbeData G = random_gerbe_with_subgroup(2, c, rng);
    const TauContext ctx = TauContext::make(G, random_subgroup_element(G, c, rng), c);
    for (int i = 0; i < 5; ++i) {
      const QVector l = random_lattice_vector(4, rng);
      CHECK(eta_exponent(ctx, l).is_holomorphic(G.torus));
      CHECK(phi_factor_exponent(ctx, l).is_holomorphic(G.torus));
      CHECK(tau_exponent(ctx, l).is_holomorphic(G.torus));
    }
  }
}

TEST_CASE("verify_tau on the fixtures") {
  const auto samples = default_tau_samples(4, 10, 0);
  CHECK(samples.size() == 26);
  const TauContext a = TauContext::make(fixture_gerbe(2), e(1, Rational(1, 2)), SubgroupCase::Integral);
  CHECK(verify_tau(a, samples).passed);
  const TauContext b = TauContext::make(fixture_gerbe(1), vec({0, 0, 1, Rational(1, 5)}), SubgroupCase::TypeOneOne);
  CHECK(verify_tau(b, samples).passed);
}

TEST_CASE("verify_tau fails outside the subgroup") {
  const TauContext ctx = TauContext::unchecked(fixture_gerbe(1), e(1, Rational(1, 3)), SubgroupCase::Integral);
  CHECK_FALSE(ctx.in_subgroup());
  const auto samples = default_tau_samples(4);
  CHECK_THROWS_AS(verify_tau(ctx, samples), Error);
  const TauVerification v = verify_tau_unchecked(ctx, samples);
  CHECK_FALSE(v.passed);
  CHECK_THROWS_AS(TauContext::make(fixture_gerbe(1), e(1, Rational(1, 3)), SubgroupCase::Integral), Error);
}

TEST_CASE("verify_tau on random subgroup elements") {
  Rng rng(2024);
  for (SubgroupCase c : {SubgroupCase::Integral, SubgroupCase::TypeOneOne}) {
    for (int trial = 0; trial < 8; ++trial) {
      const GerbeData G = random_gerbe_with_subgroup(2, c, rng);
      const QVector w = random_subgroup_element(G, c, rng);
      CAPTURE(to_string(w));
      const TauContext ctx = TauContext::make(G, w, c);
      CHECK(verify_tau(ctx, default_tau_samples(4, 10, static_cast<std::uint64_t>(trial))).passed);
    }
  }
}

TEST_CASE("bad samples are rejected") {
  const TauContext ctx = TauContext::make(fixture_gerbe(1), e(4), SubgroupCase::Integral);
  const std::vector<LatticePair> bad{{e(1, Rational(1, 2)), e(2)}};
  CHECK_THROWS_AS(verify_tau(ctx, bad), Error);
}
