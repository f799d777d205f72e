#include "gerbes/trivialization.hpp"

#include <algorithm>
#include <random>

#include "gerbes/error.hpp"
#include "gerbes/sweep.hpp"

namespace gerbes {

TauContext TauContext::make(GerbeData gerbe, QVector w, SubgroupCase c) {
  if (w.size() != gerbe.dim()) throw Error(ErrorCode::DimensionMismatch, "trivialization", "w has wrong length");
  Decomposition d = gerbes::decomposition(gerbe.torus, gerbe.E, w, c);
  return TauContext(std::move(gerbe), std::move(w), std::move(d), c, true);
}

TauContext TauContext::unchecked(GerbeData gerbe, QVector w, SubgroupCase c) {
  if (w.size() != gerbe.dim()) throw Error(ErrorCode::DimensionMismatch, "trivialization", "w has wrong length");
  const bool member = gerbes::in_subgroup(gerbe.torus, gerbe.E, w, c);
  Decomposition d = decomposition_unchecked(gerbe.torus, gerbe.E, w, c);
  return TauContext(std::move(gerbe), std::move(w), std::move(d), c, member);
}

ExponentFn eta_exponent(const TauContext& ctx, const QVector& lambda) {
  const std::size_t d = ctx.dim();
  ExponentFn f = ExponentFn::zero(d);
  for (std::size_t j = 0; j < d; ++j) {
    const QVector e = basis_vector(d, j);
    f.lin_re[j] = -l_value(ctx.torus(), ctx.E(), ctx.w(), ctx.torus().mul_i(e), lambda);
    f.lin_im[j] = -l_value(ctx.torus(), ctx.E(), ctx.w(), e, lambda);
  }
  return f;
}

Rational mu_exponent(const TauContext& ctx, const QVector& lambda) {
  const QVector iw = ctx.torus().mul_i(ctx.w());
  const QVector il = ctx.torus().mul_i(lambda);
  return Rational(1, 16) * (Rational(3, 2) * ctx.E()(iw, il, lambda) + Rational(1, 2) * ctx.E()(iw, lambda, il));
}

Rational nu_exponent(const TauContext& ctx, const QVector& lambda) {
  if (lambda.size() != ctx.dim()) throw Error(ErrorCode::DimensionMismatch, "trivialization", "lambda has wrong length");
  if (!is_integral(lambda)) throw Error(ErrorCode::InvalidArgument, "trivialization", "nu is defined on lattice vectors");
  const AltForm2& eps = ctx.decomposition().epsw;
  Rational s = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (sgn(lambda[i]) == 0) continue;
    for (std::size_t j = i + 1; j < lambda.size(); ++j) s += lambda[i] * lambda[j] * eps.coeff(i, j);
  }
  return Rational(-1, 2) * s;
}

ExponentFn phi_factor_exponent(const TauContext& ctx, const QVector& lambda) {
  const std::size_t d = ctx.dim();
  const AltForm2& Ew = ctx.decomposition().Ew;
  ExponentFn f = ExponentFn::zero(d);
  for (std::size_t j = 0; j < d; ++j) {
    const QVector e = basis_vector(d, j);
    f.lin_re[j] = Rational(-1, 2) * Ew(e, lambda);
    f.lin_im[j] = Rational(1, 2) * Ew(ctx.torus().mul_i(e), lambda);
  }
  f.constant.im = Rational(1, 4) * Ew(ctx.torus().mul_i(lambda), lambda);
  return f;
}

ExponentFn tau_exponent(const TauContext& ctx, const QVector& lambda) {
  ExponentFn t = phi_factor_exponent(ctx, lambda) + eta_exponent(ctx, lambda);
  t.constant.re += mu_exponent(ctx, lambda) + nu_exponent(ctx, lambda);
  return t;
}

std::vector<LatticePair> default_tau_samples(std::size_t dim, std::size_t extra, std::uint64_t seed) {
  std::vector<LatticePair> out;
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) out.emplace_back(basis_vector(dim, a), basis_vector(dim, b));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (std::size_t s = 0; s < extra; ++s) {
    QVector l1(dim), l2(dim);
    for (auto& x : l1) x = entry(rng);
    for (auto& x : l2) x = entry(rng);
    out.emplace_back(std::move(l1), std::move(l2));
  }
  return out;
}

ExponentFn tau_residual(const TauContext& ctx, const QVector& l1, const QVector& l2) {
  const auto tau = [&ctx](const QVector& l) { return tau_exponent(ctx, l); };
  return group_coboundary(tau, l1, l2) + translation_factor(ctx.gerbe(), ctx.w(), l1, l2);
}

TauVerification verify_tau_unchecked(const TauContext& ctx, std::span<const LatticePair> samples) {
  for (const auto& [l1, l2] : samples)
    if (l1.size() != ctx.dim() || l2.size() != ctx.dim() || !is_integral(l1) || !is_integral(l2))
      throw Error(ErrorCode::InvalidArgument, "trivialization", "samples must be lattice vectors of the torus dimension");
  TauVerification out;
  out.checks = kernels::tau_checks_parallel(ctx, samples);
  out.passed = std::all_of(out.checks.begin(), out.checks.end(), [](const PairCheck& c) { return c.passed; });
  return out;
}

TauVerification verify_tau(const TauContext& ctx, std::span<const LatticePair> samples) {
  if (!ctx.in_subgroup())
    throw Error(ErrorCode::NotInSubgroup, "trivialization",
                "w = " + to_string(ctx.w()) + " is not in the " + std::string(to_string(ctx.subgroup_case())) + " subgroup");
  return verify_tau_unchecked(ctx, samples);
}

}  // namespace gerbes
