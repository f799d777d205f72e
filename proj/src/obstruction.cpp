#include "gerbes/obstruction.hpp"

#include "gerbes/error.hpp"
#include "gerbes/sweep.hpp"

namespace gerbes {

namespace {

constexpr const char* kModule = "obstruction";

std::vector<QVector> basis(std::size_t dim) {
  std::vector<QVector> out;
  for (std::size_t k = 0; k < dim; ++k) out.push_back(basis_vector(dim, k));
  return out;
}

std::string tuple_string(std::initializer_list<const QVector*> vs) {
  std::string s = "(";
  bool first = true;
  for (const QVector* v : vs) {
    if (!first) s += ", ";
    s += to_string(*v);
    first = false;
  }
  return s + ")";
}

}  // namespace

bool ObstructionContext::contains(const QVector& w) const {
  if (w.size() != dim()) throw Error(ErrorCode::DimensionMismatch, kModule, "vector has wrong length");
  return in_subgroup(torus(), E(), w, case_);
}

void ObstructionContext::require_member(const QVector& w) const {
  if (!contains(w))
    throw Error(ErrorCode::NotInSubgroup, kModule,
                "w = " + to_string(w) + " is not in the " + std::string(to_string(case_)) + " subgroup");
}

Decomposition ObstructionContext::decomposition(const QVector& w) const {
  require_member(w);
  return decomposition_unchecked(torus(), E(), w, case_);
}

GaussianRational S_value(const ObstructionContext& ctx, const QVector& w1, const QVector& w2, const QVector& lambda) {
  ctx.require_member(w1);
  const AltForm2 Ew2 = ctx.decomposition(w2).Ew;
  if (lambda.size() != ctx.dim()) throw Error(ErrorCode::DimensionMismatch, kModule, "lambda has wrong length");
  const Torus& T = ctx.torus();
  const AltForm3& E = ctx.E();
  const QVector iw1 = T.mul_i(w1), iw2 = T.mul_i(w2), il = T.mul_i(lambda);
  const Rational half(1, 2), eighth(1, 8);
  GaussianRational s;
  s.re = -half * Ew2(w1, lambda) - eighth * (-half * E(w2, w1, lambda) + half * E(w2, iw1, il) - E(iw2, iw1, lambda));
  s.im = half * Ew2(iw1, lambda) - eighth * (half * E(w2, iw1, lambda) + half * E(w2, w1, il) - E(iw2, w1, lambda));
  return s;
}

Character S_character(const ObstructionContext& ctx, const QVector& w1, const QVector& w2) {
  std::vector<GaussianRational> ex;
  for (const QVector& e : basis(ctx.dim())) ex.push_back(S_value(ctx, w1, w2, e));
  return Character(std::move(ex));
}

Character xi_from_tau(const ObstructionContext& ctx, const QVector& w1, const QVector& w2) {
  const TauContext t1 = ctx.tau(w1), t2 = ctx.tau(w2), t12 = ctx.tau(w1 + w2);
  std::vector<GaussianRational> ex;
  for (const QVector& e : basis(ctx.dim())) {
    const ExponentFn f = tau_exponent(t2, e).shifted(w1) - tau_exponent(t12, e) + tau_exponent(t1, e);
    if (!f.linear_part_zero())
      throw Error(ErrorCode::InternalMismatch, kModule, "tau composition depends on v at lambda = " + to_string(e));
    ex.push_back(f.constant);
  }
  return Character(std::move(ex));
}

Character xi_character(const ObstructionContext& ctx, const QVector& w1, const QVector& w2) {
  const Character via_tau = xi_from_tau(ctx, w1, w2);
  Character via_S = S_character(ctx, w1, w2);
  if (!(via_tau.exponents() == via_S.exponents()))
    throw Error(ErrorCode::InternalMismatch, kModule,
                "tau composition and S disagree for " + tuple_string({&w1, &w2}));
  return via_S;
}

ExponentFn theta_exponent(const ObstructionContext& ctx, const QVector& w1, const QVector& w2) {
  ctx.require_member(w1);
  const AltForm2 Ew2 = ctx.decomposition(w2).Ew;
  const Torus& T = ctx.torus();
  const QVector iw1 = T.mul_i(w1);
  const std::size_t d = ctx.dim();
  ExponentFn f = ExponentFn::zero(d);
  for (std::size_t j = 0; j < d; ++j) {
    const QVector e = basis_vector(d, j);
    const QVector ie = T.mul_i(e);
    f.lin_re[j] = l_value(T, ctx.E(), w2, w1, ie) - Rational(1, 2) * Ew2(iw1, ie);
    f.lin_im[j] = l_value(T, ctx.E(), w2, w1, e) - Rational(1, 2) * Ew2(iw1, e);
  }
  return f;
}

GaussianRational theta_value(const ObstructionContext& ctx, const QVector& w1, const QVector& w2, const QVector& v) {
  if (v.size() != ctx.dim()) throw Error(ErrorCode::DimensionMismatch, kModule, "v has wrong length");
  return theta_exponent(ctx, w1, w2)(v);
}

Character first_obstruction_unitary(const ObstructionContext& ctx, const QVector& w1, const QVector& w2) {
  ctx.require_member(w1);
  const AltForm2 Ew2 = ctx.decomposition(w2).Ew;
  const Torus& T = ctx.torus();
  const AltForm3& E = ctx.E();
  const QVector iw1 = T.mul_i(w1), iw2 = T.mul_i(w2);
  std::vector<GaussianRational> ex;
  for (const QVector& e : basis(ctx.dim()))
    ex.emplace_back(Rational(1, 8) * (E(iw2, iw1, e) - E(iw2, w1, T.mul_i(e))) - Ew2(w1, e));
  return Character(std::move(ex));
}

Character first_obstruction_closed_form(const ObstructionContext& ctx, const QVector& w1, const QVector& w2) {
  ctx.require_member(w1);
  ctx.require_member(w2);
  const bool integral = ctx.subgroup_case() == SubgroupCase::Integral;
  std::vector<GaussianRational> ex;
  for (const QVector& e : basis(ctx.dim())) ex.emplace_back(integral ? ctx.E()(w2, w1, e) : ctx.E()(w1, w2, e));
  return Character(std::move(ex));
}

FirstObstruction first_obstruction_pair(const ObstructionContext& ctx, const QVector& w1, const QVector& w2) {
  FirstObstruction out;
  out.skew = first_obstruction_unitary(ctx, w1, w2) * first_obstruction_unitary(ctx, w2, w1).inverse();
  out.closed_form = first_obstruction_closed_form(ctx, w1, w2);
  out.agree = out.skew.equals(out.closed_form);
  return out;
}

FirstObstruction first_obstruction_alternating(const ObstructionContext& ctx, const QVector& w1, const QVector& w2) {
  FirstObstruction out = first_obstruction_pair(ctx, w1, w2);
  if (!out.agree)
    throw Error(ErrorCode::ClosedFormMismatch, kModule,
                "skew-symmetrization and closed form differ at " + tuple_string({&w1, &w2}));
  return out;
}

GaussianRational second_obstruction_cocycle(const ObstructionContext& ctx, const QVector& w1, const QVector& w2,
                                            const QVector& w3) {
  return theta_value(ctx, w2, w3, w1);
}

Rational second_obstruction_closed_form_multiplier(SubgroupCase c) {
  return c == SubgroupCase::Integral ? Rational(-9) : Rational(36);
}

Rational gerbal_class_multiplier(SubgroupCase c) {
  return c == SubgroupCase::Integral ? Rational(-3, 2) : Rational(6);
}

SecondObstruction second_obstruction_alternating(const ObstructionContext& ctx, const QVector& w1, const QVector& w2,
                                                 const QVector& w3) {
  const Decomposition d1 = ctx.decomposition(w1);
  const Decomposition d2 = ctx.decomposition(w2);
  const Decomposition d3 = ctx.decomposition(w3);
  const std::vector<QVector> args{w1, w2, w3};

  SecondObstruction out;
  out.E_value = ctx.E()(w1, w2, w3);
  out.brute_force_exponent = skew_symmetrize(
      [&ctx](std::span<const QVector> a) { return second_obstruction_cocycle(ctx, a[0], a[1], a[2]); },
      std::span<const QVector>(args));
  out.general_factor_exponent = GaussianRational(3 * (d3.Ew(w1, w2) + d1.Ew(w2, w3) - d2.Ew(w1, w3)));
  out.closed_form_exponent = GaussianRational(second_obstruction_closed_form_multiplier(ctx.subgroup_case()) * out.E_value);

  out.brute_force = UnitValue(out.brute_force_exponent);
  out.general_factor = UnitValue(out.general_factor_exponent);
  out.closed_form = UnitValue(out.closed_form_exponent);

  if (sgn(out.E_value) != 0) {
    const Rational inv = 1 / out.E_value;
    out.brute_force_multiplier = out.brute_force_exponent * inv;
    out.general_factor_multiplier = out.general_factor_exponent * inv;
  }
  out.brute_force_unitary = out.brute_force.is_unitary();
  out.all_agree = out.brute_force == out.general_factor && out.general_factor == out.closed_form;
  out.all_nontrivial = !out.brute_force.is_trivial() && !out.general_factor.is_trivial() && !out.closed_form.is_trivial();
  out.all_trivial = out.brute_force.is_trivial() && out.general_factor.is_trivial() && out.closed_form.is_trivial();
  return out;
}

ThetaGroupElement theta_group_multiply(const ThetaGroupElement& a, const ThetaGroupElement& b,
                                       const ObstructionContext& ctx) {
  if (a.alpha.dim() != ctx.dim() || b.alpha.dim() != ctx.dim())
    throw Error(ErrorCode::DimensionMismatch, kModule, "character rank differs from the lattice rank");
  QVector sum = a.w + b.w;
  ctx.require_member(sum);
  return {a.alpha * b.alpha * S_character(ctx, a.w, b.w), std::move(sum)};
}

VanishingCertificate obstruction_vanishes(const SubgroupSpec& spec, const GerbeData& gerbe, ObstructionKind kind) {
  const ObstructionContext ctx(gerbe, spec.subgroup_case);
  std::vector<QVector> gens = spec.generators;
  for (const QVector& g : gens) ctx.require_member(g);
  for (QVector& e : subgroup_lattice_basis(ctx.torus(), ctx.E(), spec.subgroup_case)) gens.push_back(std::move(e));

  VanishingCertificate cert;
  if (kind == ObstructionKind::First) {
    for (const auto& row : kernels::first_obstruction_table_parallel(ctx, gens)) {
      const QVector& a = gens[row.i];
      const QVector& b = gens[row.j];
      if (!row.value.agree)
        cert.notes.push_back("first obstruction: skew-symmetrization and closed form differ at " + tuple_string({&a, &b}));
      const auto k = row.value.skew.first_nontrivial_index();
      if (k && cert.vanishes) {
        cert.vanishes = false;
        const QVector e = basis_vector(ctx.dim(), *k);
        cert.witness = {a, b, e};
        cert.value = row.value.skew(e);
      }
    }
    return cert;
  }

  for (const auto& row : kernels::second_obstruction_table_parallel(ctx, gens)) {
    const QVector& a = gens[row.i];
    const QVector& b = gens[row.j];
    const QVector& c = gens[row.k];
    const SecondObstruction& s = row.value;
    if (!(s.brute_force == s.closed_form))
      cert.notes.push_back("second obstruction: brute force " + to_string(s.brute_force.exponent()) +
                           " differs from closed form " + to_string(s.closed_form.exponent()) + " at " +
                           tuple_string({&a, &b, &c}));
    if (!(s.general_factor == s.closed_form))
      cert.notes.push_back("second obstruction: general factor " + to_string(s.general_factor.exponent()) +
                           " differs from closed form " + to_string(s.closed_form.exponent()) + " at " +
                           tuple_string({&a, &b, &c}));
    if (!s.closed_form.is_trivial() && cert.vanishes) {
      cert.vanishes = false;
      cert.witness = {a, b, c};
      cert.value = s.closed_form;
    }
  }
  return cert;
}

UnitValue gerbal_class(const ObstructionContext& ctx, const QVector& w1, const QVector& w2, const QVector& w3) {
  for (const QVector* w : {&w1, &w2, &w3}) ctx.require_member(*w);
  const std::pair<const QVector*, const QVector*> pairs[] = {{&w1, &w2}, {&w1, &w3}, {&w2, &w3}};
  for (const auto& [a, b] : pairs)
    if (!first_obstruction_closed_form(ctx, *a, *b).is_trivial())
      throw Error(ErrorCode::FirstObstructionNonzero, kModule,
                  "first obstruction does not vanish on " + tuple_string({a, b}));
  return UnitValue(GaussianRational(gerbal_class_multiplier(ctx.subgroup_case()) * ctx.E()(w1, w2, w3)));
}

}  // namespace gerbes
