#include "gerbes/problem.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "gerbes/error.hpp"
#include "gerbes/sweep.hpp"

namespace gerbes {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

constexpr const char* kModule = "cli";

[[noreturn]] void fail(ErrorCode code, const std::string& field, const std::string& what) {
  throw Error(code, kModule, field.empty() ? what : field + ": " + what);
}

Rational rational_field(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.dump());
  if (!j.is_string()) fail(ErrorCode::MalformedRational, field, "expected a rational string \"p/q\", got " + j.dump());
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    fail(e.code(), field, e.what());
  }
}

template <std::size_t K>
std::array<std::size_t, K> index_field(const json& j, const std::string& field, std::size_t dim) {
  if (!j.is_array() || j.size() != K)
    fail(ErrorCode::BadDimensions, field, "expected " + std::to_string(K) + " indices");
  std::array<std::size_t, K> out{};
  for (std::size_t i = 0; i < K; ++i) {
    if (!j[i].is_number_integer()) fail(ErrorCode::MalformedProblem, field, "indices must be integers");
    const long long x = j[i].get<long long>();
    if (x < 1 || static_cast<std::size_t>(x) > dim)
      fail(ErrorCode::BadDimensions, field, "index " + std::to_string(x) + " outside 1.." + std::to_string(dim));
    out[i] = static_cast<std::size_t>(x);
    if (i > 0 && out[i] <= out[i - 1]) fail(ErrorCode::NonIncreasingIndices, field, "indices must be strictly increasing");
  }
  return out;
}

QVector vector_field(const json& j, const std::string& field, std::size_t dim) {
  if (!j.is_array()) fail(ErrorCode::MalformedProblem, field, "expected an array of rationals");
  if (j.size() != dim) fail(ErrorCode::BadDimensions, field, "expected " + std::to_string(dim) + " entries");
  QVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_field(j[i], field + "[" + std::to_string(i) + "]"));
  return v;
}

const json& required(const json& doc, const char* key) {
  if (!doc.contains(key)) fail(ErrorCode::MalformedProblem, key, "missing field");
  return doc.at(key);
}

// Output helpers. Rationals are always strings.

ojson vector_json(const QVector& v) {
  ojson a = ojson::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

ojson gaussian_json(const GaussianRational& z) { return {{"re", to_string(z.re)}, {"im", to_string(z.im)}}; }

ojson unit_json(const UnitValue& u) {
  ojson o{{"exponent_mod1", to_string(u.exponent().re)}};
  if (sgn(u.exponent().im) != 0) o["exponent_im"] = to_string(u.exponent().im);
  return o;
}

ojson character_json(const Character& c) {
  ojson a = ojson::array();
  for (const auto& z : c.exponents()) a.push_back(unit_json(UnitValue(z)));
  return a;
}

ojson exponents_json(const Character& c) {
  ojson a = ojson::array();
  for (const auto& z : c.exponents()) a.push_back(gaussian_json(z));
  return a;
}

ojson form2_json(const AltForm2& w) {
  ojson a = ojson::array();
  for (const auto& [p, q] : AltForm2::pairs(w.dim()))
    if (sgn(w.coeff(p, q)) != 0) a.push_back({{"indices", {p + 1, q + 1}}, {"coeff", to_string(w.coeff(p, q))}});
  return a;
}

ojson tuple_json(const std::vector<QVector>& vs) {
  ojson a = ojson::array();
  for (const auto& v : vs) a.push_back(vector_json(v));
  return a;
}

struct NamedVector {
  std::string label;
  QVector v;
};

NamedVector resolve_vector(const ProblemFile& p, const std::string& ref) {
  const auto it = p.vectors.find(ref);
  if (it != p.vectors.end()) return {ref, it->second};
  QVector v;
  try {
    v = parse_vector(ref);
  } catch (const Error&) {
    fail(ErrorCode::InvalidArgument, "--w", "'" + ref + "' is neither a vector name nor an inline vector");
  }
  if (v.size() != 2 * p.n) fail(ErrorCode::BadDimensions, "--w", "'" + ref + "' has the wrong length");
  return {ref, std::move(v)};
}

std::vector<NamedVector> resolve_all(const ProblemFile& p, const std::vector<std::string>& refs) {
  std::vector<NamedVector> out;
  for (const auto& r : refs) out.push_back(resolve_vector(p, r));
  return out;
}

std::vector<NamedVector> require_count(const ProblemFile& p, const std::vector<std::string>& refs, std::size_t k,
                                       std::string_view cmd) {
  if (refs.size() != k)
    fail(ErrorCode::InvalidArgument, "--w", std::string(cmd) + " needs exactly " + std::to_string(k) + " vectors");
  return resolve_all(p, refs);
}

ojson named_json(const std::vector<NamedVector>& ws) {
  ojson a = ojson::array();
  for (const auto& w : ws) a.push_back({{"name", w.label}, {"vector", vector_json(w.v)}});
  return a;
}

std::vector<QVector> plain(const std::vector<NamedVector>& ws) {
  std::vector<QVector> out;
  for (const auto& w : ws) out.push_back(w.v);
  return out;
}

ojson second_candidates_json(const SecondObstruction& s, SubgroupCase c) {
  ojson o;
  o["E_value"] = to_string(s.E_value);
  o["brute_force"] = {{"exponent", gaussian_json(s.brute_force_exponent)}, {"value", unit_json(s.brute_force)}};
  o["general_factor"] = {{"exponent", gaussian_json(s.general_factor_exponent)}, {"value", unit_json(s.general_factor)}};
  o["closed_form"] = {{"exponent", gaussian_json(s.closed_form_exponent)}, {"value", unit_json(s.closed_form)}};
  ojson m;
  m["brute_force"] = s.brute_force_multiplier ? gaussian_json(*s.brute_force_multiplier) : ojson(nullptr);
  m["general_factor"] = s.general_factor_multiplier ? gaussian_json(*s.general_factor_multiplier) : ojson(nullptr);
  m["closed_form"] = to_string(second_obstruction_closed_form_multiplier(c));
  m["gerbal_class"] = to_string(gerbal_class_multiplier(c));
  o["multipliers"] = m;
  o["brute_force_unitary"] = s.brute_force_unitary;
  o["all_agree"] = s.all_agree;
  o["all_nontrivial"] = s.all_nontrivial;
  o["all_trivial"] = s.all_trivial;
  return o;
}

ojson certificate_json(const VanishingCertificate& c) {
  ojson o;
  o["vanishes"] = c.vanishes;
  if (c.vanishes) {
    o["certificate"] = "all pass";
  } else {
    o["certificate"] = {{"tuple", tuple_json(c.witness)}, {"value", unit_json(c.value)}};
  }
  o["notes"] = c.notes;
  return o;
}

std::string vectors_string(const std::vector<QVector>& vs) {
  std::string s = "(";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + to_string(vs[i]);
  return s + ")";
}

std::string certificate_summary(std::string_view what, const VanishingCertificate& c) {
  if (c.vanishes) return std::string(what) + " vanishes on all generator tuples";
  return std::string(what) + " does not vanish: " + vectors_string(c.witness) + " -> exp(" +
         to_string(c.value.exponent()) + ")";
}

ojson inputs_json(std::string_view cmd, const ProblemFile& p, SubgroupCase c) {
  return {{"command", cmd}, {"n", p.n}, {"case", to_string(c)}};
}

// Commands. Each fills a report; errors propagate as Error.

Report check_torus(const ProblemFile& p) {
  Report r;
  r.document["inputs"] = inputs_json("check-torus", p, p.subgroup_case);
  const Torus T = p.torus();
  r.document["outputs"] = {{"complex_structure", true}, {"real_dim", T.real_dim()}, {"complex_dim", T.complex_dim()}};
  r.summary = "J is a complex structure on R^" + std::to_string(T.real_dim());
  return r;
}

Report check_type(const ProblemFile& p) {
  Report r;
  r.document["inputs"] = inputs_json("check-type", p, p.subgroup_case);
  const GerbeData G = p.gerbe();
  r.document["outputs"] = {{"type_condition", true}, {"E_integral", G.E.is_integral()}, {"E_terms", G.E.terms().size()}};
  r.summary = "E satisfies the type condition";
  return r;
}

Report translate(const ProblemFile& p, const CommandArgs& a) {
  const GerbeData G = p.gerbe();
  const auto ws = resolve_all(p, a.w);
  if (ws.empty()) fail(ErrorCode::InvalidArgument, "--w", "translate needs at least one vector");
  Report r;
  r.document["inputs"] = inputs_json("translate", p, p.subgroup_case);
  r.document["inputs"]["w"] = named_json(ws);
  ojson rows = ojson::array();
  for (const auto& w : ws) {
    const GerbeData moved = translate_gerbe(G, w.v);
    const bool fixed = gerbes_isomorphic(moved, G);
    rows.push_back({{"name", w.label},
                    {"shift", form2_json(translation_shift(G.torus, G.E, w.v))},
                    {"translated_B", form2_json(moved.B)},
                    {"fixes_gerbe", fixed}});
    r.summary += "w = " + to_string(w.v) + (fixed ? " fixes" : " moves") + " the gerbe\n";
  }
  r.document["outputs"] = rows;
  return r;
}

Report membership(const ProblemFile& p, const CommandArgs& a) {
  const GerbeData G = p.gerbe();
  const auto ws = resolve_all(p, a.w);
  if (ws.empty()) fail(ErrorCode::InvalidArgument, "--w", "membership needs at least one vector");
  Report r;
  r.document["inputs"] = inputs_json("membership", p, p.subgroup_case);
  r.document["inputs"]["w"] = named_json(ws);
  ojson rows = ojson::array();
  for (const auto& w : ws) {
    const PClass pc = p_class(G.torus, G.E, w.v);
    ojson row{{"name", w.label},
              {"in_K", pc.is_zero},
              {"integral", in_subgroup(G.torus, G.E, w.v, SubgroupCase::Integral)},
              {"oneone", in_subgroup(G.torus, G.E, w.v, SubgroupCase::TypeOneOne)},
              {"contraction", form2_json(pc.representative)}};
    if (pc.integral) row["integral_part"] = form2_json(*pc.integral);
    rows.push_back(row);
    r.summary += "w = " + to_string(w.v) + (pc.is_zero ? " is" : " is not") + " in K\n";
  }
  r.document["outputs"] = rows;
  return r;
}

Report tau_verify(const ProblemFile& p, const CommandArgs& a, SubgroupCase c) {
  const GerbeData G = p.gerbe();
  const auto ws = resolve_all(p, a.w);
  if (ws.empty()) fail(ErrorCode::InvalidArgument, "--w", "tau-verify needs at least one vector");
  Report r;
  r.document["inputs"] = inputs_json("tau-verify", p, c);
  r.document["inputs"]["w"] = named_json(ws);
  r.document["inputs"]["samples"] = a.samples;
  r.document["inputs"]["seed"] = a.seed;
  const auto samples = default_tau_samples(G.dim(), a.samples, a.seed);
  ojson rows = ojson::array();
  for (const auto& w : ws) {
    const TauContext ctx = TauContext::unchecked(G, w.v, c);
    const TauVerification v = verify_tau_unchecked(ctx, samples);
    ojson failures = ojson::array();
    for (const auto& check : v.checks) {
      if (check.passed) continue;
      failures.push_back({{"l1", vector_json(check.pair.first)},
                          {"l2", vector_json(check.pair.second)},
                          {"residual_constant", gaussian_json(check.residual.constant)},
                          {"residual_linear_zero", check.residual.linear_part_zero()}});
    }
    rows.push_back({{"name", w.label},
                    {"in_subgroup", ctx.in_subgroup()},
                    {"pairs_checked", v.checks.size()},
                    {"passed", v.passed},
                    {"failures", failures}});
    if (!v.passed) r.exit_status = 1;
    r.summary += "w = " + to_string(w.v) + ": " + (v.passed ? "identity holds on " : "identity fails on ") +
                 std::to_string(v.passed ? v.checks.size() : failures.size()) + " pairs\n";
  }
  r.document["outputs"] = rows;
  return r;
}

Report xi(const ProblemFile& p, const CommandArgs& a, SubgroupCase c) {
  const auto ws = require_count(p, a.w, 2, "xi");
  const ObstructionContext ctx(p.gerbe(), c);
  Report r;
  r.document["inputs"] = inputs_json("xi", p, c);
  r.document["inputs"]["w"] = named_json(ws);
  const Character x = xi_character(ctx, ws[0].v, ws[1].v);
  const Character u = first_obstruction_unitary(ctx, ws[0].v, ws[1].v);
  const FirstObstruction alt = first_obstruction_pair(ctx, ws[0].v, ws[1].v);
  r.document["outputs"] = {{"xi_exponents", exponents_json(x)},
                           {"first_obstruction_unitary", character_json(u)},
                           {"alternating", character_json(alt.skew)},
                           {"closed_form", character_json(alt.closed_form)},
                           {"closed_form_agrees", alt.agree},
                           {"alternating_trivial", alt.skew.is_trivial()}};
  if (!alt.skew.is_trivial() || !alt.agree) r.exit_status = 1;
  r.summary = std::string("alternating first obstruction is ") + (alt.skew.is_trivial() ? "trivial" : "nontrivial");
  return r;
}

std::vector<NamedVector> generator_list(const ProblemFile& p, const CommandArgs& a) {
  return resolve_all(p, a.generators.empty() ? a.w : a.generators);
}

Report obstruction(const ProblemFile& p, const CommandArgs& a, SubgroupCase c, ObstructionKind kind) {
  const GerbeData G = p.gerbe();
  const auto gens = generator_list(p, a);
  const SubgroupSpec spec{plain(gens), c};
  const bool first = kind == ObstructionKind::First;
  Report r;
  r.document["inputs"] = inputs_json(first ? "obstruction1" : "obstruction2", p, c);
  r.document["inputs"]["generators"] = named_json(gens);

  const VanishingCertificate cert = obstruction_vanishes(spec, G, kind);
  if (first) {
    r.document["outputs"] = certificate_json(cert);
    r.summary = certificate_summary("first obstruction", cert);
  } else {
    const VanishingCertificate pre = obstruction_vanishes(spec, G, ObstructionKind::First);
    ojson out;
    out["first_obstruction"] = certificate_json(pre);
    out["second_obstruction"] = certificate_json(cert);
    const ObstructionContext ctx(G, c);
    if (!cert.vanishes) {
      out["candidates"] = second_candidates_json(
          second_obstruction_alternating(ctx, cert.witness[0], cert.witness[1], cert.witness[2]), c);
    }
    r.document["outputs"] = out;
    r.summary = certificate_summary("first obstruction", pre) + "\n" + certificate_summary("second obstruction", cert);
  }
  if (!cert.vanishes) r.exit_status = 1;
  return r;
}

Report theta_table(const ProblemFile& p, const CommandArgs& a, SubgroupCase c) {
  const auto gens = generator_list(p, a);
  const ObstructionContext ctx(p.gerbe(), c);
  for (const auto& g : gens) ctx.require_member(g.v);
  const std::vector<QVector> vs = plain(gens);
  Report r;
  r.document["inputs"] = inputs_json("theta-table", p, c);
  r.document["inputs"]["generators"] = named_json(gens);
  ojson rows = ojson::array();
  for (const auto& row : kernels::second_obstruction_table_parallel(ctx, vs)) {
    rows.push_back({{"indices", {row.i + 1, row.j + 1, row.k + 1}},
                    {"cocycle", gaussian_json(row.cocycle)},
                    {"brute_force", unit_json(row.value.brute_force)},
                    {"general_factor", unit_json(row.value.general_factor)},
                    {"closed_form", unit_json(row.value.closed_form)}});
  }
  r.document["outputs"] = rows;
  r.summary = std::to_string(rows.size()) + " generator triples";
  return r;
}

Report gerbal(const ProblemFile& p, const CommandArgs& a, SubgroupCase c) {
  const auto ws = require_count(p, a.w, 3, "gerbal-class");
  const ObstructionContext ctx(p.gerbe(), c);
  Report r;
  r.document["inputs"] = inputs_json("gerbal-class", p, c);
  r.document["inputs"]["w"] = named_json(ws);
  const UnitValue u = gerbal_class(ctx, ws[0].v, ws[1].v, ws[2].v);
  r.document["outputs"] = {{"multiplier", to_string(gerbal_class_multiplier(c))},
                           {"E_value", to_string(ctx.E()(ws[0].v, ws[1].v, ws[2].v))},
                           {"value", unit_json(u)}};
  r.summary = "gerbal class exp(" + to_string(u.exponent()) + ")";
  return r;
}

QVector half_basis(std::size_t dim, std::size_t i) { return basis_vector(dim, i, Rational(1, 2)); }

Report example_first() {
  const ProblemFile p = example_problem("first-obstruction");
  const GerbeData G = p.gerbe();
  const SubgroupSpec spec{{half_basis(4, 0), half_basis(4, 1)}, SubgroupCase::Integral};
  const VanishingCertificate cert = obstruction_vanishes(spec, G, ObstructionKind::First);
  const std::vector<QVector> expected{half_basis(4, 0), half_basis(4, 1), basis_vector(4, 2)};
  const ObstructionContext ctx(G, SubgroupCase::Integral);
  const FirstObstruction alt = first_obstruction_alternating(ctx, expected[0], expected[1]);
  const UnitValue at_e3 = alt.closed_form(expected[2]);
  const bool reproduced = !cert.vanishes && cert.witness == expected && at_e3 == UnitValue(GaussianRational(Rational(1, 2)));

  Report r;
  r.document["inputs"] = {{"command", "example"}, {"name", "first-obstruction"}, {"problem", json::parse(render_problem(p))}};
  r.document["outputs"] = {{"obstruction1", certificate_json(cert)},
                           {"closed_form_at_e3", unit_json(at_e3)},
                           {"expected_certificate", tuple_json(expected)},
                           {"reproduced", reproduced}};
  r.summary = certificate_summary("first obstruction", cert) + (reproduced ? "\nreproduced" : "\nNOT reproduced");
  r.exit_status = 1;
  return r;
}

Report example_second() {
  const ProblemFile p = example_problem("second-obstruction");
  const GerbeData G = p.gerbe();
  SubgroupSpec spec{{}, SubgroupCase::Integral};
  for (std::size_t i = 0; i < 4; ++i) spec.generators.push_back(half_basis(4, i));
  const VanishingCertificate first = obstruction_vanishes(spec, G, ObstructionKind::First);
  const VanishingCertificate second = obstruction_vanishes(spec, G, ObstructionKind::Second);
  const std::vector<QVector> expected{half_basis(4, 0), half_basis(4, 1), half_basis(4, 2)};
  const ObstructionContext ctx(G, SubgroupCase::Integral);
  const SecondObstruction s = second_obstruction_alternating(ctx, expected[0], expected[1], expected[2]);
  const bool reproduced = first.vanishes && !second.vanishes && second.witness == expected &&
                          s.closed_form == UnitValue(GaussianRational(Rational(1, 2))) && s.all_nontrivial;

  Report r;
  r.document["inputs"] = {{"command", "example"}, {"name", "second-obstruction"}, {"problem", json::parse(render_problem(p))}};
  r.document["outputs"] = {{"obstruction1", certificate_json(first)},
                           {"obstruction2", certificate_json(second)},
                           {"candidates", second_candidates_json(s, SubgroupCase::Integral)},
                           {"gerbal_class", unit_json(gerbal_class(ctx, expected[0], expected[1], expected[2]))},
                           {"expected_certificate", tuple_json(expected)},
                           {"reproduced", reproduced}};
  r.summary = certificate_summary("first obstruction", first) + "\n" + certificate_summary("second obstruction", second) +
              (reproduced ? "\nreproduced" : "\nNOT reproduced");
  r.exit_status = 1;
  return r;
}

Report example_k_group() {
  const ProblemFile p = example_problem("k-group");
  const GerbeData G = p.gerbe();
  const std::array<Rational, 4> grid{Rational(0), Rational(1, 3), Rational(1, 2), Rational(1)};
  ojson rows = ojson::array();
  bool all_match = true;
  for (std::size_t code = 0; code < 256; ++code) {
    QVector w(4);
    for (std::size_t i = 0, c = code; i < 4; ++i, c /= 4) w[3 - i] = grid[c % 4];
    const bool member = in_subgroup(G.torus, G.E, w, SubgroupCase::Integral);
    const bool predicted = is_integer(w[0]) && is_integer(w[1]) && is_integer(w[2]);
    all_match = all_match && member == predicted;
    rows.push_back({{"w", vector_json(w)}, {"member", member}, {"predicted", predicted}});
  }

  const GerbeData doubled = GerbeData::make(G.torus, G.B, Rational(2) * G.E);
  bool half_lattice = true;
  for (std::size_t i = 0; i < 4; ++i)
    half_lattice = half_lattice && in_subgroup(doubled.torus, doubled.E, half_basis(4, i), SubgroupCase::Integral) &&
                   in_K(doubled.torus, doubled.E, half_basis(4, i));

  Report r;
  r.document["inputs"] = {{"command", "example"}, {"name", "k-group"}, {"problem", json::parse(render_problem(p))}};
  r.document["outputs"] = {{"rule", "w in integral subgroup iff w1, w2, w3 are integers"},
                           {"table", rows},
                           {"all_match", all_match},
                           {"doubled_E_half_lattice_in_K", half_lattice}};
  r.summary = std::string("membership table ") + (all_match ? "matches" : "does NOT match") +
              "; (1/2)Z^4 " + (half_lattice ? "is" : "is not") + " in K for 2E";
  r.exit_status = all_match && half_lattice ? 0 : 1;
  return r;
}

}  // namespace

Torus ProblemFile::torus() const { return Torus::from_complex_structure(J); }

GerbeData ProblemFile::gerbe() const {
  const std::size_t d = 2 * n;
  AltForm2 b(d);
  for (const auto& t : B) b.add_wedge(t.indices[0] - 1, t.indices[1] - 1, t.coeff);
  AltForm3 e(d);
  for (const auto& t : E) e.add_term(t.indices[0] - 1, t.indices[1] - 1, t.indices[2] - 1, t.coeff);
  return GerbeData::make(torus(), std::move(b), std::move(e));
}

ProblemFile parse_problem(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    fail(ErrorCode::MalformedProblem, "line " + std::to_string(line), e.what());
  }
  if (!doc.is_object()) fail(ErrorCode::MalformedProblem, "", "problem must be a JSON object");

  ProblemFile p;
  const json& n = required(doc, "n");
  if (!n.is_number_unsigned() || n.get<std::size_t>() == 0) fail(ErrorCode::BadDimensions, "n", "must be a positive integer");
  p.n = n.get<std::size_t>();
  const std::size_t d = 2 * p.n;

  const json& J = required(doc, "J");
  if (!J.is_array() || J.size() != d) fail(ErrorCode::BadDimensions, "J", "expected " + std::to_string(d) + " rows");
  p.J = QMatrix(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    const std::string field = "J[" + std::to_string(r) + "]";
    if (!J[r].is_array() || J[r].size() != d) fail(ErrorCode::BadDimensions, field, "expected " + std::to_string(d) + " entries");
    for (std::size_t c = 0; c < d; ++c) p.J(r, c) = rational_field(J[r][c], field + "[" + std::to_string(c) + "]");
  }

  const json& E = required(doc, "E");
  if (!E.is_array()) fail(ErrorCode::MalformedProblem, "E", "expected a list of terms");
  for (std::size_t i = 0; i < E.size(); ++i) {
    const std::string field = "E[" + std::to_string(i) + "]";
    if (!E[i].is_object()) fail(ErrorCode::MalformedProblem, field, "expected {indices, coeff}");
    p.E.push_back({index_field<3>(required(E[i], "indices"), field + ".indices", d),
                   rational_field(required(E[i], "coeff"), field + ".coeff")});
  }

  if (doc.contains("B")) {
    const json& B = doc.at("B");
    if (!B.is_array()) fail(ErrorCode::MalformedProblem, "B", "expected a list of terms");
    for (std::size_t i = 0; i < B.size(); ++i) {
      const std::string field = "B[" + std::to_string(i) + "]";
      if (!B[i].is_object()) fail(ErrorCode::MalformedProblem, field, "expected {indices, coeff}");
      p.B.push_back({index_field<2>(required(B[i], "indices"), field + ".indices", d),
                     rational_field(required(B[i], "coeff"), field + ".coeff")});
    }
  }

  if (doc.contains("vectors")) {
    const json& V = doc.at("vectors");
    if (!V.is_object()) fail(ErrorCode::MalformedProblem, "vectors", "expected an object of named vectors");
    for (const auto& [name, value] : V.items()) p.vectors[name] = vector_field(value, "vectors." + name, d);
  }

  if (doc.contains("case")) {
    const json& c = doc.at("case");
    if (!c.is_string()) fail(ErrorCode::MalformedProblem, "case", "expected \"integral\" or \"oneone\"");
    try {
      p.subgroup_case = parse_subgroup_case(c.get<std::string>());
    } catch (const Error& e) {
      fail(ErrorCode::MalformedProblem, "case", e.what());
    }
  }

  try {
    p.gerbe();
  } catch (const Error& e) {
    fail(e.code(), e.code() == ErrorCode::NotAComplexStructure ? "J" : "E", e.what());
  }
  return p;
}

std::string render_problem(const ProblemFile& p) {
  ojson doc;
  doc["n"] = p.n;
  ojson J = ojson::array();
  for (std::size_t r = 0; r < p.J.rows(); ++r) J.push_back(vector_json(p.J.row(r)));
  doc["J"] = J;
  ojson E = ojson::array();
  for (const auto& t : p.E) E.push_back({{"indices", t.indices}, {"coeff", to_string(t.coeff)}});
  doc["E"] = E;
  if (!p.B.empty()) {
    ojson B = ojson::array();
    for (const auto& t : p.B) B.push_back({{"indices", t.indices}, {"coeff", to_string(t.coeff)}});
    doc["B"] = B;
  }
  ojson V = ojson::object();
  for (const auto& [name, v] : p.vectors) V[name] = vector_json(v);
  doc["vectors"] = V;
  doc["case"] = to_string(p.subgroup_case);
  return doc.dump(2) + "\n";
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::MalformedProblem, path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

ProblemFile example_problem(std::string_view name) {
  ProblemFile p;
  p.n = 2;
  p.J = Torus::standard(2).J();
  p.subgroup_case = SubgroupCase::Integral;
  if (name == "first-obstruction") {
    p.E = {{{1, 2, 3}, Rational(2)}};
    p.vectors = {{"w1", half_basis(4, 0)}, {"w2", half_basis(4, 1)}};
  } else if (name == "second-obstruction") {
    p.E = {{{1, 2, 3}, Rational(4)}};
    for (std::size_t i = 0; i < 4; ++i) p.vectors["h" + std::to_string(i + 1)] = half_basis(4, i);
  } else if (name == "k-group") {
    p.E = {{{1, 2, 3}, Rational(1)}};
    p.vectors = {{"w", basis_vector(4, 3, Rational(1, 3))}};
  } else {
    fail(ErrorCode::InvalidArgument, "--name",
         "unknown example '" + std::string(name) + "' (first-obstruction, second-obstruction, k-group)");
  }
  return p;
}

Report run_command(std::string_view cmd, const std::optional<ProblemFile>& problem, const CommandArgs& args) {
  if (cmd == "example") {
    if (args.name == "first-obstruction") return example_first();
    if (args.name == "second-obstruction") return example_second();
    if (args.name == "k-group") return example_k_group();
    example_problem(args.name);  // throws with the list of names
  }
  if (std::find(kCommands.begin(), kCommands.end(), cmd) == kCommands.end())
    fail(ErrorCode::UnknownCommand, "", "unknown command '" + std::string(cmd) + "'");
  if (!problem) fail(ErrorCode::MalformedProblem, "", std::string(cmd) + " needs a problem file");

  const ProblemFile& p = *problem;
  const SubgroupCase c = args.subgroup_case.value_or(p.subgroup_case);
  if (cmd == "check-torus") return check_torus(p);
  if (cmd == "check-type") return check_type(p);
  if (cmd == "translate") return translate(p, args);
  if (cmd == "membership") return membership(p, args);
  if (cmd == "tau-verify") return tau_verify(p, args, c);
  if (cmd == "xi") return xi(p, args, c);
  if (cmd == "obstruction1") return obstruction(p, args, c, ObstructionKind::First);
  if (cmd == "obstruction2") return obstruction(p, args, c, ObstructionKind::Second);
  if (cmd == "theta-table") return theta_table(p, args, c);
  return gerbal(p, args, c);
}

Report error_report(const Error& e) {
  Report r;
  r.document["error"] = {{"code", to_string(e.code())}, {"module", e.module()}, {"message", e.what()}};
  r.summary = "error [" + e.module() + "] " + std::string(to_string(e.code())) + ": " + e.what();
  r.exit_status = 2;
  return r;
}

}  // namespace gerbes
