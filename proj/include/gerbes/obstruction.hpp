#pragma once

#include "gerbes/trivialization.hpp"

namespace gerbes {

/// A gerbe together with the subgroup case whose linear decomposition
/// choices fix tau^w for every w in the subgroup.
class ObstructionContext {
 public:
  ObstructionContext(GerbeData gerbe, SubgroupCase c) : gerbe_(std::move(gerbe)), case_(c) {}

  const GerbeData& gerbe() const { return gerbe_; }
  const Torus& torus() const { return gerbe_.torus; }
  const AltForm3& E() const { return gerbe_.E; }
  SubgroupCase subgroup_case() const { return case_; }
  std::size_t dim() const { return gerbe_.dim(); }

  bool contains(const QVector& w) const;
  /// Throws Error(NotInSubgroup) or Error(DimensionMismatch).
  void require_member(const QVector& w) const;
  Decomposition decomposition(const QVector& w) const;
  TauContext tau(const QVector& w) const { return TauContext::make(gerbe_, w, case_); }

 private:
  GerbeData gerbe_;
  SubgroupCase case_;
};

/// S(w1,w2,lambda) = (i/2)E^{w2}(iw1,lambda) - (1/2)E^{w2}(w1,lambda)
///                   - i l(w2,w1,lambda) - l(w2,iw1,lambda).
GaussianRational S_value(const ObstructionContext& ctx, const QVector& w1, const QVector& w2, const QVector& lambda);
/// lambda -> exp(S(w1,w2,lambda)) on the standard basis.
Character S_character(const ObstructionContext& ctx, const QVector& w1, const QVector& w2);

/// Xi^{w1,w2} = (tau^{w1+w2})^{-1} (w1 . tau^{w2}) tau^{w1}, computed from the
/// tau exponents. Throws Error(InternalMismatch) if the result depends on v.
Character xi_from_tau(const ObstructionContext& ctx, const QVector& w1, const QVector& w2);
/// Xi^{w1,w2} computed both from tau and from S; throws
/// Error(InternalMismatch) if the two routes disagree.
Character xi_character(const ObstructionContext& ctx, const QVector& w1, const QVector& w2);

/// Theta^{w1,w2}(v) = il(w2,w1,v) + l(w2,w1,iv) - (i/2)E^{w2}(iw1,v) - (1/2)E^{w2}(iw1,iv)
ExponentFn theta_exponent(const ObstructionContext& ctx, const QVector& w1, const QVector& w2);
GaussianRational theta_value(const ObstructionContext& ctx, const QVector& w1, const QVector& w2, const QVector& v);

/// lambda -> exp((1/8)(E(iw2,iw1,lambda) - E(iw2,w1,i lambda)) - E^{w2}(w1,lambda)),
/// i.e. Xi brought into Hom(Lambda, U(1)) by the Theta correction.
Character first_obstruction_unitary(const ObstructionContext& ctx, const QVector& w1, const QVector& w2);

/// Integral: lambda -> exp(E(w2,w1,lambda)); TypeOneOne: lambda -> exp(E(w1,w2,lambda)).
Character first_obstruction_closed_form(const ObstructionContext& ctx, const QVector& w1, const QVector& w2);

struct FirstObstruction {
  Character skew;         // skew-symmetrization of first_obstruction_unitary in (w1, w2)
  Character closed_form;  // case closed form
  bool agree = false;     // equal as characters
};

/// Both routes; does not throw on disagreement.
FirstObstruction first_obstruction_pair(const ObstructionContext& ctx, const QVector& w1, const QVector& w2);
/// Throws Error(ClosedFormMismatch) if the skew-symmetrization and the closed
/// form differ.
FirstObstruction first_obstruction_alternating(const ObstructionContext& ctx, const QVector& w1, const QVector& w2);

/// Exponent of Theta^{w2,w3}(w1).
GaussianRational second_obstruction_cocycle(const ObstructionContext& ctx, const QVector& w1, const QVector& w2,
                                            const QVector& w3);

/// Multipliers c in exp(c E(w1,w2,w3)): -9 / 36 for the second-obstruction
/// closed forms, -3/2 / 6 for the gerbal class.
Rational second_obstruction_closed_form_multiplier(SubgroupCase c);
Rational gerbal_class_multiplier(SubgroupCase c);

struct SecondObstruction {
  Rational E_value;  // E(w1, w2, w3)

  GaussianRational brute_force_exponent;     // 6-term skew of the Theta cocycle
  GaussianRational general_factor_exponent;  // 3(E^{w3}(w1,w2) + E^{w1}(w2,w3) - E^{w2}(w1,w3))
  GaussianRational closed_form_exponent;     // multiplier * E(w1,w2,w3)

  UnitValue brute_force;
  UnitValue general_factor;
  UnitValue closed_form;

  // exponent / E(w1,w2,w3), when E(w1,w2,w3) != 0
  std::optional<GaussianRational> brute_force_multiplier;
  std::optional<GaussianRational> general_factor_multiplier;

  bool brute_force_unitary = false;
  bool all_agree = false;       // the three unit values coincide
  bool all_nontrivial = false;  // none of the three is 1
  bool all_trivial = false;
};

SecondObstruction second_obstruction_alternating(const ObstructionContext& ctx, const QVector& w1, const QVector& w2,
                                                 const QVector& w3);

struct ThetaGroupElement {
  Character alpha;
  QVector w;
};

/// (a1, w1)(a2, w2) = (a1 a2 exp(S(w1,w2,.)), w1 + w2)
ThetaGroupElement theta_group_multiply(const ThetaGroupElement& a, const ThetaGroupElement& b,
                                       const ObstructionContext& ctx);

struct SubgroupSpec {
  std::vector<QVector> generators;
  SubgroupCase subgroup_case = SubgroupCase::Integral;
};

enum class ObstructionKind { First, Second };

struct VanishingCertificate {
  bool vanishes = true;
  /// First: (w1, w2, e_k); Second: (w1, w2, w3). Empty when everything passes.
  std::vector<QVector> witness;
  UnitValue value;
  /// Cross-check disagreements found while searching (closed form versus
  /// brute force), reported rather than resolved.
  std::vector<std::string> notes;
};

/// Decides triviality of the alternating obstruction on all generator tuples.
/// A Z-basis of the lattice vectors in the subgroup (the standard basis in the
/// integral case) is appended to the generators. The certificate names the
/// lexicographically first failing tuple.
VanishingCertificate obstruction_vanishes(const SubgroupSpec& spec, const GerbeData& gerbe, ObstructionKind kind);

/// The gerbal-representation class exp(c E(w1,w2,w3)) with c = -3/2 (integral)
/// or 6 (type (1,1)). Throws Error(FirstObstructionNonzero) if the first
/// obstruction is nontrivial on some pair of the arguments.
UnitValue gerbal_class(const ObstructionContext& ctx, const QVector& w1, const QVector& w2, const QVector& w3);

}  // namespace gerbes
