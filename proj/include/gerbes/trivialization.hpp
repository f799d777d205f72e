#pragma once

#include <cstdint>
#include <utility>

#include "gerbes/symmetry.hpp"

namespace gerbes {

/// Everything needed to write down tau^w, the chosen isomorphism from the
/// translated gerbe w.G back to G.
class TauContext {
 public:
  /// Throws Error(NotInSubgroup) unless w lies in the subgroup for the case.
  static TauContext make(GerbeData gerbe, QVector w, SubgroupCase c);
  /// Applies the case's decomposition formulas even when w is outside the
  /// subgroup; used to witness failure of the trivialization identity.
  static TauContext unchecked(GerbeData gerbe, QVector w, SubgroupCase c);

  const GerbeData& gerbe() const { return gerbe_; }
  const Torus& torus() const { return gerbe_.torus; }
  const AltForm3& E() const { return gerbe_.E; }
  const QVector& w() const { return w_; }
  const Decomposition& decomposition() const { return dec_; }
  SubgroupCase subgroup_case() const { return case_; }
  bool in_subgroup() const { return in_subgroup_; }
  std::size_t dim() const { return w_.size(); }

 private:
  TauContext(GerbeData g, QVector w, Decomposition d, SubgroupCase c, bool member)
      : gerbe_(std::move(g)), w_(std::move(w)), dec_(std::move(d)), case_(c), in_subgroup_(member) {}

  GerbeData gerbe_;
  QVector w_;
  Decomposition dec_;
  SubgroupCase case_;
  bool in_subgroup_;
};

/// eta^w_lambda(v) = exp(-i l(w,v,lambda) - l(w,iv,lambda)); linear in v.
ExponentFn eta_exponent(const TauContext& ctx, const QVector& lambda);

/// mu^w_lambda = exp((1/16)((3/2) E(iw,i lambda,lambda) + (1/2) E(iw,lambda,i lambda))).
/// Note the overall sign: this is the quadratic cochain whose coboundary turns
/// k(w,l1,l2) - l(w,il1,l2) into (1/16)(5E(w,l1,l2) - 3E(w,il1,il2)).
Rational mu_exponent(const TauContext& ctx, const QVector& lambda);

/// -(1/2) sum_{i<j} n_i n_j eps^w(e_i, e_j) for lambda = sum n_i e_i, using the
/// standard basis in index order. lambda must be integral.
Rational nu_exponent(const TauContext& ctx, const QVector& lambda);

/// L^w(v,lambda) = (i/2)E^w(iv,lambda) - (1/2)E^w(v,lambda) + (i/4)E^w(i lambda,lambda).
ExponentFn phi_factor_exponent(const TauContext& ctx, const QVector& lambda);

/// T(w,v,lambda): the sum of the four factor exponents above.
ExponentFn tau_exponent(const TauContext& ctx, const QVector& lambda);

using LatticePair = std::pair<QVector, QVector>;

struct PairCheck {
  LatticePair pair;
  ExponentFn residual;  // H_{l1,l2}(w) + (delta tau^w)_{l1,l2}
  bool passed = false;  // residual is a constant real integer
};

struct TauVerification {
  bool passed = false;
  std::vector<PairCheck> checks;
};

/// All ordered pairs of basis vectors followed by `extra` seeded random pairs
/// with entries in [-3, 3].
std::vector<LatticePair> default_tau_samples(std::size_t dim, std::size_t extra = 10, std::uint64_t seed = 0);

/// The exponent of (delta tau^w) times exp(H(w)) at one pair of lattice vectors.
ExponentFn tau_residual(const TauContext& ctx, const QVector& l1, const QVector& l2);

/// Checks exp(H_{l1,l2}(w)) (delta tau^w)_{l1,l2} == 1 on every sample pair.
/// Throws Error(NotInSubgroup) for a context built with `unchecked` whose w is
/// outside the subgroup; use verify_tau_unchecked to witness the failure.
TauVerification verify_tau(const TauContext& ctx, std::span<const LatticePair> samples);
TauVerification verify_tau_unchecked(const TauContext& ctx, std::span<const LatticePair> samples);

}  // namespace gerbes
