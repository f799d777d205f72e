#pragma once

#include <string_view>

#include "gerbes/gerbe.hpp"

namespace gerbes {

/// The two subgroups of Lambda(G) on which the decomposition of the
/// translation term is chosen linearly in w.
enum class SubgroupCase {
  Integral,    // E(w,.,.) has integer coefficients
  TypeOneOne,  // E(w,.,.) is of type (1,1)
};

std::string_view to_string(SubgroupCase c);
/// Accepts "integral" and "oneone"; throws Error(InvalidArgument).
SubgroupCase parse_subgroup_case(std::string_view text);

struct PClass {
  AltForm2 representative;            // E(w,.,.)
  bool is_zero = false;               // representative in Alt2(Z) + Alt2(R)^(1,1)
  std::optional<AltForm2> integral;   // eps with representative - eps of type (1,1)
};

PClass p_class(const Torus& T, const AltForm3& E, const QVector& w);
/// w in K(E, V): translation by w fixes the gerbe up to isomorphism.
bool in_K(const Torus& T, const AltForm3& E, const QVector& w);
bool in_subgroup(const Torus& T, const AltForm3& E, const QVector& w, SubgroupCase c);

/// A Z-basis of the lattice vectors lying in the subgroup: the standard basis
/// in the integral case, the integer kernel of w -> anti-invariant part of
/// E(w,.,.) in the type (1,1) case.
std::vector<QVector> subgroup_lattice_basis(const Torus& T, const AltForm3& E, SubgroupCase c);

/// E^w + eps^w = (1/8)(5 E(w,.,.) - 3 E(w,i.,i.)), E^w of type (1,1), eps^w
/// integral.
struct Decomposition {
  AltForm2 Ew;
  AltForm2 epsw;
};

/// Integral:   E^w = -(3/8)(E(w,.,.) + E(w,i.,i.)),  eps^w = E(w,.,.)
/// TypeOneOne: E^w = (1/4) E(w,.,.),                 eps^w = 0
/// Throws Error(NotInSubgroup) when w fails the membership test for the case.
Decomposition decomposition(const Torus& T, const AltForm3& E, const QVector& w, SubgroupCase c);
/// Same formulas without the membership check.
Decomposition decomposition_unchecked(const Torus& T, const AltForm3& E, const QVector& w, SubgroupCase c);

}  // namespace gerbes
