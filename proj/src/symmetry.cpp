#include "gerbes/symmetry.hpp"

#include "gerbes/error.hpp"
#include "gerbes/lattice.hpp"

namespace gerbes {

std::string_view to_string(SubgroupCase c) {
  return c == SubgroupCase::Integral ? "integral" : "oneone";
}

SubgroupCase parse_subgroup_case(std::string_view text) {
  if (text == "integral") return SubgroupCase::Integral;
  if (text == "oneone") return SubgroupCase::TypeOneOne;
  throw Error(ErrorCode::InvalidArgument, "symmetry", "case must be 'integral' or 'oneone', got '" + std::string(text) + "'");
}

PClass p_class(const Torus& T, const AltForm3& E, const QVector& w) {
  PClass out{contract3(E, w), false, std::nullopt};
  out.integral = integral_mod_type11(T, out.representative);
  out.is_zero = out.integral.has_value();
  return out;
}

bool in_K(const Torus& T, const AltForm3& E, const QVector& w) { return p_class(T, E, w).is_zero; }

bool in_subgroup(const Torus& T, const AltForm3& E, const QVector& w, SubgroupCase c) {
  const AltForm2 omega = contract3(E, w);
  if (c == SubgroupCase::Integral) return omega.is_integral();
  return anti_invariant_part(T, omega).is_zero();
}

std::vector<QVector> subgroup_lattice_basis(const Torus& T, const AltForm3& E, SubgroupCase c) {
  const std::size_t d = T.real_dim();
  std::vector<QVector> basis;
  if (c == SubgroupCase::Integral) {
    for (std::size_t k = 0; k < d; ++k) basis.push_back(basis_vector(d, k));
    return basis;
  }
  const std::size_t m = AltForm2::pairs(d).size();
  QMatrix A(m, d);
  for (std::size_t j = 0; j < d; ++j) {
    const QVector col = anti_invariant_part(T, contract3(E, basis_vector(d, j))).pair_coordinates();
    for (std::size_t i = 0; i < m; ++i) A(i, j) = col[i];
  }
  return integer_kernel(A);
}

Decomposition decomposition_unchecked(const Torus& T, const AltForm3& E, const QVector& w, SubgroupCase c) {
  const AltForm2 omega = contract3(E, w);
  if (c == SubgroupCase::Integral)
    return {Rational(-3, 8) * (omega + j_pullback2(T, omega)), omega};
  return {Rational(1, 4) * omega, AltForm2(omega.dim())};
}

Decomposition decomposition(const Torus& T, const AltForm3& E, const QVector& w, SubgroupCase c) {
  if (!in_subgroup(T, E, w, c))
    throw Error(ErrorCode::NotInSubgroup, "symmetry",
                "w = " + to_string(w) + " is not in the " + std::string(to_string(c)) + " subgroup");
  return decomposition_unchecked(T, E, w, c);
}

}  // namespace gerbes
