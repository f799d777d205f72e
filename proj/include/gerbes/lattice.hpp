#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gerbes/matrix.hpp"

namespace gerbes {

struct HermiteForm {
  ZMatrix H;  // row-style Hermite normal form
  ZMatrix U;  // unimodular, H = U * M
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Row-style Hermite normal form: nonzero rows first, strictly increasing
/// pivot columns, positive pivots, entries above each pivot reduced into
/// [0, pivot).
HermiteForm hermite_normal_form(const ZMatrix& M);

/// Integer coefficients c with sum_i c_i * generators[i] == target, or nullopt
/// if the target is outside the lattice the generators span. Throws
/// Error(DimensionMismatch) if the vectors disagree in length.
std::optional<std::vector<Integer>> lattice_membership(std::span<const QVector> generators,
                                                       const QVector& target);

/// Basis of the right kernel {x : A x = 0} over Q, in reduced echelon
/// parametrization (one vector per free column).
std::vector<QVector> rational_nullspace(const QMatrix& A);

/// A Z-basis of {x in Z^d : A x = 0}, read off the unimodular transform of
/// the Hermite normal form of A^T (A is scaled to integers first).
std::vector<QVector> integer_kernel(const QMatrix& A);

}  // namespace gerbes
