#pragma once

// Tuple sweeps behind verify_tau and obstruction_vanishes. Every kernel has a
// serial reference and an OpenMP version producing identical output in
// identical order.

#include <span>
#include <vector>

#include "gerbes/obstruction.hpp"

namespace gerbes::kernels {

std::vector<PairCheck> tau_checks_serial(const TauContext& ctx, std::span<const LatticePair> samples);
std::vector<PairCheck> tau_checks_parallel(const TauContext& ctx, std::span<const LatticePair> samples);

struct FirstObstructionRow {
  std::size_t i = 0, j = 0;  // generator indices, i < j
  FirstObstruction value;
};

struct SecondObstructionRow {
  std::size_t i = 0, j = 0, k = 0;  // generator indices, i < j < k
  GaussianRational cocycle;         // Theta^{w_j,w_k}(w_i)
  SecondObstruction value;
};

std::vector<FirstObstructionRow> first_obstruction_table_serial(const ObstructionContext& ctx,
                                                                std::span<const QVector> generators);
std::vector<FirstObstructionRow> first_obstruction_table_parallel(const ObstructionContext& ctx,
                                                                  std::span<const QVector> generators);

std::vector<SecondObstructionRow> second_obstruction_table_serial(const ObstructionContext& ctx,
                                                                  std::span<const QVector> generators);
std::vector<SecondObstructionRow> second_obstruction_table_parallel(const ObstructionContext& ctx,
                                                                    std::span<const QVector> generators);

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int max_threads();

}  // namespace gerbes::kernels
