#include "gerbes/sweep.hpp"

#include <array>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gerbes::kernels {

namespace {

bool residual_trivial(const ExponentFn& r) {
  return r.linear_part_zero() && sgn(r.constant.im) == 0 && is_integer(r.constant.re);
}

PairCheck check_pair(const TauContext& ctx, const LatticePair& p) {
  PairCheck c{p, tau_residual(ctx, p.first, p.second), false};
  c.passed = residual_trivial(c.residual);
  return c;
}

std::vector<std::pair<std::size_t, std::size_t>> pairs_of(std::size_t m) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) out.emplace_back(i, j);
  return out;
}

std::vector<std::array<std::size_t, 3>> triples_of(std::size_t m) {
  std::vector<std::array<std::size_t, 3>> out;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) out.push_back({i, j, k});
  return out;
}

FirstObstructionRow first_row(const ObstructionContext& ctx, std::span<const QVector> g, std::size_t i,
                              std::size_t j) {
  return {i, j, first_obstruction_pair(ctx, g[i], g[j])};
}

SecondObstructionRow second_row(const ObstructionContext& ctx, std::span<const QVector> g,
                                const std::array<std::size_t, 3>& t) {
  const auto [i, j, k] = t;
  return {i, j, k, second_obstruction_cocycle(ctx, g[i], g[j], g[k]), second_obstruction_alternating(ctx, g[i], g[j], g[k])};
}

// Runs body(idx) for idx in [0, n) across threads. The exception from the
// lowest failing index is rethrown, so failures are as deterministic as the
// serial loop.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long idx = 0; idx < count; ++idx) {
    try {
      body(static_cast<std::size_t>(idx));
    } catch (...) {
      errors[static_cast<std::size_t>(idx)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<PairCheck> tau_checks_serial(const TauContext& ctx, std::span<const LatticePair> samples) {
  std::vector<PairCheck> out;
  out.reserve(samples.size());
  for (const auto& p : samples) out.push_back(check_pair(ctx, p));
  return out;
}

std::vector<PairCheck> tau_checks_parallel(const TauContext& ctx, std::span<const LatticePair> samples) {
  std::vector<PairCheck> out(samples.size());
  parallel_for(samples.size(), [&](std::size_t idx) { out[idx] = check_pair(ctx, samples[idx]); });
  return out;
}

std::vector<FirstObstructionRow> first_obstruction_table_serial(const ObstructionContext& ctx,
                                                                std::span<const QVector> generators) {
  std::vector<FirstObstructionRow> out;
  for (const auto& [i, j] : pairs_of(generators.size())) out.push_back(first_row(ctx, generators, i, j));
  return out;
}

std::vector<FirstObstructionRow> first_obstruction_table_parallel(const ObstructionContext& ctx,
                                                                  std::span<const QVector> generators) {
  const auto pairs = pairs_of(generators.size());
  std::vector<FirstObstructionRow> out(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t idx) {
    out[idx] = first_row(ctx, generators, pairs[idx].first, pairs[idx].second);
  });
  return out;
}

std::vector<SecondObstructionRow> second_obstruction_table_serial(const ObstructionContext& ctx,
                                                                  std::span<const QVector> generators) {
  std::vector<SecondObstructionRow> out;
  for (const auto& t : triples_of(generators.size())) out.push_back(second_row(ctx, generators, t));
  return out;
}

std::vector<SecondObstructionRow> second_obstruction_table_parallel(const ObstructionContext& ctx,
                                                                    std::span<const QVector> generators) {
  const auto triples = triples_of(generators.size());
  std::vector<SecondObstructionRow> out(triples.size());
  parallel_for(triples.size(), [&](std::size_t idx) { out[idx] = second_row(ctx, generators, triples[idx]); });
  return out;
}

}  // namespace gerbes::kernels
