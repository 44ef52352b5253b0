#pragma once

#include <cstdint>

#include "cellcut/ga.hpp"
#include "cellcut/problem.hpp"

namespace cellcut {

/// Edge-based GA: one bit per graph edge (1 = intercellular), one-point
/// crossover, single bit-flip mutation, same fitness and loop as run_ga.
/// params.variant is ignored.
GAResult run_ega(const Problem& problem, const GAParams& params);
GAResult run_ega(const Instance& inst, const GAParams& params);

struct BaselineResult {
  Evaluation best;
  bool feasible_found = false;
  double wall_time_s = 0.0;
};

/// Lloyd's k-means on traffic-matrix rows for every k in [ceil(m/N), m-1],
/// `restarts` times each. Keeps the best feasible clustering, or the fittest
/// infeasible one when none is feasible.
BaselineResult run_multikmeans(const Problem& problem, int restarts,
                               std::uint64_t seed);

/// Machine clustering by Lloyd iterations over `rows`. Exposed for testing.
std::vector<int> lloyd_kmeans(const std::vector<std::vector<double>>& rows,
                              int k, Rng& rng, int max_iterations = 100);

inline constexpr int kOracleMaxMachines = 12;

/// Minimum-traffic feasible partition by enumerating all set partitions.
/// Throws std::invalid_argument when m exceeds kOracleMaxMachines.
BaselineResult exhaustive_oracle(const Problem& problem);
BaselineResult exhaustive_oracle(const Instance& inst);

}  // namespace cellcut
