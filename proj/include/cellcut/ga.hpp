#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "cellcut/cut_space.hpp"
#include "cellcut/evaluation.hpp"
#include "cellcut/problem.hpp"
#include "cellcut/rng.hpp"

namespace cellcut {

/// K cut parts of m - 1 alleles each.
///
/// A part's value is its allele string read as a binary number with the first
/// allele most significant; allele j is the coefficient of basis cut j. A part
/// value of 0 contributes no cut.
struct Chromosome {
  std::vector<std::uint64_t> parts;

  bool operator==(const Chromosome&) const = default;
  auto operator<=>(const Chromosome&) const = default;
};

enum class Variant { cga, scga };

struct GAParams {
  int population_size = 100;
  int generations = 100;
  double crossover_rate = 0.7;
  double mutation_rate = 0.03;
  Variant variant = Variant::scga;
  std::uint64_t seed = 0;
  Tuning tuning;
};

struct GAResult {
  std::variant<Chromosome, EdgeMask> best_genome;
  Evaluation best;
  /// Best tuned fitness of the initial population, then of each generation.
  std::vector<double> best_history;
  double wall_time_s = 0.0;
  bool feasible_found = false;
};

/// ceil(m / n).
int compute_k(int machines, int max_cell_size);

/// Converts a part value (first allele most significant) to a basis index
/// (basis cut i at bit i).
std::uint64_t part_to_basis_index(std::uint64_t part, int width);

EdgeMask chromosome_mask(const Chromosome& ch, const CutBasis& basis);

Partition decode_chromosome(const Chromosome& ch, const CutBasis& basis,
                            const FlowGraph& g);

/// Descending part values with repeated values replaced by zeros, so the only
/// equal parts left form a trailing run of zeros. Decoding is unchanged.
Chromosome sort_chromosome(Chromosome ch);

/// Pairwise distinct random individuals (distinct after sorting for SCGA).
/// Throws std::invalid_argument when the population cannot be filled.
std::vector<Chromosome> init_population(const GAParams& params, int machines,
                                        int k, Rng& rng);
std::vector<Chromosome> init_population(const GAParams& params, int machines,
                                        int k);

/// Index chosen by a uniform draw u in [0, 1) on the fitness-proportional
/// wheel. All-zero fitness makes the wheel uniform.
std::size_t roulette_pick(std::span<const double> fitnesses, double u);

/// `count` fitness-proportional picks, with replacement.
std::vector<std::size_t> roulette_select(std::span<const double> fitnesses,
                                         std::size_t count, Rng& rng);

/// One-point crossover on the flattened allele chain; `point` in
/// [1, K(m-1) - 1] is the number of leading alleles kept from each parent.
std::pair<Chromosome, Chromosome> crossover_any_at(const Chromosome& a,
                                                   const Chromosome& b,
                                                   int width, int point);
std::pair<Chromosome, Chromosome> crossover_any(const Chromosome& a,
                                                const Chromosome& b, int width,
                                                Rng& rng);

/// Exchanges whole parts after part boundary `boundary` in [1, K - 1].
std::pair<Chromosome, Chromosome> crossover_boundary_at(const Chromosome& a,
                                                        const Chromosome& b,
                                                        int boundary);
/// Returns the parents unchanged when K = 1.
std::pair<Chromosome, Chromosome> crossover_boundary(const Chromosome& a,
                                                     const Chromosome& b,
                                                     Rng& rng);

/// Replaces one uniformly chosen part with a uniform (m-1)-bit value.
Chromosome mutate(Chromosome ch, int width, Rng& rng);

GAResult run_ga(const Problem& problem, const GAParams& params);
GAResult run_ga(const Instance& inst, const GAParams& params);

std::string_view to_string(Variant v);

}  // namespace cellcut
