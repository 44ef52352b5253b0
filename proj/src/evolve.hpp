#pragma once

// Generational loop shared by the cut-based GA and the edge-based GA.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cellcut/ga.hpp"

namespace cellcut::detail {

inline std::size_t best_index(const std::vector<Evaluation>& evals) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < evals.size(); ++i) {
    if (evals[i].fitness > evals[best].fitness) best = i;
  }
  return best;
}

inline std::size_t worst_index(const std::vector<Evaluation>& evals) {
  std::size_t worst = 0;
  for (std::size_t i = 1; i < evals.size(); ++i) {
    if (evals[i].fitness < evals[worst].fitness) worst = i;
  }
  return worst;
}

inline std::size_t rate_count(double rate, int population) {
  const auto n = static_cast<long>(std::lround(rate * population));
  return static_cast<std::size_t>(std::clamp<long>(n, 0, population));
}

/// Ops must provide:
///   std::vector<Genome> initial(Rng&)      distinct, canonical individuals
///   Genome random(Rng&)
///   void canonicalize(Genome&)
///   std::pair<Genome, Genome> crossover(const Genome&, const Genome&, Rng&)
///   void mutate(Genome&, Rng&)
///   Evaluation evaluate(const Genome&)
template <class Genome, class Ops>
GAResult evolve(const GAParams& params, Ops& ops) {
  if (params.population_size < 2) {
    throw std::invalid_argument("population size must be at least 2");
  }
  if (params.generations < 0) throw std::invalid_argument("negative generation count");
  if (!(params.crossover_rate >= 0.0 && params.crossover_rate <= 1.0) ||
      !(params.mutation_rate >= 0.0 && params.mutation_rate <= 1.0)) {
    throw std::invalid_argument("crossover and mutation rates must lie in [0, 1]");
  }

  const auto start = std::chrono::steady_clock::now();
  const auto size = static_cast<std::size_t>(params.population_size);
  Rng rng(params.seed);

  std::vector<Genome> population = ops.initial(rng);
  std::vector<Evaluation> evals;
  evals.reserve(size);
  for (const Genome& g : population) evals.push_back(ops.evaluate(g));

  GAResult result;
  result.best_history.reserve(params.generations + 1);
  std::size_t best = best_index(evals);
  result.best_history.push_back(evals[best].fitness);

  const std::size_t mating = rate_count(params.crossover_rate, params.population_size);
  const std::size_t mutants = rate_count(params.mutation_rate, params.population_size);
  std::vector<double> fitnesses(size);
  std::vector<std::size_t> order(size);

  for (int gen = 0; gen < params.generations; ++gen) {
    Genome elite = population[best];
    Evaluation elite_eval = evals[best];

    for (std::size_t i = 0; i < size; ++i) fitnesses[i] = evals[i].fitness;
    const auto selected = roulette_select(fitnesses, mating, rng);

    std::vector<Genome> next;
    next.reserve(size);
    for (std::size_t i = 0; i < selected.size(); i += 2) {
      if (i + 1 < selected.size()) {
        auto [c1, c2] = ops.crossover(population[selected[i]],
                                      population[selected[i + 1]], rng);
        next.push_back(std::move(c1));
        next.push_back(std::move(c2));
      } else {
        next.push_back(population[selected[i]]);
      }
    }
    while (next.size() < size) next.push_back(ops.random(rng));

    // Mutants are drawn without replacement (partial Fisher-Yates).
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = 0; i < mutants; ++i) {
      const std::size_t j = i + rng.below(size - i);
      std::swap(order[i], order[j]);
      ops.mutate(next[order[i]], rng);
    }

    for (std::size_t i = 0; i < size; ++i) evals[i] = ops.evaluate(next[i]);
    population = std::move(next);

    const std::size_t worst = worst_index(evals);
    population[worst] = std::move(elite);
    evals[worst] = std::move(elite_eval);

    // Canonicalization leaves the decoded partition, and so the evaluation,
    // unchanged.
    for (Genome& g : population) ops.canonicalize(g);

    best = best_index(evals);
    result.best_history.push_back(evals[best].fitness);
  }

  result.best_genome = population[best];
  result.best = evals[best];
  result.feasible_found = result.best.feasible;
  result.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace cellcut::detail
