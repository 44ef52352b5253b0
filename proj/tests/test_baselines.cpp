#include <doctest.h>

#include <algorithm>

#include "cellcut/baselines.hpp"
#include "support.hpp"

using namespace cellcut;
using testing::cells_of;

TEST_CASE("oracle on a four-machine chain") {
  const Instance inst = parse_instance(
      "machines 4\nmax_cell_size 2\npart 4 : 1 2\npart 1 : 2 3\npart 3 : 3 4\n");
  const Problem p = make_problem(inst);

  // Independent check: all 15 set partitions of four machines.
  const auto partitions = testing::all_set_partitions(4);
  REQUIRE(partitions.size() == 15);
  Rational best = p.fitness.bound + Rational(1);
  for (const auto& labels : partitions) {
    const Partition part = Partition::from_labels(labels);
    if (count_violations(part, inst) == 0) {
      best = std::min(best, testing::boundary_traffic(p.traffic, part));
    }
  }
  CHECK(best == Rational(1));

  const BaselineResult r = exhaustive_oracle(p);
  CHECK(r.feasible_found);
  CHECK(r.best.traffic == Rational(1));
  CHECK(cells_of(r.best.partition) == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
}

TEST_CASE("oracle on unconstrained and fully separated instances") {
  const Instance open = generate_instance(7, 12, 7, 5, 3);
  const BaselineResult r = exhaustive_oracle(open);
  CHECK(r.best.traffic == Rational(0));
  CHECK(r.best.partition.cell_count() == 1);

  Instance apart = generate_instance(5, 8, 1, 4, 4);
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) apart.non_cohabitation_pairs.push_back({a, b});
  }
  validate(apart);
  const Problem p = make_problem(apart);
  const BaselineResult s = exhaustive_oracle(p);
  CHECK(s.feasible_found);
  CHECK(s.best.partition.cell_count() == 5);
  CHECK(s.best.traffic == p.fitness.bound);
}

TEST_CASE("oracle reports infeasibility") {
  // Cohabitation forces {1,2,3} together but cells hold two machines.
  const Instance inst = parse_instance(
      "machines 3\nmax_cell_size 2\npart 1 : 1 2 3\ncohabit 1 2\ncohabit 2 3\n");
  const BaselineResult r = exhaustive_oracle(inst);
  CHECK_FALSE(r.feasible_found);
  CHECK_FALSE(r.best.feasible);
  CHECK(r.best.violations == 1);
}

TEST_CASE("oracle size guard") {
  CHECK_THROWS_AS(exhaustive_oracle(generate_instance(13, 5, 3, 4, 1)), std::invalid_argument);
}

TEST_CASE("oracle agrees with brute-force enumeration") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int m = 3 + static_cast<int>(seed % 5);
    const Instance inst = testing::random_constrained_instance(m, 2, seed, 1, 1);
    const Problem p = make_problem(inst);
    std::optional<Rational> best;
    for (const auto& labels : testing::all_set_partitions(m)) {
      const Partition part = Partition::from_labels(labels);
      if (count_violations(part, inst) != 0) continue;
      const Rational t = testing::boundary_traffic(p.traffic, part);
      if (!best || t < *best) best = t;
    }
    const BaselineResult r = exhaustive_oracle(p);
    REQUIRE(r.feasible_found == best.has_value());
    if (best) REQUIRE(r.best.traffic == *best);
  }
}

TEST_CASE("lloyd clustering separates two isolated groups") {
  const Instance inst = parse_instance(
      "machines 6\nmax_cell_size 3\n"
      "part 10 : 1 2 3 1\n"
      "part 10 : 4 5 6 4\n");
  const Problem p = make_problem(inst);
  const BaselineResult r = run_multikmeans(p, 5, 1);
  CHECK(r.feasible_found);
  CHECK(r.best.traffic == Rational(0));
  CHECK(cells_of(r.best.partition) == std::vector<std::vector<int>>{{1, 2, 3}, {4, 5, 6}});
}

TEST_CASE("multiKmeans ignores constraints and can end unfeasible") {
  // Machines 1 and 3 have identical flow rows, so every clustering either
  // joins them (separation violated) or puts 1 and 2 apart (cohabitation).
  const Instance inst = parse_instance(
      "machines 3\nmax_cell_size 3\npart 5 : 1 2 3\ncohabit 1 2\nseparate 1 3\n");
  const Problem p = make_problem(inst);
  const BaselineResult r = run_multikmeans(p, 10, 3);
  CHECK_FALSE(r.feasible_found);
  CHECK(exhaustive_oracle(p).feasible_found);
}

TEST_CASE("k-means never returns empty clusters") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(seed);
    const int m = static_cast<int>(rng.between(3, 14));
    // Few parts: many machines have identical all-zero rows.
    const Instance inst = generate_instance(m, static_cast<int>(rng.between(1, 4)), 3, 3, seed);
    const TrafficMatrix t = compute_traffic(inst);
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < m; ++i) rows.push_back(t.row_as_double(i));
    const int k = static_cast<int>(rng.between(1, m));
    const auto labels = lloyd_kmeans(rows, k, rng);
    std::vector<int> size(k, 0);
    for (int l : labels) {
      REQUIRE(l >= 0);
      REQUIRE(l < k);
      ++size[l];
    }
    for (int s : size) REQUIRE(s > 0);
  }
}

TEST_CASE("multiKmeans partitions cover every machine") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance inst = generate_instance(10, 20, 3, 5, seed);
    const BaselineResult r = run_multikmeans(make_problem(inst), 2, seed);
    int covered = 0;
    for (const auto& cell : r.best.partition.cells) {
      REQUIRE_FALSE(cell.empty());
      covered += static_cast<int>(cell.size());
    }
    REQUIRE(covered == 10);
  }
}

TEST_CASE("edge-based GA") {
  const Instance inst = generate_instance(6, 12, 3, 4, 8);
  const Problem p = make_problem(inst);

  SUBCASE("all-zero edge chromosome is one cell") {
    CHECK(decode_partition(p.graph, EdgeMask(p.graph.edge_count())).cell_count() == 1);
  }

  SUBCASE("deterministic per seed") {
    GAParams params;
    params.population_size = 40;
    params.generations = 30;
    params.seed = 6;
    const GAResult a = run_ega(p, params);
    const GAResult b = run_ega(p, params);
    CHECK(a.best_history == b.best_history);
    CHECK(std::get<EdgeMask>(a.best_genome) == std::get<EdgeMask>(b.best_genome));
    for (std::size_t i = 1; i < a.best_history.size(); ++i) {
      CHECK(a.best_history[i] >= a.best_history[i - 1]);
    }
  }

  SUBCASE("reaches the oracle optimum on most seeds") {
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Instance small = testing::random_constrained_instance(6, 2, 500 + seed);
      const Problem sp = make_problem(small);
      GAParams params;
      params.population_size = 300;
      params.generations = 300;
      params.seed = seed;
      const GAResult r = run_ega(sp, params);
      const BaselineResult oracle = exhaustive_oracle(sp);
      REQUIRE(oracle.feasible_found);
      // No heuristic beats the oracle.
      if (r.feasible_found) REQUIRE(r.best.traffic >= oracle.best.traffic);
      hits += r.feasible_found && r.best.traffic == oracle.best.traffic;
    }
    CHECK(hits >= 15);
  }
}

TEST_CASE("no heuristic beats the oracle") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const int m = 4 + static_cast<int>(seed % 6);
    const Instance inst = testing::random_constrained_instance(m, 3, 900 + seed);
    const Problem p = make_problem(inst);
    const BaselineResult oracle = exhaustive_oracle(p);
    if (!oracle.feasible_found) continue;
    GAParams params;
    params.population_size = 30;
    params.generations = 30;
    params.seed = seed;
    params.variant = Variant::cga;
    const GAResult cga = run_ga(p, params);
    const BaselineResult km = run_multikmeans(p, 2, seed);
    if (cga.feasible_found) CHECK(cga.best.traffic >= oracle.best.traffic);
    if (km.feasible_found) CHECK(km.best.traffic >= oracle.best.traffic);
  }
}
