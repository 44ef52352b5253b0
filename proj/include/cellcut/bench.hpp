#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cellcut/evaluation.hpp"
#include "cellcut/ga.hpp"
#include "cellcut/problem.hpp"

namespace cellcut {

enum class Method { cga, scga, ega, multikmeans, oracle };

Method parse_method(std::string_view name);
std::string_view to_string(Method m);

inline bool is_evolutionary(Method m) {
  return m == Method::cga || m == Method::scga || m == Method::ega;
}

/// Common outcome of one solver run.
struct RunOutcome {
  Evaluation best;
  bool feasible_found = false;
  double wall_time_s = 0.0;
  std::vector<double> best_history;  // empty for non-evolutionary methods
};

struct SolveOptions {
  Method method = Method::scga;
  int population_size = 100;
  int generations = 100;
  double crossover_rate = 0.7;
  double mutation_rate = 0.03;
  int restarts = 1;  // multiKmeans
  std::uint64_t seed = 0;
};

/// Runs one method on a prepared problem. Wall time covers the solver only.
RunOutcome solve(const Problem& problem, const SolveOptions& opts);

struct BenchConfig {
  std::vector<Method> methods{Method::ega, Method::cga, Method::scga};
  std::vector<int> populations{100, 200, 300, 400, 500};
  std::vector<int> generations{100, 200, 300};
  int replications = 20;
  std::uint64_t base_seed = 0;
  double crossover_rate = 0.7;
  double mutation_rate = 0.03;
  int restarts = 1;
};

/// One aggregated line of the sweep. Non-evolutionary methods get a single
/// row with population_size = generations = 0.
struct BenchRow {
  Method method = Method::scga;
  int population_size = 0;
  int generations = 0;
  int replications = 0;
  int feasible_count = 0;
  std::optional<Rational> avg_traffic;   // over feasible runs; empty = UF
  std::optional<Rational> best_traffic;  // empty = UF
  double avg_wall_time_s = 0.0;

  bool unfeasible() const { return feasible_count == 0; }
  double feasible_rate() const {
    return replications == 0 ? 0.0
                             : static_cast<double>(feasible_count) / replications;
  }
};

/// Replication r of every cell uses seed base_seed + r. Rows come back in
/// sweep order: method, then population, then generations.
std::vector<BenchRow> run_bench(const Problem& problem, const BenchConfig& cfg);

/// Header: method,pop,gens,avg_traffic,best_traffic,avg_cpu_s,feasible_rate.
/// UF rows write "UF" in both traffic columns. With include_timing = false the
/// cpu column holds "-" so the output depends only on the inputs.
void write_bench_csv(std::span<const BenchRow> rows, std::ostream& out,
                     bool include_timing = true);

/// Human-readable grid, one block of columns per method.
void write_bench_table(std::span<const BenchRow> rows, std::ostream& out);

}  // namespace cellcut
