#include "cellcut/bench.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cellcut/baselines.hpp"

namespace cellcut {
namespace {

std::string decimal(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << to_double(value);
  return out.str();
}

std::string seconds(double s) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4) << s;
  return out.str();
}

}  // namespace

Method parse_method(std::string_view name) {
  if (name == "cga") return Method::cga;
  if (name == "scga") return Method::scga;
  if (name == "ega") return Method::ega;
  if (name == "multikmeans") return Method::multikmeans;
  if (name == "oracle") return Method::oracle;
  throw std::invalid_argument("unknown method '" + std::string(name) +
                              "' (expected cga, scga, ega, multikmeans or oracle)");
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::cga: return "cga";
    case Method::scga: return "scga";
    case Method::ega: return "ega";
    case Method::multikmeans: return "multikmeans";
    case Method::oracle: return "oracle";
  }
  return "?";
}

RunOutcome solve(const Problem& problem, const SolveOptions& opts) {
  RunOutcome out;
  if (is_evolutionary(opts.method)) {
    GAParams params;
    params.population_size = opts.population_size;
    params.generations = opts.generations;
    params.crossover_rate = opts.crossover_rate;
    params.mutation_rate = opts.mutation_rate;
    params.seed = opts.seed;
    params.tuning = problem.fitness.tuning;
    params.variant = opts.method == Method::cga ? Variant::cga : Variant::scga;
    GAResult r = opts.method == Method::ega ? run_ega(problem, params)
                                            : run_ga(problem, params);
    out.best = std::move(r.best);
    out.feasible_found = r.feasible_found;
    out.wall_time_s = r.wall_time_s;
    out.best_history = std::move(r.best_history);
    return out;
  }
  BaselineResult r = opts.method == Method::oracle
                         ? exhaustive_oracle(problem)
                         : run_multikmeans(problem, opts.restarts, opts.seed);
  out.best = std::move(r.best);
  out.feasible_found = r.feasible_found;
  out.wall_time_s = r.wall_time_s;
  return out;
}

std::vector<BenchRow> run_bench(const Problem& problem, const BenchConfig& cfg) {
  if (cfg.replications < 1) throw std::invalid_argument("replications must be positive");
  std::vector<BenchRow> rows;

  auto run_cell = [&](Method method, int pop, int gens) {
    BenchRow row;
    row.method = method;
    row.population_size = pop;
    row.generations = gens;
    row.replications = cfg.replications;
    Rational traffic_sum;
    double time_sum = 0.0;
    for (int r = 0; r < cfg.replications; ++r) {
      SolveOptions opts;
      opts.method = method;
      opts.population_size = pop;
      opts.generations = gens;
      opts.crossover_rate = cfg.crossover_rate;
      opts.mutation_rate = cfg.mutation_rate;
      opts.restarts = cfg.restarts;
      opts.seed = cfg.base_seed + static_cast<std::uint64_t>(r);
      const RunOutcome outcome = solve(problem, opts);
      time_sum += outcome.wall_time_s;
      if (!outcome.feasible_found) continue;
      ++row.feasible_count;
      traffic_sum += outcome.best.traffic;
      if (!row.best_traffic || outcome.best.traffic < *row.best_traffic) {
        row.best_traffic = outcome.best.traffic;
      }
    }
    if (row.feasible_count > 0) row.avg_traffic = traffic_sum / row.feasible_count;
    row.avg_wall_time_s = time_sum / cfg.replications;
    rows.push_back(row);
  };

  for (Method method : cfg.methods) {
    if (!is_evolutionary(method)) {
      run_cell(method, 0, 0);
      continue;
    }
    for (int pop : cfg.populations) {
      for (int gens : cfg.generations) run_cell(method, pop, gens);
    }
  }
  return rows;
}

void write_bench_csv(std::span<const BenchRow> rows, std::ostream& out,
                     bool include_timing) {
  out << "method,pop,gens,avg_traffic,best_traffic,avg_cpu_s,feasible_rate\n";
  for (const BenchRow& row : rows) {
    out << to_string(row.method) << ',' << row.population_size << ','
        << row.generations << ',';
    if (row.unfeasible()) {
      out << "UF,UF,";
    } else {
      out << decimal(*row.avg_traffic) << ',' << decimal(*row.best_traffic) << ',';
    }
    out << (include_timing ? seconds(row.avg_wall_time_s) : "-") << ','
        << std::fixed << std::setprecision(2) << row.feasible_rate() << '\n';
    out.unsetf(std::ios::floatfield);
  }
}

void write_bench_table(std::span<const BenchRow> rows, std::ostream& out) {
  std::vector<Method> methods;
  for (const BenchRow& row : rows) {
    if (std::find(methods.begin(), methods.end(), row.method) == methods.end()) {
      methods.push_back(row.method);
    }
  }
  for (Method method : methods) {
    out << to_string(method) << '\n';
    out << std::left << std::setw(10) << "Pop." << std::setw(8) << "Gen."
        << std::setw(14) << "Avg. traffic" << std::setw(14) << "Best traffic"
        << std::setw(10) << "Cpu (s)" << "Feasible\n";
    int last_pop = -1;
    for (const BenchRow& row : rows) {
      if (row.method != method) continue;
      const bool evo = is_evolutionary(method);
      out << std::setw(10)
          << (!evo ? "-" : row.population_size == last_pop ? "" : std::to_string(row.population_size))
          << std::setw(8) << (evo ? std::to_string(row.generations) : "-");
      if (row.unfeasible()) {
        out << std::setw(14) << "-" << std::setw(14) << "UF" << std::setw(10) << "-";
      } else {
        out << std::setw(14) << decimal(*row.avg_traffic) << std::setw(14)
            << decimal(*row.best_traffic) << std::setw(10) << seconds(row.avg_wall_time_s);
      }
      out << row.feasible_count << '/' << row.replications << '\n';
      last_pop = row.population_size;
    }
    out << std::right << '\n';
  }
}

}  // namespace cellcut
