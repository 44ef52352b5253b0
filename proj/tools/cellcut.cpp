// Command-line front end: solve, bench, generate, dump-graph.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cellcut/baselines.hpp"
#include "cellcut/bench.hpp"
#include "cellcut/instance.hpp"
#include "cellcut/problem.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitUnfeasible = 3;

/// Input file that could not be read or parsed; maps to kExitInput.
struct InputFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

cellcut::Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputFailure("cannot open '" + path + "'");
  try {
    cellcut::Instance inst = cellcut::parse_instance(in);
    for (const auto& w : cellcut::validation_warnings(inst)) {
      std::cerr << "warning: " << w << '\n';
    }
    return inst;
  } catch (const cellcut::ParseError& e) {
    throw InputFailure(path + ":" + e.what());
  } catch (const cellcut::InstanceError& e) {
    throw InputFailure(path + ": " + e.what());
  }
}

/// Writes to --out when given, stdout otherwise.
template <class Fn>
void with_output(const std::string& out_path, Fn&& fn) {
  if (out_path.empty()) {
    fn(std::cout);
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
  fn(out);
}

void print_report(const cellcut::RunOutcome& r, cellcut::Method method, std::ostream& out) {
  const auto& ev = r.best;
  out << "method: " << cellcut::to_string(method) << '\n';
  out << "cells: " << ev.partition.cell_count() << '\n';
  for (int c = 0; c < ev.partition.cell_count(); ++c) {
    out << "  cell " << c + 1 << ":";
    for (int machine : ev.partition.cells[c]) out << ' ' << machine + 1;
    out << '\n';
  }
  out << "traffic: " << cellcut::format_rational(ev.traffic) << '\n';
  out << "feasible: " << (ev.feasible ? "yes" : "no") << '\n';
  out << "violations: " << ev.violations << " (oversized cells "
      << ev.violation_counts.oversized_cells << ", split cohabitations "
      << ev.violation_counts.split_cohabitations << ", joined separations "
      << ev.violation_counts.joined_separations << ")\n";
  out << "fitness: " << cellcut::format_rational(ev.raw_fitness) << '\n';
  out << "wall_time_s: " << std::fixed << std::setprecision(4) << r.wall_time_s << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cut-based genetic algorithm for manufacturing cell formation"};
  app.require_subcommand(1);

  // solve
  std::string solve_path;
  std::string method_name = "scga";
  cellcut::SolveOptions solve_opts;
  std::string solve_tuning = "identity";
  std::string solve_out;
  auto* solve = app.add_subcommand("solve", "Solve one instance and print the best partition");
  solve->add_option("instance", solve_path, "Instance file")->required();
  solve->add_option("--method", method_name, "cga | scga | ega | multikmeans | oracle")
      ->capture_default_str();
  solve->add_option("--pop", solve_opts.population_size, "Population size")->capture_default_str();
  solve->add_option("--gens", solve_opts.generations, "Generations")->capture_default_str();
  solve->add_option("--pc", solve_opts.crossover_rate, "Crossover rate")->capture_default_str();
  solve->add_option("--pm", solve_opts.mutation_rate, "Mutation rate")->capture_default_str();
  solve->add_option("--restarts", solve_opts.restarts, "multiKmeans restarts per k")
      ->capture_default_str();
  solve->add_option("--seed", solve_opts.seed, "Random seed")->capture_default_str();
  solve->add_option("--tuning", solve_tuning, "identity | power:<gamma>")->capture_default_str();
  solve->add_option("--out", solve_out, "Write the report to a file");

  // bench
  std::string bench_path;
  std::vector<std::string> bench_methods{"ega", "cga", "scga"};
  cellcut::BenchConfig bench_cfg;
  std::string bench_tuning = "identity";
  std::string bench_out;
  std::string bench_format = "csv";
  bool no_timing = false;
  auto* bench = app.add_subcommand("bench", "Replicated parameter sweep, CSV output");
  bench->add_option("instance", bench_path, "Instance file")->required();
  bench->add_option("--method", bench_methods, "Methods (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--pop", bench_cfg.populations, "Population sizes (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--gens", bench_cfg.generations, "Generation counts (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--reps", bench_cfg.replications, "Replications per cell")
      ->capture_default_str();
  bench->add_option("--seed", bench_cfg.base_seed, "Base seed; replication r uses seed + r")
      ->capture_default_str();
  bench->add_option("--pc", bench_cfg.crossover_rate, "Crossover rate")->capture_default_str();
  bench->add_option("--pm", bench_cfg.mutation_rate, "Mutation rate")->capture_default_str();
  bench->add_option("--restarts", bench_cfg.restarts, "multiKmeans restarts per k")
      ->capture_default_str();
  bench->add_option("--tuning", bench_tuning, "identity | power:<gamma>")->capture_default_str();
  bench->add_option("--out", bench_out, "Write the report to a file");
  bench->add_option("--format", bench_format, "csv | table")
      ->check(CLI::IsMember({"csv", "table"}))
      ->capture_default_str();
  bench->add_flag("--no-timing", no_timing, "Write '-' in the cpu column");

  // generate
  int gen_machines = 8;
  int gen_parts = 20;
  int gen_size = 5;
  int gen_len = 6;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "Write a random instance");
  generate->add_option("--machines,-m", gen_machines, "Machine count")->capture_default_str();
  generate->add_option("--parts,-p", gen_parts, "Part count")->capture_default_str();
  generate->add_option("--max-cell-size,-N", gen_size, "Maximum machines per cell")
      ->capture_default_str();
  generate->add_option("--max-routing-len", gen_len, "Longest routing")->capture_default_str();
  generate->add_option("--seed", gen_seed, "Random seed")->capture_default_str();
  generate->add_option("--out", gen_out, "Output file (stdout when omitted)");

  // dump-graph
  std::string dump_path;
  std::string dump_out;
  auto* dump = app.add_subcommand("dump-graph", "Print the flow graph edge list");
  dump->add_option("instance", dump_path, "Instance file")->required();
  dump->add_option("--out", dump_out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*solve) {
      const auto method = cellcut::parse_method(method_name);
      solve_opts.method = method;
      auto problem = cellcut::make_problem(load_instance(solve_path),
                                           cellcut::Tuning::parse(solve_tuning));
      const auto outcome = cellcut::solve(problem, solve_opts);
      with_output(solve_out, [&](std::ostream& out) { print_report(outcome, method, out); });
      return outcome.feasible_found ? kExitOk : kExitUnfeasible;
    }
    if (*bench) {
      bench_cfg.methods.clear();
      for (const auto& name : bench_methods) bench_cfg.methods.push_back(cellcut::parse_method(name));
      auto problem = cellcut::make_problem(load_instance(bench_path),
                                           cellcut::Tuning::parse(bench_tuning));
      const auto rows = cellcut::run_bench(problem, bench_cfg);
      with_output(bench_out, [&](std::ostream& out) {
        if (bench_format == "table") {
          cellcut::write_bench_table(rows, out);
        } else {
          cellcut::write_bench_csv(rows, out, !no_timing);
        }
      });
      return kExitOk;
    }
    if (*generate) {
      const auto inst =
          cellcut::generate_instance(gen_machines, gen_parts, gen_size, gen_len, gen_seed);
      with_output(gen_out, [&](std::ostream& out) { cellcut::serialize_instance(inst, out); });
      return kExitOk;
    }
    if (*dump) {
      const auto problem = cellcut::make_problem(load_instance(dump_path));
      with_output(dump_out, [&](std::ostream& out) {
        for (const auto& e : problem.graph.edges) {
          out << e.first + 1 << ' ' << e.second + 1 << ' '
              << cellcut::format_rational(e.weight);
          if (e.fictive) out << " fictive";
          if (e.in_sc) out << " sc";
          if (e.in_sn) out << " sn";
          out << '\n';
        }
      });
      return kExitOk;
    }
  } catch (const InputFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
