// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// when a hard criterion fails; soft checks are reported only.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "cellcut/baselines.hpp"
#include "cellcut/bench.hpp"
#include "cellcut/ga.hpp"
#include "support.hpp"

using namespace cellcut;
using testing::bits_of;
using testing::cells_of;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
  bool pass = false;
  std::string detail;
  bool soft = false;
};

int hard_failures = 0;

void report(const char* id, const char* title, const std::function<Verdict()>& check) {
  Verdict v;
  try {
    v = check();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  std::printf("[%s] %s %s: %s\n", v.pass ? "PASS" : (v.soft ? "SOFT" : "FAIL"), id, title,
              v.detail.c_str());
  std::fflush(stdout);
  if (!v.pass && !v.soft) ++hard_failures;
}

Verdict ac1() {
  const Instance inst = testing::five_machine_instance();
  const auto t0 = Clock::now();
  const FlowGraph g = build_graph(inst);
  const CutBasis basis = build_basis(g);
  const Cut w1 = xor_cuts(basis[0], basis[2]);
  const Cut w2 = xor_cuts(xor_cuts(basis[0], basis[1]), basis[2]);
  const Cut both[] = {w1, w2};
  const EdgeMask joined = union_cuts(both, g.edge_count());
  const Partition p = decode_partition(g, joined);
  const double ms = seconds_since(t0) * 1e3;

  bool ok = bits_of(basis[0].edges) == "11100000" && bits_of(basis[1].edges) == "00011100" &&
            bits_of(basis[2].edges) == "10010010" && bits_of(basis[3].edges) == "01001001";
  ok = ok && bits_of(w1.edges) == "01110010" && bits_of(joined) == "01111110";
  ok = ok && cells_of(p) == std::vector<std::vector<int>>{{1, 3}, {2}, {4, 5}};
  std::ostringstream d;
  d << "singleton cuts, XOR, OR and decoding " << (ok ? "bit-exact" : "MISMATCH") << ", "
    << ms << " ms";
  return {ok && ms < 1.0, d.str()};
}

Verdict ac2() {
  const FlowGraph g = build_graph(testing::five_machine_instance());
  const CutBasis basis = build_basis(g);
  const auto cuts = enumerate_all_cuts(basis);
  std::set<std::string> distinct;
  for (const Cut& c : cuts) distinct.insert(bits_of(c.edges));
  const bool all_distinct = cuts.size() == 15 && distinct.size() == 15 &&
                            distinct == testing::brute_force_cuts(g);

  const std::pair<std::uint64_t, const char*> rows[] = {
      {2, "00011100"}, {4, "10010010"}, {6, "10001110"}, {8, "01001001"},
      {10, "01010101"}, {12, "11011011"}, {14, "11000111"}};
  int matched = 0;
  for (const auto& [n, bits] : rows) matched += bits_of(cut_from_index(basis, n).edges) == bits;
  std::ostringstream d;
  d << distinct.size() << " distinct cuts, " << matched << "/7 even table rows bit-exact";
  return {all_distinct && matched == 7, d.str()};
}

Verdict ac3() {
  Rng rng(2024);
  long checked_edges = 0;
  int graphs = 0;
  int bad = 0;
  while (graphs < 1000) {
    const int m = static_cast<int>(rng.between(2, 10));
    const Instance inst =
        generate_instance(m, static_cast<int>(rng.between(1, 2 * m)), m, 6, rng.next());
    const FlowGraph g = build_graph(inst);
    if (component_count(g) != 1) continue;
    ++graphs;
    const CutBasis basis = build_basis(g);
    std::vector<Cut> chosen;
    const int count = static_cast<int>(rng.between(0, 4));
    for (int c = 0; c < count; ++c) chosen.push_back(cut_from_index(basis, rng.below(basis.max_index() + 1)));
    const EdgeMask mask = union_cuts(chosen, g.edge_count());
    const Partition p = decode_partition(g, mask);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const bool apart = p.cell_of[g.edges[e].first] != p.cell_of[g.edges[e].second];
      bad += apart != mask[e];
      ++checked_edges;
    }
  }
  std::ostringstream d;
  d << graphs << " connected graphs, " << checked_edges << " edges, " << bad << " inconsistent";
  return {bad == 0, d.str()};
}

Verdict ac4() {
  const auto t0 = Clock::now();
  int hits = 0;
  int within = 0;
  double worst_gap = 0.0;
  for (int i = 0; i < 20; ++i) {
    int m = 5 + i % 5;
    const int n = 2 + (i / 5) % 3;
    // Five machines with N >= 3 admit fewer distinct sorted chromosomes than
    // the population size.
    if (m == 5 && n > 2) m = 6;
    const Problem p = make_problem(testing::random_constrained_instance(m, n, 1000 + i));
    const BaselineResult oracle = exhaustive_oracle(p);
    GAParams params;
    params.population_size = 300;
    params.generations = 300;
    params.seed = static_cast<std::uint64_t>(i);
    const GAResult r = run_ga(p, params);
    if (!oracle.feasible_found) {
      hits += !r.feasible_found;
      continue;
    }
    if (!r.feasible_found) continue;
    if (r.best.traffic == oracle.best.traffic) {
      ++hits;
    } else {
      const double opt = to_double(oracle.best.traffic);
      const double gap = opt == 0.0 ? 1e9 : (to_double(r.best.traffic) - opt) / opt;
      worst_gap = std::max(worst_gap, gap);
      within += gap <= 0.15;
    }
  }
  const double elapsed = seconds_since(t0);
  std::ostringstream d;
  d << hits << "/20 optimal, " << within << "/" << 20 - hits << " of the rest within 15% (worst "
    << worst_gap * 100 << "%), " << elapsed << " s";
  return {hits >= 16 && hits + within == 20 && elapsed < 60.0, d.str()};
}

Problem large_instance() { return make_problem(generate_instance(50, 100, 7, 10, 1)); }

Verdict ac5() {
  const Problem p = large_instance();
  BenchConfig cfg;
  cfg.methods = {Method::ega, Method::cga, Method::scga};
  cfg.populations = {200};
  cfg.generations = {200};
  cfg.replications = 20;
  cfg.base_seed = 7;
  const auto rows = run_bench(p, cfg);
  const BenchRow& ega = rows[0];
  const BenchRow& cga = rows[1];
  const BenchRow& scga = rows[2];
  const bool ordering = !scga.unfeasible() && !cga.unfeasible() &&
                        *scga.avg_traffic <= *cga.avg_traffic;
  const bool feasibility = cga.feasible_count >= 19 && scga.feasible_count >= 19 &&
                           ega.feasible_count < scga.feasible_count;
  auto avg = [](const BenchRow& r) {
    return r.unfeasible() ? std::string("UF") : std::to_string(to_double(*r.avg_traffic));
  };
  std::ostringstream d;
  d << "avg traffic scga " << avg(scga) << " / cga " << avg(cga) << " / ega " << avg(ega)
    << "; feasible scga " << scga.feasible_count << "/20, cga " << cga.feasible_count
    << "/20, ega " << ega.feasible_count << "/20";
  if (!ordering) d << "; ordering inverted (reported only)";
  if (!feasibility) d << "; feasibility trend not met";
  Verdict v{ordering && feasibility, d.str()};
  // Only SCGA feasibility below 15/20 is a hard failure.
  v.soft = scga.feasible_count >= 15;
  return v;
}

Verdict ac6() {
  Rng rng(77);
  long pairs = 0;
  int violations_found = 0;
  for (int grid = 0; grid < 10000; ++grid) {
    FitnessConfig cfg;
    cfg.bound = Rational(static_cast<std::int64_t>(rng.between(1, 100000)),
                         static_cast<std::int64_t>(rng.between(1, 1000)));
    cfg.constraint_count = static_cast<int>(rng.between(1, 60));
    // Traffic draws in [0, B), scaled by 1/1000 of B.
    auto draw_traffic = [&] {
      return cfg.bound * Rational(static_cast<std::int64_t>(rng.below(1000)), 1000);
    };
    for (int s = 0; s < 8; ++s) {
      const int va = static_cast<int>(rng.between(0, cfg.constraint_count));
      const int vb = static_cast<int>(rng.between(0, cfg.constraint_count));
      if (va == vb) continue;
      const Rational ya = fitness(draw_traffic(), va, cfg);
      const Rational yb = fitness(draw_traffic(), vb, cfg);
      ++pairs;
      violations_found += (va < vb) != (ya > yb);
    }
  }
  // The one tie: Z = B with v violations equals Z = 0 with v + 1.
  FitnessConfig edge;
  edge.bound = Rational(10);
  edge.constraint_count = 5;
  const bool tie = fitness(edge.bound, 0, edge) == fitness(Rational(0), 1, edge);
  std::ostringstream d;
  d << pairs << " pairs over 10000 grids with Z < B, " << violations_found
    << " ordering errors; Z = B ties Z = 0 at one extra violation: " << (tie ? "yes" : "no");
  return {violations_found == 0, d.str()};
}

Verdict ac7() {
  const Problem p = make_problem(testing::random_constrained_instance(9, 3, 31));
  int identical = 0;
  const Method methods[] = {Method::cga, Method::scga, Method::ega, Method::multikmeans,
                            Method::oracle};
  for (Method m : methods) {
    SolveOptions opts;
    opts.method = m;
    opts.population_size = 60;
    opts.generations = 40;
    opts.restarts = 2;
    opts.seed = 5;
    const RunOutcome a = solve(p, opts);
    const RunOutcome b = solve(p, opts);
    identical += a.best_history == b.best_history && a.best.partition.cell_of == b.best.partition.cell_of &&
                 a.best.traffic == b.best.traffic;
  }
  BenchConfig cfg;
  cfg.methods = {Method::ega, Method::cga, Method::scga, Method::multikmeans};
  cfg.populations = {30, 60};
  cfg.generations = {20};
  cfg.replications = 3;
  cfg.base_seed = 3;
  std::ostringstream csv_a;
  std::ostringstream csv_b;
  write_bench_csv(run_bench(p, cfg), csv_a, false);
  write_bench_csv(run_bench(p, cfg), csv_b, false);
  const bool same_csv = csv_a.str() == csv_b.str();
  std::ostringstream d;
  d << identical << "/5 solvers repeat exactly; bench CSV "
    << (same_csv ? "byte-identical" : "differs") << " (" << csv_a.str().size() << " bytes)";
  return {identical == 5 && same_csv, d.str()};
}

Verdict ac8() {
  const Problem p = large_instance();
  GAParams params;
  params.population_size = 500;
  params.generations = 300;
  params.seed = 1;
  const auto t0 = Clock::now();
  const GAResult r = run_ga(p, params);
  const double elapsed = seconds_since(t0);
  std::ostringstream d;
  d << "50 machines, 100 parts: " << elapsed << " s, traffic "
    << (r.feasible_found ? std::to_string(to_double(r.best.traffic)) : std::string("UF"));
  return {elapsed < 120.0, d.str()};
}

Verdict ac9() {
  const FlowGraph g = build_graph(testing::five_machine_instance());
  const CutBasis basis = build_basis(g);
  const Chromosome example{{10, 14, 0}};
  const Chromosome sorted = sort_chromosome(example);
  bool ok = sorted == Chromosome{{14, 10, 0}};
  ok = ok && cells_of(decode_chromosome(example, basis, g)) ==
                 std::vector<std::vector<int>>{{1, 3}, {2}, {4, 5}};

  Rng rng(9);
  int checked = 0;
  for (int t = 0; t < 2000; ++t) {
    Chromosome ch;
    const int k = static_cast<int>(rng.between(1, 6));
    for (int i = 0; i < k; ++i) ch.parts.push_back(rng.bits(4));
    const Chromosome s = sort_chromosome(ch);
    ok = ok && sort_chromosome(s) == s;
    ok = ok && decode_chromosome(s, basis, g).cell_of == decode_chromosome(ch, basis, g).cell_of;
    ++checked;
  }
  std::ostringstream d;
  d << "(10,14,0) -> (" << sorted.parts[0] << "," << sorted.parts[1] << "," << sorted.parts[2]
    << "), idempotence and decode invariance on " << checked << " random chromosomes";
  return {ok, d.str()};
}

}  // namespace

int main() {
  report("AC1", "worked cut example", ac1);
  report("AC2", "cut-space bijection", ac2);
  report("AC3", "intercellular consistency fuzz", ac3);
  report("AC4", "oracle equivalence", ac4);
  report("AC5", "encoding comparison trend", ac5);
  report("AC6", "fitness separation", ac6);
  report("AC7", "determinism", ac7);
  report("AC8", "runtime envelope", ac8);
  report("AC9", "sorting invariants", ac9);
  return hard_failures == 0 ? 0 : 1;
}
