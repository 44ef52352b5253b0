#pragma once

// Shared fixtures and independent oracles for the test suites.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cellcut/cut_space.hpp"
#include "cellcut/flow_graph.hpp"
#include "cellcut/instance.hpp"
#include "cellcut/rng.hpp"

namespace cellcut::testing {

/// Five machines, eight unit-weight edges, in canonical order:
/// e1=(1,3) e2=(1,4) e3=(1,5) e4=(2,3) e5=(2,4) e6=(2,5) e7=(3,5) e8=(4,5).
inline Instance five_machine_instance(int max_cell_size = 2) {
  return parse_instance(
      "machines 5\n"
      "max_cell_size " + std::to_string(max_cell_size) + "\n"
      "part 1 : 1 3\n"
      "part 1 : 1 4\n"
      "part 1 : 1 5\n"
      "part 1 : 2 3\n"
      "part 1 : 2 4\n"
      "part 1 : 2 5\n"
      "part 1 : 3 5\n"
      "part 1 : 4 5\n");
}

inline EdgeMask mask_of(const std::string& bits) {
  EdgeMask mask(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) mask[i] = bits[i] == '1';
  return mask;
}

inline std::string bits_of(const EdgeMask& mask) {
  std::string s(mask.size(), '0');
  for (std::size_t i = 0; i < mask.size(); ++i) s[i] = mask[i] ? '1' : '0';
  return s;
}

/// Cells as 1-based machine lists.
inline std::vector<std::vector<int>> cells_of(const Partition& p) {
  auto cells = p.cells;
  for (auto& c : cells) {
    for (int& m : c) ++m;
  }
  return cells;
}

/// All distinct nonempty cut masks, by enumerating vertex subsets that exclude
/// the last vertex and marking edges with exactly one endpoint inside.
inline std::set<std::string> brute_force_cuts(const FlowGraph& g) {
  std::set<std::string> cuts;
  const int m = g.vertex_count;
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << (m - 1)); ++subset) {
    std::string bits(g.edge_count(), '0');
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const bool a = (subset >> g.edges[e].first) & 1U;
      const bool b = (subset >> g.edges[e].second) & 1U;
      if (a != b) bits[e] = '1';
    }
    cuts.insert(bits);
  }
  return cuts;
}

/// Traffic between different cells, summed from the traffic matrix.
inline Rational boundary_traffic(const TrafficMatrix& t, const Partition& p) {
  Rational total;
  for (int i = 0; i < t.size(); ++i) {
    for (int q = i + 1; q < t.size(); ++q) {
      if (p.cell_of[i] != p.cell_of[q]) total += t.at(i, q);
    }
  }
  return total;
}

/// Number of times {a, b} appear adjacent in the routing, either order.
inline int count_transitions(const std::vector<int>& routing, int a, int b) {
  int n = 0;
  for (std::size_t i = 1; i < routing.size(); ++i) {
    if ((routing[i - 1] == a && routing[i] == b) || (routing[i - 1] == b && routing[i] == a)) ++n;
  }
  return n;
}

/// Every set partition of {0..n-1} as label vectors (recursive enumeration).
inline void enumerate_set_partitions(int n, std::vector<int>& labels, int next_label,
                                     std::vector<std::vector<int>>& out) {
  const int i = static_cast<int>(labels.size());
  if (i == n) {
    out.push_back(labels);
    return;
  }
  for (int l = 0; l <= next_label; ++l) {
    labels.push_back(l);
    enumerate_set_partitions(n, labels, std::max(next_label, l + 1), out);
    labels.pop_back();
  }
}

inline std::vector<std::vector<int>> all_set_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> labels;
  enumerate_set_partitions(n, labels, 0, out);
  return out;
}

/// Random instance with optional SC/SN pairs, for fuzzing.
inline Instance random_constrained_instance(int m, int n, std::uint64_t seed,
                                            int sc = 1, int sn = 1) {
  Instance inst = generate_instance(m, 2 * m, n, 5, seed);
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::set<MachinePair> used;
  auto draw = [&](std::vector<MachinePair>& into, int count) {
    for (int tries = 0; static_cast<int>(into.size()) < count && tries < 100; ++tries) {
      int a = static_cast<int>(rng.below(m));
      int b = static_cast<int>(rng.below(m));
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      if (used.insert({a, b}).second) into.push_back({a, b});
    }
  };
  draw(inst.cohabitation_pairs, sc);
  draw(inst.non_cohabitation_pairs, sn);
  validate(inst);
  return inst;
}

}  // namespace cellcut::testing
