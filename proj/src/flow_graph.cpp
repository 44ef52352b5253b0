#include "cellcut/flow_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cellcut {
namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

/// Component label per vertex, labels numbered by lowest member.
std::vector<int> component_labels(int n, const std::vector<Edge>& edges) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const Edge& e : edges) {
    const int a = find_root(parent, e.first);
    const int b = find_root(parent, e.second);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> label(n, -1);
  std::vector<int> root_label(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    const int r = find_root(parent, v);
    if (root_label[r] < 0) root_label[r] = next++;
    label[v] = root_label[r];
  }
  return label;
}

}  // namespace

std::vector<double> TrafficMatrix::row_as_double(int i) const {
  std::vector<double> row(size_);
  for (int q = 0; q < size_; ++q) row[q] = to_double(at(i, q));
  return row;
}

int FlowGraph::find_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  const auto it = std::lower_bound(
      edges.begin(), edges.end(), std::pair{a, b}, [](const Edge& e, const auto& key) {
        return std::pair{e.first, e.second} < key;
      });
  if (it == edges.end() || it->first != a || it->second != b) return -1;
  return static_cast<int>(it - edges.begin());
}

Rational FlowGraph::total_weight() const {
  Rational total;
  for (const Edge& e : edges) total += e.weight;
  return total;
}

TrafficMatrix compute_traffic(const Instance& inst) {
  TrafficMatrix traffic(inst.machine_count);
  for (const Part& part : inst.parts) {
    for (std::size_t i = 1; i < part.routing.size(); ++i) {
      traffic.add(part.routing[i - 1], part.routing[i], part.volume);
    }
  }
  return traffic;
}

FlowGraph build_graph(const Instance& inst, const TrafficMatrix& traffic) {
  const int m = inst.machine_count;
  FlowGraph g;
  g.vertex_count = m;

  for (int i = 0; i < m; ++i) {
    for (int q = i + 1; q < m; ++q) {
      const MachinePair pair{i, q};
      const bool sc = std::binary_search(inst.cohabitation_pairs.begin(),
                                         inst.cohabitation_pairs.end(), pair);
      const bool sn = std::binary_search(inst.non_cohabitation_pairs.begin(),
                                         inst.non_cohabitation_pairs.end(), pair);
      const Rational& w = traffic.at(i, q);
      if (w != Rational(0) || sc || sn) {
        g.edges.push_back(Edge{i, q, w, 0, false, sc, sn});
      }
    }
  }

  const std::vector<int> label = component_labels(m, g.edges);
  const int components = *std::max_element(label.begin(), label.end()) + 1;
  if (components > 1) {
    std::vector<int> lowest(components, -1);
    for (int v = 0; v < m; ++v) {
      if (lowest[label[v]] < 0) lowest[label[v]] = v;
    }
    for (int c = 1; c < components; ++c) {
      g.edges.push_back(Edge{lowest[0], lowest[c], Rational(0), 0, true, false, false});
    }
    std::sort(g.edges.begin(), g.edges.end(), [](const Edge& a, const Edge& b) {
      return std::pair{a.first, a.second} < std::pair{b.first, b.second};
    });
  }

  std::int64_t scale = 1;
  for (const Edge& e : g.edges) {
    const std::int64_t d = e.weight.denominator();
    const std::int64_t common = std::gcd(scale, d);
    std::int64_t next = 0;
    if (__builtin_mul_overflow(scale / common, d, &next)) {
      throw std::overflow_error("edge weight denominators too large to combine");
    }
    scale = next;
  }
  g.weight_scale = scale;
  for (Edge& e : g.edges) {
    const std::int64_t factor = scale / e.weight.denominator();
    if (__builtin_mul_overflow(e.weight.numerator(), factor, &e.scaled_weight)) {
      throw std::overflow_error("edge weight too large after scaling");
    }
  }
  return g;
}

int component_count(const FlowGraph& g) {
  const auto label = component_labels(g.vertex_count, g.edges);
  return label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
}

}  // namespace cellcut
