#pragma once

#include <cstdint>
#include <vector>

#include "cellcut/instance.hpp"
#include "cellcut/rational.hpp"

namespace cellcut {

/// Symmetric inter-machine traffic with a zero diagonal.
class TrafficMatrix {
 public:
  explicit TrafficMatrix(int machines)
      : size_(machines),
        entries_(static_cast<std::size_t>(machines) * machines) {}

  int size() const { return size_; }

  const Rational& at(int i, int q) const { return entries_[index(i, q)]; }

  void add(int i, int q, const Rational& amount) {
    entries_[index(i, q)] += amount;
    entries_[index(q, i)] += amount;
  }

  std::vector<double> row_as_double(int i) const;

 private:
  std::size_t index(int i, int q) const {
    return static_cast<std::size_t>(i) * size_ + q;
  }

  int size_;
  std::vector<Rational> entries_;
};

struct Edge {
  int first = 0;   // lower endpoint, 0-based
  int second = 0;  // higher endpoint
  Rational weight;
  std::int64_t scaled_weight = 0;  // weight * FlowGraph::weight_scale
  bool fictive = false;
  bool in_sc = false;
  bool in_sn = false;
};

/// Connected undirected flow graph. Edges are ordered by (first, second);
/// cut bit vectors index into this order.
struct FlowGraph {
  int vertex_count = 0;
  std::vector<Edge> edges;
  /// Common denominator of all edge weights, so traffic sums stay integral.
  std::int64_t weight_scale = 1;

  std::size_t edge_count() const { return edges.size(); }

  /// Position of edge {a, b} in `edges`, or -1.
  int find_edge(int a, int b) const;

  /// Total edge weight.
  Rational total_weight() const;
};

TrafficMatrix compute_traffic(const Instance& inst);

FlowGraph build_graph(const Instance& inst, const TrafficMatrix& traffic);

inline FlowGraph build_graph(const Instance& inst) {
  return build_graph(inst, compute_traffic(inst));
}

/// Number of connected components over all edges.
int component_count(const FlowGraph& g);

}  // namespace cellcut
