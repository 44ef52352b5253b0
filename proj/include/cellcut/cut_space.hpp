#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cellcut/flow_graph.hpp"

namespace cellcut {

/// One bit per graph edge, in FlowGraph edge order.
using EdgeMask = boost::dynamic_bitset<std::uint64_t>;

/// An edge subset of the cut space together with its coordinates over the
/// singleton basis. Bit i of basis_index selects the i-th basis cut.
struct Cut {
  EdgeMask edges;
  std::uint64_t basis_index = 0;

  bool operator==(const Cut&) const = default;
};

/// Machine partition with canonical cell numbering: cells ordered by their
/// lowest machine index, machines ascending within a cell.
struct Partition {
  std::vector<int> cell_of;
  std::vector<std::vector<int>> cells;

  int cell_count() const { return static_cast<int>(cells.size()); }

  /// Builds a canonical partition from arbitrary per-machine labels.
  static Partition from_labels(std::span<const int> labels);

  bool operator==(const Partition&) const = default;
};

/// Singleton-cut basis of the cut space of a connected graph.
class CutBasis {
 public:
  CutBasis() = default;
  CutBasis(int vertex_count, int excluded_vertex, std::vector<Cut> cuts)
      : vertex_count_(vertex_count),
        excluded_vertex_(excluded_vertex),
        cuts_(std::move(cuts)) {}

  /// m - 1: the number of basis cuts and the width of a basis index.
  int dimension() const { return static_cast<int>(cuts_.size()); }
  int vertex_count() const { return vertex_count_; }
  int excluded_vertex() const { return excluded_vertex_; }
  std::size_t edge_count() const {
    return cuts_.empty() ? 0 : cuts_.front().edges.size();
  }

  const Cut& operator[](int i) const { return cuts_[i]; }
  std::span<const Cut> cuts() const { return cuts_; }

  /// Vertex whose singleton cut is basis cut i.
  int vertex_of(int i) const { return i < excluded_vertex_ ? i : i + 1; }

  /// 2^(m-1) - 1.
  std::uint64_t max_index() const;

 private:
  int vertex_count_ = 0;
  int excluded_vertex_ = 0;
  std::vector<Cut> cuts_;
};

/// Basis of singleton cuts for every vertex except `excluded_vertex`
/// (0-based; -1 selects the last vertex). Requires 2 <= m <= 65.
CutBasis build_basis(const FlowGraph& g, int excluded_vertex = -1);

/// XOR of the basis cuts selected by n. Throws std::out_of_range if n does
/// not fit in m - 1 bits.
Cut cut_from_index(const CutBasis& basis, std::uint64_t n);

Cut xor_cuts(const Cut& a, const Cut& b);

/// OR of the cut masks: the intercellular edge set.
EdgeMask union_cuts(std::span<const Cut> cuts, std::size_t edge_count);

/// Connected components of the graph after removing the marked edges.
Partition decode_partition(const FlowGraph& g, const EdgeMask& intercellular);

/// Edges whose endpoints lie in different cells of `p`.
EdgeMask boundary_mask(const FlowGraph& g, const Partition& p);

/// All 2^(m-1) - 1 nonempty cuts, by ascending basis index. m <= 20.
std::vector<Cut> enumerate_all_cuts(const CutBasis& basis);

}  // namespace cellcut
