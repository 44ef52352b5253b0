#include "cellcut/cut_space.hpp"

#include <bit>
#include <map>
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

}  // namespace

Partition Partition::from_labels(std::span<const int> labels) {
  const int n = static_cast<int>(labels.size());
  Partition p;
  p.cell_of.assign(n, -1);

  bool dense = true;
  for (int label : labels) dense = dense && label >= 0 && label < n;

  auto assign = [&](int v, int id) {
    if (id == p.cell_count()) p.cells.emplace_back();
    p.cell_of[v] = id;
    p.cells[id].push_back(v);
  };

  if (dense) {
    std::vector<int> id_of(n, -1);
    for (int v = 0; v < n; ++v) {
      int& id = id_of[labels[v]];
      if (id < 0) id = p.cell_count();
      assign(v, id);
    }
  } else {
    std::map<int, int> id_of;
    for (int v = 0; v < n; ++v) {
      const auto [it, inserted] = id_of.try_emplace(labels[v], p.cell_count());
      assign(v, it->second);
    }
  }
  return p;
}

std::uint64_t CutBasis::max_index() const {
  const int d = dimension();
  return d >= 64 ? UINT64_MAX : (std::uint64_t{1} << d) - 1;
}

CutBasis build_basis(const FlowGraph& g, int excluded_vertex) {
  const int m = g.vertex_count;
  if (m < 2 || m > 65) {
    throw std::invalid_argument("cut basis needs between 2 and 65 vertices");
  }
  if (excluded_vertex < 0) excluded_vertex = m - 1;
  if (excluded_vertex >= m) throw std::out_of_range("excluded vertex out of range");

  std::vector<Cut> cuts;
  cuts.reserve(m - 1);
  for (int v = 0; v < m; ++v) {
    if (v == excluded_vertex) continue;
    Cut cut{EdgeMask(g.edge_count()), std::uint64_t{1} << cuts.size()};
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (g.edges[e].first == v || g.edges[e].second == v) cut.edges.set(e);
    }
    cuts.push_back(std::move(cut));
  }
  return CutBasis(m, excluded_vertex, std::move(cuts));
}

Cut cut_from_index(const CutBasis& basis, std::uint64_t n) {
  if (n > basis.max_index()) {
    throw std::out_of_range("cut index " + std::to_string(n) +
                            " exceeds 2^(m-1) - 1 = " +
                            std::to_string(basis.max_index()));
  }
  Cut cut{EdgeMask(basis.edge_count()), n};
  for (std::uint64_t bits = n; bits != 0; bits &= bits - 1) {
    cut.edges ^= basis[std::countr_zero(bits)].edges;
  }
  return cut;
}

Cut xor_cuts(const Cut& a, const Cut& b) {
  return Cut{a.edges ^ b.edges, a.basis_index ^ b.basis_index};
}

EdgeMask union_cuts(std::span<const Cut> cuts, std::size_t edge_count) {
  EdgeMask mask(edge_count);
  for (const Cut& c : cuts) mask |= c.edges;
  return mask;
}

Partition decode_partition(const FlowGraph& g, const EdgeMask& intercellular) {
  if (intercellular.size() != g.edge_count()) {
    throw std::invalid_argument("edge mask length does not match the graph");
  }
  std::vector<int> parent(g.vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (intercellular.test(e)) continue;
    const int a = find_root(parent, g.edges[e].first);
    const int b = find_root(parent, g.edges[e].second);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  for (int v = 0; v < g.vertex_count; ++v) parent[v] = find_root(parent, v);
  return Partition::from_labels(parent);
}

EdgeMask boundary_mask(const FlowGraph& g, const Partition& p) {
  EdgeMask mask(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (p.cell_of[g.edges[e].first] != p.cell_of[g.edges[e].second]) mask.set(e);
  }
  return mask;
}

std::vector<Cut> enumerate_all_cuts(const CutBasis& basis) {
  if (basis.vertex_count() > 20) {
    throw std::invalid_argument("cut enumeration is limited to 20 vertices");
  }
  std::vector<Cut> cuts;
  cuts.reserve(basis.max_index());
  for (std::uint64_t n = 1; n <= basis.max_index(); ++n) {
    cuts.push_back(cut_from_index(basis, n));
  }
  return cuts;
}

}  // namespace cellcut
