#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "localcut/graph.hpp"

namespace localcut {

/// Partition (L, M, R) of V with no edge from L to R.
struct VertexCut {
  std::vector<Vertex> left;
  std::vector<Vertex> separator;
  std::vector<Vertex> right;

  std::size_t size() const noexcept { return separator.size(); }
};

/// Directed edge cut: `edges` are the edges leaving `source_side`.
struct EdgeCut {
  std::vector<Vertex> source_side;
  std::vector<EdgeId> edges;

  std::size_t size() const noexcept { return edges.size(); }
};

/// Exact partition, both sides nonempty, E(L, R) empty.
bool is_valid_vertex_cut(const Graph& g, const VertexCut& cut);
bool is_valid_edge_cut(const Graph& g, const EdgeCut& cut);

/// Residual network with integer capacities; augmentations push one unit
/// along a DFS path, which is all the unit-capacity uses here need.
class FlowNetwork {
 public:
  static constexpr std::int32_t kUnbounded = 1 << 29;

  explicit FlowNetwork(std::size_t nodes = 0) : adjacency_(nodes) {}

  std::size_t add_arc(std::size_t from, std::size_t to, std::int32_t capacity);
  void set_capacity(std::size_t arc, std::int32_t capacity);
  /// Restores every arc to its configured capacity.
  void reset();

  /// Up to `limit` unit augmentations from s to t; returns the flow pushed.
  std::size_t max_flow(std::size_t s, std::size_t t, std::size_t limit);
  /// Nodes reachable from s in the residual network.
  std::vector<char> residual_reachable(std::size_t s) const;

  std::size_t node_count() const noexcept { return adjacency_.size(); }

 private:
  bool augment(std::size_t s, std::size_t t);

  struct Edge {
    std::size_t to;
    std::int32_t residual;
    std::int32_t capacity;
  };
  std::vector<Edge> edges_;  // arc 2i forward, 2i+1 its reverse
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::uint32_t> seen_;
  std::uint32_t stamp_ = 0;
};

/// Standard vertex-split network of a graph, reusable across (s, t) pairs.
class VertexSplitNetwork {
 public:
  explicit VertexSplitNetwork(const Graph& g);

  /// At most k augmentations; a cut of size < k or nothing when the flow
  /// reaches k. Adjacent pairs (an edge s -> t) have no separating cut.
  std::optional<VertexCut> cut_below(Vertex s, Vertex t, std::size_t k);
  /// Local vertex connectivity from s to t capped at `limit`.
  std::size_t connectivity(Vertex s, Vertex t, std::size_t limit);

 private:
  void prepare(Vertex s, Vertex t);

  const Graph* g_;
  FlowNetwork net_;
  std::vector<std::size_t> transit_;  // arc index of v_in -> v_out
  std::vector<char> adjacent_;        // n*n adjacency matrix when small, else empty
};

std::optional<VertexCut> pair_vertex_cut_at_most(const Graph& g, Vertex s, Vertex t,
                                                 std::size_t k);

/// Directed edge cut with fewer than k edges separating s from t, if any.
std::optional<EdgeCut> pair_edge_cut_below(const Graph& g, Vertex s, Vertex t, std::size_t k);

/// Edge-disjoint-path network of a graph, reusable across pairs.
class EdgeFlowNetwork {
 public:
  explicit EdgeFlowNetwork(const Graph& g);
  std::optional<EdgeCut> cut_below(Vertex s, Vertex t, std::size_t k);

 private:
  const Graph* g_;
  FlowNetwork net_;
};

}  // namespace localcut
