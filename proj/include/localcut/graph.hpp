#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "localcut/types.hpp"

namespace localcut {

/// Raised by the edge-list reader; `line()` is 1-based (0 when not tied to a line).
class GraphFormatError : public std::runtime_error {
 public:
  GraphFormatError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Immutable directed multigraph. Edge ids are 0..m-1 in insertion order and
/// the incidence lists of every vertex follow that order. Parallel edges and
/// self-loops are kept as distinct edges.
class Graph {
 public:
  Graph() = default;
  Graph(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges);
  Graph(Vertex n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
      : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size())) {}

  Vertex vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return arcs_.size(); }

  const Arc& arc(EdgeId e) const { return arcs_.at(e); }
  std::span<const Arc> arcs() const noexcept { return arcs_; }

  std::span<const EdgeId> out_edges(Vertex v) const;
  std::span<const EdgeId> in_edges(Vertex v) const;
  std::size_t out_degree(Vertex v) const { return out_edges(v).size(); }
  std::size_t in_degree(Vertex v) const { return in_edges(v).size(); }

  // Incidence-list probes (0-based index). Absent past the end of the list.
  std::optional<Arc> out_edge(Vertex v, std::size_t i) const;
  std::optional<Arc> in_edge(Vertex v, std::size_t i) const;

  // Position of an edge inside its tail's out-list / head's in-list.
  std::size_t out_slot(EdgeId e) const { return out_slot_.at(e); }
  std::size_t in_slot(EdgeId e) const { return in_slot_.at(e); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  void check_vertex(Vertex v) const;

  Vertex n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> out_offset_{0};
  std::vector<std::size_t> in_offset_{0};
  std::vector<EdgeId> out_list_;
  std::vector<EdgeId> in_list_;
  std::vector<std::size_t> out_slot_;
  std::vector<std::size_t> in_slot_;
};

/// Parses "n m" followed by m lines "tail head" (1-based). Lines starting
/// with '#' and blank lines are ignored.
Graph load_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);
std::string to_edge_list(const Graph& g);

Graph reverse_graph(const Graph& g);

/// Interprets every edge of `undirected` as {u,v} and emits the antiparallel
/// pair (u,v),(v,u) with ids 2e and 2e+1.
Graph bidirect(const Graph& undirected);

struct Subgraph {
  Graph graph;
  std::vector<Vertex> original;        // local id -> id in the parent graph
  std::vector<EdgeId> original_edge;   // local edge id -> parent edge id
};

/// Subgraph induced by `vertices` (local ids follow the given order). When
/// `keep_edge` is non-empty only edges e with keep_edge[e] != 0 are retained.
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices,
                          std::span<const char> keep_edge = {});

/// Membership mask of size n for a vertex set.
std::vector<char> membership(Vertex n, std::span<const Vertex> members);

// Set measures. All of them scan the raw edge list.
std::vector<EdgeId> edges_leaving(const Graph& g, std::span<const Vertex> members);
std::vector<EdgeId> edges_entering(const Graph& g, std::span<const Vertex> members);
std::size_t edge_size(const Graph& g, std::span<const Vertex> members);
std::size_t volume(const Graph& g, std::span<const Vertex> members);
std::size_t symmetric_volume(const Graph& g, std::span<const Vertex> members);
std::vector<Vertex> out_boundary(const Graph& g, std::span<const Vertex> members);

}  // namespace localcut
