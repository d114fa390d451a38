#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "localcut/graph.hpp"
#include "localcut/types.hpp"

namespace localcut {

/// A generated graph plus the structure it was built to have.
struct Instance {
  std::string family;
  Graph graph;
  bool undirected = false;          // every edge listed once
  Vertex source = 0;                // suggested start vertex
  std::vector<Vertex> planted;      // planted component, or the left side of a separator
  std::vector<Vertex> separator;    // planted separator, if any
  std::size_t planted_boundary = 0; // leaving edges of `planted`, or |separator|
};

struct GenerationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// m distinct ordered pairs without self-loops.
Instance random_digraph(Vertex n, std::size_t m, Rng& rng);
/// A random Hamiltonian cycle plus m - n further distinct edges.
Instance random_strongly_connected(Vertex n, std::size_t m, Rng& rng);
/// m distinct unordered pairs, each listed once.
Instance random_undirected(Vertex n, std::size_t m, Rng& rng);

/// Directed cycle C = {0..size-1} (source 0) with exactly k edges into a
/// strongly connected blob of `blob_edges` edges and one edge back into C.
Instance planted_edge_component(std::size_t size, std::size_t k, std::size_t blob_edges, Rng& rng);

/// Two strongly connected blobs with no edges between them, attached in both
/// directions to every vertex of a separator of `separator_size` vertices.
/// Blob density is the probability of each ordered pair inside a blob.
Instance planted_separator(std::size_t left, std::size_t right, std::size_t separator_size,
                           double density, Rng& rng);

/// `count` disjoint cliques of `size` vertices, undirected.
Instance clique_union(std::size_t count, std::size_t size);
/// `count` disjoint directed cycles of length `length`.
Instance cycle_union(std::size_t count, std::size_t length);
/// Complete digraph on n vertices.
Instance complete_digraph(Vertex n);
/// Undirected circulant: i ~ i + d (mod n) for every offset d.
Instance circulant(Vertex n, const std::vector<Vertex>& offsets);
/// The 7-vertex example: K4 on {0,1,2,3}, and 4,5,6 each attached to two
/// clique vertices. The six attachment edges come first, so the first
/// spanning forest takes them and the 3-forest certificate drops a clique edge.
Instance certificate_trap();

/// Re-checks the planted structure against the graph.
bool certify(const Instance& inst);

}  // namespace localcut
