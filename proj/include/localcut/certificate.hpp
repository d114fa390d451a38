#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "localcut/graph.hpp"

namespace localcut {

// Undirected graphs here are stored with every edge listed once.

/// Edges of k iterated spanning forests, each built greedily in edge order on
/// the edges not taken by earlier forests. Preserves min(k, |cut|) for every
/// cut. Returns indices into `edges`, ascending.
std::vector<std::size_t> forest_certificate_edges(Vertex n, std::span<const Arc> edges,
                                                  std::size_t k);

/// Edge certificate H = F_1 + ... + F_k as a graph on the same vertex set;
/// edges keep their relative order.
Graph sparse_certificate(const Graph& undirected, std::size_t k);

/// Vertex-connectivity certificate from k scan-first (breadth-first) forests.
Graph scan_first_certificate(const Graph& undirected, std::size_t k);

}  // namespace localcut
