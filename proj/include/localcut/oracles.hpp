#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "localcut/types.hpp"

namespace localcut::oracle {

// Brute-force references. They work on a plain edge list and share no code
// with the algorithms they check.

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

struct GuardError : std::length_error {
  using std::length_error::length_error;
};

std::vector<char> reachable(Vertex n, const EdgeList& edges, Vertex s);

/// Number of edges from `members` to the rest.
std::size_t leaving_count(Vertex n, const EdgeList& edges, const std::vector<Vertex>& members);

/// All inclusion-minimal sets containing s with at most k leaving edges.
/// n <= 20.
std::vector<std::vector<Vertex>> min_edge_out_components(Vertex n, const EdgeList& edges, Vertex s,
                                                         std::size_t k);

/// True iff no proper subset of `members` that contains s has at most as
/// many leaving edges as `members` itself. |members| <= 20.
bool is_minimal_out_component(Vertex n, const EdgeList& edges, Vertex s,
                              const std::vector<Vertex>& members);

/// Exact vertex connectivity (n - 1 when every ordered pair is adjacent).
/// Edmonds-Karp on a dense capacity matrix. n <= 64.
std::size_t vertex_connectivity(Vertex n, const EdgeList& edges);

/// Minimum number of edges leaving S over all S with 0 < |S| < n. n <= 20.
std::size_t min_directed_edge_cut(Vertex n, const EdgeList& edges);

/// True iff the subgraph induced by `members` is k-edge-connected
/// (every nonempty proper subset has >= k edges leaving inside it). |members| <= 20.
bool is_k_edge_connected_subset(Vertex n, const EdgeList& edges,
                                const std::vector<Vertex>& members, std::size_t k);

/// Out-boundary of a vertex set.
std::vector<Vertex> boundary(Vertex n, const EdgeList& edges, const std::vector<Vertex>& members);

}  // namespace localcut::oracle
