#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "localcut/flow.hpp"
#include "localcut/graph.hpp"
#include "localcut/types.hpp"

namespace localcut {

/// Partition of V into maximal k-edge-connected vertex sets (singletons for
/// vertices in no such set). Classes are sorted, and ordered by first vertex.
struct Decomposition {
  std::size_t k = 0;
  std::vector<std::vector<Vertex>> classes;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

struct MkecsStats {
  std::size_t local_calls = 0;
  std::size_t detections = 0;
  std::size_t rejected_detections = 0;  // stale-certificate hits
  std::size_t global_cuts = 0;
  std::size_t certificate_builds = 0;
  std::size_t queries = 0;
};

/// A directed cut with at most k - 1 edges, the smallest over flows between a
/// fixed root and every other vertex in both directions; none if g is
/// k-edge-connected. A graph that is not strongly connected yields a 0-edge cut.
std::optional<EdgeCut> global_edge_cut_below(const Graph& g, std::size_t k);

/// Exact recursive decomposition: split into SCCs, remove any cut of fewer
/// than k edges, repeat.
Decomposition baseline_mkecs(const Graph& g, std::size_t k);

/// Local-detection scheme for digraphs. delta = 0 picks ceil(sqrt(m / k)).
Decomposition mkecs_directed(const Graph& g, std::size_t k, std::size_t delta, Rng& rng,
                             MkecsStats* stats = nullptr);

/// Scheme for undirected graphs (every edge listed once): detection with edge
/// budget k * gamma on a sparse certificate of the residual graph.
/// gamma = 0 picks ceil(sqrt(n) / k).
Decomposition mkecs_undirected(const Graph& undirected, std::size_t k, std::size_t gamma,
                               Rng& rng, MkecsStats* stats = nullptr);

/// True iff every multi-vertex class induces a k-edge-connected subgraph and
/// the classes partition V.
bool is_valid_decomposition(const Graph& g, const Decomposition& d);

}  // namespace localcut
