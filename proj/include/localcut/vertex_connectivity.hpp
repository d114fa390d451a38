#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "localcut/flow.hpp"
#include "localcut/graph.hpp"
#include "localcut/types.hpp"

namespace localcut {

struct ConnectivityOptions {
  double confidence = 2.0;  // c: sample counts scale with c * ln n
  /// Success probability of each local detection; 0 means 1 - 1/n^3.
  double local_success = 0.0;
};

struct ConnectivityStats {
  std::size_t pair_samples = 0;
  std::size_t flow_calls = 0;
  std::size_t edge_samples = 0;
  std::size_t local_calls = 0;
  std::size_t queries = 0;
  std::size_t probes = 0;
  bool used_fallback = false;

  ConnectivityStats& operator+=(const ConnectivityStats& o);
};

enum class ConnectivityDecision {
  cut_found,            // a validated cut of size < k
  too_few_vertices,     // n <= k, so no graph on these vertices is k-connected
  probably_at_least_k,
};

struct ConnectivityVerdict {
  ConnectivityDecision decision = ConnectivityDecision::probably_at_least_k;
  std::size_t k = 0;
  std::optional<VertexCut> cut;
  ConnectivityStats stats;

  bool at_least_k() const noexcept {
    return decision == ConnectivityDecision::probably_at_least_k;
  }
};

struct ConnectivityResult {
  std::size_t kappa = 0;
  std::optional<VertexCut> witness;  // absent iff kappa = n - 1 (or n <= 1)
  ConnectivityStats stats;
};

/// t = ceil((4m / delta_star) * c * ln n).
std::size_t pair_sample_count(std::size_t m, double delta_star, double c, std::size_t n);

/// Largest integer delta >= 1 with S(delta) + k^2 < m, where S bounds the
/// symmetric volume returned by a vertex detection with parameter k - 1.
std::optional<std::size_t> delta_star(std::size_t m, std::size_t k);

/// Cut of size 0 for a graph that is not strongly connected: L is a sink
/// component, nothing separates it from the rest.
std::optional<VertexCut> disconnection_witness(const Graph& g);

std::optional<VertexCut> sample_pair_step(const Graph& g, std::size_t k, double delta_star,
                                          double c, Rng& rng, ConnectivityStats* stats = nullptr);

std::optional<VertexCut> local_sweep_step(const Graph& g, std::size_t k, double delta_star,
                                          double c, Rng& rng,
                                          ConnectivityStats* stats = nullptr,
                                          double local_success = 0.0);

ConnectivityVerdict is_connectivity_at_least(const Graph& g, std::size_t k, Rng& rng,
                                             const ConnectivityOptions& opts = {});

/// Exact connectivity by pairwise flows over all ordered non-adjacent pairs.
ConnectivityResult fallback_exact(const Graph& g);

ConnectivityResult vertex_connectivity_directed(const Graph& g, Rng& rng,
                                                const ConnectivityOptions& opts = {});

/// `undirected` lists every edge once. Each probe k runs the directed
/// decision on the bidirected scan-first certificate for k.
ConnectivityResult vertex_connectivity_undirected(const Graph& undirected, Rng& rng,
                                                  const ConnectivityOptions& opts = {});

}  // namespace localcut
