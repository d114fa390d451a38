#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "absl/container/flat_hash_set.h"

#include "localcut/edge_cut.hpp"
#include "localcut/split_graph.hpp"

namespace localcut {

enum class VolumeMode { volume, restricted_symmetric };

struct VertexComponentResult {
  std::vector<Vertex> members;   // C, sorted
  std::vector<Vertex> boundary;  // B: heads of edges leaving C, sorted
  std::size_t volume = 0;
  std::size_t symmetric_volume = 0;
  std::size_t processed_edges = 0;
  std::size_t queries_used = 0;
  std::size_t trials_used = 0;
  std::uint64_t seed = 0;

  bool found() const noexcept { return !members.empty(); }
};

/// Guaranteed (symmetric) volume bound of a nonempty detection with
/// parameters k and delta: 2(k+1)(3*delta + k).
inline std::size_t vertex_volume_bound(std::size_t k, std::size_t delta) {
  return 2 * (k + 1) * (3 * delta + k);
}

/// Split-graph volume budget used for a base volume bound delta.
inline std::size_t split_delta(std::size_t delta) { return 3 * delta; }

/// Edge-out detection on a split graph with the budget measured in volume or in
/// restricted symmetric volume. `s` is a split-graph vertex (normally s_out).
template <IncidenceSource Split>
ComponentResult detect_component_volume(const Split& split, Vertex s, std::size_t k,
                                        std::size_t delta_prime, VolumeMode mode, Rng& rng,
                                        DetectionTrace* trace = nullptr) {
  DetectParams params{k, delta_prime,
                      mode == VolumeMode::volume ? DfsMode::out_edges
                                                 : DfsMode::restricted_symmetric};
  return detect_component_on(split, s, params, rng, trace);
}

namespace detail {

template <IncidenceSource Source>
void describe_vertex_component(const Source& g, VertexComponentResult& out) {
  absl::flat_hash_set<Vertex> in(out.members.begin(), out.members.end());
  absl::flat_hash_set<Vertex> boundary;
  for (Vertex v : out.members) {
    for (std::size_t i = 0;; ++i) {
      auto a = g.out_edge(v, i);
      if (!a) break;
      ++out.volume;
      ++out.symmetric_volume;
      if (!in.contains(a->head)) boundary.insert(a->head);
    }
    for (std::size_t i = 0;; ++i) {
      auto a = g.in_edge(v, i);
      if (!a) break;
      if (!in.contains(a->tail)) ++out.symmetric_volume;
    }
  }
  out.boundary.assign(boundary.begin(), boundary.end());
  std::sort(out.boundary.begin(), out.boundary.end());
}

}  // namespace detail

/// Local detection of a k-vertex-out component containing s with (symmetric)
/// volume at most delta, via the split graph with budget 3*delta.
template <IncidenceSource Source>
VertexComponentResult detect_vertex_out_component_on(const Source& g, Vertex s, std::size_t k,
                                                     std::size_t delta, double p,
                                                     bool symmetric, Rng& rng) {
  SplitView<Source> split(g, s);
  DetectParams params{k, split_delta(delta),
                      symmetric ? DfsMode::restricted_symmetric : DfsMode::out_edges};
  ComponentResult found = detect_component_param_on(split, s, params, p, rng);
  VertexComponentResult out;
  out.processed_edges = found.processed_edges;
  out.queries_used = found.queries_used;
  out.trials_used = found.trials_used;
  for (Vertex x : found.members) {
    if (!split.is_in_copy(x)) out.members.push_back(x);
  }
  std::sort(out.members.begin(), out.members.end());
  if (out.found()) detail::describe_vertex_component(g, out);
  return out;
}

VertexComponentResult detect_vertex_out_component(const Graph& g, Vertex s, std::size_t k,
                                                  std::size_t delta, double p, bool symmetric,
                                                  std::uint64_t seed);

/// The k-vertex-in variant: the same procedure on the reverse graph. The
/// returned boundary is the in-boundary of the members.
VertexComponentResult detect_vertex_in_component(const Graph& g, Vertex s, std::size_t k,
                                                 std::size_t delta, double p, bool symmetric,
                                                 std::uint64_t seed);

/// True iff the out-boundary of `members` has at most k vertices.
bool verify_vertex_out(const Graph& g, std::span<const Vertex> members, std::size_t k);

}  // namespace localcut
