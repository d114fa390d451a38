#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "localcut/graph.hpp"
#include "localcut/oracles.hpp"

namespace testutil {

using localcut::Vertex;

inline localcut::oracle::EdgeList raw_edges(const localcut::Graph& g) {
  localcut::oracle::EdgeList out;
  for (const auto& a : g.arcs()) out.emplace_back(a.tail, a.head);
  return out;
}

inline std::multiset<std::pair<Vertex, Vertex>> undirected_multiset(
    const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::multiset<std::pair<Vertex, Vertex>> out;
  for (auto [u, v] : edges) out.insert({std::min(u, v), std::max(u, v)});
  return out;
}

// Lower end of a Wilson score interval with z standard deviations.
inline double wilson_lower(std::size_t hits, std::size_t trials, double z) {
  const double n = double(trials), p = double(hits) / n;
  const double centre = p + z * z / (2 * n);
  const double spread = z * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n));
  return (centre - spread) / (1 + z * z / n);
}

}  // namespace testutil
