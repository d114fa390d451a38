#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace localcut {

// Vertices and edges are 0-based internally; the edge-list format is 1-based.
using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

/// An edge as seen through some orientation of the graph.
struct Arc {
  EdgeId id = kNoEdge;
  Vertex tail = kNoVertex;
  Vertex head = kNoVertex;

  friend bool operator==(const Arc&, const Arc&) = default;
};

using Rng = std::mt19937_64;

/// splitmix64 finalizer; used to derive independent per-trial streams.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix_seed(master ^ mix_seed(index + 0x632be59bd9b4e019ULL));
}

}  // namespace localcut
