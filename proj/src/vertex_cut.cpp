#include "localcut/vertex_cut.hpp"

namespace localcut {

VertexComponentResult detect_vertex_out_component(const Graph& g, Vertex s, std::size_t k,
                                                  std::size_t delta, double p, bool symmetric,
                                                  std::uint64_t seed) {
  Rng rng(seed);
  VertexComponentResult r = detect_vertex_out_component_on(g, s, k, delta, p, symmetric, rng);
  r.seed = seed;
  return r;
}

VertexComponentResult detect_vertex_in_component(const Graph& g, Vertex s, std::size_t k,
                                                 std::size_t delta, double p, bool symmetric,
                                                 std::uint64_t seed) {
  Rng rng(seed);
  ReverseView<Graph> reversed(g);
  VertexComponentResult r =
      detect_vertex_out_component_on(reversed, s, k, delta, p, symmetric, rng);
  r.seed = seed;
  return r;
}

bool verify_vertex_out(const Graph& g, std::span<const Vertex> members, std::size_t k) {
  if (members.empty()) throw std::invalid_argument("verify_vertex_out: empty vertex set");
  return out_boundary(g, members).size() <= k;
}

}  // namespace localcut
