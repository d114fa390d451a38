#include "localcut/edge_cut.hpp"

#include <cmath>

namespace localcut {

std::size_t repetitions_for(double p, TimeMode mode) {
  if (!(p >= 0.0) || !(p < 1.0)) throw std::invalid_argument("success probability must lie in [0, 1)");
  if (p == 0.0) return 0;
  const double inv = 1.0 / (1.0 - p);
  const double base = mode == TimeMode::expected ? 2.0 : 4.0 / 3.0;
  // The epsilon keeps exact powers (p = 15/16 -> 4) from rounding up.
  return static_cast<std::size_t>(std::ceil(std::log(inv) / std::log(base) - 1e-9));
}

ComponentResult detect_component(const Graph& g, Vertex s, std::size_t k, std::size_t delta,
                                 std::uint64_t seed, DetectionTrace* trace) {
  Rng rng(seed);
  ComponentResult r = detect_component_on(g, s, DetectParams{k, delta}, rng, trace);
  r.seed = seed;
  return r;
}

ComponentResult detect_component_param(const Graph& g, Vertex s, std::size_t k,
                                       std::size_t delta, double p, std::uint64_t seed,
                                       TimeMode mode) {
  Rng rng(seed);
  DetectParams params{k, delta, DfsMode::out_edges, mode};
  ComponentResult r = detect_component_param_on(g, s, params, p, rng);
  r.seed = seed;
  return r;
}

bool verify_k_edge_out(const Graph& g, std::span<const Vertex> members, std::size_t k) {
  if (members.empty()) throw std::invalid_argument("verify_k_edge_out: empty vertex set");
  return edges_leaving(g, members).size() <= k;
}

}  // namespace localcut
