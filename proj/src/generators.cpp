#include "localcut/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "localcut/flow.hpp"
#include "localcut/scc.hpp"

namespace localcut {

namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

// Adds distinct ordered pairs (u, v), u != v, drawn from `from` x `to`, until
// `pairs` holds `target` edges. `taken` tracks pairs already present.
void fill_random(Pairs& pairs, std::set<std::pair<Vertex, Vertex>>& taken,
                 const std::vector<Vertex>& from, const std::vector<Vertex>& to,
                 std::size_t target, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pf(0, from.size() - 1), pt(0, to.size() - 1);
  while (pairs.size() < target) {
    const Vertex u = from[pf(rng)], v = to[pt(rng)];
    if (u == v || !taken.insert({u, v}).second) continue;
    pairs.emplace_back(u, v);
  }
}

std::vector<Vertex> range(Vertex lo, Vertex hi) {
  std::vector<Vertex> r(hi - lo);
  std::iota(r.begin(), r.end(), lo);
  return r;
}

// Hamiltonian cycle through `vs` in random order.
void random_cycle(Pairs& pairs, std::set<std::pair<Vertex, Vertex>>& taken,
                  std::vector<Vertex> vs, Rng& rng) {
  if (vs.size() < 2) return;
  std::shuffle(vs.begin(), vs.end(), rng);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Vertex u = vs[i], v = vs[(i + 1) % vs.size()];
    if (taken.insert({u, v}).second) pairs.emplace_back(u, v);
  }
}

}  // namespace

Instance random_digraph(Vertex n, std::size_t m, Rng& rng) {
  if (n < 2 && m > 0) throw GenerationError("random_digraph: need n >= 2 for edges");
  if (m > std::size_t(n) * (n - 1)) throw GenerationError("random_digraph: m > n(n-1)");
  Pairs pairs;
  std::set<std::pair<Vertex, Vertex>> taken;
  if (m > 0) fill_random(pairs, taken, range(0, n), range(0, n), m, rng);
  return Instance{"random_digraph", Graph(n, pairs), false, 0, {}, {}, 0};
}

Instance random_strongly_connected(Vertex n, std::size_t m, Rng& rng) {
  if (n < 2) throw GenerationError("random_strongly_connected: need n >= 2");
  if (m < n || m > std::size_t(n) * (n - 1)) {
    throw GenerationError("random_strongly_connected: need n <= m <= n(n-1)");
  }
  Pairs pairs;
  std::set<std::pair<Vertex, Vertex>> taken;
  random_cycle(pairs, taken, range(0, n), rng);
  fill_random(pairs, taken, range(0, n), range(0, n), m, rng);
  return Instance{"random_strongly_connected", Graph(n, pairs), false, 0, {}, {}, 0};
}

Instance random_undirected(Vertex n, std::size_t m, Rng& rng) {
  if (m > std::size_t(n) * (n - 1) / 2) throw GenerationError("random_undirected: m > n(n-1)/2");
  Pairs pairs;
  std::set<std::pair<Vertex, Vertex>> taken;
  std::uniform_int_distribution<Vertex> pick(0, n == 0 ? 0 : n - 1);
  while (pairs.size() < m) {
    Vertex u = pick(rng), v = pick(rng);
    if (u == v) continue;
    if (!taken.insert({std::min(u, v), std::max(u, v)}).second) continue;
    pairs.emplace_back(u, v);
  }
  return Instance{"random_undirected", Graph(n, pairs), true, 0, {}, {}, 0};
}

Instance planted_edge_component(std::size_t size, std::size_t k, std::size_t blob_edges, Rng& rng) {
  if (size < 1) throw GenerationError("planted_edge_component: size must be >= 1");
  // about eight edges per blob vertex, and never more than half the pairs
  const std::size_t blob = std::max<std::size_t>(
      {3, (blob_edges + 7) / 8, std::size_t(std::ceil(std::sqrt(2.0 * double(blob_edges)))) + 1});
  if (blob_edges < blob || blob_edges > blob * (blob - 1)) {
    throw GenerationError("planted_edge_component: blob_edges out of range");
  }
  const Vertex n = static_cast<Vertex>(size + blob);
  Pairs pairs;
  std::set<std::pair<Vertex, Vertex>> taken;
  for (Vertex i = 0; size > 1 && i < size; ++i) {
    const Vertex j = static_cast<Vertex>((i + 1) % size);
    if (taken.insert({i, j}).second) pairs.emplace_back(i, j);
  }
  const std::size_t cycle_edges = pairs.size();
  const auto comp = range(0, Vertex(size));
  const auto rest = range(Vertex(size), n);
  random_cycle(pairs, taken, rest, rng);
  fill_random(pairs, taken, rest, rest, cycle_edges + blob_edges, rng);
  // The leaving edges may repeat a pair; they are distinct edges either way.
  std::uniform_int_distribution<std::size_t> pc(0, size - 1), pb(0, blob - 1);
  for (std::size_t i = 0; i < k; ++i) pairs.emplace_back(comp[pc(rng)], rest[pb(rng)]);
  pairs.emplace_back(rest[pb(rng)], comp[pc(rng)]);
  Instance inst{"planted_edge_component", Graph(n, pairs), false, 0, comp, {}, k};
  return inst;
}

Instance planted_separator(std::size_t left, std::size_t right, std::size_t separator_size,
                           double density, Rng& rng) {
  if (left < 2 || right < 2) throw GenerationError("planted_separator: sides need >= 2 vertices");
  const Vertex n = static_cast<Vertex>(left + right + separator_size);
  const auto L = range(0, Vertex(left));
  const auto M = range(Vertex(left), Vertex(left + separator_size));
  const auto R = range(Vertex(left + separator_size), n);
  Pairs pairs;
  std::set<std::pair<Vertex, Vertex>> taken;
  std::bernoulli_distribution coin(std::clamp(density, 0.0, 1.0));
  for (const auto* side : {&L, &R}) {
    random_cycle(pairs, taken, *side, rng);
    for (Vertex u : *side) {
      for (Vertex v : *side) {
        if (u != v && coin(rng) && taken.insert({u, v}).second) pairs.emplace_back(u, v);
      }
    }
  }
  // Each separator vertex gets a few edges to and from both sides.
  for (Vertex x : M) {
    for (const auto* side : {&L, &R}) {
      std::vector<Vertex> vs = *side;
      std::shuffle(vs.begin(), vs.end(), rng);
      const std::size_t deg = std::min<std::size_t>(vs.size(), 2 + separator_size);
      for (std::size_t i = 0; i < deg; ++i) {
        if (taken.insert({x, vs[i]}).second) pairs.emplace_back(x, vs[i]);
        if (taken.insert({vs[i], x}).second) pairs.emplace_back(vs[i], x);
      }
    }
  }
  return Instance{"planted_separator", Graph(n, pairs), false, 0, L, M, separator_size};
}

Instance clique_union(std::size_t count, std::size_t size) {
  Pairs pairs;
  for (std::size_t c = 0; c < count; ++c) {
    const Vertex base = static_cast<Vertex>(c * size);
    for (Vertex i = 0; i < size; ++i) {
      for (Vertex j = i + 1; j < size; ++j) pairs.emplace_back(base + i, base + j);
    }
  }
  const auto n = static_cast<Vertex>(count * size);
  return Instance{"clique_union", Graph(n, pairs), true, 0, range(0, Vertex(size)), {}, 0};
}

Instance cycle_union(std::size_t count, std::size_t length) {
  Pairs pairs;
  for (std::size_t c = 0; c < count; ++c) {
    const Vertex base = static_cast<Vertex>(c * length);
    for (Vertex i = 0; i < length; ++i) {
      pairs.emplace_back(base + i, base + Vertex((i + 1) % length));
    }
  }
  const auto n = static_cast<Vertex>(count * length);
  return Instance{"cycle_union", Graph(n, pairs), false, 0, range(0, Vertex(length)), {}, 0};
}

Instance complete_digraph(Vertex n) {
  Pairs pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) pairs.emplace_back(u, v);
    }
  }
  return Instance{"complete_digraph", Graph(n, pairs), false, 0, {}, {}, 0};
}

Instance circulant(Vertex n, const std::vector<Vertex>& offsets) {
  std::set<std::pair<Vertex, Vertex>> taken;
  Pairs pairs;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex d : offsets) {
      const Vertex j = (i + d) % n;
      if (i == j) continue;
      if (taken.insert({std::min(i, j), std::max(i, j)}).second) pairs.emplace_back(i, j);
    }
  }
  return Instance{"circulant", Graph(n, pairs), true, 0, {}, {}, 0};
}

Instance certificate_trap() {
  const Pairs pairs{{4, 0}, {4, 1}, {5, 1}, {5, 2}, {6, 2}, {6, 3},
                    {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  return Instance{"certificate_trap", Graph(7, pairs), true, 0, {0, 1, 2, 3}, {}, 0};
}

bool certify(const Instance& inst) {
  const Graph& g = inst.graph;
  if (inst.family == "planted_edge_component") {
    if (edges_leaving(g, inst.planted).size() != inst.planted_boundary) return false;
    return is_strongly_connected(g);
  }
  if (inst.family == "planted_separator") {
    std::vector<char> side(g.vertex_count(), 2);
    for (Vertex v : inst.planted) side[v] = 0;
    for (Vertex v : inst.separator) side[v] = 1;
    VertexCut cut{inst.planted, inst.separator, {}};
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (side[v] == 2) cut.right.push_back(v);
    }
    return is_valid_vertex_cut(g, cut) && is_valid_vertex_cut(reverse_graph(g), cut) &&
           is_strongly_connected(g);
  }
  if (inst.family == "random_strongly_connected") return is_strongly_connected(g);
  if (inst.family == "certificate_trap") return g.vertex_count() == 7 && g.edge_count() == 12;
  return true;
}

}  // namespace localcut
