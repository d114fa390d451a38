#include "localcut/certificate.hpp"

#include <numeric>

namespace localcut {

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

Graph graph_from(Vertex n, std::span<const Arc> edges, const std::vector<std::size_t>& keep) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(keep.size());
  for (std::size_t i : keep) pairs.emplace_back(edges[i].tail, edges[i].head);
  return Graph(n, pairs);
}

}  // namespace

std::vector<std::size_t> forest_certificate_edges(Vertex n, std::span<const Arc> edges,
                                                  std::size_t k) {
  std::vector<char> used(edges.size(), 0);
  for (std::size_t round = 0; round < k; ++round) {
    DisjointSets forest(n);
    bool grew = false;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (used[i] || edges[i].tail == edges[i].head) continue;
      if (forest.unite(edges[i].tail, edges[i].head)) {
        used[i] = 1;
        grew = true;
      }
    }
    if (!grew) break;
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (used[i]) keep.push_back(i);
  }
  return keep;
}

Graph sparse_certificate(const Graph& undirected, std::size_t k) {
  const auto keep = forest_certificate_edges(undirected.vertex_count(), undirected.arcs(), k);
  return graph_from(undirected.vertex_count(), undirected.arcs(), keep);
}

Graph scan_first_certificate(const Graph& undirected, std::size_t k) {
  const Vertex n = undirected.vertex_count();
  const auto arcs = undirected.arcs();
  std::vector<char> used(arcs.size(), 0);
  std::vector<char> marked(n);
  std::vector<Vertex> queue;
  for (std::size_t round = 0; round < k; ++round) {
    std::fill(marked.begin(), marked.end(), 0);
    bool grew = false;
    for (Vertex root = 0; root < n; ++root) {
      if (marked[root]) continue;
      marked[root] = 1;
      queue.assign(1, root);
      for (std::size_t q = 0; q < queue.size(); ++q) {
        const Vertex u = queue[q];
        auto scan = [&](std::span<const EdgeId> incident, bool outgoing) {
          for (EdgeId e : incident) {
            if (used[e]) continue;
            const Vertex w = outgoing ? arcs[e].head : arcs[e].tail;
            if (marked[w]) continue;
            marked[w] = 1;
            used[e] = 1;
            grew = true;
            queue.push_back(w);
          }
        };
        scan(undirected.out_edges(u), true);
        scan(undirected.in_edges(u), false);
      }
    }
    if (!grew) break;
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (used[i]) keep.push_back(i);
  }
  return graph_from(n, arcs, keep);
}

}  // namespace localcut
