#include "localcut/oracles.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace localcut::oracle {

std::vector<char> reachable(Vertex n, const EdgeList& edges, Vertex s) {
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [u, v] : edges) adj[u].push_back(v);
  std::vector<char> seen(n, 0);
  std::deque<Vertex> q{s};
  seen[s] = 1;
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop_front();
    for (Vertex v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        q.push_back(v);
      }
    }
  }
  return seen;
}

std::size_t leaving_count(Vertex n, const EdgeList& edges, const std::vector<Vertex>& members) {
  std::vector<char> in(n, 0);
  for (Vertex v : members) in[v] = 1;
  std::size_t c = 0;
  for (auto [u, v] : edges) c += (in[u] && !in[v]);
  return c;
}

namespace {

// Leaving-edge count for every subset mask of n <= 20 vertices.
std::vector<std::uint32_t> all_leaving_counts(Vertex n, const EdgeList& edges) {
  std::vector<std::uint32_t> count(std::size_t(1) << n, 0);
  for (auto [u, v] : edges) {
    if (u == v) continue;
    const std::uint32_t bu = 1u << u, bv = 1u << v;
    for (std::uint32_t mask = 0; mask < count.size(); ++mask) {
      if ((mask & bu) && !(mask & bv)) ++count[mask];
    }
  }
  return count;
}

}  // namespace

std::vector<std::vector<Vertex>> min_edge_out_components(Vertex n, const EdgeList& edges, Vertex s,
                                                         std::size_t k) {
  if (n > 20) throw GuardError("min_edge_out_components: n > 20");
  const auto leaving = all_leaving_counts(n, edges);
  const std::size_t full = std::size_t(1) << n;
  // has_sub[mask]: some qualifying set containing s is a proper subset of mask.
  std::vector<char> qualifies(full, 0), below(full, 0);
  for (std::size_t mask = 0; mask < full; ++mask) {
    qualifies[mask] = (mask >> s & 1) && leaving[mask] <= k;
  }
  // below[mask] = OR over proper subsets; computed as OR over mask minus one bit.
  std::vector<char> any(qualifies);
  for (Vertex b = 0; b < n; ++b) {
    for (std::size_t mask = 0; mask < full; ++mask) {
      if (mask >> b & 1) any[mask] = any[mask] || any[mask ^ (std::size_t(1) << b)];
    }
  }
  for (std::size_t mask = 0; mask < full; ++mask) {
    for (Vertex b = 0; b < n && !below[mask]; ++b) {
      if (mask >> b & 1) below[mask] = any[mask ^ (std::size_t(1) << b)];
    }
  }
  std::vector<std::vector<Vertex>> out;
  for (std::size_t mask = 0; mask < full; ++mask) {
    if (!qualifies[mask] || below[mask]) continue;
    std::vector<Vertex> set;
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1) set.push_back(v);
    }
    out.push_back(std::move(set));
  }
  return out;
}

bool is_minimal_out_component(Vertex n, const EdgeList& edges, Vertex s,
                              const std::vector<Vertex>& members) {
  if (members.size() > 20) throw GuardError("is_minimal_out_component: set too large");
  const std::size_t own = leaving_count(n, edges, members);
  std::vector<Vertex> others;
  for (Vertex v : members) {
    if (v != s) others.push_back(v);
  }
  const std::size_t full = std::size_t(1) << others.size();
  for (std::size_t mask = 0; mask + 1 < full; ++mask) {
    std::vector<Vertex> sub{s};
    for (std::size_t i = 0; i < others.size(); ++i) {
      if (mask >> i & 1) sub.push_back(others[i]);
    }
    if (leaving_count(n, edges, sub) <= own) return false;
  }
  return true;
}

std::size_t vertex_connectivity(Vertex n, const EdgeList& edges) {
  if (n > 64) throw GuardError("vertex_connectivity: n > 64");
  if (n <= 1) return 0;
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : edges) adj[u][v] = 1;
  // node 2v = v_in, 2v + 1 = v_out
  const std::size_t N = 2 * std::size_t(n);
  const int inf = std::numeric_limits<int>::max() / 4;
  std::size_t best = n - 1;
  std::vector<int> base(N * N, 0), cap;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && adj[u][v]) base[(2 * u + 1) * N + 2 * v] = inf;
    }
  }
  std::vector<long> parent(N);
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = 0; t < n; ++t) {
      if (s == t || adj[s][t]) continue;
      cap = base;
      for (Vertex v = 0; v < n; ++v) cap[2 * v * N + 2 * v + 1] = (v == s || v == t) ? inf : 1;
      const std::size_t src = 2 * s + 1, snk = 2 * t;
      std::size_t flow = 0;
      while (flow < best) {
        std::fill(parent.begin(), parent.end(), -1);
        parent[src] = long(src);
        std::deque<std::size_t> q{src};
        while (!q.empty() && parent[snk] < 0) {
          const std::size_t u = q.front();
          q.pop_front();
          for (std::size_t v = 0; v < N; ++v) {
            if (parent[v] < 0 && cap[u * N + v] > 0) {
              parent[v] = long(u);
              q.push_back(v);
            }
          }
        }
        if (parent[snk] < 0) break;
        for (std::size_t v = snk; v != src; v = std::size_t(parent[v])) {
          const std::size_t u = std::size_t(parent[v]);
          cap[u * N + v] -= 1;
          cap[v * N + u] += 1;
        }
        ++flow;
      }
      best = std::min(best, flow);
    }
  }
  return best;
}

std::size_t min_directed_edge_cut(Vertex n, const EdgeList& edges) {
  if (n > 20) throw GuardError("min_directed_edge_cut: n > 20");
  if (n <= 1) return 0;
  const auto leaving = all_leaving_counts(n, edges);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t mask = 1; mask + 1 < leaving.size(); ++mask) best = std::min<std::size_t>(best, leaving[mask]);
  return best;
}

bool is_k_edge_connected_subset(Vertex n, const EdgeList& edges,
                                const std::vector<Vertex>& members, std::size_t k) {
  if (members.size() > 20) throw GuardError("is_k_edge_connected_subset: set too large");
  if (members.size() <= 1) return true;
  std::vector<int> local(n, -1);
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = int(i);
  EdgeList inside;
  for (auto [u, v] : edges) {
    if (local[u] >= 0 && local[v] >= 0) inside.emplace_back(Vertex(local[u]), Vertex(local[v]));
  }
  return min_directed_edge_cut(Vertex(members.size()), inside) >= k;
}

std::vector<Vertex> boundary(Vertex n, const EdgeList& edges, const std::vector<Vertex>& members) {
  std::vector<char> in(n, 0), out(n, 0);
  for (Vertex v : members) in[v] = 1;
  for (auto [u, v] : edges) {
    if (in[u] && !in[v]) out[v] = 1;
  }
  std::vector<Vertex> b;
  for (Vertex v = 0; v < n; ++v) {
    if (out[v]) b.push_back(v);
  }
  return b;
}

}  // namespace localcut::oracle
