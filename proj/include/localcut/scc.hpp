#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "localcut/graph.hpp"

namespace localcut {

struct SccResult {
  std::vector<std::size_t> component;       // component index per vertex
  std::vector<std::vector<Vertex>> members;  // in reverse topological order (sinks first)
};

/// Iterative Tarjan. Works on anything exposing vertex_count(), out_edges(v)
/// as a range of edge ids and arc(e).head. Vertices with `skip[v]` set are
/// left out (their component index stays npos).
template <typename G>
SccResult strongly_connected_components(const G& g, std::span<const char> skip = {}) {
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  const std::size_t n = g.vertex_count();
  SccResult r;
  r.component.assign(n, npos);
  std::vector<std::size_t> index(n, npos), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> call;
  std::size_t counter = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != npos || (!skip.empty() && skip[root])) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      auto out = g.out_edges(f.v);
      if (f.next < out.size()) {
        const Vertex w = g.arc(out[f.next++]).head;
        if (!skip.empty() && skip[w]) continue;
        if (index[w] == npos) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const Vertex v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<Vertex> comp;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          r.component[w] = r.members.size();
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        r.members.push_back(std::move(comp));
      }
    }
  }
  return r;
}

inline bool is_strongly_connected(const Graph& g) {
  return g.vertex_count() <= 1 || strongly_connected_components(g).members.size() == 1;
}

}  // namespace localcut
