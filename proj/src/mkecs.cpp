#include "localcut/mkecs.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "localcut/certificate.hpp"
#include "localcut/edge_cut.hpp"
#include "localcut/mutable_graph.hpp"
#include "localcut/scc.hpp"

namespace localcut {

namespace {

void normalize(Decomposition& d) {
  for (auto& c : d.classes) std::sort(c.begin(), c.end());
  std::sort(d.classes.begin(), d.classes.end());
}

Decomposition whole(const Graph& g, std::size_t k) {
  Decomposition d{k, {}};
  if (g.vertex_count() > 0) {
    d.classes.emplace_back(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) d.classes[0][v] = v;
  }
  return d;
}

// Live part of a residual graph induced by `vertices`; `residual_edge` maps
// local edge ids back.
struct Snapshot {
  Graph graph;
  std::vector<Vertex> original;
  std::vector<EdgeId> residual_edge;
};

Snapshot snapshot(const MutableGraph& res, std::span<const Vertex> vertices) {
  std::vector<Vertex> local(res.vertex_count(), kNoVertex);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<Vertex>(i);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  Snapshot s;
  s.original.assign(vertices.begin(), vertices.end());
  for (Vertex v : vertices) {
    for (EdgeId e : res.out_edges(v)) {
      const Vertex h = res.arc(e).head;
      if (local[h] == kNoVertex) continue;
      pairs.emplace_back(local[v], local[h]);
      s.residual_edge.push_back(e);
    }
  }
  s.graph = Graph(static_cast<Vertex>(vertices.size()), pairs);
  return s;
}

void append_mapped(Decomposition& into, const Decomposition& part, std::span<const Vertex> original) {
  for (const auto& c : part.classes) {
    std::vector<Vertex> mapped;
    for (Vertex v : c) mapped.push_back(original[v]);
    into.classes.push_back(std::move(mapped));
  }
}

double default_success(std::size_t n) {
  const double nn = double(std::max<std::size_t>(n, 2));
  return 1.0 - 1.0 / (nn * nn * nn);
}

}  // namespace

std::optional<EdgeCut> global_edge_cut_below(const Graph& g, std::size_t k) {
  const Vertex n = g.vertex_count();
  if (n <= 1 || k == 0) return std::nullopt;
  SccResult scc = strongly_connected_components(g);
  if (scc.members.size() > 1) {
    EdgeCut cut;
    cut.source_side = scc.members.front();  // a sink component: nothing leaves
    return cut;
  }
  EdgeFlowNetwork net(g);
  std::optional<EdgeCut> best;
  std::size_t limit = k;
  for (Vertex v = 1; v < n && limit > 0; ++v) {
    for (auto [s, t] : {std::pair<Vertex, Vertex>{0, v}, {v, 0}}) {
      if (limit == 0) break;
      if (auto cut = net.cut_below(s, t, limit)) {
        limit = cut->size();
        best = std::move(cut);
      }
    }
  }
  return best;
}

Decomposition baseline_mkecs(const Graph& g, std::size_t k) {
  if (k == 0) return whole(g, k);
  Decomposition out{k, {}};
  struct Piece {
    Graph graph;
    std::vector<Vertex> original;
  };
  std::vector<Piece> work;
  {
    std::vector<Vertex> all(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) all[v] = v;
    work.push_back({g, all});
  }
  while (!work.empty()) {
    Piece piece = std::move(work.back());
    work.pop_back();
    SccResult scc = strongly_connected_components(piece.graph);
    for (const auto& comp : scc.members) {
      std::vector<Vertex> mapped;
      for (Vertex v : comp) mapped.push_back(piece.original[v]);
      if (comp.size() == 1) {
        out.classes.push_back(std::move(mapped));
        continue;
      }
      Subgraph sub = induced_subgraph(piece.graph, comp);
      auto cut = global_edge_cut_below(sub.graph, k);
      if (!cut) {
        out.classes.push_back(std::move(mapped));
        continue;
      }
      std::vector<char> keep(sub.graph.edge_count(), 1);
      for (EdgeId e : cut->edges) keep[e] = 0;
      std::vector<Vertex> local(comp.size());
      for (Vertex v = 0; v < comp.size(); ++v) local[v] = v;
      Subgraph rest = induced_subgraph(sub.graph, local, keep);
      work.push_back({std::move(rest.graph), std::move(mapped)});
    }
  }
  normalize(out);
  return out;
}

Decomposition mkecs_directed(const Graph& g, std::size_t k, std::size_t delta, Rng& rng,
                             MkecsStats* stats) {
  if (k == 0) return whole(g, k);
  const Vertex n = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (delta == 0) {
    delta = std::max<std::size_t>(1, std::size_t(std::ceil(std::sqrt(double(m) / double(k)))));
  }
  const std::size_t param = std::min(k, delta) - 1;
  const double p = default_success(n);
  const DetectParams params{param, delta};
  const std::size_t small_piece = trial_edge_budget(param, delta);

  MutableGraph res(g);
  ReverseView<MutableGraph> reversed(res);
  std::vector<char> dead(n, 0);
  Decomposition out{k, {}};
  std::deque<Vertex> worklist;
  std::vector<char> queued(n, 0);
  auto enqueue = [&](Vertex v) {
    if (!dead[v] && !queued[v]) {
      queued[v] = 1;
      worklist.push_back(v);
    }
  };
  auto settle_with_baseline = [&](std::span<const Vertex> members) {
    Snapshot snap = snapshot(res, members);
    append_mapped(out, baseline_mkecs(snap.graph, k), snap.original);
    for (Vertex v : members) {
      for (EdgeId e : res.out_edges(v)) enqueue(res.arc(e).head);
      for (EdgeId e : res.in_edges(v)) enqueue(res.arc(e).tail);
    }
    for (Vertex v : members) dead[v] = 1;
    res.isolate(members);
  };
  // Splits the live graph into SCCs, dropping edges between them. Small
  // components go straight to the baseline; returns the rest.
  auto split = [&]() {
    SccResult scc = strongly_connected_components(res, dead);
    std::vector<std::vector<Vertex>> big;
    for (Vertex v = 0; v < n; ++v) {
      if (dead[v]) continue;
      std::vector<EdgeId> cross;
      for (EdgeId e : res.out_edges(v)) {
        if (scc.component[res.arc(e).head] != scc.component[v]) cross.push_back(e);
      }
      for (EdgeId e : cross) {
        enqueue(res.arc(e).head);
        enqueue(v);
        res.remove_edge(e);
      }
    }
    for (auto& comp : scc.members) {
      std::size_t edges = 0;
      for (Vertex v : comp) edges += res.out_degree(v);
      if (comp.size() == 1 || edges <= small_piece) {
        settle_with_baseline(comp);
      } else {
        big.push_back(std::move(comp));
      }
    }
    return big;
  };

  split();
  for (Vertex v = 0; v < n; ++v) enqueue(v);
  while (true) {
    while (!worklist.empty()) {
      const Vertex v = worklist.front();
      worklist.pop_front();
      queued[v] = 0;
      if (dead[v]) continue;
      for (bool in_orientation : {false, true}) {
        ComponentResult r = in_orientation ? detect_component_param_on(reversed, v, params, p, rng)
                                           : detect_component_param_on(res, v, params, p, rng);
        if (stats) {
          ++stats->local_calls;
          stats->queries += r.queries_used;
        }
        if (!r.found()) continue;
        if (stats) ++stats->detections;
        settle_with_baseline(r.members);
        break;
      }
    }
    auto big = split();
    bool changed = false;
    for (const auto& comp : big) {
      Snapshot snap = snapshot(res, comp);
      if (stats) ++stats->global_cuts;
      auto cut = global_edge_cut_below(snap.graph, k);
      if (!cut) {
        out.classes.push_back(comp);
        for (Vertex v : comp) dead[v] = 1;
        res.isolate(comp);
        continue;
      }
      changed = true;
      for (EdgeId e : cut->edges) {
        const EdgeId re = snap.residual_edge[e];
        enqueue(res.arc(re).tail);
        enqueue(res.arc(re).head);
        res.remove_edge(re);
      }
    }
    if (!changed && worklist.empty()) break;
  }
  normalize(out);
  return out;
}

Decomposition mkecs_undirected(const Graph& undirected, std::size_t k, std::size_t gamma,
                               Rng& rng, MkecsStats* stats) {
  if (k == 0) return whole(undirected, k);
  const Vertex n = undirected.vertex_count();
  if (gamma == 0) {
    gamma = std::max<std::size_t>(1, std::size_t(std::ceil(std::sqrt(double(n)) / double(k))));
  }
  const std::size_t delta = k * gamma;
  const std::size_t param = std::min(k, delta) - 1;
  const double p = default_success(n);
  const DetectParams params{param, delta};

  MutableGraph res(undirected);
  std::vector<char> dead(n, 0);
  Decomposition out{k, {}};
  std::deque<Vertex> worklist;
  std::vector<char> queued(n, 0);
  auto enqueue = [&](Vertex v) {
    if (!dead[v] && !queued[v]) {
      queued[v] = 1;
      worklist.push_back(v);
    }
  };

  // Bidirected certificate of the residual graph; directed edge i comes from
  // residual edge cert_edge[i / 2].
  Graph cert;
  std::vector<EdgeId> cert_edge;
  std::size_t removed_since_build = 0;
  auto rebuild = [&]() {
    std::vector<Arc> live;
    for (const Arc& a : undirected.arcs()) {
      if (res.is_live(a.id)) live.push_back(a);
    }
    const auto keep = forest_certificate_edges(n, live, k);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    cert_edge.clear();
    for (std::size_t i : keep) {
      pairs.emplace_back(live[i].tail, live[i].head);
      pairs.emplace_back(live[i].head, live[i].tail);
      cert_edge.push_back(live[i].id);
    }
    cert = Graph(n, pairs);
    removed_since_build = 0;
    if (stats) ++stats->certificate_builds;
  };
  auto remove = [&](EdgeId e) {
    if (!res.is_live(e)) return;
    res.remove_edge(e);
    ++removed_since_build;
  };
  auto crossing = [&](std::span<const Vertex> members) {
    std::vector<char> in = membership(n, members);
    std::vector<EdgeId> edges;
    for (Vertex v : members) {
      for (EdgeId e : res.out_edges(v)) {
        if (!in[res.arc(e).head]) edges.push_back(e);
      }
      for (EdgeId e : res.in_edges(v)) {
        if (!in[res.arc(e).tail]) edges.push_back(e);
      }
    }
    return edges;
  };
  auto settle_with_baseline = [&](std::span<const Vertex> members) {
    Snapshot snap = snapshot(res, members);
    append_mapped(out, baseline_mkecs(bidirect(snap.graph), k), snap.original);
    for (EdgeId e : crossing(members)) {
      enqueue(res.arc(e).tail);
      enqueue(res.arc(e).head);
      remove(e);
    }
    for (Vertex v : members) dead[v] = 1;
    res.isolate(members);
  };

  rebuild();
  for (Vertex v = 0; v < n; ++v) enqueue(v);
  while (true) {
    while (!worklist.empty()) {
      const Vertex v = worklist.front();
      worklist.pop_front();
      queued[v] = 0;
      if (dead[v]) continue;
      // In a bidirected graph an edge-out component is also an edge-in
      // component, so one orientation suffices.
      ComponentResult r = detect_component_param_on(cert, v, params, p, rng);
      if (stats) {
        ++stats->local_calls;
        stats->queries += r.queries_used;
      }
      if (!r.found()) continue;
      const bool touches_dead = std::any_of(r.members.begin(), r.members.end(),
                                            [&](Vertex u) { return dead[u] != 0; });
      if (touches_dead || crossing(r.members).size() >= k) {
        // The certificate is stale; rebuild and look at v again.
        if (stats) ++stats->rejected_detections;
        if (removed_since_build == 0) throw std::logic_error("fresh certificate gave a false cut");
        rebuild();
        enqueue(v);
        continue;
      }
      if (stats) ++stats->detections;
      settle_with_baseline(r.members);
      if (removed_since_build > std::max<std::size_t>(n, cert_edge.size() / 2)) rebuild();
    }

    rebuild();
    bool changed = false;
    SccResult comps = strongly_connected_components(cert, dead);
    for (const auto& comp : comps.members) {
      if (comp.size() == 1) {
        out.classes.push_back(comp);
        dead[comp[0]] = 1;
        res.isolate(comp);
        continue;
      }
      Subgraph sub = induced_subgraph(cert, comp);
      if (stats) ++stats->global_cuts;
      auto cut = global_edge_cut_below(sub.graph, k);
      if (!cut) {
        out.classes.push_back(comp);
        for (Vertex v : comp) dead[v] = 1;
        res.isolate(comp);
        continue;
      }
      // The certificate keeps every cut below k exactly, so the residual cut
      // across the same side is that small too.
      std::vector<Vertex> side;
      for (Vertex v : cut->source_side) side.push_back(comp[v]);
      for (EdgeId e : crossing(side)) {
        enqueue(res.arc(e).tail);
        enqueue(res.arc(e).head);
        remove(e);
      }
      changed = true;
    }
    if (!changed && worklist.empty()) break;
  }
  normalize(out);
  return out;
}

bool is_valid_decomposition(const Graph& g, const Decomposition& d) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::size_t covered = 0;
  for (const auto& c : d.classes) {
    for (Vertex v : c) {
      if (v >= g.vertex_count() || seen[v]) return false;
      seen[v] = 1;
      ++covered;
    }
    if (c.size() >= 2 && d.k > 0) {
      Subgraph sub = induced_subgraph(g, c);
      if (global_edge_cut_below(sub.graph, d.k)) return false;
    }
  }
  return covered == g.vertex_count();
}

}  // namespace localcut
