#include "localcut/vertex_connectivity.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "localcut/certificate.hpp"
#include "localcut/scc.hpp"
#include "localcut/vertex_cut.hpp"

namespace localcut {

ConnectivityStats& ConnectivityStats::operator+=(const ConnectivityStats& o) {
  pair_samples += o.pair_samples;
  flow_calls += o.flow_calls;
  edge_samples += o.edge_samples;
  local_calls += o.local_calls;
  queries += o.queries;
  probes += o.probes;
  used_fallback = used_fallback || o.used_fallback;
  return *this;
}

std::size_t pair_sample_count(std::size_t m, double delta_star, double c, std::size_t n) {
  if (n < 2 || m == 0) return 0;
  const double t = 4.0 * double(m) / delta_star * c * std::log(double(n));
  return static_cast<std::size_t>(std::ceil(t - 1e-9));
}

std::optional<std::size_t> delta_star(std::size_t m, std::size_t k) {
  if (k == 0) return std::nullopt;
  auto fits = [&](std::size_t d) { return vertex_volume_bound(k - 1, d) + k * k < m; };
  if (!fits(1)) return std::nullopt;
  // S is linear in delta; start from the closed form and correct for rounding.
  std::size_t d = std::max<std::size_t>(1, m / (6 * k));
  while (!fits(d)) --d;
  while (fits(d + 1)) ++d;
  return d;
}

std::optional<VertexCut> disconnection_witness(const Graph& g) {
  if (g.vertex_count() <= 1) return std::nullopt;
  SccResult scc = strongly_connected_components(g);
  if (scc.members.size() <= 1) return std::nullopt;
  // Tarjan emits components sinks first.
  VertexCut cut;
  cut.left = scc.members.front();
  std::vector<char> in = membership(g.vertex_count(), cut.left);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!in[v]) cut.right.push_back(v);
  }
  return cut;
}

namespace {

double default_local_success(std::size_t n) {
  const double nn = double(std::max<std::size_t>(n, 2));
  return 1.0 - 1.0 / (nn * nn * nn);
}

}  // namespace

std::optional<VertexCut> sample_pair_step(const Graph& g, std::size_t k, double delta_star,
                                          double c, Rng& rng, ConnectivityStats* stats) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  const std::size_t t = pair_sample_count(m, delta_star, c, n);
  if (t == 0) return std::nullopt;
  VertexSplitNetwork net(g);
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  // Repeated (s, t) pairs give the same deterministic flow answer.
  std::unordered_set<std::uint64_t> tried;
  for (std::size_t i = 0; i < t; ++i) {
    const Arc& a = g.arc(static_cast<EdgeId>(pick(rng)));
    const Arc& b = g.arc(static_cast<EdgeId>(pick(rng)));
    if (stats) ++stats->pair_samples;
    for (Vertex s : {a.tail, a.head}) {
      for (Vertex u : {b.tail, b.head}) {
        if (s == u || !tried.insert((std::uint64_t(s) << 32) | u).second) continue;
        if (stats) ++stats->flow_calls;
        if (auto cut = net.cut_below(s, u, k)) return cut;
      }
    }
  }
  return std::nullopt;
}

std::optional<VertexCut> local_sweep_step(const Graph& g, std::size_t k, double delta_star,
                                          double c, Rng& rng, ConnectivityStats* stats,
                                          double local_success) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (k == 0 || m == 0 || n < 2) return std::nullopt;
  const double p = local_success > 0.0 ? local_success : default_local_success(n);
  const double guard = double(m) - double(k * k);
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  ReverseView<Graph> reversed(g);

  auto to_cut = [&](const VertexComponentResult& r, bool in_orientation) -> std::optional<VertexCut> {
    if (double(r.symmetric_volume) >= guard) return std::nullopt;
    std::vector<char> side(n, 0);
    for (Vertex v : r.members) side[v] = 1;
    for (Vertex v : r.boundary) side[v] = 2;
    VertexCut cut;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v) {
      if (side[v] == 0) rest.push_back(v);
    }
    cut.separator = r.boundary;
    if (in_orientation) {
      cut.left = std::move(rest);
      cut.right = r.members;
    } else {
      cut.left = r.members;
      cut.right = std::move(rest);
    }
    if (!is_valid_vertex_cut(g, cut)) return std::nullopt;
    return cut;
  };

  for (std::size_t i = 0;; ++i) {
    const double delta_i = delta_star / std::ldexp(1.0, int(i));
    if (delta_i < 1.0) break;
    const double samples = double(m) / (delta_i / 2.0) * c * std::log(double(n));
    const auto count = static_cast<std::size_t>(std::ceil(samples - 1e-9));
    const auto budget = static_cast<std::size_t>(std::floor(delta_i));
    // One detection per distinct start and orientation per level; each call
    // already succeeds with probability p on its own.
    std::vector<char> started(n, 0);
    for (std::size_t j = 0; j < count; ++j) {
      const Arc& a = g.arc(static_cast<EdgeId>(pick(rng)));
      if (stats) ++stats->edge_samples;
      for (Vertex s : {a.tail, a.head}) {
        if (started[s]) continue;
        started[s] = 1;
        for (bool in_orientation : {false, true}) {
          VertexComponentResult r =
              in_orientation
                  ? detect_vertex_out_component_on(reversed, s, k - 1, budget, p, true, rng)
                  : detect_vertex_out_component_on(g, s, k - 1, budget, p, true, rng);
          if (stats) {
            ++stats->local_calls;
            stats->queries += r.queries_used;
          }
          if (!r.found()) continue;
          if (auto cut = to_cut(r, in_orientation)) return cut;
        }
      }
    }
  }
  return std::nullopt;
}

ConnectivityResult fallback_exact(const Graph& g) {
  ConnectivityResult out;
  out.stats.used_fallback = true;
  const std::size_t n = g.vertex_count();
  if (n <= 1) return out;
  if (auto w = disconnection_witness(g)) {
    out.witness = std::move(w);
    return out;
  }
  std::size_t best = n - 1;
  VertexSplitNetwork net(g);
  for (Vertex s = 0; s < n && best > 0; ++s) {
    for (Vertex t = 0; t < n && best > 0; ++t) {
      if (s == t) continue;
      ++out.stats.flow_calls;
      if (auto cut = net.cut_below(s, t, best)) {
        best = cut->size();
        out.witness = std::move(cut);
      }
    }
  }
  out.kappa = best;
  return out;
}

ConnectivityVerdict is_connectivity_at_least(const Graph& g, std::size_t k, Rng& rng,
                                             const ConnectivityOptions& opts) {
  ConnectivityVerdict v;
  v.k = k;
  v.stats.probes = 1;
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (k == 0) return v;
  if (n <= k) {
    v.decision = ConnectivityDecision::too_few_vertices;
    return v;
  }
  if (auto w = disconnection_witness(g)) {
    v.decision = ConnectivityDecision::cut_found;
    v.cut = std::move(w);
    return v;
  }
  const auto ds = delta_star(m, k);
  if (double(k) > std::sqrt(double(m)) / 2.0 || !ds) {
    ConnectivityResult exact = fallback_exact(g);
    v.stats += exact.stats;
    v.stats.probes = 1;
    if (exact.kappa < k) {
      v.decision = ConnectivityDecision::cut_found;
      v.cut = std::move(exact.witness);
    }
    return v;
  }
  if (auto cut = sample_pair_step(g, k, double(*ds), opts.confidence, rng, &v.stats)) {
    v.decision = ConnectivityDecision::cut_found;
    v.cut = std::move(cut);
    return v;
  }
  if (auto cut = local_sweep_step(g, k, double(*ds), opts.confidence, rng, &v.stats,
                                  opts.local_success)) {
    v.decision = ConnectivityDecision::cut_found;
    v.cut = std::move(cut);
  }
  return v;
}

namespace {

// Doubling from 1, then bisection. Assumes kappa >= 1 and n >= 2.
template <typename Probe>
ConnectivityResult search_kappa(std::size_t n, Probe probe) {
  ConnectivityResult out;
  std::size_t lo = 1;
  std::size_t hi = n - 1;
  bool doubling = true;
  while (lo < hi) {
    const std::size_t k = doubling ? std::min(2 * lo, hi) : lo + (hi - lo + 1) / 2;
    ConnectivityVerdict v = probe(k);
    out.stats += v.stats;
    if (v.at_least_k()) {
      lo = k;
      continue;
    }
    doubling = false;
    hi = k - 1;
    if (v.cut) {
      if (!out.witness || v.cut->size() < out.witness->size()) out.witness = std::move(v.cut);
      hi = std::min(hi, out.witness->size());
    }
  }
  out.kappa = lo;
  if (out.witness && out.witness->size() < out.kappa) out.kappa = out.witness->size();
  if (out.witness && out.witness->size() > out.kappa) out.witness.reset();
  return out;
}

}  // namespace

ConnectivityResult vertex_connectivity_directed(const Graph& g, Rng& rng,
                                                const ConnectivityOptions& opts) {
  const std::size_t n = g.vertex_count();
  ConnectivityResult out;
  if (n <= 1) return out;
  if (auto w = disconnection_witness(g)) {
    out.witness = std::move(w);
    return out;
  }
  return search_kappa(n, [&](std::size_t k) { return is_connectivity_at_least(g, k, rng, opts); });
}

ConnectivityResult vertex_connectivity_undirected(const Graph& undirected, Rng& rng,
                                                  const ConnectivityOptions& opts) {
  const std::size_t n = undirected.vertex_count();
  ConnectivityResult out;
  if (n <= 1) return out;
  const Graph full = bidirect(undirected);
  if (auto w = disconnection_witness(full)) {
    out.witness = std::move(w);
    return out;
  }
  return search_kappa(n, [&](std::size_t k) {
    const Graph cert = bidirect(scan_first_certificate(undirected, k));
    ConnectivityVerdict v = is_connectivity_at_least(cert, k, rng, opts);
    if (v.decision != ConnectivityDecision::cut_found) return v;
    // The certificate keeps pairwise connectivity up to k, so some pair across
    // its cut is separated in the full graph by fewer than k vertices too.
    VertexSplitNetwork net(full);
    for (Vertex s : v.cut->left) {
      for (Vertex t : v.cut->right) {
        ++v.stats.flow_calls;
        if (auto cut = net.cut_below(s, t, k)) {
          v.cut = std::move(cut);
          return v;
        }
      }
    }
    throw std::logic_error("certificate cut has no counterpart in the input graph");
  });
}

}  // namespace localcut
