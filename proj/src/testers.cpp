#include "localcut/testers.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "localcut/edge_cut.hpp"
#include "localcut/flow.hpp"
#include "localcut/vertex_cut.hpp"

namespace localcut {

namespace {

constexpr double kLocalSuccess = 5.0 / 6.0;

double density_of(const Graph& g, const TesterConfig& cfg) {
  if (cfg.degree > 0.0) return cfg.degree;
  const double n = std::max<double>(1.0, g.vertex_count());
  return std::max(1e-9, double(g.edge_count()) / n);
}

std::size_t local_budget(std::size_t gamma, DegreeModel model, double degree, bool vertex,
                         std::size_t k) {
  if (model == DegreeModel::bounded) {
    return std::max<std::size_t>(1, std::size_t(std::ceil(double(gamma) * degree)));
  }
  return vertex ? 2 * gamma * gamma * k : gamma * gamma;
}

// Reading every incidence list costs one probe per entry plus the absent probe.
std::size_t full_read_cost(const Graph& g) { return 2 * g.edge_count() + 2 * g.vertex_count(); }

}  // namespace

std::vector<ScheduleRound> doubling_schedule(std::size_t k, double epsilon, double density,
                                             double sample_constant) {
  if (!(epsilon > 0.0) || !(density > 0.0)) throw std::invalid_argument("epsilon and density must be positive");
  const double ratio = double(k) / (epsilon * density);
  const double log_term = std::max(1.0, std::log2(ratio));
  const long rounds = std::max(1L, long(std::ceil(std::log2(2.0 * ratio) - 1e-9)));
  std::vector<ScheduleRound> out;
  for (long i = 1; i <= rounds; ++i) {
    const double scale = std::ldexp(1.0, int(i));
    const double s = sample_constant * double(k) * log_term / (scale * epsilon * density);
    out.push_back({std::size_t(scale) - 1, std::max<std::size_t>(1, std::size_t(std::ceil(s - 1e-9)))});
  }
  return out;
}

std::string to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::edge_out: return "edge_out";
    case WitnessKind::edge_in: return "edge_in";
    case WitnessKind::vertex_out: return "vertex_out";
    case WitnessKind::vertex_in: return "vertex_in";
    case WitnessKind::low_degree: return "low_degree";
    case WitnessKind::too_few_vertices: return "too_few_vertices";
  }
  return "unknown";
}

LocalDecision local_decision_edge(const Graph& g, Vertex s, std::size_t k, std::size_t gamma,
                                  DegreeModel model, double degree, bool reversed, Rng& rng) {
  LocalDecision out;
  out.witness.kind = reversed ? WitnessKind::edge_in : WitnessKind::edge_out;
  out.witness.source = s;
  if (k == 0) return out;
  const Vertex n = g.vertex_count();
  const std::size_t delta = local_budget(gamma, model, degree, false, k);

  if (g.edge_count() <= round_budget(k, delta)) {
    out.exact = true;
    out.queries = full_read_cost(g);
    const Graph view = reversed ? reverse_graph(g) : g;
    EdgeFlowNetwork net(view);
    for (Vertex t = 0; t < n; ++t) {
      if (t == s) continue;
      if (auto cut = net.cut_below(s, t, k)) {
        out.yes = true;
        out.witness.members = cut->source_side;
        out.witness.cut_edges = cut->edges;
        return out;
      }
    }
    return out;
  }

  const DetectParams params{k - 1, delta};
  ComponentResult r;
  if (reversed) {
    ReverseView<Graph> view(g);
    r = detect_component_param_on(view, s, params, kLocalSuccess, rng);
  } else {
    r = detect_component_param_on(g, s, params, kLocalSuccess, rng);
  }
  out.queries = r.queries_used;
  // Propriety is decided by cardinality against the known n.
  if (r.found() && r.members.size() < n) {
    out.yes = true;
    out.witness.members = std::move(r.members);
    out.witness.cut_edges = std::move(r.out_edges);
  }
  return out;
}

LocalDecision local_decision_vertex(const Graph& g, Vertex s, std::size_t k, std::size_t gamma,
                                    DegreeModel model, double degree, bool reversed, Rng& rng) {
  LocalDecision out;
  out.witness.kind = reversed ? WitnessKind::vertex_in : WitnessKind::vertex_out;
  out.witness.source = s;
  if (k == 0) return out;
  const Vertex n = g.vertex_count();
  const std::size_t delta = local_budget(gamma, model, degree, true, k);

  if (g.edge_count() <= round_budget(k, delta)) {
    out.exact = true;
    out.queries = full_read_cost(g);
    const Graph view = reversed ? reverse_graph(g) : g;
    VertexSplitNetwork net(view);
    for (Vertex t = 0; t < n; ++t) {
      if (t == s) continue;
      if (auto cut = net.cut_below(s, t, k)) {
        out.yes = true;
        out.witness.members = cut->left;
        out.witness.boundary = cut->separator;
        return out;
      }
    }
    return out;
  }

  VertexComponentResult r;
  if (reversed) {
    ReverseView<Graph> view(g);
    r = detect_vertex_out_component_on(view, s, k - 1, delta, kLocalSuccess, false, rng);
  } else {
    r = detect_vertex_out_component_on(g, s, k - 1, delta, kLocalSuccess, false, rng);
  }
  out.queries = r.queries_used;
  if (r.found() && r.members.size() + r.boundary.size() < n) {
    out.yes = true;
    out.witness.members = std::move(r.members);
    out.witness.boundary = std::move(r.boundary);
  }
  return out;
}

namespace {

template <typename Decide>
TesterVerdict run_tester(const Graph& g, const TesterConfig& cfg, Rng& rng, Decide decide) {
  TesterVerdict v;
  const Vertex n = g.vertex_count();
  const double density = density_of(g, cfg);
  const double eps = cfg.model == DegreeModel::bounded ? cfg.epsilon / 13.0 : cfg.epsilon;
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  // An exact decision reads the whole graph, so it only depends on the start
  // and the orientation. Repeats are still charged the full read.
  std::map<std::pair<Vertex, bool>, LocalDecision> exact;
  for (const ScheduleRound& round : doubling_schedule(cfg.k, eps, density, cfg.sample_constant)) {
    for (std::size_t j = 0; j < round.samples; ++j) {
      const Vertex s = pick(rng);
      ++v.samples;
      for (bool reversed : {false, true}) {
        auto known = exact.find({s, reversed});
        LocalDecision d = known != exact.end() ? known->second : decide(s, round.gamma, reversed);
        if (d.exact && known == exact.end()) exact.emplace(std::pair{s, reversed}, d);
        ++v.local_calls;
        v.queries += d.queries;
        if (d.yes) {
          if (!validate_witness(g, cfg.k, d.witness)) {
            throw std::logic_error("local decision produced an invalid witness");
          }
          v.accept = false;
          v.witness = std::move(d.witness);
          return v;
        }
      }
    }
  }
  return v;
}

// Degree pre-check for sparse thresholds: one vertex with fewer than k out-
// or in-edges already rules the property out.
std::optional<TesterWitness> degree_precheck(const Graph& g, const TesterConfig& cfg,
                                             TesterVerdict& v) {
  const double density = density_of(g, cfg);
  const double eps = cfg.model == DegreeModel::bounded ? cfg.epsilon / 13.0 : cfg.epsilon;
  if (double(cfg.k) > eps * density / 2.0) return std::nullopt;
  const Vertex s = 0;
  v.queries += g.out_degree(s) + g.in_degree(s) + 2;
  TesterWitness w;
  w.kind = WitnessKind::low_degree;
  w.source = s;
  w.members = {s};
  if (g.out_degree(s) < cfg.k) {
    w.cut_edges = edges_leaving(g, w.members);
    return w;
  }
  if (g.in_degree(s) < cfg.k) {
    w.cut_edges = edges_entering(g, w.members);
    return w;
  }
  return std::nullopt;
}

}  // namespace

TesterVerdict test_k_edge_connectivity(const Graph& g, const TesterConfig& cfg, Rng& rng) {
  TesterVerdict v;
  if (g.vertex_count() <= 1 || cfg.k == 0) return v;
  if (auto w = degree_precheck(g, cfg, v)) {
    v.accept = false;
    v.witness = std::move(w);
    return v;
  }
  const std::size_t pre = v.queries;
  v = run_tester(g, cfg, rng, [&](Vertex s, std::size_t gamma, bool reversed) {
    return local_decision_edge(g, s, cfg.k, gamma, cfg.model, density_of(g, cfg), reversed, rng);
  });
  v.queries += pre;
  return v;
}

TesterVerdict test_k_vertex_connectivity(const Graph& g, const TesterConfig& cfg, Rng& rng) {
  TesterVerdict v;
  if (cfg.k == 0) return v;
  if (g.vertex_count() <= cfg.k) {
    v.accept = false;
    v.witness = TesterWitness{WitnessKind::too_few_vertices, 0, {}, {}, {}};
    return v;
  }
  if (auto w = degree_precheck(g, cfg, v)) {
    v.accept = false;
    v.witness = std::move(w);
    return v;
  }
  const std::size_t pre = v.queries;
  v = run_tester(g, cfg, rng, [&](Vertex s, std::size_t gamma, bool reversed) {
    return local_decision_vertex(g, s, cfg.k, gamma, cfg.model, density_of(g, cfg), reversed, rng);
  });
  v.queries += pre;
  return v;
}

bool validate_witness(const Graph& g, std::size_t k, const TesterWitness& w) {
  const Vertex n = g.vertex_count();
  if (w.kind == WitnessKind::too_few_vertices) return n <= k;
  if (k == 0 || w.members.empty() || w.members.size() >= n) return false;
  std::vector<char> in = membership(n, w.members);
  if (!in[w.source]) return false;
  switch (w.kind) {
    case WitnessKind::edge_out:
      return edges_leaving(g, w.members).size() <= k - 1;
    case WitnessKind::edge_in:
      return edges_entering(g, w.members).size() <= k - 1;
    case WitnessKind::low_degree:
      return w.members.size() == 1 &&
             (g.out_degree(w.members[0]) < k || g.in_degree(w.members[0]) < k);
    case WitnessKind::vertex_out:
    case WitnessKind::vertex_in: {
      const Graph view = w.kind == WitnessKind::vertex_in ? reverse_graph(g) : g;
      const auto boundary = out_boundary(view, w.members);
      return boundary.size() <= k - 1 && w.members.size() + boundary.size() < n;
    }
    case WitnessKind::too_few_vertices:
      break;
  }
  return false;
}

}  // namespace localcut

namespace localcut {

std::size_t modification_lower_bound(const Graph& g, const std::vector<std::vector<Vertex>>& parts,
                                     std::size_t k, ConnectivityProperty property) {
  const Vertex n = g.vertex_count();
  const Graph reversed = reverse_graph(g);
  std::vector<char> used(n, 0);
  std::size_t out_deficit = 0, in_deficit = 0;
  for (const auto& part : parts) {
    for (Vertex v : part) {
      if (v >= n || used[v]) throw std::invalid_argument("parts must be disjoint vertex sets");
      used[v] = 1;
    }
    std::size_t out = 0, in = 0;
    if (property == ConnectivityProperty::edge) {
      out = edges_leaving(g, part).size();
      in = edges_entering(g, part).size();
    } else {
      if (part.size() + k >= n) throw std::invalid_argument("part too large for a vertex bound");
      out = out_boundary(g, part).size();
      in = out_boundary(reversed, part).size();
    }
    out_deficit += out < k ? k - out : 0;
    in_deficit += in < k ? k - in : 0;
  }
  return std::max(out_deficit, in_deficit);
}

}  // namespace localcut
