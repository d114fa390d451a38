#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/container/flat_hash_set.h"

#include "localcut/graph.hpp"
#include "localcut/incidence.hpp"

namespace localcut {

/// What the DFS budget measures. `out_edges` charges every processed
/// out-edge (edge size / volume budgets). `restricted_symmetric` additionally
/// charges the in-edges of interior split vertices.
enum class DfsMode { out_edges, restricted_symmetric };

/// `expected` repeats ceil(log2(1/(1-p))) times; `worst_case` aborts trials
/// that exceed four times the expected work and repeats ceil(log_{4/3}(1/(1-p))).
enum class TimeMode { expected, worst_case };

struct ProcessedEdge {
  Arc arc;               // orientation at processing time
  bool in_scan = false;  // charged while scanning an interior vertex's in-list
};

struct DfsResult {
  std::vector<ProcessedEdge> processed;  // F, in processing order
  std::vector<Vertex> visited;           // U, in visiting order
  absl::flat_hash_map<Vertex, std::pair<Vertex, EdgeId>> tree_parent;
  bool completed = false;
};

/// Stack DFS from `s`: popping an unvisited vertex visits it and pushes the
/// heads of all its out-edges, one processed edge per push. The search stops
/// as soon as `budget` edges are processed; in that case it is not completed,
/// even if nothing else was reachable.
template <typename View>
DfsResult budgeted_dfs(View& view, Vertex s, std::size_t budget,
                       DfsMode mode = DfsMode::out_edges) {
  DfsResult r;
  if (budget == 0) return r;
  absl::flat_hash_set<Vertex> visited;
  absl::flat_hash_set<EdgeId> charged;
  std::vector<Vertex> stack{s};

  auto charge = [&](const Arc& a, bool in_scan) {
    r.processed.push_back(ProcessedEdge{a, in_scan});
    return r.processed.size() >= budget;
  };
  auto is_charged = [&](EdgeId e) {
    return mode == DfsMode::restricted_symmetric && !charged.insert(e).second;
  };
  auto scan_in = [&](Vertex x) {
    for (std::size_t i = 0;; ++i) {
      auto a = view.in_edge(x, i);
      if (!a) return false;
      if (is_charged(a->id)) continue;
      if (charge(*a, true)) return true;
    }
  };

  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    if (!visited.insert(v).second) continue;
    r.visited.push_back(v);

    for (std::size_t i = 0;; ++i) {
      auto a = view.out_edge(v, i);
      if (!a) break;
      if (is_charged(a->id)) continue;
      if (a->head != s && !r.tree_parent.contains(a->head)) {
        r.tree_parent.emplace(a->head, std::make_pair(v, a->id));
      }
      stack.push_back(a->head);
      if (charge(*a, false)) return r;
    }

    if constexpr (requires { view.inner().base().out_copy_of(v); }) {
      if (mode == DfsMode::restricted_symmetric) {
        const auto& split = view.inner().base();
        // v is interior unless it is an in-copy whose out-copy is unvisited.
        const Vertex partner_out = split.out_copy_of(v);
        if (partner_out == kNoVertex || visited.contains(partner_out)) {
          if (scan_in(v)) return r;
        }
        // Visiting an out-copy makes its already visited in-copy interior.
        const Vertex partner_in = split.in_copy_of(v);
        if (partner_in != kNoVertex && visited.contains(partner_in)) {
          if (scan_in(partner_in)) return r;
        }
      }
    }
  }
  r.completed = true;
  return r;
}

struct DetectParams {
  std::size_t k = 0;
  std::size_t delta = 1;
  DfsMode dfs_mode = DfsMode::out_edges;
  TimeMode time_mode = TimeMode::expected;
};

struct ComponentResult {
  std::vector<Vertex> members;    // sorted; empty when nothing was found
  std::vector<EdgeId> out_edges;  // edges leaving members in the source graph
  std::size_t edge_size = 0;      // edges with both endpoints in members
  std::size_t processed_edges = 0;
  std::size_t queries_used = 0;
  std::size_t trials_used = 0;
  std::uint64_t seed = 0;

  bool found() const noexcept { return !members.empty(); }
};

/// Per-trial record of what the procedure did; used by instrumentation tests.
struct DetectionTrace {
  struct Round {
    std::size_t processed = 0;
    bool completed = false;
    ProcessedEdge sampled;
    bool sampled_reversed = false;
    std::vector<EdgeId> path;
    Vertex path_end = kNoVertex;
  };
  std::vector<Round> rounds;
  std::size_t final_processed = 0;
  bool final_completed = false;
  bool aborted = false;
};

inline std::size_t round_budget(std::size_t k, std::size_t delta) { return 2 * k * (delta + k); }

/// Upper bound on edges processed by one trial.
inline std::size_t trial_edge_budget(std::size_t k, std::size_t delta) {
  return k * round_budget(k, delta) + delta + 1;
}

/// Number of independent trials needed for success probability p.
std::size_t repetitions_for(double p, TimeMode mode = TimeMode::expected);

namespace detail {

template <IncidenceSource Source>
void describe_members(const Source& src, ComponentResult& out) {
  std::sort(out.members.begin(), out.members.end());
  absl::flat_hash_set<Vertex> in(out.members.begin(), out.members.end());
  for (Vertex v : out.members) {
    for (std::size_t i = 0;; ++i) {
      auto a = src.out_edge(v, i);
      if (!a) break;
      if (in.contains(a->head)) {
        ++out.edge_size;
      } else {
        out.out_edges.push_back(a->id);
      }
    }
  }
}

inline std::vector<EdgeId> tree_path(const DfsResult& dfs, Vertex s, Vertex to) {
  std::vector<EdgeId> path;
  while (to != s) {
    const auto& [parent, edge] = dfs.tree_parent.at(to);
    path.push_back(edge);
    to = parent;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace detail

/// One run of the randomized local procedure on an arbitrary source.
template <IncidenceSource Source>
ComponentResult detect_component_on(const Source& src, Vertex s, const DetectParams& params,
                                    Rng& rng, DetectionTrace* trace = nullptr) {
  if (s >= src.vertex_count()) throw std::out_of_range("start vertex out of range");
  Overlay<Source> overlay(src);
  CountedView<Overlay<Source>> view(overlay);
  ComponentResult result;
  result.trials_used = 1;

  const std::size_t k = params.k;
  const std::size_t budget = round_budget(k, params.delta);
  const std::size_t work_limit = 4 * (2 * k * budget + params.delta + 1);
  std::size_t work = 0;

  auto finish = [&](const DfsResult& dfs) {
    result.members = dfs.visited;
    detail::describe_members(src, result);
  };

  for (std::size_t i = 0; i < k; ++i) {
    DfsResult dfs = budgeted_dfs(view, s, budget, params.dfs_mode);
    result.processed_edges += dfs.processed.size();
    work += dfs.processed.size();
    DetectionTrace::Round round;
    round.processed = dfs.processed.size();
    round.completed = dfs.completed;
    if (dfs.completed) {
      if (trace) trace->rounds.push_back(std::move(round));
      finish(dfs);
      result.queries_used = view.query_count();
      return result;
    }
    std::uniform_int_distribution<std::size_t> pick(0, dfs.processed.size() - 1);
    const ProcessedEdge sampled = dfs.processed[pick(rng)];
    const bool reversed = overlay.is_reversed(sampled.arc.id);
    std::vector<EdgeId> path;
    if (sampled.in_scan) {
      path = detail::tree_path(dfs, s, sampled.arc.head);
    } else {
      path = detail::tree_path(dfs, s, sampled.arc.tail);
      if (reversed) path.push_back(sampled.arc.id);
    }
    overlay.apply_path_reversal(path);
    work += path.size();
    if (trace) {
      round.sampled = sampled;
      round.sampled_reversed = reversed;
      round.path_end = path.empty() ? s : overlay.arc(path.back()).tail;
      round.path = std::move(path);
      trace->rounds.push_back(std::move(round));
    }
    if (params.time_mode == TimeMode::worst_case && work > work_limit) {
      if (trace) trace->aborted = true;
      result.queries_used = view.query_count();
      return result;
    }
  }

  DfsResult last = budgeted_dfs(view, s, params.delta + 1, params.dfs_mode);
  result.processed_edges += last.processed.size();
  if (trace) {
    trace->final_processed = last.processed.size();
    trace->final_completed = last.completed;
  }
  if (last.completed) finish(last);
  result.queries_used = view.query_count();
  return result;
}

/// Repeats the procedure until a trial succeeds or the repetition budget for
/// success probability `p` runs out.
template <IncidenceSource Source>
ComponentResult detect_component_param_on(const Source& src, Vertex s,
                                          const DetectParams& params, double p, Rng& rng) {
  ComponentResult total;
  const std::size_t reps = repetitions_for(p, params.time_mode);
  for (std::size_t t = 0; t < reps; ++t) {
    ComponentResult r = detect_component_on(src, s, params, rng);
    total.processed_edges += r.processed_edges;
    total.queries_used += r.queries_used;
    total.trials_used += 1;
    if (r.found()) {
      r.processed_edges = total.processed_edges;
      r.queries_used = total.queries_used;
      r.trials_used = total.trials_used;
      return r;
    }
  }
  return total;
}

// Graph entry points. The seed is recorded in the result.
ComponentResult detect_component(const Graph& g, Vertex s, std::size_t k, std::size_t delta,
                                 std::uint64_t seed, DetectionTrace* trace = nullptr);
ComponentResult detect_component_param(const Graph& g, Vertex s, std::size_t k,
                                       std::size_t delta, double p, std::uint64_t seed,
                                       TimeMode mode = TimeMode::expected);

/// True iff at most k edges leave `members` in g.
bool verify_k_edge_out(const Graph& g, std::span<const Vertex> members, std::size_t k);

/// Largest edge size a successful trial can return.
inline std::size_t edge_size_bound(std::size_t k, std::size_t delta) {
  return std::max(round_budget(k, delta), delta);
}

}  // namespace localcut
