#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/container/flat_hash_set.h"

#include "localcut/types.hpp"

namespace localcut {

/// Anything answering incidence-list probes: the i-th (0-based) out- or
/// in-edge of a vertex, plus the base position of an edge in those lists.
template <typename S>
concept IncidenceSource = requires(const S& s, Vertex v, std::size_t i, EdgeId e) {
  { s.vertex_count() } -> std::convertible_to<std::size_t>;
  { s.edge_count() } -> std::convertible_to<std::size_t>;
  { s.out_edge(v, i) } -> std::same_as<std::optional<Arc>>;
  { s.in_edge(v, i) } -> std::same_as<std::optional<Arc>>;
  { s.arc(e) } -> std::convertible_to<Arc>;
  { s.out_slot(e) } -> std::convertible_to<std::size_t>;
  { s.in_slot(e) } -> std::convertible_to<std::size_t>;
};

/// Sources that come from the vertex-split construction expose the pairing
/// between v_in and v_out so that restricted symmetric volume can be charged.
template <typename S>
concept SplitSource = IncidenceSource<S> && requires(const S& s, Vertex v) {
  { s.out_copy_of(v) } -> std::convertible_to<Vertex>;  // v_in -> v_out, else kNoVertex
  { s.in_copy_of(v) } -> std::convertible_to<Vertex>;   // v_out -> v_in, else kNoVertex
};

/// The reverse graph, without copying.
template <IncidenceSource Source>
class ReverseView {
 public:
  explicit ReverseView(const Source& base) : base_(&base) {}

  std::size_t vertex_count() const { return base_->vertex_count(); }
  std::size_t edge_count() const { return base_->edge_count(); }
  std::optional<Arc> out_edge(Vertex v, std::size_t i) const { return flip(base_->in_edge(v, i)); }
  std::optional<Arc> in_edge(Vertex v, std::size_t i) const { return flip(base_->out_edge(v, i)); }
  Arc arc(EdgeId e) const {
    Arc a = base_->arc(e);
    return Arc{a.id, a.head, a.tail};
  }
  std::size_t out_slot(EdgeId e) const { return base_->in_slot(e); }
  std::size_t in_slot(EdgeId e) const { return base_->out_slot(e); }

  const Source& base() const { return *base_; }

 private:
  static std::optional<Arc> flip(std::optional<Arc> a) {
    if (a) std::swap(a->tail, a->head);
    return a;
  }

  const Source* base_;
};

/// Mutable edge-direction overlay over an immutable source. An edge is
/// reversed iff it has been flipped an odd number of times. A flipped edge
/// leaves its base slot and is appended at the end of the gaining vertex's
/// list; flipping it back restores the base slot.
template <IncidenceSource Source>
class Overlay {
 public:
  explicit Overlay(const Source& base) : base_(&base) {}

  std::size_t vertex_count() const { return base_->vertex_count(); }
  std::size_t edge_count() const { return base_->edge_count(); }
  const Source& base() const { return *base_; }

  bool is_reversed(EdgeId e) const { return reversed_.contains(e); }
  std::size_t reversed_count() const { return reversed_.size(); }

  std::vector<EdgeId> reversed_edges() const {
    std::vector<EdgeId> out(reversed_.begin(), reversed_.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  Arc arc(EdgeId e) const {
    Arc a = base_->arc(e);
    if (is_reversed(e)) std::swap(a.tail, a.head);
    return a;
  }
  std::size_t out_slot(EdgeId e) const { return base_->out_slot(e); }
  std::size_t in_slot(EdgeId e) const { return base_->in_slot(e); }

  std::optional<Arc> out_edge(Vertex v, std::size_t i) const {
    check_vertex(v);
    auto it = deltas_.find(v);
    if (it == deltas_.end()) return base_->out_edge(v, i);
    return resolve(it->second.out, v, i, [this](Vertex u, std::size_t j) {
      return base_->out_edge(u, j);
    });
  }

  std::optional<Arc> in_edge(Vertex v, std::size_t i) const {
    check_vertex(v);
    auto it = deltas_.find(v);
    if (it == deltas_.end()) return base_->in_edge(v, i);
    return resolve(it->second.in, v, i, [this](Vertex u, std::size_t j) {
      return base_->in_edge(u, j);
    });
  }

  /// Toggles the orientation of a single edge.
  void flip(EdgeId e) {
    const Arc base_arc = base_->arc(e);
    const std::size_t out_pos = base_->out_slot(e);
    const std::size_t in_pos = base_->in_slot(e);
    if (reversed_.erase(e) == 0) {
      reversed_.insert(e);
      insert_sorted(deltas_[base_arc.tail].out.removed, out_pos);
      insert_sorted(deltas_[base_arc.head].in.removed, in_pos);
      deltas_[base_arc.head].out.extra.push_back(e);
      deltas_[base_arc.tail].in.extra.push_back(e);
    } else {
      erase_value(deltas_[base_arc.tail].out.removed, out_pos);
      erase_value(deltas_[base_arc.head].in.removed, in_pos);
      erase_value(deltas_[base_arc.head].out.extra, e);
      erase_value(deltas_[base_arc.tail].in.extra, e);
    }
  }

  /// Reverses every edge of a directed walk given in order. The walk check
  /// is linear in the path, so it stays on in release builds too.
  void apply_path_reversal(std::span<const EdgeId> path) {
    for (std::size_t j = 1; j < path.size(); ++j) {
      if (arc(path[j - 1]).head != arc(path[j]).tail) {
        throw std::logic_error("apply_path_reversal: edges do not form a directed path");
      }
    }
    for (EdgeId e : path) flip(e);
  }

 private:
  struct ListDelta {
    std::vector<std::size_t> removed;  // sorted base slots that currently point the other way
    std::vector<EdgeId> extra;         // reversed edges gained by this vertex, in flip order
    mutable std::optional<std::size_t> base_degree;
  };
  struct VertexDelta {
    ListDelta out;
    ListDelta in;
  };

  void check_vertex(Vertex v) const {
    if (v >= base_->vertex_count()) throw std::out_of_range("vertex id out of range");
  }

  template <typename Probe>
  std::optional<Arc> resolve(const ListDelta& d, Vertex v, std::size_t i, Probe probe) const {
    std::size_t p = i;
    for (std::size_t r : d.removed) {
      if (r <= p) {
        ++p;
      } else {
        break;
      }
    }
    if (auto a = probe(v, p)) return a;
    if (!d.base_degree) {
      std::size_t deg = p;
      while (deg > 0 && !probe(v, deg - 1)) --deg;
      d.base_degree = deg;
    }
    const std::size_t kept = *d.base_degree - d.removed.size();
    const std::size_t j = i - kept;
    if (j < d.extra.size()) return arc(d.extra[j]);
    return std::nullopt;
  }

  template <typename T>
  static void insert_sorted(std::vector<T>& xs, T x) {
    xs.insert(std::upper_bound(xs.begin(), xs.end(), x), x);
  }

  template <typename T>
  static void erase_value(std::vector<T>& xs, T x) {
    auto it = std::find(xs.begin(), xs.end(), x);
    if (it != xs.end()) xs.erase(it);
  }

  const Source* base_;
  absl::flat_hash_set<EdgeId> reversed_;
  absl::flat_hash_map<Vertex, VertexDelta> deltas_;
};

/// Counts every incidence probe, including probes that come back absent.
template <typename Inner>
class CountedView {
 public:
  explicit CountedView(Inner& inner) : inner_(&inner) {}

  std::size_t vertex_count() const { return inner_->vertex_count(); }
  std::size_t edge_count() const { return inner_->edge_count(); }

  std::optional<Arc> out_edge(Vertex v, std::size_t i) {
    ++queries_;
    return inner_->out_edge(v, i);
  }
  std::optional<Arc> in_edge(Vertex v, std::size_t i) {
    ++queries_;
    return inner_->in_edge(v, i);
  }
  Arc arc(EdgeId e) const { return inner_->arc(e); }

  std::size_t query_count() const noexcept { return queries_; }
  Inner& inner() { return *inner_; }
  const Inner& inner() const { return *inner_; }

 private:
  Inner* inner_;
  std::size_t queries_ = 0;
};

}  // namespace localcut
