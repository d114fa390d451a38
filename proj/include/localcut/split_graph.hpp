#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "localcut/incidence.hpp"

namespace localcut {

/// Lazily materialized vertex-split graph for a designated vertex s.
///
/// Vertex ids: v_out = v for every base vertex (s_out = s_in = s), and
/// v_in = n + rank(v) for v != s, where rank skips s. Edge ids: the image
/// of base edge e keeps id e; the transit edge v_in -> v_out has id
/// m + rank(v). The transit edge is the only entry of v_in's out-list and of
/// v_out's in-list; image edges follow base order.
template <IncidenceSource Source>
class SplitView {
 public:
  SplitView(const Source& base, Vertex s) : base_(&base), s_(s) {
    if (s >= base.vertex_count()) throw std::out_of_range("split vertex out of range");
  }

  std::size_t vertex_count() const { return 2 * n() - 1; }
  std::size_t edge_count() const { return base_->edge_count() + n() - 1; }
  Vertex source() const { return s_; }
  const Source& base() const { return *base_; }

  bool is_in_copy(Vertex x) const { return x >= n(); }
  /// The base vertex a split vertex belongs to.
  Vertex base_vertex(Vertex x) const { return is_in_copy(x) ? unrank(x - n()) : x; }
  Vertex in_copy(Vertex v) const { return v == s_ ? s_ : static_cast<Vertex>(n() + rank(v)); }
  Vertex out_copy(Vertex v) const { return v; }

  Vertex out_copy_of(Vertex x) const { return is_in_copy(x) ? unrank(x - n()) : kNoVertex; }
  Vertex in_copy_of(Vertex x) const {
    return (!is_in_copy(x) && x != s_) ? static_cast<Vertex>(n() + rank(x)) : kNoVertex;
  }

  bool is_transit(EdgeId e) const { return e >= base_->edge_count(); }

  Arc arc(EdgeId e) const {
    if (is_transit(e)) {
      const Vertex v = unrank(static_cast<std::size_t>(e - base_->edge_count()));
      return Arc{e, in_copy(v), v};
    }
    const Arc a = base_->arc(e);
    return Arc{e, a.tail, in_copy(a.head)};
  }

  std::size_t out_slot(EdgeId e) const { return is_transit(e) ? 0 : base_->out_slot(e); }
  std::size_t in_slot(EdgeId e) const { return is_transit(e) ? 0 : base_->in_slot(e); }

  std::optional<Arc> out_edge(Vertex x, std::size_t i) const {
    check(x);
    if (is_in_copy(x)) {
      if (i != 0) return std::nullopt;
      return arc(transit_id(unrank(x - n())));
    }
    auto a = base_->out_edge(x, i);
    if (!a) return std::nullopt;
    return Arc{a->id, x, in_copy(a->head)};
  }

  std::optional<Arc> in_edge(Vertex x, std::size_t i) const {
    check(x);
    if (!is_in_copy(x) && x != s_) {
      if (i != 0) return std::nullopt;
      return arc(transit_id(x));
    }
    const Vertex v = base_vertex(x);
    auto a = base_->in_edge(v, i);
    if (!a) return std::nullopt;
    return Arc{a->id, a->tail, x};
  }

 private:
  std::size_t n() const { return base_->vertex_count(); }
  std::size_t rank(Vertex v) const { return v < s_ ? v : v - 1; }
  Vertex unrank(std::size_t r) const { return static_cast<Vertex>(r < s_ ? r : r + 1); }
  EdgeId transit_id(Vertex v) const { return static_cast<EdgeId>(base_->edge_count() + rank(v)); }
  void check(Vertex x) const {
    if (x >= vertex_count()) throw std::out_of_range("split vertex id out of range");
  }

  const Source* base_;
  Vertex s_;
};

}  // namespace localcut
