#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "localcut/graph.hpp"

namespace localcut {

/// Residual copy of a graph that supports edge deletion. Deleting swaps the
/// last entry of each incidence list into the freed slot, so list order is
/// not stable across deletions. Edge ids keep their meaning; edge_count()
/// is the id range, live_edge_count() what is left.
class MutableGraph {
 public:
  explicit MutableGraph(const Graph& g)
      : arcs_(g.arcs().begin(), g.arcs().end()),
        out_(g.vertex_count()),
        in_(g.vertex_count()),
        out_pos_(g.edge_count()),
        in_pos_(g.edge_count()),
        alive_(g.edge_count(), 1),
        live_(g.edge_count()) {
    for (const Arc& a : arcs_) {
      out_pos_[a.id] = out_[a.tail].size();
      out_[a.tail].push_back(a.id);
      in_pos_[a.id] = in_[a.head].size();
      in_[a.head].push_back(a.id);
    }
  }

  Vertex vertex_count() const noexcept { return static_cast<Vertex>(out_.size()); }
  std::size_t edge_count() const noexcept { return arcs_.size(); }
  std::size_t live_edge_count() const noexcept { return live_; }
  bool is_live(EdgeId e) const { return alive_[e] != 0; }

  const Arc& arc(EdgeId e) const { return arcs_[e]; }
  std::span<const EdgeId> out_edges(Vertex v) const { return out_[v]; }
  std::span<const EdgeId> in_edges(Vertex v) const { return in_[v]; }
  std::size_t out_degree(Vertex v) const { return out_[v].size(); }
  std::size_t in_degree(Vertex v) const { return in_[v].size(); }

  std::optional<Arc> out_edge(Vertex v, std::size_t i) const {
    if (v >= out_.size()) throw std::out_of_range("vertex id out of range");
    if (i >= out_[v].size()) return std::nullopt;
    return arcs_[out_[v][i]];
  }
  std::optional<Arc> in_edge(Vertex v, std::size_t i) const {
    if (v >= in_.size()) throw std::out_of_range("vertex id out of range");
    if (i >= in_[v].size()) return std::nullopt;
    return arcs_[in_[v][i]];
  }
  std::size_t out_slot(EdgeId e) const { return out_pos_[e]; }
  std::size_t in_slot(EdgeId e) const { return in_pos_[e]; }

  void remove_edge(EdgeId e) {
    if (!alive_[e]) return;
    alive_[e] = 0;
    --live_;
    const Arc& a = arcs_[e];
    erase(out_[a.tail], out_pos_, out_pos_[e]);
    erase(in_[a.head], in_pos_, in_pos_[e]);
  }

  /// Removes every edge with an endpoint in `members`.
  void isolate(std::span<const Vertex> members) {
    for (Vertex v : members) {
      while (!out_[v].empty()) remove_edge(out_[v].back());
      while (!in_[v].empty()) remove_edge(in_[v].back());
    }
  }

 private:
  static void erase(std::vector<EdgeId>& list, std::vector<std::size_t>& pos, std::size_t slot) {
    const EdgeId moved = list.back();
    list[slot] = moved;
    pos[moved] = slot;
    list.pop_back();
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<EdgeId>> out_, in_;
  std::vector<std::size_t> out_pos_, in_pos_;
  std::vector<char> alive_;
  std::size_t live_;
};

}  // namespace localcut
