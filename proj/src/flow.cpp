#include "localcut/flow.hpp"

#include <algorithm>
#include <stdexcept>

namespace localcut {

bool is_valid_vertex_cut(const Graph& g, const VertexCut& cut) {
  const Vertex n = g.vertex_count();
  if (cut.left.empty() || cut.right.empty()) return false;
  if (cut.left.size() + cut.separator.size() + cut.right.size() != n) return false;
  std::vector<char> side(n, 0);
  for (auto [part, tag] : {std::pair{&cut.left, 1}, {&cut.separator, 2}, {&cut.right, 3}}) {
    for (Vertex v : *part) {
      if (v >= n || side[v] != 0) return false;
      side[v] = static_cast<char>(tag);
    }
  }
  for (const Arc& a : g.arcs()) {
    if (side[a.tail] == 1 && side[a.head] == 3) return false;
  }
  return true;
}

bool is_valid_edge_cut(const Graph& g, const EdgeCut& cut) {
  const Vertex n = g.vertex_count();
  if (cut.source_side.empty() || cut.source_side.size() >= n) return false;
  std::vector<char> in(n, 0);
  for (Vertex v : cut.source_side) {
    if (v >= n || in[v]) return false;
    in[v] = 1;
  }
  std::vector<EdgeId> leaving;
  for (const Arc& a : g.arcs()) {
    if (in[a.tail] && !in[a.head]) leaving.push_back(a.id);
  }
  std::vector<EdgeId> listed = cut.edges;
  std::sort(listed.begin(), listed.end());
  return listed == leaving;
}

std::size_t FlowNetwork::add_arc(std::size_t from, std::size_t to, std::int32_t capacity) {
  const std::size_t id = edges_.size();
  edges_.push_back({to, capacity, capacity});
  edges_.push_back({from, 0, 0});
  adjacency_[from].push_back(id);
  adjacency_[to].push_back(id + 1);
  return id;
}

void FlowNetwork::set_capacity(std::size_t arc, std::int32_t capacity) {
  edges_[arc].capacity = capacity;
  edges_[arc].residual = capacity;
  edges_[arc ^ 1].residual = 0;
}

void FlowNetwork::reset() {
  for (auto& e : edges_) e.residual = e.capacity;
}

bool FlowNetwork::augment(std::size_t s, std::size_t t) {
  if (seen_.size() != adjacency_.size()) seen_.assign(adjacency_.size(), 0);
  if (++stamp_ == 0) {
    std::fill(seen_.begin(), seen_.end(), 0);
    stamp_ = 1;
  }
  // parent arc per node, filled as the DFS discovers it
  std::vector<std::size_t> via;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
  seen_[s] = stamp_;
  while (!stack.empty()) {
    auto& [node, pos] = stack.back();
    if (node == t) break;
    const auto& adj = adjacency_[node];
    bool moved = false;
    while (pos < adj.size()) {
      const std::size_t e = adj[pos++];
      const Edge& ed = edges_[e];
      if (ed.residual > 0 && seen_[ed.to] != stamp_) {
        seen_[ed.to] = stamp_;
        via.push_back(e);
        stack.push_back({ed.to, 0});
        moved = true;
        break;
      }
    }
    if (!moved) {
      stack.pop_back();
      if (!via.empty() && !stack.empty()) via.pop_back();
    }
  }
  if (stack.empty()) return false;
  for (std::size_t e : via) {
    edges_[e].residual -= 1;
    edges_[e ^ 1].residual += 1;
  }
  return true;
}

std::size_t FlowNetwork::max_flow(std::size_t s, std::size_t t, std::size_t limit) {
  std::size_t flow = 0;
  while (flow < limit && augment(s, t)) ++flow;
  return flow;
}

std::vector<char> FlowNetwork::residual_reachable(std::size_t s) const {
  std::vector<char> seen(adjacency_.size(), 0);
  std::vector<std::size_t> stack{s};
  seen[s] = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t e : adjacency_[u]) {
      if (edges_[e].residual > 0 && !seen[edges_[e].to]) {
        seen[edges_[e].to] = 1;
        stack.push_back(edges_[e].to);
      }
    }
  }
  return seen;
}

// node 2v is v_in, 2v+1 is v_out
VertexSplitNetwork::VertexSplitNetwork(const Graph& g) : g_(&g), net_(2 * g.vertex_count()) {
  const Vertex n = g.vertex_count();
  transit_.resize(n);
  for (Vertex v = 0; v < n; ++v) transit_[v] = net_.add_arc(2 * v, 2 * v + 1, 1);
  for (const Arc& a : g.arcs()) {
    if (a.tail != a.head) net_.add_arc(2 * a.tail + 1, 2 * a.head, FlowNetwork::kUnbounded);
  }
  if (std::size_t(n) * n <= (1u << 22)) {
    adjacent_.assign(std::size_t(n) * n, 0);
    for (const Arc& a : g.arcs()) adjacent_[std::size_t(a.tail) * n + a.head] = 1;
  }
}

void VertexSplitNetwork::prepare(Vertex s, Vertex t) {
  for (Vertex v = 0; v < g_->vertex_count(); ++v) net_.set_capacity(transit_[v], 1);
  net_.reset();
  net_.set_capacity(transit_[s], FlowNetwork::kUnbounded);
  net_.set_capacity(transit_[t], FlowNetwork::kUnbounded);
}

namespace {

bool has_edge(const Graph& g, const std::vector<char>& matrix, Vertex s, Vertex t) {
  if (!matrix.empty()) return matrix[std::size_t(s) * g.vertex_count() + t] != 0;
  for (EdgeId e : g.out_edges(s)) {
    if (g.arc(e).head == t) return true;
  }
  return false;
}

}  // namespace

std::optional<VertexCut> VertexSplitNetwork::cut_below(Vertex s, Vertex t, std::size_t k) {
  if (s == t) throw std::invalid_argument("cut_below: s and t must differ");
  if (has_edge(*g_, adjacent_, s, t)) return std::nullopt;
  prepare(s, t);
  const std::size_t flow = net_.max_flow(2 * s + 1, 2 * t, k);
  if (flow >= k) return std::nullopt;
  const auto reach = net_.residual_reachable(2 * s + 1);
  VertexCut cut;
  for (Vertex v = 0; v < g_->vertex_count(); ++v) {
    if (reach[2 * v + 1]) {
      cut.left.push_back(v);
    } else if (reach[2 * v]) {
      cut.separator.push_back(v);
    } else {
      cut.right.push_back(v);
    }
  }
  return cut;
}

std::size_t VertexSplitNetwork::connectivity(Vertex s, Vertex t, std::size_t limit) {
  if (s == t) throw std::invalid_argument("connectivity: s and t must differ");
  if (has_edge(*g_, adjacent_, s, t)) return limit;
  prepare(s, t);
  return net_.max_flow(2 * s + 1, 2 * t, limit);
}

std::optional<VertexCut> pair_vertex_cut_at_most(const Graph& g, Vertex s, Vertex t,
                                                 std::size_t k) {
  VertexSplitNetwork net(g);
  return net.cut_below(s, t, k);
}

EdgeFlowNetwork::EdgeFlowNetwork(const Graph& g) : g_(&g), net_(g.vertex_count()) {
  for (const Arc& a : g.arcs()) net_.add_arc(a.tail, a.head, 1);
}

std::optional<EdgeCut> EdgeFlowNetwork::cut_below(Vertex s, Vertex t, std::size_t k) {
  if (s == t) throw std::invalid_argument("cut_below: s and t must differ");
  net_.reset();
  if (net_.max_flow(s, t, k) >= k) return std::nullopt;
  const auto reach = net_.residual_reachable(s);
  EdgeCut cut;
  for (Vertex v = 0; v < g_->vertex_count(); ++v) {
    if (reach[v]) cut.source_side.push_back(v);
  }
  for (const Arc& a : g_->arcs()) {
    if (reach[a.tail] && !reach[a.head]) cut.edges.push_back(a.id);
  }
  return cut;
}

std::optional<EdgeCut> pair_edge_cut_below(const Graph& g, Vertex s, Vertex t, std::size_t k) {
  EdgeFlowNetwork net(g);
  return net.cut_below(s, t, k);
}

}  // namespace localcut
