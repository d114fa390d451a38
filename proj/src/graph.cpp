#include "localcut/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace localcut {

GraphFormatError::GraphFormatError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

Graph::Graph(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges) : n_(n) {
  arcs_.reserve(edges.size());
  std::vector<std::size_t> out_count(n, 0);
  std::vector<std::size_t> in_count(n, 0);
  for (const auto& [tail, head] : edges) {
    if (tail >= n || head >= n) {
      throw std::out_of_range("edge endpoint out of range");
    }
    arcs_.push_back(Arc{static_cast<EdgeId>(arcs_.size()), tail, head});
    ++out_count[tail];
    ++in_count[head];
  }
  out_offset_.assign(n + 1, 0);
  in_offset_.assign(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    out_offset_[v + 1] = out_offset_[v] + out_count[v];
    in_offset_[v + 1] = in_offset_[v] + in_count[v];
  }
  out_list_.resize(arcs_.size());
  in_list_.resize(arcs_.size());
  out_slot_.resize(arcs_.size());
  in_slot_.resize(arcs_.size());
  std::fill(out_count.begin(), out_count.end(), 0);
  std::fill(in_count.begin(), in_count.end(), 0);
  for (const Arc& a : arcs_) {
    out_slot_[a.id] = out_count[a.tail]++;
    in_slot_[a.id] = in_count[a.head]++;
    out_list_[out_offset_[a.tail] + out_slot_[a.id]] = a.id;
    in_list_[in_offset_[a.head] + in_slot_[a.id]] = a.id;
  }
}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_) throw std::out_of_range("vertex id out of range");
}

std::span<const EdgeId> Graph::out_edges(Vertex v) const {
  check_vertex(v);
  return {out_list_.data() + out_offset_[v], out_offset_[v + 1] - out_offset_[v]};
}

std::span<const EdgeId> Graph::in_edges(Vertex v) const {
  check_vertex(v);
  return {in_list_.data() + in_offset_[v], in_offset_[v + 1] - in_offset_[v]};
}

std::optional<Arc> Graph::out_edge(Vertex v, std::size_t i) const {
  auto list = out_edges(v);
  if (i >= list.size()) return std::nullopt;
  return arcs_[list[i]];
}

std::optional<Arc> Graph::in_edge(Vertex v, std::size_t i) const {
  auto list = in_edges(v);
  if (i >= list.size()) return std::nullopt;
  return arcs_[list[i]];
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Parses exactly two unsigned integers separated by whitespace.
bool parse_pair(std::string_view s, std::uint64_t& a, std::uint64_t& b) {
  const char* p = s.data();
  const char* end = s.data() + s.size();
  auto skip_ws = [&] {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
  };
  skip_ws();
  auto r1 = std::from_chars(p, end, a);
  if (r1.ec != std::errc{} || r1.ptr == p) return false;
  p = r1.ptr;
  if (p == end || (*p != ' ' && *p != '\t')) return false;
  skip_ws();
  auto r2 = std::from_chars(p, end, b);
  if (r2.ec != std::errc{} || r2.ptr == p) return false;
  p = r2.ptr;
  skip_ws();
  return p == end;
}

}  // namespace

Graph load_edge_list(std::string_view text) {
  std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    std::uint64_t a = 0;
    std::uint64_t b = 0;
    if (!parse_pair(line, a, b)) {
      throw GraphFormatError(line_no, "expected two non-negative integers, got '" +
                                          std::string(line) + "'");
    }
    if (!header) {
      if (a > std::numeric_limits<Vertex>::max() - 1) {
        throw GraphFormatError(line_no, "vertex count too large");
      }
      header = {a, b};
      edges.reserve(b);
      continue;
    }
    if (edges.size() == header->second) {
      throw GraphFormatError(line_no, "more edges than declared in header (" +
                                          std::to_string(header->second) + ")");
    }
    if (a < 1 || a > header->first || b < 1 || b > header->first) {
      throw GraphFormatError(line_no, "vertex id out of range 1.." +
                                          std::to_string(header->first));
    }
    edges.emplace_back(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
  }
  if (!header) throw GraphFormatError(0, "missing header line 'n m'");
  if (edges.size() != header->second) {
    throw GraphFormatError(line_no, "header declares " + std::to_string(header->second) +
                                        " edges but " + std::to_string(edges.size()) +
                                        " were given");
  }
  return Graph(static_cast<Vertex>(header->first), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphFormatError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_edge_list(buf.str());
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Arc& a : g.arcs()) out << a.tail + 1 << ' ' << a.head + 1 << '\n';
  return out.str();
}

Graph reverse_graph(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(g.edge_count());
  for (const Arc& a : g.arcs()) edges.emplace_back(a.head, a.tail);
  return Graph(g.vertex_count(), edges);
}

Graph bidirect(const Graph& undirected) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(2 * undirected.edge_count());
  for (const Arc& a : undirected.arcs()) {
    edges.emplace_back(a.tail, a.head);
    edges.emplace_back(a.head, a.tail);
  }
  return Graph(undirected.vertex_count(), edges);
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices,
                          std::span<const char> keep_edge) {
  std::vector<Vertex> local(g.vertex_count(), kNoVertex);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<Vertex>(i);
  Subgraph sub;
  sub.original.assign(vertices.begin(), vertices.end());
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const Arc& a : g.arcs()) {
    if (!keep_edge.empty() && !keep_edge[a.id]) continue;
    if (local[a.tail] == kNoVertex || local[a.head] == kNoVertex) continue;
    edges.emplace_back(local[a.tail], local[a.head]);
    sub.original_edge.push_back(a.id);
  }
  sub.graph = Graph(static_cast<Vertex>(vertices.size()), edges);
  return sub;
}

std::vector<char> membership(Vertex n, std::span<const Vertex> members) {
  std::vector<char> in(n, 0);
  for (Vertex v : members) in.at(v) = 1;
  return in;
}

std::vector<EdgeId> edges_leaving(const Graph& g, std::span<const Vertex> members) {
  const auto in = membership(g.vertex_count(), members);
  std::vector<EdgeId> out;
  for (const Arc& a : g.arcs()) {
    if (in[a.tail] && !in[a.head]) out.push_back(a.id);
  }
  return out;
}

std::vector<EdgeId> edges_entering(const Graph& g, std::span<const Vertex> members) {
  const auto in = membership(g.vertex_count(), members);
  std::vector<EdgeId> out;
  for (const Arc& a : g.arcs()) {
    if (!in[a.tail] && in[a.head]) out.push_back(a.id);
  }
  return out;
}

std::size_t edge_size(const Graph& g, std::span<const Vertex> members) {
  const auto in = membership(g.vertex_count(), members);
  return static_cast<std::size_t>(std::count_if(
      g.arcs().begin(), g.arcs().end(), [&](const Arc& a) { return in[a.tail] && in[a.head]; }));
}

std::size_t volume(const Graph& g, std::span<const Vertex> members) {
  const auto in = membership(g.vertex_count(), members);
  return static_cast<std::size_t>(std::count_if(g.arcs().begin(), g.arcs().end(),
                                                [&](const Arc& a) { return in[a.tail] != 0; }));
}

std::size_t symmetric_volume(const Graph& g, std::span<const Vertex> members) {
  const auto in = membership(g.vertex_count(), members);
  return static_cast<std::size_t>(std::count_if(
      g.arcs().begin(), g.arcs().end(), [&](const Arc& a) { return in[a.tail] || in[a.head]; }));
}

std::vector<Vertex> out_boundary(const Graph& g, std::span<const Vertex> members) {
  const auto in = membership(g.vertex_count(), members);
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> boundary;
  for (const Arc& a : g.arcs()) {
    if (in[a.tail] && !in[a.head] && !seen[a.head]) {
      seen[a.head] = 1;
      boundary.push_back(a.head);
    }
  }
  std::sort(boundary.begin(), boundary.end());
  return boundary;
}

}  // namespace localcut
