#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "localcut/generators.hpp"
#include "localcut/incidence.hpp"

using namespace localcut;

TEST_CASE("edge list parsing") {
  Graph g = load_edge_list("3 2\n1 2\n2 3\n");
  CHECK(g.vertex_count() == 3);
  REQUIRE(g.edge_count() == 2);
  CHECK(g.arc(0) == Arc{0, 0, 1});
  CHECK(g.arc(1) == Arc{1, 1, 2});

  Graph single = load_edge_list("# nothing but a vertex\n1 0\n");
  CHECK(single.vertex_count() == 1);
  CHECK(single.edge_count() == 0);

  Graph parallel = load_edge_list("2 2\n1 2\n\n1 2\n");
  REQUIRE(parallel.edge_count() == 2);
  CHECK(parallel.arc(0).id != parallel.arc(1).id);
  CHECK(parallel.out_degree(0) == 2);
}

TEST_CASE("edge list errors carry line numbers") {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      load_edge_list(text);
    } catch (const GraphFormatError& e) {
      return e.line();
    }
    return 999;
  };
  CHECK(line_of("2 1\n1 x\n") == 2);
  CHECK(line_of("2 1\n# c\n1 3\n") == 3);
  CHECK(line_of("2 2\n1 2\n") != 999);
  CHECK(line_of("2 1\n1 2\n2 1\n") == 3);
  CHECK(line_of("2 1\n0 1\n") == 2);
}

TEST_CASE("round trip through text") {
  Rng rng(7);
  Graph g = random_digraph(9, 20, rng).graph;
  CHECK(load_edge_list(to_edge_list(g)) == g);
}

TEST_CASE("incidence queries on a path") {
  Graph g(3, {{0, 1}, {1, 2}});
  CountedView<const Graph> view(g);
  CHECK(view.out_edge(0, 0) == Arc{0, 0, 1});
  CHECK_FALSE(view.out_edge(0, 1));
  CHECK(view.in_edge(2, 0) == Arc{1, 1, 2});
  CHECK_FALSE(view.in_edge(0, 0));
  CHECK(view.query_count() == 4);
  CHECK_THROWS(g.out_edge(3, 0));
}

TEST_CASE("in-edge enumeration matches an independent transpose") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_digraph(10, 30, rng).graph;
    std::vector<std::multiset<Vertex>> transpose(10);
    for (auto [u, v] : testutil::raw_edges(g)) transpose[v].insert(u);
    for (Vertex v = 0; v < 10; ++v) {
      std::multiset<Vertex> seen;
      for (std::size_t i = 0;; ++i) {
        auto a = g.in_edge(v, i);
        if (!a) break;
        CHECK(a->head == v);
        seen.insert(a->tail);
      }
      CHECK(seen == transpose[v]);
    }
  }
}

TEST_CASE("reversal") {
  Graph one(2, {{0, 1}});
  CHECK(reverse_graph(one).arc(0) == Arc{0, 1, 0});
  Graph cyc(3, {{0, 1}, {1, 2}, {2, 0}});
  Graph rev = reverse_graph(cyc);
  CHECK(rev.arc(0) == Arc{0, 1, 0});
  CHECK(rev.arc(2) == Arc{2, 0, 2});
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    Graph g = random_digraph(8, 1 + rng() % 40, rng).graph;
    CHECK(reverse_graph(reverse_graph(g)) == g);
  }
}

namespace {

// Every out-edge the overlay reports, as (id, tail, head).
template <typename O>
std::set<std::tuple<EdgeId, Vertex, Vertex>> enumerate_out(const O& o, Vertex n) {
  std::set<std::tuple<EdgeId, Vertex, Vertex>> out;
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t i = 0;; ++i) {
      auto a = o.out_edge(v, i);
      if (!a) break;
      CHECK(a->tail == v);
      out.insert({a->id, a->tail, a->head});
    }
  }
  return out;
}

template <typename O>
std::set<std::tuple<EdgeId, Vertex, Vertex>> enumerate_in(const O& o, Vertex n) {
  std::set<std::tuple<EdgeId, Vertex, Vertex>> out;
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t i = 0;; ++i) {
      auto a = o.in_edge(v, i);
      if (!a) break;
      CHECK(a->head == v);
      out.insert({a->id, a->tail, a->head});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("overlay flips") {
  Graph g(3, {{0, 1}, {1, 2}});
  Overlay<Graph> o(g);
  const EdgeId path[] = {0};
  o.apply_path_reversal(path);
  CHECK(o.out_edge(1, 1) == Arc{0, 1, 0});
  CHECK_FALSE(o.out_edge(0, 0));
  o.apply_path_reversal(std::span<const EdgeId>(path));
  CHECK(o.out_edge(0, 0) == Arc{0, 0, 1});
  CHECK(o.reversed_count() == 0);
}

TEST_CASE("overlay enumeration equals the recomputed flipped graph") {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Vertex n = 9;
    Graph g = random_digraph(n, 25, rng).graph;
    Overlay<Graph> o(g);
    std::set<EdgeId> flipped;
    for (int step = 0; step < 30; ++step) {
      const EdgeId e = EdgeId(rng() % g.edge_count());
      o.flip(e);
      if (!flipped.erase(e)) flipped.insert(e);
      std::set<std::tuple<EdgeId, Vertex, Vertex>> expect;
      for (const Arc& a : g.arcs()) {
        if (flipped.contains(a.id)) {
          expect.insert({a.id, a.head, a.tail});
        } else {
          expect.insert({a.id, a.tail, a.head});
        }
      }
      CHECK(enumerate_out(o, n) == expect);
      CHECK(enumerate_in(o, n) == expect);
      // incidence is conserved per vertex
      for (Vertex v = 0; v < n; ++v) {
        std::size_t total = 0;
        for (std::size_t i = 0; o.out_edge(v, i); ++i) ++total;
        for (std::size_t i = 0; o.in_edge(v, i); ++i) ++total;
        CHECK(total == g.out_degree(v) + g.in_degree(v));
      }
    }
  }
}

TEST_CASE("path reversal keeps the undirected multiset") {
  Rng rng(9);
  Instance inst = planted_edge_component(4, 2, 60, rng);
  const Graph& g = inst.graph;
  Overlay<Graph> o(g);
  const auto before = testutil::undirected_multiset(testutil::raw_edges(g));
  for (int i = 0; i < 5; ++i) {
    // walk a random directed path in the current orientation
    std::vector<EdgeId> path;
    Vertex v = 0;
    std::set<Vertex> seen{v};
    for (int step = 0; step < 6; ++step) {
      std::vector<Arc> outs;
      for (std::size_t j = 0; auto a = o.out_edge(v, j); ++j) outs.push_back(*a);
      if (outs.empty()) break;
      const Arc a = outs[rng() % outs.size()];
      if (seen.contains(a.head)) break;
      seen.insert(a.head);
      path.push_back(a.id);
      v = a.head;
    }
    o.apply_path_reversal(path);
    std::vector<std::pair<Vertex, Vertex>> now;
    for (const Arc& a : g.arcs()) {
      const Arc c = o.arc(a.id);
      now.emplace_back(c.tail, c.head);
    }
    CHECK(testutil::undirected_multiset(now) == before);
  }
}

TEST_CASE("path reversal rejects broken paths") {
  Graph g(4, {{0, 1}, {2, 3}});
  Overlay<Graph> o(g);
  const EdgeId broken[] = {0, 1};
  CHECK_THROWS_AS(o.apply_path_reversal(broken), std::logic_error);
  CHECK(o.reversed_count() == 0);
}

TEST_CASE("counted view counts every probe") {
  Rng rng(2);
  Graph g = random_digraph(6, 12, rng).graph;
  CountedView<const Graph> view(g);
  std::size_t q = 0;
  for (int i = 0; i < 100; ++i) {
    const Vertex v = Vertex(rng() % 6);
    if (rng() % 2) {
      (void)view.out_edge(v, rng() % 5);
    } else {
      (void)view.in_edge(v, rng() % 5);
    }
    ++q;
    CHECK(view.query_count() == q);
  }
}

TEST_CASE("set measures") {
  Graph g(4, {{0, 1}, {1, 0}, {1, 2}, {3, 0}, {2, 2}});
  const std::vector<Vertex> s{0, 1};
  CHECK(edges_leaving(g, s) == std::vector<EdgeId>{2});
  CHECK(edges_entering(g, s) == std::vector<EdgeId>{3});
  CHECK(edge_size(g, s) == 2);
  CHECK(volume(g, s) == 3);
  CHECK(symmetric_volume(g, s) == 4);
  CHECK(out_boundary(g, s) == std::vector<Vertex>{2});
  const std::vector<Vertex> loop{2};
  CHECK(edge_size(g, loop) == 1);
  CHECK(edges_leaving(g, loop).empty());
}

TEST_CASE("bidirect and induced subgraph") {
  Graph u(3, {{0, 1}, {1, 2}});
  Graph b = bidirect(u);
  CHECK(b.edge_count() == 4);
  CHECK(b.arc(2) == Arc{2, 1, 2});
  CHECK(b.arc(3) == Arc{3, 2, 1});
  const std::vector<Vertex> keep{2, 1};
  Subgraph sub = induced_subgraph(b, keep);
  CHECK(sub.graph.vertex_count() == 2);
  CHECK(sub.graph.edge_count() == 2);
  CHECK(sub.original == keep);
}
