#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "localcut/generators.hpp"
#include "localcut/testers.hpp"

using namespace localcut;

namespace {

std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) d = std::max({d, g.out_degree(v), g.in_degree(v)});
  return d;
}

std::vector<std::vector<Vertex>> blocks(std::size_t count, std::size_t size) {
  std::vector<std::vector<Vertex>> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < size; ++j) out[i].push_back(Vertex(i * size + j));
  }
  return out;
}

TesterVerdict run(const Graph& g, ConnectivityProperty prop, const TesterConfig& cfg, Rng& rng) {
  return prop == ConnectivityProperty::edge ? test_k_edge_connectivity(g, cfg, rng)
                                            : test_k_vertex_connectivity(g, cfg, rng);
}

}  // namespace

TEST_CASE("doubling schedule") {
  // k / (eps * density) = 8
  auto s = doubling_schedule(2, 0.25, 1.0);
  REQUIRE(s.size() == 4);
  CHECK(s[0].gamma == 1);
  CHECK(s[1].gamma == 3);
  CHECK(s[2].gamma == 7);
  CHECK(s[3].gamma == 15);
  for (std::size_t i = 0; i < s.size(); ++i) {
    // ceil(20 * 2 * 3 / (2^i * 0.25))
    CHECK(s[i].samples == std::size_t(std::ceil(480.0 / std::ldexp(1.0, int(i) + 1))));
  }
  for (double eps : {0.01, 0.1, 0.3}) {
    for (double density : {1.0, 2.5, 7.0}) {
      for (std::size_t k = 1; k <= 4; ++k) {
        auto r = doubling_schedule(k, eps, density);
        const double ratio = double(k) / (eps * density);
        CHECK(r.size() == std::size_t(std::max(1.0, std::ceil(std::log2(2 * ratio) - 1e-9))));
        for (std::size_t i = 1; i < r.size(); ++i) {
          CHECK(r[i].samples <= (r[i - 1].samples + 1) / 2 + 1);
          CHECK(r[i].samples + 1 >= r[i - 1].samples / 2);
        }
        double total = 0, closed = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
          total += double(r[i].samples);
          closed += 20.0 * double(k) * std::max(1.0, std::log2(ratio)) /
                    (std::ldexp(1.0, int(i) + 1) * eps * density);
        }
        CHECK(total >= closed);
        CHECK(total <= closed + double(r.size()));
      }
    }
  }
  CHECK_THROWS(doubling_schedule(1, 0.0, 1.0));
}

TEST_CASE("local decisions on tiny graphs") {
  Rng rng(31);
  Graph k4 = complete_digraph(4).graph;
  for (Vertex s = 0; s < 4; ++s) {
    for (std::size_t gamma : {1u, 2u, 5u}) {
      for (bool rev : {false, true}) {
        for (auto model : {DegreeModel::unbounded, DegreeModel::bounded}) {
          CHECK_FALSE(local_decision_edge(k4, s, 3, gamma, model, 3.0, rev, rng).yes);
          CHECK_FALSE(local_decision_vertex(k4, s, 3, gamma, model, 3.0, rev, rng).yes);
        }
      }
    }
  }

  // vertex 0 isolated, the rest a triangle
  Graph iso(4, {{1, 2}, {2, 3}, {3, 1}});
  for (int t = 0; t < 20; ++t) {
    auto d = local_decision_edge(iso, 0, 1, 1, DegreeModel::unbounded, 1.0, false, rng);
    CHECK(d.yes);
    CHECK(d.witness.members == std::vector<Vertex>{0});
    CHECK(validate_witness(iso, 1, d.witness));
  }

  // Leaf of a bidirected star: {leaf} has the centre as its only boundary
  // vertex, a 1-vertex-out component, so the threshold is k = 2.
  Graph star = bidirect(Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
  for (int t = 0; t < 20; ++t) {
    auto d = local_decision_vertex(star, 3, 2, 1, DegreeModel::unbounded, 1.6, false, rng);
    CHECK(d.yes);
    CHECK(d.witness.members == std::vector<Vertex>{3});
    CHECK(d.witness.boundary == std::vector<Vertex>{0});
    CHECK(validate_witness(star, 2, d.witness));
    CHECK_FALSE(local_decision_vertex(star, 3, 1, 1, DegreeModel::unbounded, 1.6, false, rng).yes);
  }
}

TEST_CASE("planted component found at least five times in six") {
  Rng rng(32);
  std::size_t edge_hits = 0, vertex_hits = 0;
  const std::size_t trials = 600;
  for (std::size_t t = 0; t < trials; ++t) {
    Instance inst = planted_edge_component(4, 2, 200, rng);
    auto e = local_decision_edge(inst.graph, inst.source, 3, 4, DegreeModel::unbounded, 1.0,
                                 false, rng);
    REQUIRE_FALSE(e.exact);
    edge_hits += e.yes;
    if (e.yes) CHECK(validate_witness(inst.graph, 3, e.witness));

    Instance sep = planted_separator(2, 30, 2, 0.5, rng);
    auto v = local_decision_vertex(sep.graph, sep.planted[0], 3, 2, DegreeModel::unbounded, 1.0,
                                   false, rng);
    REQUIRE_FALSE(v.exact);
    vertex_hits += v.yes;
    if (v.yes) CHECK(validate_witness(sep.graph, 3, v.witness));
  }
  const double sigma = std::sqrt(5.0 / 36.0 / double(trials));
  CHECK(double(edge_hits) / trials >= 5.0 / 6.0 - 3 * sigma);
  CHECK(double(vertex_hits) / trials >= 5.0 / 6.0 - 3 * sigma);
}

TEST_CASE("witness validation") {
  Graph cyc = cycle_union(2, 3).graph;
  TesterWitness w{WitnessKind::edge_out, 0, {0, 1, 2}, {}, {}};
  CHECK(validate_witness(cyc, 1, w));
  w.members = {0, 1, 2, 3, 4, 5};
  CHECK_FALSE(validate_witness(cyc, 1, w));  // not proper
  w.members = {0, 1};
  CHECK_FALSE(validate_witness(cyc, 1, w));  // one edge leaves
  CHECK(validate_witness(cyc, 2, w));
  w.members = {1, 2};
  CHECK_FALSE(validate_witness(cyc, 2, w));  // source not inside
  CHECK(validate_witness(Graph(2, {{0, 1}}), 2,
                         TesterWitness{WitnessKind::too_few_vertices, 0, {}, {}, {}}));
  CHECK_FALSE(validate_witness(cyc, 2, TesterWitness{WitnessKind::too_few_vertices, 0, {}, {}, {}}));
}

TEST_CASE("farness lower bounds") {
  Graph cyc = cycle_union(50, 3).graph;
  CHECK(modification_lower_bound(cyc, blocks(50, 3), 2, ConnectivityProperty::edge) == 100);
  Graph cl = bidirect(clique_union(30, 4).graph);
  CHECK(modification_lower_bound(cl, blocks(30, 4), 3, ConnectivityProperty::vertex) == 90);
  CHECK_THROWS(modification_lower_bound(cl, {{0, 1}, {1, 2}}, 2, ConnectivityProperty::edge));
}

TEST_CASE("testers accept k-connected graphs") {
  Rng rng(33);
  std::vector<Graph> graphs{complete_digraph(3).graph, complete_digraph(4).graph,
                            bidirect(circulant(30, {1, 2}).graph),
                            bidirect(circulant(25, {1, 3, 5}).graph)};
  for (const Graph& g : graphs) {
    const std::size_t kappa = oracle::vertex_connectivity(Vertex(g.vertex_count()), testutil::raw_edges(g));
    for (std::size_t k = 1; k <= std::min<std::size_t>(kappa, 3); ++k) {
      for (auto model : {DegreeModel::unbounded, DegreeModel::bounded}) {
        TesterConfig cfg{k, 0.5, model, model == DegreeModel::bounded ? double(max_degree(g)) : 0.0};
        for (int t = 0; t < 3; ++t) {
          CHECK(test_k_edge_connectivity(g, cfg, rng).accept);
          CHECK(test_k_vertex_connectivity(g, cfg, rng).accept);
        }
      }
    }
  }
  // k + 1 vertices: the vertex tester still accepts a complete digraph
  TesterConfig three{3, 0.5, DegreeModel::unbounded, 0.0};
  CHECK(test_k_vertex_connectivity(complete_digraph(4).graph, three, rng).accept);
  auto small = test_k_vertex_connectivity(complete_digraph(3).graph, three, rng);
  CHECK_FALSE(small.accept);
  REQUIRE(small.witness);
  CHECK(small.witness->kind == WitnessKind::too_few_vertices);
}

TEST_CASE("testers reject far instances") {
  Rng rng(34);
  struct Cell {
    Graph g;
    std::vector<std::vector<Vertex>> parts;
    std::size_t k;
    ConnectivityProperty prop;
  };
  std::vector<Cell> cells{
      {cycle_union(50, 3).graph, blocks(50, 3), 2, ConnectivityProperty::edge},
      {cycle_union(50, 3).graph, blocks(50, 3), 3, ConnectivityProperty::edge},
      {bidirect(clique_union(30, 4).graph), blocks(30, 4), 2, ConnectivityProperty::vertex},
      {bidirect(clique_union(30, 4).graph), blocks(30, 4), 3, ConnectivityProperty::vertex},
  };
  for (const Cell& c : cells) {
    const double n = double(c.g.vertex_count());
    const std::size_t needed = modification_lower_bound(c.g, c.parts, c.k, c.prop);
    for (auto model : {DegreeModel::unbounded, DegreeModel::bounded}) {
      const double d = model == DegreeModel::bounded ? double(max_degree(c.g))
                                                     : double(c.g.edge_count()) / n;
      // the largest epsilon the count certifies, with a margin
      const double eps = 0.9 * double(needed) / (n * d);
      REQUIRE(double(needed) > eps * n * d);
      TesterConfig cfg{c.k, eps, model, d};
      std::size_t rejects = 0;
      for (int t = 0; t < 60; ++t) {
        TesterVerdict v = run(c.g, c.prop, cfg, rng);
        if (!v.accept) {
          ++rejects;
          REQUIRE(v.witness);
          CHECK(validate_witness(c.g, c.k, *v.witness));
        }
      }
      CHECK(rejects >= 40);
    }
  }
}

TEST_CASE("low-degree precheck") {
  // Dense graph with a sparse vertex 0: k <= eps * density / 2 triggers it.
  Graph dense = complete_digraph(12).graph;
  std::vector<std::pair<Vertex, Vertex>> edges = testutil::raw_edges(dense);
  std::erase_if(edges, [](auto e) { return e.first == 0 && e.second > 1; });
  Graph g(12, edges);
  Rng rng(35);
  TesterConfig cfg{2, 0.5, DegreeModel::unbounded, 0.0};
  auto v = test_k_edge_connectivity(g, cfg, rng);
  CHECK_FALSE(v.accept);
  REQUIRE(v.witness);
  CHECK(v.witness->kind == WitnessKind::low_degree);
  CHECK(validate_witness(g, 2, *v.witness));
}

TEST_CASE("query counts stay under the frozen bound") {
  // c fitted once on this grid (worst case near 6000) and frozen at 8000.
  Rng rng(36);
  for (Vertex n : {40u, 80u}) {
    Graph g = bidirect(circulant(n, {1, 2}).graph);
    const double dbar = double(g.edge_count()) / n;
    for (std::size_t k = 1; k <= 3; ++k) {
      for (double eps : {0.1, 0.2, 0.5}) {
        const double ratio = double(k) / (eps * dbar);
        const double bound = 8000.0 * ratio * ratio * double(k * k) * std::max(1.0, std::log2(ratio));
        TesterConfig cfg{k, eps, DegreeModel::unbounded, 0.0};
        CHECK(double(test_k_edge_connectivity(g, cfg, rng).queries) <= bound);
        CHECK(double(test_k_vertex_connectivity(g, cfg, rng).queries) <= bound);
      }
    }
  }
}
