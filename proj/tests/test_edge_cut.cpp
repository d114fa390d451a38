#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "localcut/edge_cut.hpp"
#include "localcut/generators.hpp"

using namespace localcut;

TEST_CASE("budgeted dfs basics") {
  Graph lone(1, std::initializer_list<std::pair<Vertex, Vertex>>{});
  {
    Overlay<Graph> o(lone);
    CountedView<Overlay<Graph>> view(o);
    DfsResult r = budgeted_dfs(view, 0, 5);
    CHECK(r.processed.empty());
    CHECK(r.visited == std::vector<Vertex>{0});
    CHECK(r.completed);
  }
  Graph cyc(3, {{0, 1}, {1, 2}, {2, 0}});
  {
    Overlay<Graph> o(cyc);
    CountedView<Overlay<Graph>> view(o);
    DfsResult r = budgeted_dfs(view, 0, 2);
    CHECK(r.processed.size() == 2);
    CHECK_FALSE(r.completed);
  }
  {
    // exhausting reachability exactly at the budget is not a completion
    Overlay<Graph> o(cyc);
    CountedView<Overlay<Graph>> view(o);
    CHECK_FALSE(budgeted_dfs(view, 0, 3).completed);
    CHECK(budgeted_dfs(view, 0, 4).completed);
  }
}

TEST_CASE("budgeted dfs reaches what an independent BFS reaches") {
  Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    // random DAG: edges only from lower to higher ids
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < 20; ++i) {
      Vertex a = Vertex(rng() % 12), b = Vertex(rng() % 12);
      if (a == b) continue;
      edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    Graph g(12, edges);
    const Vertex s = Vertex(rng() % 12);
    Overlay<Graph> o(g);
    CountedView<Overlay<Graph>> view(o);
    DfsResult r = budgeted_dfs(view, s, 10 * std::max<std::size_t>(1, g.edge_count()));
    CHECK(r.completed);
    auto reach = oracle::reachable(12, testutil::raw_edges(g), s);
    std::set<Vertex> expect;
    for (Vertex v = 0; v < 12; ++v) {
      if (reach[v]) expect.insert(v);
    }
    CHECK(std::set<Vertex>(r.visited.begin(), r.visited.end()) == expect);
    // every processed endpoint is s or has a tree parent
    for (const auto& pe : r.processed) {
      CHECK((pe.arc.head == s || r.tree_parent.contains(pe.arc.head)));
    }
  }
}

TEST_CASE("detect_component small cases") {
  Graph lone(1, std::initializer_list<std::pair<Vertex, Vertex>>{});
  CHECK(detect_component(lone, 0, 0, 1, 1).members == std::vector<Vertex>{0});
  Graph path(3, {{0, 1}, {1, 2}});
  ComponentResult r = detect_component(path, 0, 0, 2, 1);
  CHECK(r.members == std::vector<Vertex>{0, 1, 2});
  CHECK(r.edge_size == 2);
  CHECK(r.out_edges.empty());
  CHECK(r.seed == 1);
  // delta below the path length: the final search overruns
  CHECK_FALSE(detect_component(path, 0, 0, 1, 1).found());
}

TEST_CASE("repetition counts") {
  CHECK(repetitions_for(0.5) == 1);
  CHECK(repetitions_for(15.0 / 16.0) == 4);
  CHECK(repetitions_for(0.0) == 0);
  CHECK(repetitions_for(0.75, TimeMode::worst_case) == 5);  // log_{4/3} 4 = 4.82
  CHECK_THROWS(repetitions_for(1.0));
  Graph g(2, {{0, 1}, {1, 0}});
  CHECK(detect_component_param(g, 0, 1, 1, 0.5, 3).trials_used == 1);
}

namespace {

Instance spec_planted(std::uint64_t seed) {
  Rng rng(seed);
  return planted_edge_component(4, 1, 300, rng);
}

}  // namespace

TEST_CASE("planted instance: success rate and soundness") {
  Instance inst = spec_planted(99);
  REQUIRE(certify(inst));
  const Graph& g = inst.graph;
  const std::size_t k = 1, delta = 4, trials = 2000;
  std::size_t hits = 0;
  for (std::uint64_t seed = 0; seed < trials; ++seed) {
    ComponentResult r = detect_component(g, 0, k, delta, derive_seed(5, seed));
    CHECK(r.processed_edges <= k * round_budget(k, delta) + delta + 1);
    if (!r.found()) continue;
    ++hits;
    CHECK(verify_k_edge_out(g, r.members, k));
    CHECK(r.edge_size <= edge_size_bound(k, delta));
    CHECK(std::binary_search(r.members.begin(), r.members.end(), Vertex(0)));
  }
  const double sigma = std::sqrt(0.25 / double(trials));
  CHECK(double(hits) / trials >= 0.5 - 3 * sigma);
}

TEST_CASE("amplified success on the planted instance") {
  Instance inst = spec_planted(100);
  const Graph& g = inst.graph;
  const double n = g.vertex_count();
  const double p = 1.0 - 1.0 / (n * n * n);
  std::size_t hits = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    ComponentResult r = detect_component_param(g, 0, 1, 4, p, derive_seed(6, seed));
    hits += r.found();
  }
  CHECK(testutil::wilson_lower(hits, 500, 2.576) >= 0.99 - 0.02);
  CHECK(hits >= 495);
}

TEST_CASE("worst-case mode stays sound") {
  Instance inst = spec_planted(101);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    ComponentResult r = detect_component_param(inst.graph, 0, 1, 4, 0.9, seed, TimeMode::worst_case);
    if (r.found()) CHECK(verify_k_edge_out(inst.graph, r.members, 1));
  }
}

TEST_CASE("verify_k_edge_out") {
  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  const std::vector<Vertex> all{0, 1, 2, 3}, s{0};
  CHECK(verify_k_edge_out(star, all, 0));
  CHECK_FALSE(verify_k_edge_out(star, s, 2));
  CHECK(verify_k_edge_out(star, s, 3));
  CHECK_THROWS(verify_k_edge_out(star, std::vector<Vertex>{}, 1));
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    Graph g = random_digraph(10, 25, rng).graph;
    std::vector<Vertex> u;
    for (Vertex v = 0; v < 10; ++v) {
      if (rng() % 2) u.push_back(v);
    }
    if (u.empty()) u.push_back(0);
    const std::size_t k = rng() % 6;
    const std::size_t leaving = oracle::leaving_count(10, testutil::raw_edges(g), u);
    CHECK(verify_k_edge_out(g, u, k) == (leaving <= k));
  }
}

TEST_CASE("minimality and soundness on small graphs") {
  Rng rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const Vertex n = Vertex(2 + rng() % 8);
    const std::size_t m = rng() % (std::size_t(n) * (n - 1) + 1);
    Graph g = random_digraph(n, m, rng).graph;
    const auto edges = testutil::raw_edges(g);
    const std::size_t k = rng() % 4;
    const std::size_t delta = 1 + rng() % 12;
    const Vertex s = Vertex(rng() % n);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      ComponentResult r = detect_component(g, s, k, delta, seed);
      if (!r.found()) continue;
      CHECK(r.out_edges.size() <= k);
      CHECK(oracle::leaving_count(n, edges, r.members) == r.out_edges.size());
      CHECK(r.edge_size <= edge_size_bound(k, delta));
      CHECK(oracle::is_minimal_out_component(n, edges, s, r.members));
    }
  }
}

TEST_CASE("query counts stay within the processed-edge budget") {
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_strongly_connected(15, 15 + rng() % 100, rng).graph;
    const std::size_t k = rng() % 4, delta = 1 + rng() % 10;
    ComponentResult r = detect_component(g, Vertex(rng() % 15), k, delta, rng());
    CHECK(r.processed_edges <= k * round_budget(k, delta) + delta + 1);
    CHECK(r.queries_used <= 2 * r.processed_edges + k + 1);
  }
}

TEST_CASE("fewer edges leave the reachable set after each reversal") {
  // |E_G(S, V-S)| - |E_{G_i}(S, V-S)| equals the number of chosen paths
  // that end outside S, where S is what s reaches in G_i.
  Rng rng(51);
  std::size_t checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Vertex n = 8;
    Graph g = random_strongly_connected(n, 8 + rng() % 30, rng).graph;
    const std::size_t k = 1 + rng() % 3, delta = 1 + rng() % 4;
    DetectionTrace trace;
    detect_component(g, 0, k, delta, rng(), &trace);
    Overlay<Graph> o(g);
    for (std::size_t i = 0; i < trace.rounds.size(); ++i) {
      if (trace.rounds[i].completed) break;
      o.apply_path_reversal(trace.rounds[i].path);
      oracle::EdgeList now;
      for (const Arc& a : g.arcs()) {
        const Arc c = o.arc(a.id);
        now.emplace_back(c.tail, c.head);
      }
      const auto reach = oracle::reachable(n, now, 0);
      std::vector<Vertex> S;
      for (Vertex v = 0; v < n; ++v) {
        if (reach[v]) S.push_back(v);
      }
      const std::size_t before = oracle::leaving_count(n, testutil::raw_edges(g), S);
      const std::size_t after = oracle::leaving_count(n, now, S);
      std::size_t outside = 0;
      for (std::size_t j = 0; j <= i; ++j) outside += !reach[trace.rounds[j].path_end];
      CHECK(before - after == outside);
      ++checked;
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("first-round sample is uniform over the processed edges") {
  // On a dense graph the first search is seed independent, so the sampled
  // position is a direct read of the sampler.
  Rng rng(61);
  Graph g = random_strongly_connected(30, 400, rng).graph;
  const std::size_t k = 1, delta = 9;
  const std::size_t M = round_budget(k, delta);
  DetectionTrace probe;
  detect_component(g, 0, k, delta, 0, &probe);
  REQUIRE(probe.rounds.size() >= 1);
  REQUIRE(probe.rounds[0].processed == M);
  // position of each edge inside F_0
  Overlay<Graph> o(g);
  CountedView<Overlay<Graph>> view(o);
  DfsResult f0 = budgeted_dfs(view, 0, M);
  std::vector<std::size_t> count(M, 0);
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) {
    DetectionTrace t;
    detect_component(g, 0, k, delta, derive_seed(77, i), &t);
    const EdgeId e = t.rounds[0].sampled.arc.id;
    std::size_t pos = 0;
    while (f0.processed[pos].arc.id != e) ++pos;
    ++count[pos];
  }
  double chi2 = 0;
  const double expect = double(draws) / M;
  for (auto c : count) chi2 += (c - expect) * (c - expect) / expect;
  // 19 degrees of freedom, 0.999 quantile
  CHECK(chi2 < 43.82);
}

TEST_CASE("delta below k is accepted") {
  Graph g(3, {{0, 1}, {1, 2}, {2, 0}, {0, 2}});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    ComponentResult r = detect_component(g, 0, 3, 1, seed);
    if (r.found()) CHECK(verify_k_edge_out(g, r.members, 3));
  }
}
