// Command-line front end. Vertex ids on the command line and in outputs are
// 1-based, matching the edge-list format.
//
// Exit codes: 0 success / accept, 1 reject / cut found / nothing found,
// 2 usage or input errors.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "localcut/edge_cut.hpp"
#include "localcut/experiment.hpp"
#include "localcut/mkecs.hpp"
#include "localcut/oracles.hpp"
#include "localcut/testers.hpp"
#include "localcut/vertex_connectivity.hpp"
#include "localcut/vertex_cut.hpp"

using namespace localcut;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph read_graph(const std::string& path) {
  if (path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return load_edge_list(text);
  }
  return read_edge_list_file(path);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Vertex internal_vertex(std::size_t one_based, const Graph& g, const char* what) {
  if (one_based < 1 || one_based > g.vertex_count()) {
    throw UsageError(std::string(what) + " must be between 1 and " + std::to_string(g.vertex_count()));
  }
  return Vertex(one_based - 1);
}

json one_based(const std::vector<Vertex>& vs) {
  json out = json::array();
  for (Vertex v : vs) out.push_back(v + 1);
  return out;
}

json cut_json(const VertexCut& c) {
  return {{"L", one_based(c.left)}, {"M", one_based(c.separator)}, {"R", one_based(c.right)}};
}

json stats_json(const ConnectivityStats& s) {
  return {{"pair_samples", s.pair_samples}, {"flow_calls", s.flow_calls},
          {"edge_samples", s.edge_samples}, {"local_calls", s.local_calls},
          {"queries", s.queries},           {"probes", s.probes},
          {"used_fallback", s.used_fallback}};
}

json witness_json(const TesterWitness& w) {
  json out{{"kind", to_string(w.kind)}, {"source", w.source + 1}, {"members", one_based(w.members)}};
  if (!w.boundary.empty()) out["boundary"] = one_based(w.boundary);
  if (!w.cut_edges.empty()) {
    json ids = json::array();
    for (EdgeId e : w.cut_edges) ids.push_back(e + 1);
    out["cut_edges"] = ids;
  }
  return out;
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local cut detection, vertex connectivity, maximal k-edge-connected subgraphs "
               "and connectivity testers"};
  app.require_subcommand(1);
  int exit_code = 0;

  std::string graph_path;
  std::uint64_t seed = 1;
  std::size_t k = 1;
  std::size_t source = 1;

  // detect-edge-component
  auto* de = app.add_subcommand("detect-edge-component", "find a small k-edge-out component");
  std::size_t de_delta = 1;
  double de_p = 0.0;
  std::string de_mode = "expected";
  bool de_in = false;
  de->add_option("--graph", graph_path, "edge-list file, - for stdin")->required();
  de->add_option("--source", source, "start vertex (1-based)")->required();
  de->add_option("--k", k, "leaving-edge threshold")->required();
  de->add_option("--delta", de_delta, "edge-size budget")->required()->check(CLI::PositiveNumber);
  de->add_option("--p", de_p, "target success probability; 0 runs a single trial")
      ->check(CLI::Range(0.0, 0.999999999));
  de->add_option("--time-mode", de_mode)->check(CLI::IsMember({"expected", "worst_case"}));
  de->add_flag("--in", de_in, "look for a k-edge-in component instead");
  de->add_option("--seed", seed);
  de->callback([&] {
    Graph g = read_graph(graph_path);
    if (de_in) g = reverse_graph(g);
    const Vertex s = internal_vertex(source, g, "--source");
    const TimeMode mode = de_mode == "worst_case" ? TimeMode::worst_case : TimeMode::expected;
    ComponentResult r = de_p > 0.0 ? detect_component_param(g, s, k, de_delta, de_p, seed, mode)
                                   : detect_component(g, s, k, de_delta, seed);
    json out{{"found", r.found()},         {"members", one_based(r.members)},
             {"edge_size", r.edge_size},   {"leaving_edges", r.out_edges.size()},
             {"processed", r.processed_edges}, {"queries", r.queries_used},
             {"trials", r.trials_used},    {"seed", seed}};
    print(out);
    exit_code = r.found() ? 0 : 1;
  });

  // detect-vertex-component
  auto* dv = app.add_subcommand("detect-vertex-component", "find a small k-vertex-out component");
  std::size_t dv_delta = 1;
  double dv_p = 0.5;
  bool dv_symmetric = false, dv_in = false;
  dv->add_option("--graph", graph_path)->required();
  dv->add_option("--source", source)->required();
  dv->add_option("--k", k)->required();
  dv->add_option("--delta", dv_delta, "volume budget")->required()->check(CLI::PositiveNumber);
  dv->add_option("--p", dv_p, "target success probability")->check(CLI::Range(0.000001, 0.999999999));
  dv->add_flag("--symmetric", dv_symmetric, "budget counts restricted symmetric volume");
  dv->add_flag("--in", dv_in, "look for a k-vertex-in component instead");
  dv->add_option("--seed", seed);
  dv->callback([&] {
    Graph g = read_graph(graph_path);
    const Vertex s = internal_vertex(source, g, "--source");
    VertexComponentResult r = dv_in ? detect_vertex_in_component(g, s, k, dv_delta, dv_p, dv_symmetric, seed)
                                    : detect_vertex_out_component(g, s, k, dv_delta, dv_p, dv_symmetric, seed);
    json out{{"found", r.found()},
             {"members", one_based(r.members)},
             {"boundary", one_based(r.boundary)},
             {"volume", r.volume},
             {"symmetric_volume", r.symmetric_volume},
             {"processed", r.processed_edges},
             {"queries", r.queries_used},
             {"trials", r.trials_used},
             {"seed", seed}};
    print(out);
    exit_code = r.found() ? 0 : 1;
  });

  // vertex-connectivity
  auto* vc = app.add_subcommand("vertex-connectivity", "compute kappa, or decide kappa >= k");
  bool vc_undirected = false, vc_directed = false;
  std::size_t vc_k = 0;
  std::size_t vc_exact_threshold = 0;
  double vc_confidence = 2.0;
  vc->add_option("--graph", graph_path)->required();
  auto* vc_dir = vc->add_flag("--directed", vc_directed, "input is a digraph (default)");
  vc->add_flag("--undirected", vc_undirected, "input lists each undirected edge once")->excludes(vc_dir);
  vc->add_option("--k", vc_k, "decide kappa >= k instead of computing kappa");
  vc->add_option("--confidence", vc_confidence, "sampling constant c")->check(CLI::PositiveNumber);
  vc->add_option("--exact-fallback-threshold", vc_exact_threshold,
                 "use the exact pairwise computation when n is at most this");
  vc->add_option("--seed", seed);
  vc->callback([&] {
    const Graph input = read_graph(graph_path);
    const Graph g = vc_undirected ? bidirect(input) : input;
    Rng rng(seed);
    ConnectivityOptions opts;
    opts.confidence = vc_confidence;
    if (vc_k > 0) {
      ConnectivityVerdict v = is_connectivity_at_least(g, vc_k, rng, opts);
      json out{{"k", vc_k}, {"stats", stats_json(v.stats)}};
      out["decision"] = v.decision == ConnectivityDecision::cut_found        ? "cut_found"
                        : v.decision == ConnectivityDecision::too_few_vertices ? "too_few_vertices"
                                                                             : "probably_at_least_k";
      out["witness"] = v.cut ? cut_json(*v.cut) : json(nullptr);
      print(out);
      exit_code = v.at_least_k() ? 0 : 1;
      return;
    }
    ConnectivityResult r;
    if (g.vertex_count() <= vc_exact_threshold) {
      r = fallback_exact(g);
    } else {
      r = vc_undirected ? vertex_connectivity_undirected(input, rng, opts)
                        : vertex_connectivity_directed(g, rng, opts);
    }
    print({{"kappa", r.kappa},
           {"witness", r.witness ? cut_json(*r.witness) : json(nullptr)},
           {"stats", stats_json(r.stats)}});
  });

  // mkecs
  auto* mk = app.add_subcommand("mkecs", "maximal k-edge-connected subgraphs");
  bool mk_undirected = false, mk_directed = false, mk_baseline = false;
  std::size_t mk_delta = 0, mk_gamma = 0;
  mk->add_option("--graph", graph_path)->required();
  mk->add_option("--k", k)->required();
  auto* mk_dir = mk->add_flag("--directed", mk_directed, "input is a digraph (default)");
  mk->add_flag("--undirected", mk_undirected, "input lists each undirected edge once")->excludes(mk_dir);
  mk->add_option("--delta", mk_delta, "directed detection budget; 0 picks ceil(sqrt(m/k))");
  mk->add_option("--gamma", mk_gamma, "undirected vertex-size parameter; 0 picks ceil(sqrt(n)/k)");
  mk->add_flag("--baseline", mk_baseline, "run the exact recursive algorithm instead");
  mk->add_option("--seed", seed);
  mk->callback([&] {
    const Graph input = read_graph(graph_path);
    Rng rng(seed);
    Decomposition d;
    if (mk_baseline) {
      d = baseline_mkecs(mk_undirected ? bidirect(input) : input, k);
    } else if (mk_undirected) {
      d = mkecs_undirected(input, k, mk_gamma, rng);
    } else {
      d = mkecs_directed(input, k, mk_delta, rng);
    }
    for (const auto& c : d.classes) {
      for (std::size_t i = 0; i < c.size(); ++i) std::cout << (i ? " " : "") << c[i] + 1;
      std::cout << '\n';
    }
  });

  // test-connectivity
  auto* tc = app.add_subcommand("test-connectivity", "one-sided k-connectivity tester");
  std::string tc_property = "edge", tc_model = "unbounded";
  double tc_eps = 0.1, tc_degree = 0.0;
  std::size_t tc_trials = 1;
  bool tc_undirected = false;
  tc->add_option("--graph", graph_path)->required();
  tc->add_option("--property", tc_property)->check(CLI::IsMember({"edge", "vertex"}));
  tc->add_option("--k", k)->required();
  tc->add_option("--epsilon", tc_eps)->check(CLI::Range(0.000001, 1.0));
  tc->add_option("--model", tc_model)->check(CLI::IsMember({"bounded", "unbounded"}));
  tc->add_option("--degree", tc_degree, "degree bound d, or average degree; 0 derives it");
  tc->add_option("--trials", tc_trials)->check(CLI::PositiveNumber);
  tc->add_flag("--undirected", tc_undirected, "input lists each undirected edge once");
  tc->add_option("--seed", seed);
  tc->callback([&] {
    const Graph input = read_graph(graph_path);
    const Graph g = tc_undirected ? bidirect(input) : input;
    TesterConfig cfg;
    cfg.k = k;
    cfg.epsilon = tc_eps;
    cfg.model = tc_model == "bounded" ? DegreeModel::bounded : DegreeModel::unbounded;
    cfg.degree = tc_degree;
    if (cfg.model == DegreeModel::bounded && cfg.degree == 0.0) {
      std::size_t d = 0;
      for (Vertex v = 0; v < g.vertex_count(); ++v) d = std::max({d, g.out_degree(v), g.in_degree(v)});
      cfg.degree = double(std::max<std::size_t>(d, 1));
    }
    json runs = json::array();
    std::size_t rejects = 0;
    for (std::size_t t = 0; t < tc_trials; ++t) {
      Rng rng(derive_seed(seed, t));
      TesterVerdict v = tc_property == "vertex" ? test_k_vertex_connectivity(g, cfg, rng)
                                                : test_k_edge_connectivity(g, cfg, rng);
      rejects += !v.accept;
      runs.push_back({{"verdict", v.accept ? "accept" : "reject"},
                      {"witness", v.witness ? witness_json(*v.witness) : json(nullptr)},
                      {"queries", v.queries},
                      {"samples", v.samples},
                      {"local_calls", v.local_calls}});
    }
    print({{"property", tc_property}, {"k", k}, {"epsilon", tc_eps}, {"model", tc_model},
           {"degree", cfg.degree}, {"rejects", rejects}, {"trials", runs}});
    exit_code = rejects ? 1 : 0;
  });

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance as an edge list");
  std::string gen_spec;
  std::string gen_certificate;
  gen->add_option("--spec", gen_spec, "generator spec as JSON text, or @file")->required();
  gen->add_option("--certificate", gen_certificate, "also write the planted structure as JSON here");
  gen->add_option("--seed", seed);
  gen->callback([&] {
    const json spec = json::parse(gen_spec.starts_with("@") ? slurp(gen_spec.substr(1)) : gen_spec);
    Rng rng(seed);
    Instance inst = generate(spec, rng, "spec");
    std::cout << "# " << inst.family << (inst.undirected ? " (undirected, each edge once)" : "") << '\n'
              << to_edge_list(inst.graph);
    if (!gen_certificate.empty()) {
      std::ofstream out(gen_certificate);
      if (!out) throw UsageError("cannot write " + gen_certificate);
      out << json{{"family", inst.family},
                  {"undirected", inst.undirected},
                  {"source", inst.source + 1},
                  {"planted", one_based(inst.planted)},
                  {"separator", one_based(inst.separator)},
                  {"planted_boundary", inst.planted_boundary},
                  {"certified", certify(inst)}}
                 .dump(2)
          << '\n';
    }
  });

  // oracle
  auto* orc = app.add_subcommand("oracle", "brute-force reference answers for small graphs");
  std::string orc_what;
  bool orc_undirected = false;
  orc->add_option("--what", orc_what)
      ->required()
      ->check(CLI::IsMember({"min-out-components", "vertex-connectivity", "min-edge-cut"}));
  orc->add_option("--graph", graph_path)->required();
  orc->add_option("--source", source);
  orc->add_option("--k", k);
  orc->add_flag("--undirected", orc_undirected, "input lists each undirected edge once");
  orc->callback([&] {
    const Graph input = read_graph(graph_path);
    const Graph g = orc_undirected ? bidirect(input) : input;
    oracle::EdgeList edges;
    for (const Arc& a : g.arcs()) edges.emplace_back(a.tail, a.head);
    const Vertex n = Vertex(g.vertex_count());
    if (orc_what == "min-out-components") {
      const Vertex s = internal_vertex(source, g, "--source");
      json sets = json::array();
      for (const auto& c : oracle::min_edge_out_components(n, edges, s, k)) sets.push_back(one_based(c));
      print({{"source", source}, {"k", k}, {"components", sets}});
      exit_code = sets.empty() ? 1 : 0;
    } else if (orc_what == "vertex-connectivity") {
      print({{"kappa", oracle::vertex_connectivity(n, edges)}});
    } else {
      print({{"min_edge_cut", oracle::min_directed_edge_cut(n, edges)}});
    }
  });

  // experiment
  auto* ex = app.add_subcommand("experiment", "run a JSON-configured experiment");
  std::string ex_config, ex_out, ex_csv, ex_ndjson;
  bool ex_no_timing = false;
  std::size_t ex_threads = 0;
  ex->add_option("--config", ex_config, "config file")->required();
  ex->add_option("--out", ex_out, "report file (default stdout)");
  ex->add_option("--csv", ex_csv, "per-trial CSV file");
  ex->add_option("--ndjson", ex_ndjson, "per-trial records, one JSON object per line");
  ex->add_option("--threads", ex_threads, "override the config's worker count");
  ex->add_flag("--no-timing", ex_no_timing, "drop wall-clock data so reruns compare byte for byte");
  ex->callback([&] {
    json config = json::parse(slurp(ex_config));
    if (ex_threads > 0 && config.is_object()) config["threads"] = ex_threads;
    json report = run_experiment(config);
    if (ex_no_timing) report.erase("timing");
    const std::string text = report.dump(2) + "\n";
    if (ex_out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(ex_out);
      if (!out) throw UsageError("cannot write " + ex_out);
      out << text;
    }
    if (!ex_csv.empty()) {
      std::ofstream out(ex_csv);
      if (!out) throw UsageError("cannot write " + ex_csv);
      out << trials_csv(report);
    }
    if (!ex_ndjson.empty()) {
      std::ofstream out(ex_ndjson);
      if (!out) throw UsageError("cannot write " + ex_ndjson);
      out << trials_ndjson(report);
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const GraphFormatError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const oracle::GuardError& e) {
    std::cerr << "oracle guard: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "json error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
