#include "localcut/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "localcut/edge_cut.hpp"
#include "localcut/mkecs.hpp"
#include "localcut/oracles.hpp"
#include "localcut/testers.hpp"
#include "localcut/vertex_connectivity.hpp"
#include "localcut/vertex_cut.hpp"

namespace localcut {

using nlohmann::json;

namespace {

constexpr double kZ99 = 2.5758293035489004;

// Typed access to one JSON object with path-qualified errors. finish()
// rejects keys nobody asked for.
class Fields {
 public:
  Fields(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_, "expected an object");
  }

  std::string at(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  bool has(const std::string& key) const { return j_.contains(key); }

  std::uint64_t uint(const std::string& key, std::optional<std::uint64_t> fallback = {}) {
    const json* v = find(key, fallback.has_value());
    if (!v) return *fallback;
    if (!v->is_number_unsigned() && !(v->is_number_integer() && v->get<std::int64_t>() >= 0)) {
      throw ConfigError(at(key), "expected a non-negative integer");
    }
    return v->get<std::uint64_t>();
  }

  double real(const std::string& key, std::optional<double> fallback = {}) {
    const json* v = find(key, fallback.has_value());
    if (!v) return *fallback;
    if (!v->is_number()) throw ConfigError(at(key), "expected a number");
    return v->get<double>();
  }

  bool flag(const std::string& key, std::optional<bool> fallback = {}) {
    const json* v = find(key, fallback.has_value());
    if (!v) return *fallback;
    if (!v->is_boolean()) throw ConfigError(at(key), "expected true or false");
    return v->get<bool>();
  }

  std::string text(const std::string& key, std::optional<std::string> fallback = {}) {
    const json* v = find(key, fallback.has_value());
    if (!v) return *fallback;
    if (!v->is_string()) throw ConfigError(at(key), "expected a string");
    return v->get<std::string>();
  }

  std::string choice(const std::string& key, std::initializer_list<const char*> options,
                     std::optional<std::string> fallback = {}) {
    std::string s = text(key, std::move(fallback));
    for (const char* o : options) {
      if (s == o) return s;
    }
    std::string list;
    for (const char* o : options) list += (list.empty() ? "" : ", ") + std::string(o);
    throw ConfigError(at(key), "expected one of " + list + ", got \"" + s + "\"");
  }

  const json& raw(const std::string& key) { return *find(key, false); }

  void finish() const {
    for (const auto& [key, value] : j_.items()) {
      if (!used_.contains(key)) throw ConfigError(at(key), "unknown field");
    }
  }

 private:
  const json* find(const std::string& key, bool optional) {
    used_.insert(key);
    auto it = j_.find(key);
    if (it == j_.end() || it->is_null()) {
      if (optional) return nullptr;
      throw ConfigError(at(key), "missing required field");
    }
    return &*it;
  }

  const json& j_;
  std::string path_;
  std::set<std::string> used_;
};

Vertex as_vertex(Fields& f, const std::string& key, std::optional<std::uint64_t> fallback = {}) {
  const std::uint64_t v = f.uint(key, fallback);
  if (v > 1'000'000'000ULL) throw ConfigError(f.at(key), "too large");
  return Vertex(v);
}

double probability(Fields& f, const std::string& key, std::optional<double> fallback,
                   bool allow_zero) {
  const double p = f.real(key, fallback);
  if (!(p < 1.0) || p < 0.0 || (!allow_zero && p == 0.0)) {
    throw ConfigError(f.at(key), allow_zero ? "expected 0 <= p < 1" : "expected 0 < p < 1");
  }
  return p;
}

std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) d = std::max({d, g.out_degree(v), g.in_degree(v)});
  return d;
}

// The graph the algorithms see: undirected instances become antiparallel pairs.
Graph working_graph(const Instance& inst) {
  return inst.undirected ? bidirect(inst.graph) : inst.graph;
}

json rate_summary(std::size_t hits, std::size_t trials) {
  json out;
  out["count"] = hits;
  out["rate"] = trials ? double(hits) / double(trials) : 0.0;
  auto [lo, hi] = wilson_interval(hits, trials, kZ99);
  out["ci99"] = {lo, hi};
  return out;
}

struct Stat {
  double sum = 0;
  double max = 0;
  std::size_t n = 0;
  void add(double x) {
    sum += x;
    max = n ? std::max(max, x) : x;
    ++n;
  }
  json to_json() const { return {{"mean", n ? sum / double(n) : 0.0}, {"max", max}}; }
};

// A single experiment kind: parses its params once, then answers each trial.
class Kind {
 public:
  virtual ~Kind() = default;
  virtual json trial(const Instance& inst, Rng& rng) const = 0;
  virtual json summarize(const std::vector<json>& trials) const = 0;
};

Vertex pick_source(const std::string& mode, std::optional<Vertex> fixed, const Instance& inst,
                   const Graph& g, Rng& rng) {
  if (fixed) {
    if (*fixed >= g.vertex_count()) throw ConfigError("params.source", "vertex out of range");
    return *fixed;
  }
  if (mode == "random") {
    return std::uniform_int_distribution<Vertex>(0, Vertex(g.vertex_count() - 1))(rng);
  }
  return inst.source;
}

struct SourceChoice {
  std::string mode = "planted";
  std::optional<Vertex> vertex;
};

SourceChoice parse_source(Fields& f) {
  SourceChoice s;
  if (!f.has("source")) return s;
  const json& v = f.raw("source");
  if (v.is_string()) {
    s.mode = f.choice("source", {"planted", "random"});
  } else {
    s.vertex = as_vertex(f, "source");
  }
  return s;
}

class EdgeDetection : public Kind {
 public:
  explicit EdgeDetection(Fields& f) {
    k_ = f.uint("k");
    delta_ = f.uint("delta");
    if (delta_ == 0) throw ConfigError(f.at("delta"), "must be at least 1");
    p_ = probability(f, "p", 0.0, true);
    worst_ = f.choice("time_mode", {"expected", "worst_case"}, "expected") == "worst_case";
    source_ = parse_source(f);
  }

  json trial(const Instance& inst, Rng& rng) const override {
    const Graph g = working_graph(inst);
    const Vertex s = pick_source(source_.mode, source_.vertex, inst, g, rng);
    const TimeMode mode = worst_ ? TimeMode::worst_case : TimeMode::expected;
    const std::uint64_t seed = rng();
    ComponentResult r = p_ > 0.0 ? detect_component_param(g, s, k_, delta_, p_, seed, mode)
                                 : detect_component(g, s, k_, delta_, seed);
    const std::size_t calls = p_ > 0.0 ? repetitions_for(p_, mode) : 1;
    const bool sound = !r.found() || (verify_k_edge_out(g, r.members, k_) &&
                                      r.edge_size <= edge_size_bound(k_, delta_));
    return {{"source", s},
            {"found", r.found()},
            {"size", r.members.size()},
            {"edge_size", r.edge_size},
            {"processed", r.processed_edges},
            {"queries", r.queries_used},
            {"trials_used", r.trials_used},
            {"processed_bound", calls * trial_edge_budget(k_, delta_)},
            {"sound", sound}};
  }

  json summarize(const std::vector<json>& trials) const override {
    std::size_t found = 0, violations = 0, unsound = 0;
    Stat processed, queries;
    for (const json& t : trials) {
      found += t["found"].get<bool>();
      unsound += !t["sound"].get<bool>();
      violations += t["processed"].get<std::size_t>() > t["processed_bound"].get<std::size_t>();
      processed.add(t["processed"].get<double>());
      queries.add(t["queries"].get<double>());
    }
    return {{"success", rate_summary(found, trials.size())},
            {"processed", processed.to_json()},
            {"processed_bound_per_call", trial_edge_budget(k_, delta_)},
            {"budget_violations", violations},
            {"soundness_violations", unsound},
            {"queries", queries.to_json()}};
  }

 private:
  std::size_t k_ = 0, delta_ = 1;
  double p_ = 0.0;
  bool worst_ = false;
  SourceChoice source_;
};

class VertexDetection : public Kind {
 public:
  explicit VertexDetection(Fields& f) {
    k_ = f.uint("k");
    delta_ = f.uint("delta");
    if (delta_ == 0) throw ConfigError(f.at("delta"), "must be at least 1");
    p_ = probability(f, "p", 0.5, false);
    symmetric_ = f.flag("symmetric", false);
    in_ = f.choice("orientation", {"out", "in"}, "out") == "in";
    source_ = parse_source(f);
  }

  json trial(const Instance& inst, Rng& rng) const override {
    const Graph g = working_graph(inst);
    const Vertex s = pick_source(source_.mode, source_.vertex, inst, g, rng);
    const std::uint64_t seed = rng();
    VertexComponentResult r = in_ ? detect_vertex_in_component(g, s, k_, delta_, p_, symmetric_, seed)
                                  : detect_vertex_out_component(g, s, k_, delta_, p_, symmetric_, seed);
    const std::size_t volume = symmetric_ ? r.symmetric_volume : r.volume;
    const bool sound = !r.found() || (r.boundary.size() <= k_ &&
                                      volume <= vertex_volume_bound(k_, delta_));
    return {{"source", s},
            {"found", r.found()},
            {"size", r.members.size()},
            {"boundary", r.boundary.size()},
            {"volume", volume},
            {"processed", r.processed_edges},
            {"queries", r.queries_used},
            {"trials_used", r.trials_used},
            {"sound", sound}};
  }

  json summarize(const std::vector<json>& trials) const override {
    std::size_t found = 0, unsound = 0;
    Stat queries;
    for (const json& t : trials) {
      found += t["found"].get<bool>();
      unsound += !t["sound"].get<bool>();
      queries.add(t["queries"].get<double>());
    }
    return {{"success", rate_summary(found, trials.size())},
            {"volume_bound", vertex_volume_bound(k_, delta_)},
            {"soundness_violations", unsound},
            {"queries", queries.to_json()}};
  }

 private:
  std::size_t k_ = 0, delta_ = 1;
  double p_ = 0.5;
  bool symmetric_ = false, in_ = false;
  SourceChoice source_;
};

class Connectivity : public Kind {
 public:
  explicit Connectivity(Fields& f) {
    opts_.confidence = f.real("confidence", 2.0);
    if (!(opts_.confidence > 0.0)) throw ConfigError(f.at("confidence"), "must be positive");
    opts_.local_success = probability(f, "local_success", 0.0, true);
    oracle_limit_ = f.uint("oracle_max_n", 64);
  }

  json trial(const Instance& inst, Rng& rng) const override {
    const Graph g = working_graph(inst);
    ConnectivityResult r = inst.undirected ? vertex_connectivity_undirected(inst.graph, rng, opts_)
                                           : vertex_connectivity_directed(g, rng, opts_);
    json t{{"n", g.vertex_count()},
           {"m", g.edge_count()},
           {"kappa", r.kappa},
           {"witness_size", r.witness ? json(r.witness->size()) : json(nullptr)},
           {"witness_valid", !r.witness || is_valid_vertex_cut(g, *r.witness)},
           {"probes", r.stats.probes},
           {"flow_calls", r.stats.flow_calls},
           {"local_calls", r.stats.local_calls},
           {"queries", r.stats.queries},
           {"fallback", r.stats.used_fallback}};
    if (g.vertex_count() <= oracle_limit_ && g.vertex_count() <= 64) {
      oracle::EdgeList edges;
      for (const Arc& a : g.arcs()) edges.emplace_back(a.tail, a.head);
      const std::size_t want = oracle::vertex_connectivity(Vertex(g.vertex_count()), edges);
      t["oracle_kappa"] = want;
      t["match"] = want == r.kappa;
    } else {
      t["oracle_kappa"] = nullptr;
      t["match"] = nullptr;
    }
    return t;
  }

  json summarize(const std::vector<json>& trials) const override {
    std::size_t checked = 0, mismatches = 0, invalid = 0;
    Stat kappa, queries;
    for (const json& t : trials) {
      if (!t["match"].is_null()) {
        ++checked;
        mismatches += !t["match"].get<bool>();
      }
      invalid += !t["witness_valid"].get<bool>();
      kappa.add(t["kappa"].get<double>());
      queries.add(t["queries"].get<double>());
    }
    return {{"oracle_checked", checked},
            {"mismatches", mismatches},
            {"invalid_witnesses", invalid},
            {"kappa", kappa.to_json()},
            {"queries", queries.to_json()}};
  }

 private:
  ConnectivityOptions opts_;
  std::size_t oracle_limit_ = 64;
};

class Mkecs : public Kind {
 public:
  explicit Mkecs(Fields& f) {
    k_ = f.uint("k");
    budget_ = f.has("gamma") ? f.uint("gamma") : f.uint("delta", 0);
    baseline_ = f.flag("check_baseline", true);
  }

  json trial(const Instance& inst, Rng& rng) const override {
    const Graph g = working_graph(inst);
    MkecsStats stats;
    Decomposition d = inst.undirected ? mkecs_undirected(inst.graph, k_, budget_, rng, &stats)
                                      : mkecs_directed(g, k_, budget_, rng, &stats);
    std::size_t largest = 0;
    for (const auto& c : d.classes) largest = std::max(largest, c.size());
    json t{{"classes", d.classes.size()},
           {"largest", largest},
           {"valid", is_valid_decomposition(g, d)},
           {"local_calls", stats.local_calls},
           {"detections", stats.detections},
           {"global_cuts", stats.global_cuts},
           {"certificate_builds", stats.certificate_builds},
           {"queries", stats.queries}};
    t["matches_baseline"] = baseline_ ? json(baseline_mkecs(g, k_) == d) : json(nullptr);
    return t;
  }

  json summarize(const std::vector<json>& trials) const override {
    std::size_t mismatches = 0, invalid = 0;
    Stat classes, detections;
    for (const json& t : trials) {
      if (!t["matches_baseline"].is_null()) mismatches += !t["matches_baseline"].get<bool>();
      invalid += !t["valid"].get<bool>();
      classes.add(t["classes"].get<double>());
      detections.add(t["detections"].get<double>());
    }
    return {{"mismatches", mismatches},
            {"invalid", invalid},
            {"classes", classes.to_json()},
            {"detections", detections.to_json()}};
  }

 private:
  std::size_t k_ = 0, budget_ = 0;
  bool baseline_ = true;
};

class Tester : public Kind {
 public:
  explicit Tester(Fields& f) {
    vertex_ = f.choice("property", {"edge", "vertex"}) == "vertex";
    cfg_.k = f.uint("k");
    cfg_.epsilon = f.real("epsilon");
    if (!(cfg_.epsilon > 0.0 && cfg_.epsilon <= 1.0)) {
      throw ConfigError(f.at("epsilon"), "expected 0 < epsilon <= 1");
    }
    cfg_.model = f.choice("model", {"bounded", "unbounded"}, "unbounded") == "bounded"
                     ? DegreeModel::bounded
                     : DegreeModel::unbounded;
    cfg_.degree = f.real("degree", 0.0);
    if (cfg_.degree < 0.0) throw ConfigError(f.at("degree"), "must be non-negative");
    cfg_.sample_constant = f.real("sample_constant", 20.0);
  }

  json trial(const Instance& inst, Rng& rng) const override {
    const Graph g = working_graph(inst);
    TesterConfig cfg = cfg_;
    if (cfg.degree == 0.0 && cfg.model == DegreeModel::bounded) cfg.degree = double(max_degree(g));
    TesterVerdict v = vertex_ ? test_k_vertex_connectivity(g, cfg, rng)
                              : test_k_edge_connectivity(g, cfg, rng);
    json t{{"accept", v.accept},
           {"queries", v.queries},
           {"samples", v.samples},
           {"local_calls", v.local_calls}};
    t["witness"] = v.witness ? json(to_string(v.witness->kind)) : json(nullptr);
    t["witness_valid"] = v.witness ? json(validate_witness(g, cfg.k, *v.witness)) : json(nullptr);
    return t;
  }

  json summarize(const std::vector<json>& trials) const override {
    std::size_t rejects = 0, invalid = 0;
    Stat queries;
    for (const json& t : trials) {
      rejects += !t["accept"].get<bool>();
      if (!t["witness_valid"].is_null()) invalid += !t["witness_valid"].get<bool>();
      queries.add(t["queries"].get<double>());
    }
    return {{"reject", rate_summary(rejects, trials.size())},
            {"invalid_witnesses", invalid},
            {"queries", queries.to_json()}};
  }

 private:
  bool vertex_ = false;
  TesterConfig cfg_;
};

std::unique_ptr<Kind> make_kind(const std::string& name, Fields& params) {
  if (name == "edge_detection") return std::make_unique<EdgeDetection>(params);
  if (name == "vertex_detection") return std::make_unique<VertexDetection>(params);
  if (name == "vertex_connectivity") return std::make_unique<Connectivity>(params);
  if (name == "mkecs") return std::make_unique<Mkecs>(params);
  return std::make_unique<Tester>(params);
}

std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  return v.dump();
}

}  // namespace

std::pair<double, double> wilson_interval(std::size_t hits, std::size_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = double(trials), p = double(hits) / n;
  const double centre = p + z * z / (2 * n);
  const double spread = z * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n));
  const double scale = 1 + z * z / n;
  return {std::max(0.0, (centre - spread) / scale), std::min(1.0, (centre + spread) / scale)};
}

Instance generate(const json& spec, Rng& rng, const std::string& path) {
  Fields f(spec, path);
  const std::string family =
      f.choice("family", {"random_digraph", "random_strongly_connected", "random_undirected",
                          "planted_edge_component", "planted_separator", "clique_union",
                          "cycle_union", "complete_digraph", "circulant", "certificate_trap", "file"});
  auto wrap = [&](auto make) {
    try {
      Instance inst = make();
      f.finish();
      if (!certify(inst)) throw ConfigError(path, "generated instance failed its certificate");
      return inst;
    } catch (const GenerationError& e) {
      throw ConfigError(path, e.what());
    }
  };
  if (family == "random_digraph") {
    return wrap([&] { return random_digraph(as_vertex(f, "n"), f.uint("m"), rng); });
  }
  if (family == "random_strongly_connected") {
    return wrap([&] { return random_strongly_connected(as_vertex(f, "n"), f.uint("m"), rng); });
  }
  if (family == "random_undirected") {
    return wrap([&] { return random_undirected(as_vertex(f, "n"), f.uint("m"), rng); });
  }
  if (family == "planted_edge_component") {
    return wrap([&] {
      return planted_edge_component(f.uint("size"), f.uint("k"), f.uint("blob_edges"), rng);
    });
  }
  if (family == "planted_separator") {
    return wrap([&] {
      const double density = f.real("density", 0.5);
      if (!(density > 0.0 && density <= 1.0)) throw ConfigError(f.at("density"), "expected 0 < density <= 1");
      return planted_separator(f.uint("left"), f.uint("right"), f.uint("separator"), density, rng);
    });
  }
  if (family == "clique_union") {
    return wrap([&] { return clique_union(f.uint("count"), f.uint("size")); });
  }
  if (family == "cycle_union") {
    return wrap([&] { return cycle_union(f.uint("count"), f.uint("length")); });
  }
  if (family == "complete_digraph") {
    return wrap([&] { return complete_digraph(as_vertex(f, "n")); });
  }
  if (family == "circulant") {
    return wrap([&] {
      const Vertex n = as_vertex(f, "n");
      const json& offs = f.raw("offsets");
      if (!offs.is_array()) throw ConfigError(f.at("offsets"), "expected an array");
      std::vector<Vertex> offsets;
      for (std::size_t i = 0; i < offs.size(); ++i) {
        if (!offs[i].is_number_unsigned()) {
          throw ConfigError(f.at("offsets") + "[" + std::to_string(i) + "]", "expected a non-negative integer");
        }
        offsets.push_back(offs[i].get<Vertex>());
      }
      return circulant(n, offsets);
    });
  }
  if (family == "certificate_trap") return wrap([] { return certificate_trap(); });
  return wrap([&] {
    Instance inst;
    inst.family = "file";
    inst.graph = read_edge_list_file(f.text("path"));
    inst.undirected = f.flag("undirected", false);
    inst.source = as_vertex(f, "source", 0);
    if (inst.graph.vertex_count() == 0) throw ConfigError(f.at("path"), "graph has no vertices");
    if (inst.source >= inst.graph.vertex_count()) throw ConfigError(f.at("source"), "vertex out of range");
    return inst;
  });
}

json run_experiment(const json& config) {
  const auto started = std::chrono::steady_clock::now();
  Fields top(config, "");
  const std::string name = top.choice(
      "experiment", {"edge_detection", "vertex_detection", "vertex_connectivity", "mkecs", "tester"});
  const std::uint64_t seed = top.uint("seed");
  const std::size_t trials = top.uint("trials");
  const std::size_t threads = std::max<std::uint64_t>(1, top.uint("threads", 1));
  const bool fixed = top.flag("fixed_instance", false);
  const json& gen_spec = top.raw("generator");
  const json params_json = top.has("params") ? top.raw("params") : json::object();
  Fields params(params_json, "params");
  std::unique_ptr<Kind> kind = make_kind(name, params);
  params.finish();
  top.text("description", "");
  top.finish();

  // Validate the generator spec up front so schema errors surface before any trial.
  std::optional<Instance> shared;
  {
    Rng rng(mix_seed(seed));
    Instance first = generate(gen_spec, rng);
    if (fixed) shared = std::move(first);
  }

  std::vector<json> records(trials);
  std::vector<std::exception_ptr> errors(trials);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < trials; i = next++) {
      try {
        const std::uint64_t trial_seed = derive_seed(seed, i);
        Rng rng(trial_seed);
        json t = shared ? kind->trial(*shared, rng) : kind->trial(generate(gen_spec, rng), rng);
        json rec{{"index", i}, {"seed", trial_seed}};
        rec.update(t);
        records[i] = std::move(rec);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < std::min(threads, std::max<std::size_t>(trials, 1)); ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  json report;
  report["config"] = config;
  report["config"].erase("threads");  // the pool size never changes outcomes
  report["summary"] = kind->summarize(records);
  report["summary"]["trials"] = trials;
  report["trials"] = records;
  report["timing"] = {{"wall_clock_seconds",
                       std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count()}};
  return report;
}

std::string trials_csv(const json& report) {
  std::vector<std::string> columns;
  std::set<std::string> seen;
  for (const json& t : report.at("trials")) {
    for (const auto& [key, value] : t.items()) {
      if (seen.insert(key).second) columns.push_back(key);
    }
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
  for (const json& t : report.at("trials")) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      out << (i ? "," : "");
      auto it = t.find(columns[i]);
      if (it != t.end()) out << csv_cell(*it);
    }
    out << '\n';
  }
  return out.str();
}

std::string trials_ndjson(const json& report) {
  std::string out;
  for (const json& t : report.at("trials")) out += t.dump() + "\n";
  return out;
}

}  // namespace localcut
