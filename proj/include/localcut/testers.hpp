#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "localcut/graph.hpp"
#include "localcut/types.hpp"

namespace localcut {

enum class DegreeModel { bounded, unbounded };
enum class ConnectivityProperty { edge, vertex };

struct TesterConfig {
  std::size_t k = 1;
  double epsilon = 0.1;
  DegreeModel model = DegreeModel::unbounded;
  /// d (bounded) or the average degree m/n (unbounded); 0 means m/n.
  double degree = 0.0;
  double sample_constant = 20.0;  // c_s
};

struct ScheduleRound {
  std::size_t gamma = 0;
  std::size_t samples = 0;
};

/// Rounds i = 1..ceil(log2(2k / (eps * density))): gamma_i = 2^i - 1 and
/// ceil(c_s * k * L / (2^i * eps * density)) samples, L = max(1, log2(k / (eps * density))).
std::vector<ScheduleRound> doubling_schedule(std::size_t k, double epsilon, double density,
                                             double sample_constant = 20.0);

enum class WitnessKind { edge_out, edge_in, vertex_out, vertex_in, low_degree, too_few_vertices };
std::string to_string(WitnessKind kind);

struct TesterWitness {
  WitnessKind kind = WitnessKind::edge_out;
  Vertex source = 0;
  std::vector<Vertex> members;
  std::vector<Vertex> boundary;    // vertex witnesses
  std::vector<EdgeId> cut_edges;   // edge witnesses
};

struct LocalDecision {
  bool yes = false;
  bool exact = false;  // decided by reading the whole graph
  TesterWitness witness;
  std::size_t queries = 0;
};

/// Yes iff a proper (k-1)-edge-out component containing s was found; with
/// `reversed` the same for edge-in components.
LocalDecision local_decision_edge(const Graph& g, Vertex s, std::size_t k, std::size_t gamma,
                                  DegreeModel model, double degree, bool reversed, Rng& rng);

/// Yes iff a proper (k-1)-vertex-out (or -in) component containing s was found.
LocalDecision local_decision_vertex(const Graph& g, Vertex s, std::size_t k, std::size_t gamma,
                                    DegreeModel model, double degree, bool reversed, Rng& rng);

struct TesterVerdict {
  bool accept = true;
  std::optional<TesterWitness> witness;
  std::size_t queries = 0;
  std::size_t samples = 0;
  std::size_t local_calls = 0;
};

TesterVerdict test_k_edge_connectivity(const Graph& g, const TesterConfig& cfg, Rng& rng);
TesterVerdict test_k_vertex_connectivity(const Graph& g, const TesterConfig& cfg, Rng& rng);

/// Checks a rejection witness against the graph itself: a proper set with at
/// most k-1 leaving (entering) edges or boundary vertices, a vertex of degree
/// below k, or n <= k for vertex connectivity.
bool validate_witness(const Graph& g, std::size_t k, const TesterWitness& w);

/// Lower bound on the edge insertions needed to make g k-connected, counted
/// over disjoint vertex sets: each inserted edge lifts the out-deficit of at
/// most one set and the in-deficit of at most one set, and deletions never
/// help. Deficits are measured in leaving edges (edge) or boundary vertices
/// (vertex). For the vertex property every part needs |part| + k < n.
std::size_t modification_lower_bound(const Graph& g, const std::vector<std::vector<Vertex>>& parts,
                                     std::size_t k, ConnectivityProperty property);

}  // namespace localcut
