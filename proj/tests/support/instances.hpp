// Test fixtures, a random instance generator and brute-force oracles.
// The oracles work directly on InstanceSpec and never call the search code
// they are compared against.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hg2/hg2.hpp"

namespace hg2::testing {

/// Unvalidated description of an instance; `build()` runs the real
/// constructors.
struct InstanceSpec {
  std::vector<std::string> h_nodes;
  std::vector<HyperEdge> h_edges;
  std::vector<std::string> g_nodes;
  std::vector<GraphEdge> g_edges;
  ConnectorSet connectors;

  Hg2 build() const;

  HyperEdge& hyperedge(const std::string& id);
  GraphEdge& graph_edge(const std::string& src, const std::string& dst);
  NodeConnector& node_connector(const std::string& h);
  EdgeConnector& edge_connector(const std::string& h);
  void remove_graph_edge(const std::string& src, const std::string& dst);
  void remove_node_connector(const std::string& h);
  void set_all_weights(Weight w);
};

/// The reference sample instance: hypernodes 1..7, hyperedges E1..E4, graph nodes
/// a..f with edges a->c, c->b, b->d, d->e, b->f, connectors 1-a, 6-b, 5-d,
/// E1-c, E3-e, E4-f. All weights 1.
InstanceSpec f1_spec();

InstanceSpec spec_of(const Hg2& hg);

struct GeneratorLimits {
  int max_h_nodes = 6;
  int max_h_edges = 4;
  int max_side = 2;
  int max_g_nodes = 6;
  int max_weight = 9;
  double g_edge_prob = 0.3;
  double connector_prob = 0.6;
};

InstanceSpec random_instance(std::mt19937_64& rng, const GeneratorLimits& limits = {});

/// Hyperpath as alternating sequence n1, E1, n2, ..., nq+1.
using Sequence = std::vector<std::string>;

/// Node-distinct (elementary) or edge-distinct (simple) hyperpaths from s to
/// t. Elementary: every node permutation from s to t, expanded with every
/// edge joining consecutive nodes. Simple: every edge permutation, expanded
/// with every compatible node choice. Sorted by (edge ids, node ids).
std::vector<Sequence> oracle_hyperpaths(const InstanceSpec& spec, const std::string& s,
                                        const std::string& t, bool elementary);

struct OracleRoute {
  Sequence sequence;
  std::vector<std::string> anchors;
  Weight route_cost = 0;
  Weight connector_cost = 0;
};

/// Elementary hyperpaths whose anchor chain is realizable in the graph layer
/// (reachability by transitive closure).
std::vector<OracleRoute> oracle_routes(const InstanceSpec& spec, const std::string& s,
                                       const std::string& t);

/// Exhaustive minimum over every valid route and every combination of
/// node-simple segment paths (each parallel edge considered separately).
std::optional<Weight> oracle_min_total(const InstanceSpec& spec, const std::string& s,
                                       const std::string& t);

}  // namespace hg2::testing
