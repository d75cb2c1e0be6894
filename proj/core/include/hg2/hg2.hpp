#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hg2/graph.hpp"
#include "hg2/hypergraph.hpp"
#include "hg2/weight.hpp"

namespace hg2 {

/// Dependency of a hypernode on a graph node.
struct NodeConnector {
  std::string h_node;
  std::string g_node;
  Weight weight = 1.0;

  friend auto operator<=>(const NodeConnector&, const NodeConnector&) = default;
};

/// Dependency of a hyperedge on a graph node.
struct EdgeConnector {
  std::string h_edge;
  std::string g_node;
  Weight weight = 1.0;

  friend auto operator<=>(const EdgeConnector&, const EdgeConnector&) = default;
};

struct ConnectorSet {
  std::vector<NodeConnector> node;
  std::vector<EdgeConnector> edge;

  friend bool operator==(const ConnectorSet&, const ConnectorSet&) = default;
};

/// The (hypergraph, graph, connectors) triple. Dependencies flow one way,
/// from the hypergraph layer down to the graph layer. Immutable once built.
class Hg2 {
 public:
  Hg2() = default;

  /// Throws DanglingConnector, DuplicateSourceConnector or NegativeWeight.
  /// Connectors are stored sorted by source.
  static Hg2 build(Hypergraph h, Graph g, ConnectorSet c);

  const Hypergraph& hypergraph() const { return h_; }
  const Graph& graph() const { return g_; }
  const ConnectorSet& connectors() const { return c_; }

  const NodeConnector* node_connector(std::string_view h_node) const;
  const EdgeConnector* edge_connector(std::string_view h_edge) const;

  friend bool operator==(const Hg2& a, const Hg2& b) {
    return a.h_ == b.h_ && a.g_ == b.g_ && a.c_ == b.c_;
  }

 private:
  Hypergraph h_;
  Graph g_;
  ConnectorSet c_;
  std::map<std::string, std::size_t, std::less<>> node_conn_;
  std::map<std::string, std::size_t, std::less<>> edge_conn_;
};

/// A hypernode with the graph node it depends on, rendered "1(a)" or "3()".
struct NodePair {
  std::string h_node;
  std::optional<std::string> anchor;

  friend bool operator==(const NodePair&, const NodePair&) = default;
};

/// A hyperedge with the graph node it depends on, rendered "E1(c)" or "E2()".
struct EdgePair {
  std::string h_edge;
  std::optional<std::string> anchor;

  friend bool operator==(const EdgePair&, const EdgePair&) = default;
};

/// Alternating node pair / edge pair sequence NP, EP, NP, ..., EP, NP.
struct Route {
  std::vector<NodePair> nodes;
  std::vector<EdgePair> edges;

  Hyperpath hyperpath() const;
  const std::string& source() const { return nodes.front().h_node; }
  const std::string& target() const { return nodes.back().h_node; }

  friend bool operator==(const Route&, const Route&) = default;
};

std::string to_string(const NodePair& p);
std::string to_string(const EdgePair& p);
/// "1(a), E1(c), 3(), E2(), 5(d), E3(e), 7()"
std::string to_string(const Route& r);

/// Throws UnknownId.
NodePair node_pair(const Hg2& hg, std::string_view h_node);
EdgePair edge_pair(const Hg2& hg, std::string_view h_edge);

/// Maps every element of `p` to its pair without checking that `p` is a
/// hyperpath. Throws UnknownId or MalformedPath.
Route pairs_of(const Hg2& hg, const Hyperpath& p);
/// As `pairs_of`, but throws NotAHyperpath unless `p` is a hyperpath.
Route route_of(const Hg2& hg, const Hyperpath& p);

/// Present anchors in sequence order; empty pairs contribute nothing.
std::vector<std::string> anchors(const Route& r);

struct RouteCheck {
  bool valid = false;
  std::string reason;

  static RouteCheck ok() { return {true, {}}; }
  static RouteCheck fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return valid; }
};

/// A route is valid when its elements form a hyperpath, every pair matches the
/// connector set, and each consecutive pair of anchors is joined by a
/// directed path in the graph layer.
RouteCheck validate_route(const Hg2& hg, const Route& r);

/// Valid routes over the elementary hyperpaths from `s` to `t`, in hyperpath
/// order. Throws UnknownId or DegenerateQuery.
std::vector<Route> enumerate_routes(const Hg2& hg, std::string_view s, std::string_view t);

/// A walk through the graph layer that visits the route's anchors in order.
/// `anchor_indices[i]` is the position of the i-th anchor in `gpath.nodes`.
struct TracedGPath {
  GPath gpath;
  std::vector<std::size_t> anchor_indices;

  friend bool operator==(const TracedGPath&, const TracedGPath&) = default;
};

/// Every concatenation of node-simple segment paths (at most `max_hops` edges
/// each) between consecutive anchors. Ordered lexicographically by the tuple
/// of segments. Fewer than two anchors yield a single trivial trace.
/// Throws InvalidRoute.
std::vector<TracedGPath> trace_gpaths(const Hg2& hg, const Route& r, std::size_t max_hops);

/// Builds the trace of `r` along an explicit node walk: the first anchor sits
/// at the start, the last at the end, the others at their earliest position.
/// Throws InvalidTrace when the walk is not in the graph, TraceMismatch when
/// the anchors cannot be placed.
TracedGPath trace_along(const Hg2& hg, const Route& r, std::vector<std::string> nodes);

/// Throws InvalidTrace or TraceMismatch unless `t` is a walk in the graph
/// layer that traces `r`.
void check_trace(const Hg2& hg, const Route& r, const TracedGPath& t);

bool has_gloop(const TracedGPath& t);

enum class NodeRole { Participating, AuxiliaryCase1, AuxiliaryCase2, AuxiliaryCase3 };

std::string_view to_string(NodeRole role);

/// Role of every distinct graph node on the trace. Auxiliary case 1: no
/// connector touches the node. Case 2: connectors only from outside the
/// route. Case 3: some connector from a hypernode or hyperedge on the route.
/// Throws InvalidTrace or TraceMismatch.
std::map<std::string, NodeRole> classify_nodes(const Hg2& hg, const Route& r,
                                               const TracedGPath& t);

}  // namespace hg2
