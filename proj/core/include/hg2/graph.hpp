#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hg2/weight.hpp"

namespace hg2 {

struct GraphEdge {
  std::string src;
  std::string dst;
  Weight weight = 1.0;

  friend auto operator<=>(const GraphEdge&, const GraphEdge&) = default;
};

/// Node walk through the graph layer together with the summed weight of its
/// edges.
struct GPath {
  std::vector<std::string> nodes;
  Weight total_weight = 0;

  friend bool operator==(const GPath&, const GPath&) = default;
};

/// Directed weighted graph. Parallel edges and self-loops are allowed; a
/// step between two nodes always uses the cheapest parallel edge.
class Graph {
 public:
  Graph() = default;

  static Graph build(std::vector<std::string> nodes, std::vector<GraphEdge> edges);

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }

  bool has_node(std::string_view label) const;
  /// Dense index of a node; throws UnknownId.
  std::size_t index_of(std::string_view label) const;
  const std::string& label(std::size_t index) const { return nodes_[index]; }

  struct Arc {
    std::size_t to;
    Weight weight;
  };
  /// Outgoing arcs of a node sorted by target label, parallel edges merged.
  const std::vector<Arc>& arcs_from(std::size_t index) const { return arcs_[index]; }

  /// Cheapest edge weight from `u` to `v`, if any edge exists.
  std::optional<Weight> step_weight(std::string_view u, std::string_view v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> nodes_;
  std::vector<GraphEdge> edges_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<std::vector<Arc>> arcs_;
};

/// Directed reachability; every node reaches itself.
bool path_exists(const Graph& g, std::string_view u, std::string_view v);

/// Minimum-weight node-simple path. Among equal weights the lexicographically
/// smallest node sequence wins.
std::optional<GPath> shortest_path(const Graph& g, std::string_view u, std::string_view v);

/// All node-simple paths from `u` to `v` with at most `max_hops` edges, in
/// lexicographic node order.
std::vector<GPath> enumerate_paths(const Graph& g, std::string_view u, std::string_view v,
                                   std::size_t max_hops);

/// Recomputes the weight of a node walk; nullopt if some step has no edge.
std::optional<Weight> walk_weight(const Graph& g, const std::vector<std::string>& nodes);

}  // namespace hg2
