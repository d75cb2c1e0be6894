#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hg2/weight.hpp"

namespace hg2 {

/// Directed hyperedge. A traversal enters through a head node and leaves
/// through a tail node; head and tail are nonempty and disjoint.
struct HyperEdge {
  std::string id;
  std::vector<std::string> head;
  std::vector<std::string> tail;
  Weight weight = 1.0;

  bool in_head(std::string_view node) const;
  bool in_tail(std::string_view node) const;

  friend bool operator==(const HyperEdge&, const HyperEdge&) = default;
};

/// Alternating node / hyperedge sequence n1, E1, n2, ..., Eq, n(q+1).
struct Hyperpath {
  std::vector<std::string> nodes;
  std::vector<std::string> edges;

  /// Splits an alternating sequence; throws MalformedPath unless it has odd
  /// length >= 3.
  static Hyperpath from_sequence(std::span<const std::string> sequence);
  std::vector<std::string> sequence() const;

  const std::string& source() const { return nodes.front(); }
  const std::string& target() const { return nodes.back(); }

  friend bool operator==(const Hyperpath&, const Hyperpath&) = default;
};

/// Orders by edge-id sequence first, then by node sequence.
bool hyperpath_less(const Hyperpath& a, const Hyperpath& b);

struct HyperpathClass {
  bool elementary = false;
  bool simple = false;
  bool has_hloop = false;

  friend bool operator==(const HyperpathClass&, const HyperpathClass&) = default;
};

enum class PathPolicy { ElementaryOnly, SimpleOnly };

class Hypergraph {
 public:
  Hypergraph() = default;

  /// Validates and builds. Node labels and edge ids are kept sorted;
  /// head/tail lists are sorted and deduplicated.
  static Hypergraph build(std::vector<std::string> nodes, std::vector<HyperEdge> edges);

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<HyperEdge>& edges() const { return edges_; }

  bool has_node(std::string_view label) const;
  const HyperEdge* find_edge(std::string_view id) const;
  /// Throws UnknownId when absent.
  const HyperEdge& edge(std::string_view id) const;

  /// Edges whose head contains `node`, in id order.
  std::vector<const HyperEdge*> edges_from(std::string_view node) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> nodes_;
  std::vector<HyperEdge> edges_;
  std::map<std::string, std::size_t, std::less<>> node_index_;
  std::map<std::string, std::size_t, std::less<>> edge_index_;
  std::vector<std::vector<std::size_t>> out_edges_;
};

/// True iff every step enters its edge at a head node and exits at a tail
/// node. Throws UnknownId for labels or ids not in `h`.
bool is_hyperpath(const Hypergraph& h, const Hyperpath& p);

/// Throws NotAHyperpath when `p` is not a hyperpath of `h`.
HyperpathClass classify_hyperpath(const Hypergraph& h, const Hyperpath& p);

/// Every hyperpath from `s` to `t` admitted by `policy`, ordered by
/// `hyperpath_less`. ElementaryOnly forbids repeated nodes, SimpleOnly
/// forbids repeated hyperedges.
std::vector<Hyperpath> enumerate_hyperpaths(const Hypergraph& h, std::string_view s,
                                            std::string_view t,
                                            PathPolicy policy = PathPolicy::ElementaryOnly);

}  // namespace hg2
