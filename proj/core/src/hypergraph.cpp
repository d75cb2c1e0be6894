#include "hg2/hypergraph.hpp"

#include <algorithm>
#include <set>

#include "hg2/error.hpp"

namespace hg2 {
namespace {

bool sorted_contains(const std::vector<std::string>& v, std::string_view x) {
  return std::binary_search(v.begin(), v.end(), x, std::less<>{});
}

void check_weight(Weight w, const std::string& what, std::string location) {
  if (!(w >= 0)) {
    throw Error(Errc::NegativeWeight, what + " has negative weight " + format_weight(w),
                std::move(location));
  }
}

}  // namespace

bool HyperEdge::in_head(std::string_view node) const { return sorted_contains(head, node); }
bool HyperEdge::in_tail(std::string_view node) const { return sorted_contains(tail, node); }

Hyperpath Hyperpath::from_sequence(std::span<const std::string> sequence) {
  if (sequence.size() < 3 || sequence.size() % 2 == 0) {
    throw Error(Errc::MalformedPath,
                "a hyperpath alternates node, edge, ..., node and has at least one edge");
  }
  Hyperpath p;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    (i % 2 == 0 ? p.nodes : p.edges).push_back(sequence[i]);
  }
  return p;
}

std::vector<std::string> Hyperpath::sequence() const {
  std::vector<std::string> out;
  out.reserve(nodes.size() + edges.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out.push_back(nodes[i]);
    if (i < edges.size()) out.push_back(edges[i]);
  }
  return out;
}

bool hyperpath_less(const Hyperpath& a, const Hyperpath& b) {
  if (a.edges != b.edges) return a.edges < b.edges;
  return a.nodes < b.nodes;
}

Hypergraph Hypergraph::build(std::vector<std::string> nodes, std::vector<HyperEdge> edges) {
  Hypergraph h;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto loc = "/nodes/" + std::to_string(i);
    if (nodes[i].empty()) throw Error(Errc::EmptyLabel, "empty hypernode label", loc);
    if (!h.node_index_.emplace(nodes[i], 0).second) {
      throw Error(Errc::DuplicateNode, "duplicate hypernode '" + nodes[i] + "'", loc);
    }
  }

  std::set<std::string, std::less<>> ids;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto& e = edges[i];
    const auto loc = "/edges/" + std::to_string(i);
    if (e.id.empty()) throw Error(Errc::EmptyLabel, "empty hyperedge id", loc + "/id");
    if (!ids.insert(e.id).second) {
      throw Error(Errc::DuplicateEdge, "duplicate hyperedge '" + e.id + "'", loc + "/id");
    }
    if (e.head.empty() || e.tail.empty()) {
      throw Error(Errc::EmptyHeadOrTail, "hyperedge '" + e.id + "' needs a nonempty head and tail",
                  loc + (e.head.empty() ? "/head" : "/tail"));
    }
    for (const auto* side : {"head", "tail"}) {
      const auto& members = std::string_view(side) == "head" ? e.head : e.tail;
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (!h.node_index_.contains(members[j])) {
          throw Error(Errc::UnknownVertex,
                      "hyperedge '" + e.id + "' references unknown hypernode '" + members[j] + "'",
                      loc + "/" + side + "/" + std::to_string(j));
        }
      }
    }
    check_weight(e.weight, "hyperedge '" + e.id + "'", loc + "/weight");

    for (auto* side : {&e.head, &e.tail}) {
      std::sort(side->begin(), side->end());
      side->erase(std::unique(side->begin(), side->end()), side->end());
    }
    std::vector<std::string> common;
    std::set_intersection(e.head.begin(), e.head.end(), e.tail.begin(), e.tail.end(),
                          std::back_inserter(common));
    if (!common.empty()) {
      throw Error(Errc::HeadTailOverlap,
                  "hyperedge '" + e.id + "' has '" + common.front() + "' in both head and tail", loc);
    }
  }

  std::sort(nodes.begin(), nodes.end());
  std::sort(edges.begin(), edges.end(),
            [](const HyperEdge& a, const HyperEdge& b) { return a.id < b.id; });
  h.nodes_ = std::move(nodes);
  h.edges_ = std::move(edges);
  for (std::size_t i = 0; i < h.nodes_.size(); ++i) h.node_index_[h.nodes_[i]] = i;
  h.out_edges_.resize(h.nodes_.size());
  for (std::size_t i = 0; i < h.edges_.size(); ++i) {
    h.edge_index_.emplace(h.edges_[i].id, i);
    for (const auto& n : h.edges_[i].head) h.out_edges_[h.node_index_.find(n)->second].push_back(i);
  }
  return h;
}

bool Hypergraph::has_node(std::string_view label) const { return node_index_.contains(label); }

const HyperEdge* Hypergraph::find_edge(std::string_view id) const {
  auto it = edge_index_.find(id);
  return it == edge_index_.end() ? nullptr : &edges_[it->second];
}

const HyperEdge& Hypergraph::edge(std::string_view id) const {
  if (const auto* e = find_edge(id)) return *e;
  throw Error(Errc::UnknownId, "unknown hyperedge '" + std::string(id) + "'");
}

std::vector<const HyperEdge*> Hypergraph::edges_from(std::string_view node) const {
  std::vector<const HyperEdge*> out;
  auto it = node_index_.find(node);
  if (it == node_index_.end()) return out;
  for (auto i : out_edges_[it->second]) out.push_back(&edges_[i]);
  return out;
}

bool is_hyperpath(const Hypergraph& h, const Hyperpath& p) {
  for (const auto& n : p.nodes) {
    if (!h.has_node(n)) throw Error(Errc::UnknownId, "unknown hypernode '" + n + "'");
  }
  for (const auto& e : p.edges) h.edge(e);
  if (p.edges.empty() || p.nodes.size() != p.edges.size() + 1) return false;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    const auto& e = h.edge(p.edges[i]);
    if (!e.in_head(p.nodes[i]) || !e.in_tail(p.nodes[i + 1])) return false;
  }
  return true;
}

HyperpathClass classify_hyperpath(const Hypergraph& h, const Hyperpath& p) {
  if (!is_hyperpath(h, p)) throw Error(Errc::NotAHyperpath, "sequence is not a hyperpath");
  auto all_distinct = [](std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  HyperpathClass c;
  c.elementary = all_distinct(p.nodes);
  c.simple = all_distinct(p.edges);
  c.has_hloop = !c.elementary;
  return c;
}

namespace {

class HyperpathSearch {
 public:
  HyperpathSearch(const Hypergraph& h, std::string_view target, PathPolicy policy)
      : h_(h), target_(target), policy_(policy) {}

  std::vector<Hyperpath> run(std::string_view source) {
    path_.nodes.emplace_back(source);
    visit(path_.nodes.back());
    std::sort(found_.begin(), found_.end(), hyperpath_less);
    return std::move(found_);
  }

 private:
  bool admissible(const HyperEdge& e, const std::string& next) const {
    if (policy_ == PathPolicy::ElementaryOnly) {
      return std::find(path_.nodes.begin(), path_.nodes.end(), next) == path_.nodes.end();
    }
    return std::find(path_.edges.begin(), path_.edges.end(), e.id) == path_.edges.end();
  }

  void visit(std::string current) {
    for (const auto* e : h_.edges_from(current)) {
      for (const auto& next : e->tail) {
        if (!admissible(*e, next)) continue;
        path_.edges.push_back(e->id);
        path_.nodes.push_back(next);
        const bool at_target = next == target_;
        if (at_target) found_.push_back(path_);
        // An elementary path can never return to the target once there.
        if (!(at_target && policy_ == PathPolicy::ElementaryOnly)) visit(next);
        path_.edges.pop_back();
        path_.nodes.pop_back();
      }
    }
  }

  const Hypergraph& h_;
  std::string_view target_;
  PathPolicy policy_;
  Hyperpath path_;
  std::vector<Hyperpath> found_;
};

}  // namespace

std::vector<Hyperpath> enumerate_hyperpaths(const Hypergraph& h, std::string_view s,
                                            std::string_view t, PathPolicy policy) {
  for (auto n : {s, t}) {
    if (!h.has_node(n)) throw Error(Errc::UnknownId, "unknown hypernode '" + std::string(n) + "'");
  }
  if (s == t) throw Error(Errc::DegenerateQuery, "source and target are the same hypernode");
  return HyperpathSearch(h, t, policy).run(s);
}

}  // namespace hg2
