#include "hg2/hg2.hpp"

#include <algorithm>
#include <set>

#include "hg2/error.hpp"

namespace hg2 {

Hg2 Hg2::build(Hypergraph h, Graph g, ConnectorSet c) {
  Hg2 out;
  for (std::size_t i = 0; i < c.node.size(); ++i) {
    const auto& k = c.node[i];
    const auto loc = "/connectors/node/" + std::to_string(i);
    if (!h.has_node(k.h_node)) {
      throw Error(Errc::DanglingConnector, "node connector from unknown hypernode '" + k.h_node + "'",
                  loc + "/h");
    }
    if (!g.has_node(k.g_node)) {
      throw Error(Errc::DanglingConnector, "node connector to unknown graph node '" + k.g_node + "'",
                  loc + "/g");
    }
    if (!(k.weight >= 0)) {
      throw Error(Errc::NegativeWeight, "connector " + k.h_node + "-" + k.g_node + " has negative weight",
                  loc + "/weight");
    }
    if (!out.node_conn_.emplace(k.h_node, 0).second) {
      throw Error(Errc::DuplicateSourceConnector,
                  "hypernode '" + k.h_node + "' already has a connector", loc);
    }
  }
  for (std::size_t i = 0; i < c.edge.size(); ++i) {
    const auto& k = c.edge[i];
    const auto loc = "/connectors/edge/" + std::to_string(i);
    if (h.find_edge(k.h_edge) == nullptr) {
      throw Error(Errc::DanglingConnector, "edge connector from unknown hyperedge '" + k.h_edge + "'",
                  loc + "/h");
    }
    if (!g.has_node(k.g_node)) {
      throw Error(Errc::DanglingConnector, "edge connector to unknown graph node '" + k.g_node + "'",
                  loc + "/g");
    }
    if (!(k.weight >= 0)) {
      throw Error(Errc::NegativeWeight, "connector " + k.h_edge + "-" + k.g_node + " has negative weight",
                  loc + "/weight");
    }
    if (!out.edge_conn_.emplace(k.h_edge, 0).second) {
      throw Error(Errc::DuplicateSourceConnector,
                  "hyperedge '" + k.h_edge + "' already has a connector", loc);
    }
  }

  std::sort(c.node.begin(), c.node.end());
  std::sort(c.edge.begin(), c.edge.end());
  for (std::size_t i = 0; i < c.node.size(); ++i) out.node_conn_[c.node[i].h_node] = i;
  for (std::size_t i = 0; i < c.edge.size(); ++i) out.edge_conn_[c.edge[i].h_edge] = i;
  out.h_ = std::move(h);
  out.g_ = std::move(g);
  out.c_ = std::move(c);
  return out;
}

const NodeConnector* Hg2::node_connector(std::string_view h_node) const {
  auto it = node_conn_.find(h_node);
  return it == node_conn_.end() ? nullptr : &c_.node[it->second];
}

const EdgeConnector* Hg2::edge_connector(std::string_view h_edge) const {
  auto it = edge_conn_.find(h_edge);
  return it == edge_conn_.end() ? nullptr : &c_.edge[it->second];
}

Hyperpath Route::hyperpath() const {
  Hyperpath p;
  for (const auto& n : nodes) p.nodes.push_back(n.h_node);
  for (const auto& e : edges) p.edges.push_back(e.h_edge);
  return p;
}

std::string to_string(const NodePair& p) { return p.h_node + "(" + p.anchor.value_or("") + ")"; }
std::string to_string(const EdgePair& p) { return p.h_edge + "(" + p.anchor.value_or("") + ")"; }

std::string to_string(const Route& r) {
  std::string out;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(r.nodes[i]);
    if (i < r.edges.size()) out += ", " + to_string(r.edges[i]);
  }
  return out;
}

NodePair node_pair(const Hg2& hg, std::string_view h_node) {
  if (!hg.hypergraph().has_node(h_node)) {
    throw Error(Errc::UnknownId, "unknown hypernode '" + std::string(h_node) + "'");
  }
  NodePair p{std::string(h_node), std::nullopt};
  if (const auto* c = hg.node_connector(h_node)) p.anchor = c->g_node;
  return p;
}

EdgePair edge_pair(const Hg2& hg, std::string_view h_edge) {
  hg.hypergraph().edge(h_edge);
  EdgePair p{std::string(h_edge), std::nullopt};
  if (const auto* c = hg.edge_connector(h_edge)) p.anchor = c->g_node;
  return p;
}

Route pairs_of(const Hg2& hg, const Hyperpath& p) {
  if (p.edges.empty() || p.nodes.size() != p.edges.size() + 1) {
    throw Error(Errc::MalformedPath, "a hyperpath alternates node, edge, ..., node");
  }
  Route r;
  for (const auto& n : p.nodes) r.nodes.push_back(node_pair(hg, n));
  for (const auto& e : p.edges) r.edges.push_back(edge_pair(hg, e));
  return r;
}

Route route_of(const Hg2& hg, const Hyperpath& p) {
  if (p.edges.empty() || p.nodes.size() != p.edges.size() + 1 || !is_hyperpath(hg.hypergraph(), p)) {
    throw Error(Errc::NotAHyperpath, "sequence is not a hyperpath");
  }
  return pairs_of(hg, p);
}

std::vector<std::string> anchors(const Route& r) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    if (r.nodes[i].anchor) out.push_back(*r.nodes[i].anchor);
    if (i < r.edges.size() && r.edges[i].anchor) out.push_back(*r.edges[i].anchor);
  }
  return out;
}

RouteCheck validate_route(const Hg2& hg, const Route& r) {
  if (r.edges.empty() || r.nodes.size() != r.edges.size() + 1) {
    return RouteCheck::fail("malformed route");
  }
  const auto p = r.hyperpath();
  try {
    if (!is_hyperpath(hg.hypergraph(), p)) return RouteCheck::fail("not a hyperpath");
  } catch (const Error& e) {
    return RouteCheck::fail(e.what());
  }
  for (const auto& n : r.nodes) {
    if (n != node_pair(hg, n.h_node)) {
      return RouteCheck::fail("node pair " + to_string(n) + " does not match the connectors");
    }
  }
  for (const auto& e : r.edges) {
    if (e != edge_pair(hg, e.h_edge)) {
      return RouteCheck::fail("edge pair " + to_string(e) + " does not match the connectors");
    }
  }
  const auto a = anchors(r);
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    if (!path_exists(hg.graph(), a[i], a[i + 1])) {
      return RouteCheck::fail("no path " + a[i] + "→" + a[i + 1] + " in G");
    }
  }
  return RouteCheck::ok();
}

std::vector<Route> enumerate_routes(const Hg2& hg, std::string_view s, std::string_view t) {
  std::vector<Route> out;
  for (const auto& p : enumerate_hyperpaths(hg.hypergraph(), s, t, PathPolicy::ElementaryOnly)) {
    auto r = pairs_of(hg, p);
    if (validate_route(hg, r)) out.push_back(std::move(r));
  }
  return out;
}

namespace {

TracedGPath trivial_trace(const std::vector<std::string>& a) {
  TracedGPath t;
  if (!a.empty()) {
    t.gpath.nodes.push_back(a.front());
    t.anchor_indices.push_back(0);
  }
  return t;
}

void require_valid(const Hg2& hg, const Route& r) {
  if (auto check = validate_route(hg, r); !check) {
    throw Error(Errc::InvalidRoute, "invalid route: " + check.reason);
  }
}

}  // namespace

std::vector<TracedGPath> trace_gpaths(const Hg2& hg, const Route& r, std::size_t max_hops) {
  require_valid(hg, r);
  const auto a = anchors(r);
  if (a.size() < 2) return {trivial_trace(a)};

  std::vector<std::vector<GPath>> segments;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    segments.push_back(enumerate_paths(hg.graph(), a[i], a[i + 1], max_hops));
    if (segments.back().empty()) return {};
  }

  // Odometer over segment choices; the first segment varies slowest.
  std::vector<TracedGPath> out;
  std::vector<std::size_t> choice(segments.size(), 0);
  while (true) {
    TracedGPath t;
    t.gpath.nodes.push_back(a.front());
    t.anchor_indices.push_back(0);
    for (std::size_t s = 0; s < segments.size(); ++s) {
      const auto& seg = segments[s][choice[s]];
      t.gpath.nodes.insert(t.gpath.nodes.end(), seg.nodes.begin() + 1, seg.nodes.end());
      t.gpath.total_weight += seg.total_weight;
      t.anchor_indices.push_back(t.gpath.nodes.size() - 1);
    }
    out.push_back(std::move(t));

    std::size_t s = segments.size();
    while (s > 0) {
      --s;
      if (++choice[s] < segments[s].size()) break;
      choice[s] = 0;
      if (s == 0) return out;
    }
  }
}

TracedGPath trace_along(const Hg2& hg, const Route& r, std::vector<std::string> nodes) {
  auto weight = walk_weight(hg.graph(), nodes);
  if (!weight) throw Error(Errc::InvalidTrace, "node walk is not a path in G");
  const auto a = anchors(r);
  TracedGPath t;
  t.gpath.nodes = std::move(nodes);
  t.gpath.total_weight = *weight;
  const auto& walk = t.gpath.nodes;
  if (a.empty()) {
    if (!walk.empty()) throw Error(Errc::TraceMismatch, "route has no anchors but the walk is not empty");
    return t;
  }
  if (walk.empty() || walk.front() != a.front() || walk.back() != a.back()) {
    throw Error(Errc::TraceMismatch, "walk must start at anchor " + a.front() + " and end at anchor " +
                                         a.back());
  }
  t.anchor_indices.push_back(0);
  std::size_t pos = 0;
  for (std::size_t i = 1; i + 1 < a.size(); ++i) {
    while (pos < walk.size() && walk[pos] != a[i]) ++pos;
    if (pos == walk.size()) {
      throw Error(Errc::TraceMismatch, "anchor " + a[i] + " does not occur in order on the walk");
    }
    t.anchor_indices.push_back(pos);
  }
  if (a.size() > 1) {
    t.anchor_indices.push_back(walk.size() - 1);
  } else if (walk.size() != 1) {
    throw Error(Errc::TraceMismatch, "a single-anchor route traces to that anchor alone");
  }
  return t;
}

void check_trace(const Hg2& hg, const Route& r, const TracedGPath& t) {
  if (!walk_weight(hg.graph(), t.gpath.nodes)) {
    throw Error(Errc::InvalidTrace, "node walk is not a path in G");
  }
  const auto a = anchors(r);
  const auto& walk = t.gpath.nodes;
  const auto& idx = t.anchor_indices;
  bool ok = idx.size() == a.size();
  if (ok && a.empty()) ok = walk.empty();
  if (ok && !a.empty()) {
    ok = idx.front() == 0 && idx.back() + 1 == walk.size() && (a.size() > 1 || walk.size() == 1);
    for (std::size_t i = 0; ok && i < idx.size(); ++i) {
      ok = idx[i] < walk.size() && walk[idx[i]] == a[i] && (i == 0 || idx[i - 1] <= idx[i]);
    }
  }
  if (!ok) throw Error(Errc::TraceMismatch, "walk does not trace the route's anchors");
}

bool has_gloop(const TracedGPath& t) {
  std::set<std::string_view> seen;
  for (const auto& n : t.gpath.nodes) {
    if (!seen.insert(n).second) return true;
  }
  return false;
}

std::string_view to_string(NodeRole role) {
  switch (role) {
    case NodeRole::Participating: return "Participating";
    case NodeRole::AuxiliaryCase1: return "Auxiliary(case 1)";
    case NodeRole::AuxiliaryCase2: return "Auxiliary(case 2)";
    case NodeRole::AuxiliaryCase3: return "Auxiliary(case 3)";
  }
  return "Unknown";
}

std::map<std::string, NodeRole> classify_nodes(const Hg2& hg, const Route& r,
                                               const TracedGPath& t) {
  check_trace(hg, r, t);
  const auto a = anchors(r);
  const std::set<std::string_view> participating(a.begin(), a.end());
  std::set<std::string_view> route_nodes, route_edges;
  for (const auto& n : r.nodes) route_nodes.insert(n.h_node);
  for (const auto& e : r.edges) route_edges.insert(e.h_edge);

  std::map<std::string, NodeRole> out;
  for (const auto& g : t.gpath.nodes) {
    if (out.contains(g)) continue;
    if (participating.contains(g)) {
      out.emplace(g, NodeRole::Participating);
      continue;
    }
    bool any = false;
    bool into_route = false;
    for (const auto& c : hg.connectors().node) {
      if (c.g_node != g) continue;
      any = true;
      into_route = into_route || route_nodes.contains(c.h_node);
    }
    for (const auto& c : hg.connectors().edge) {
      if (c.g_node != g) continue;
      any = true;
      into_route = into_route || route_edges.contains(c.h_edge);
    }
    out.emplace(g, !any          ? NodeRole::AuxiliaryCase1
                   : into_route ? NodeRole::AuxiliaryCase3
                                : NodeRole::AuxiliaryCase2);
  }
  return out;
}

}  // namespace hg2
