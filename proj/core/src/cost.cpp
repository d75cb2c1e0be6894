#include "hg2/cost.hpp"

#include "hg2/error.hpp"

namespace hg2 {

Weight route_cost(const Hg2& hg, const Route& r) {
  if (auto check = validate_route(hg, r); !check) {
    throw Error(Errc::InvalidRoute, "invalid route: " + check.reason);
  }
  Weight sum = 0;
  for (const auto& e : r.edges) sum += hg.hypergraph().edge(e.h_edge).weight;
  return sum;
}

Weight gpath_cost(const Hg2& hg, const TracedGPath& t) {
  auto w = walk_weight(hg.graph(), t.gpath.nodes);
  if (!w) throw Error(Errc::InvalidTrace, "node walk is not a path in G");
  return *w;
}

Weight connector_cost(const Hg2& hg, const Route& r, const TracedGPath& t) {
  check_trace(hg, r, t);
  Weight sum = 0;
  for (const auto& n : r.nodes) {
    if (!n.anchor) continue;
    const auto* c = hg.node_connector(n.h_node);
    if (c == nullptr || c->g_node != *n.anchor) {
      throw Error(Errc::TraceMismatch, "node pair " + to_string(n) + " has no matching connector");
    }
    sum += c->weight;
  }
  for (const auto& e : r.edges) {
    if (!e.anchor) continue;
    const auto* c = hg.edge_connector(e.h_edge);
    if (c == nullptr || c->g_node != *e.anchor) {
      throw Error(Errc::TraceMismatch, "edge pair " + to_string(e) + " has no matching connector");
    }
    sum += c->weight;
  }
  return sum;
}

CostBreakdown total_cost(const Hg2& hg, const Route& r, const TracedGPath& t) {
  CostBreakdown b;
  b.route_cost = route_cost(hg, r);
  b.gpath_cost = gpath_cost(hg, t);
  b.connector_cost = connector_cost(hg, r, t);
  b.total = b.route_cost + b.gpath_cost + b.connector_cost;
  return b;
}

namespace {

TracedGPath cheapest_trace(const Hg2& hg, const Route& r) {
  const auto a = anchors(r);
  TracedGPath t;
  if (a.empty()) return t;
  t.gpath.nodes.push_back(a.front());
  t.anchor_indices.push_back(0);
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    auto seg = shortest_path(hg.graph(), a[i], a[i + 1]);
    if (!seg) throw Error(Errc::InvalidRoute, "no path " + a[i] + "→" + a[i + 1] + " in G");
    t.gpath.nodes.insert(t.gpath.nodes.end(), seg->nodes.begin() + 1, seg->nodes.end());
    t.gpath.total_weight += seg->total_weight;
    t.anchor_indices.push_back(t.gpath.nodes.size() - 1);
  }
  return t;
}

}  // namespace

std::optional<CostedPath> min_cost_path(const Hg2& hg, std::string_view s, std::string_view t) {
  std::optional<CostedPath> best;
  for (auto& r : enumerate_routes(hg, s, t)) {
    auto trace = cheapest_trace(hg, r);
    auto b = total_cost(hg, r, trace);
    if (!best || b.total < best->breakdown.total) {
      best = CostedPath{std::move(r), std::move(trace), b};
    }
  }
  return best;
}

}  // namespace hg2
