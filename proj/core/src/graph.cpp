#include "hg2/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <queue>

#include "hg2/error.hpp"

namespace hg2 {

Graph Graph::build(std::vector<std::string> nodes, std::vector<GraphEdge> edges) {
  Graph g;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto loc = "/nodes/" + std::to_string(i);
    if (nodes[i].empty()) throw Error(Errc::EmptyLabel, "empty graph node label", loc);
    if (!g.index_.emplace(nodes[i], 0).second) {
      throw Error(Errc::DuplicateNode, "duplicate graph node '" + nodes[i] + "'", loc);
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    const auto loc = "/edges/" + std::to_string(i);
    if (!g.index_.contains(e.src)) {
      throw Error(Errc::UnknownEndpoint, "edge source '" + e.src + "' is not a graph node",
                  loc + "/src");
    }
    if (!g.index_.contains(e.dst)) {
      throw Error(Errc::UnknownEndpoint, "edge target '" + e.dst + "' is not a graph node",
                  loc + "/dst");
    }
    if (!(e.weight >= 0)) {
      throw Error(Errc::NegativeWeight,
                  "edge " + e.src + "->" + e.dst + " has negative weight " + format_weight(e.weight),
                  loc + "/weight");
    }
  }

  std::sort(nodes.begin(), nodes.end());
  std::sort(edges.begin(), edges.end());
  g.nodes_ = std::move(nodes);
  g.edges_ = std::move(edges);
  for (std::size_t i = 0; i < g.nodes_.size(); ++i) g.index_[g.nodes_[i]] = i;

  g.arcs_.resize(g.nodes_.size());
  for (const auto& e : g.edges_) {
    auto& out = g.arcs_[g.index_.find(e.src)->second];
    const auto to = g.index_.find(e.dst)->second;
    auto it = std::find_if(out.begin(), out.end(), [&](const Arc& a) { return a.to == to; });
    if (it == out.end()) {
      out.push_back({to, e.weight});
    } else {
      it->weight = std::min(it->weight, e.weight);
    }
  }
  for (auto& out : g.arcs_) {
    std::sort(out.begin(), out.end(), [](const Arc& a, const Arc& b) { return a.to < b.to; });
  }
  return g;
}

bool Graph::has_node(std::string_view label) const { return index_.contains(label); }

std::size_t Graph::index_of(std::string_view label) const {
  auto it = index_.find(label);
  if (it == index_.end()) {
    throw Error(Errc::UnknownId, "unknown graph node '" + std::string(label) + "'");
  }
  return it->second;
}

std::optional<Weight> Graph::step_weight(std::string_view u, std::string_view v) const {
  auto iu = index_.find(u);
  auto iv = index_.find(v);
  if (iu == index_.end() || iv == index_.end()) return std::nullopt;
  for (const auto& a : arcs_[iu->second]) {
    if (a.to == iv->second) return a.weight;
  }
  return std::nullopt;
}

bool path_exists(const Graph& g, std::string_view u, std::string_view v) {
  const auto from = g.index_of(u);
  const auto to = g.index_of(v);
  std::vector<bool> seen(g.nodes().size(), false);
  std::deque<std::size_t> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    if (x == to) return true;
    for (const auto& a : g.arcs_from(x)) {
      if (!seen[a.to]) {
        seen[a.to] = true;
        queue.push_back(a.to);
      }
    }
  }
  return false;
}

namespace {

constexpr Weight kUnreachable = std::numeric_limits<Weight>::infinity();

// Distance from every node to `target`, by Dijkstra over reversed arcs.
std::vector<Weight> distances_to(const Graph& g, std::size_t target) {
  const auto n = g.nodes().size();
  std::vector<std::vector<Graph::Arc>> reversed(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (const auto& a : g.arcs_from(x)) reversed[a.to].push_back({x, a.weight});
  }
  std::vector<Weight> dist(n, kUnreachable);
  using Item = std::pair<Weight, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[target] = 0;
  heap.push({0, target});
  while (!heap.empty()) {
    auto [d, x] = heap.top();
    heap.pop();
    if (d > dist[x]) continue;
    for (const auto& a : reversed[x]) {
      if (d + a.weight < dist[a.to]) {
        dist[a.to] = d + a.weight;
        heap.push({dist[a.to], a.to});
      }
    }
  }
  return dist;
}

bool tight(Weight via, Weight best) {
  return std::abs(via - best) <= 1e-9 * std::max<Weight>(1, std::abs(best));
}

}  // namespace

std::optional<GPath> shortest_path(const Graph& g, std::string_view u, std::string_view v) {
  const auto from = g.index_of(u);
  const auto to = g.index_of(v);
  const auto dist = distances_to(g, to);
  if (dist[from] == kUnreachable) return std::nullopt;

  // Greedy lexicographic walk over tight arcs: take the smallest successor
  // that can still reach the target without revisiting the current prefix.
  const auto n = g.nodes().size();
  std::vector<bool> on_path(n, false);
  auto reaches_target = [&](std::size_t start) {
    std::vector<bool> seen = on_path;
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      if (x == to) return true;
      for (const auto& a : g.arcs_from(x)) {
        if (!seen[a.to] && dist[a.to] != kUnreachable && tight(a.weight + dist[a.to], dist[x])) {
          seen[a.to] = true;
          queue.push_back(a.to);
        }
      }
    }
    return false;
  };

  std::vector<std::size_t> walk{from};
  on_path[from] = true;
  while (walk.back() != to) {
    const auto x = walk.back();
    std::optional<std::size_t> next;
    for (const auto& a : g.arcs_from(x)) {
      if (on_path[a.to] || dist[a.to] == kUnreachable) continue;
      if (!tight(a.weight + dist[a.to], dist[x])) continue;
      on_path[a.to] = true;
      if (reaches_target(a.to)) {
        next = a.to;
        break;
      }
      on_path[a.to] = false;
    }
    if (!next) return std::nullopt;  // unreachable with consistent distances
    walk.push_back(*next);
  }

  GPath p;
  for (auto i : walk) p.nodes.push_back(g.label(i));
  p.total_weight = *walk_weight(g, p.nodes);
  return p;
}

std::vector<GPath> enumerate_paths(const Graph& g, std::string_view u, std::string_view v,
                                   std::size_t max_hops) {
  const auto from = g.index_of(u);
  const auto to = g.index_of(v);
  std::vector<GPath> out;
  std::vector<bool> on_path(g.nodes().size(), false);
  std::vector<std::size_t> walk{from};
  std::vector<Weight> prefix{0};
  on_path[from] = true;

  std::function<void()> extend = [&] {
    const auto x = walk.back();
    if (x == to) {
      GPath p;
      for (auto i : walk) p.nodes.push_back(g.label(i));
      p.total_weight = prefix.back();
      out.push_back(std::move(p));
      return;
    }
    if (walk.size() - 1 >= max_hops) return;
    for (const auto& a : g.arcs_from(x)) {
      if (on_path[a.to]) continue;
      on_path[a.to] = true;
      walk.push_back(a.to);
      prefix.push_back(prefix.back() + a.weight);
      extend();
      prefix.pop_back();
      walk.pop_back();
      on_path[a.to] = false;
    }
  };
  extend();
  return out;
}

std::optional<Weight> walk_weight(const Graph& g, const std::vector<std::string>& nodes) {
  Weight total = 0;
  for (const auto& n : nodes) {
    if (!g.has_node(n)) return std::nullopt;
  }
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    auto w = g.step_weight(nodes[i], nodes[i + 1]);
    if (!w) return std::nullopt;
    total += *w;
  }
  return total;
}

}  // namespace hg2
