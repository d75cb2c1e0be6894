#pragma once

#include <optional>
#include <string_view>

#include "hg2/hg2.hpp"
#include "hg2/weight.hpp"

namespace hg2 {

struct CostBreakdown {
  Weight route_cost = 0;
  Weight gpath_cost = 0;
  Weight connector_cost = 0;
  Weight total = 0;

  friend bool operator==(const CostBreakdown&, const CostBreakdown&) = default;
};

struct CostedPath {
  Route route;
  TracedGPath trace;
  CostBreakdown breakdown;
};

/// Sum of the route's hyperedge weights, once per occurrence.
/// Throws InvalidRoute.
Weight route_cost(const Hg2& hg, const Route& r);

/// Sum of the traversed graph edge weights. Throws InvalidTrace.
Weight gpath_cost(const Hg2& hg, const TracedGPath& t);

/// Sum of the connectors realizing the route's nonempty pairs. Connectors of
/// auxiliary nodes never contribute, so the value depends on `r` alone; `t`
/// is only checked. Throws InvalidTrace or TraceMismatch.
Weight connector_cost(const Hg2& hg, const Route& r, const TracedGPath& t);

/// Throws InvalidRoute, InvalidTrace or TraceMismatch.
CostBreakdown total_cost(const Hg2& hg, const Route& r, const TracedGPath& t);

/// Least total cost over every valid route from `s` to `t` and every trace
/// of that route. For a fixed route the cheapest trace is the concatenation
/// of per-segment shortest paths. Ties go to the earlier route, then to the
/// lexicographically smaller segments. Throws UnknownId or DegenerateQuery.
std::optional<CostedPath> min_cost_path(const Hg2& hg, std::string_view s, std::string_view t);

}  // namespace hg2
