#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <random>

#include "hg2/error.hpp"
#include "hg2/hg2.hpp"
#include "support/instances.hpp"

namespace hg2 {
namespace {

using ::testing::ElementsAre;
using ::testing::IsEmpty;
using testing::f1_spec;
using testing::InstanceSpec;

Hyperpath path(std::vector<std::string> seq) { return Hyperpath::from_sequence(seq); }

const std::vector<std::string> kE3Path{"1", "E1", "3", "E2", "5", "E3", "7"};
const std::vector<std::string> kE4Path{"1", "E1", "3", "E2", "6", "E4", "7"};
const std::vector<std::string> kBrokenPath{"1", "E1", "3", "E2", "5", "E4", "7"};

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return Errc::ParseError;
}

TEST(Hg2Build, Sample) {
  const auto hg = f1_spec().build();
  EXPECT_EQ(hg.connectors().node.size(), 3u);
  EXPECT_EQ(hg.connectors().edge.size(), 3u);
  EXPECT_EQ(hg.node_connector("5")->g_node, "d");
  EXPECT_EQ(hg.edge_connector("E4")->g_node, "f");
  EXPECT_EQ(hg.node_connector("3"), nullptr);
}

TEST(Hg2Build, ConnectorErrors) {
  auto dup = f1_spec();
  dup.connectors.node.push_back({"1", "b", 1});
  EXPECT_EQ(error_of([&] { dup.build(); }), Errc::DuplicateSourceConnector);

  auto dangling = f1_spec();
  dangling.connectors.node.push_back({"9", "a", 1});
  EXPECT_EQ(error_of([&] { dangling.build(); }), Errc::DanglingConnector);

  auto dangling_g = f1_spec();
  dangling_g.connectors.edge.push_back({"E2", "zz", 1});
  EXPECT_EQ(error_of([&] { dangling_g.build(); }), Errc::DanglingConnector);

  auto dup_edge = f1_spec();
  dup_edge.connectors.edge.push_back({"E1", "a", 1});
  EXPECT_EQ(error_of([&] { dup_edge.build(); }), Errc::DuplicateSourceConnector);

  auto negative = f1_spec();
  negative.node_connector("1").weight = -2;
  EXPECT_EQ(error_of([&] { negative.build(); }), Errc::NegativeWeight);
}

TEST(Pairs, NodeAndEdgePairs) {
  const auto hg = f1_spec().build();
  EXPECT_EQ(to_string(node_pair(hg, "1")), "1(a)");
  EXPECT_EQ(to_string(node_pair(hg, "3")), "3()");
  EXPECT_EQ(to_string(node_pair(hg, "5")), "5(d)");
  EXPECT_EQ(to_string(edge_pair(hg, "E1")), "E1(c)");
  EXPECT_EQ(to_string(edge_pair(hg, "E2")), "E2()");
  EXPECT_EQ(to_string(edge_pair(hg, "E4")), "E4(f)");
  EXPECT_EQ(error_of([&] { node_pair(hg, "9"); }), Errc::UnknownId);
  EXPECT_EQ(error_of([&] { edge_pair(hg, "E9"); }), Errc::UnknownId);
}

TEST(RouteOf, MapsPairsInOrder) {
  const auto hg = f1_spec().build();
  EXPECT_EQ(to_string(route_of(hg, path(kE3Path))), "1(a), E1(c), 3(), E2(), 5(d), E3(e), 7()");
  EXPECT_EQ(to_string(route_of(hg, path(kE4Path))), "1(a), E1(c), 3(), E2(), 6(b), E4(f), 7()");
  EXPECT_EQ(to_string(route_of(hg, path({"1", "E1", "3"}))), "1(a), E1(c), 3()");
  EXPECT_EQ(error_of([&] { route_of(hg, path({"3", "E1", "1"})); }), Errc::NotAHyperpath);
  EXPECT_EQ(route_of(hg, path(kE3Path)).hyperpath(), path(kE3Path));
}

TEST(Anchors, SkipEmptyPairs) {
  const auto hg = f1_spec().build();
  EXPECT_THAT(anchors(route_of(hg, path(kE3Path))), ElementsAre("a", "c", "d", "e"));
  EXPECT_THAT(anchors(route_of(hg, path(kBrokenPath))), ElementsAre("a", "c", "d", "f"));
  Route empty{{{"1", std::nullopt}, {"2", std::nullopt}}, {{"E", std::nullopt}}};
  EXPECT_THAT(anchors(empty), IsEmpty());
}

TEST(ValidateRoute, Sample) {
  const auto hg = f1_spec().build();
  EXPECT_TRUE(validate_route(hg, route_of(hg, path(kE3Path))));
  EXPECT_TRUE(validate_route(hg, route_of(hg, path(kE4Path))));

  const auto broken = validate_route(hg, route_of(hg, path(kBrokenPath)));
  EXPECT_FALSE(broken);
  EXPECT_EQ(broken.reason, "no path d→f in G");

  const auto reversed = validate_route(hg, pairs_of(hg, path({"3", "E1", "1"})));
  EXPECT_FALSE(reversed);
  EXPECT_EQ(reversed.reason, "not a hyperpath");
}

TEST(ValidateRoute, RejectsPairsThatDisagreeWithConnectors) {
  const auto hg = f1_spec().build();
  auto r = route_of(hg, path(kE3Path));
  r.nodes[1].anchor = "a";
  EXPECT_FALSE(validate_route(hg, r));
  r = route_of(hg, path(kE3Path));
  r.edges[0].anchor.reset();
  EXPECT_FALSE(validate_route(hg, r));
  EXPECT_FALSE(validate_route(hg, Route{}));
}

TEST(EnumerateRoutes, Sample) {
  const auto hg = f1_spec().build();
  const auto routes = enumerate_routes(hg, "1", "7");
  ASSERT_EQ(routes.size(), 2u);
  EXPECT_EQ(to_string(routes[0]), "1(a), E1(c), 3(), E2(), 5(d), E3(e), 7()");
  EXPECT_EQ(to_string(routes[1]), "1(a), E1(c), 3(), E2(), 6(b), E4(f), 7()");
  EXPECT_THAT(enumerate_routes(hg, "7", "1"), IsEmpty());
  EXPECT_EQ(error_of([&] { enumerate_routes(hg, "1", "1"); }), Errc::DegenerateQuery);
  EXPECT_EQ(error_of([&] { enumerate_routes(hg, "1", "x"); }), Errc::UnknownId);
}

TEST(EnumerateRoutes, DroppingGraphEdgeInvalidatesRoute) {
  auto spec = f1_spec();
  spec.remove_graph_edge("d", "e");
  const auto routes = enumerate_routes(spec.build(), "1", "7");
  ASSERT_EQ(routes.size(), 1u);
  EXPECT_EQ(to_string(routes[0]), "1(a), E1(c), 3(), E2(), 6(b), E4(f), 7()");
}

TEST(TraceGPaths, Sample) {
  const auto hg = f1_spec().build();
  const auto e3 = trace_gpaths(hg, route_of(hg, path(kE3Path)), 6);
  ASSERT_EQ(e3.size(), 1u);
  EXPECT_THAT(e3[0].gpath.nodes, ElementsAre("a", "c", "b", "d", "e"));
  EXPECT_THAT(e3[0].anchor_indices, ElementsAre(0, 1, 3, 4));
  EXPECT_EQ(e3[0].gpath.total_weight, 4);

  const auto e4 = trace_gpaths(hg, route_of(hg, path(kE4Path)), 6);
  ASSERT_EQ(e4.size(), 1u);
  EXPECT_THAT(e4[0].gpath.nodes, ElementsAre("a", "c", "b", "f"));
  EXPECT_THAT(e4[0].anchor_indices, ElementsAre(0, 1, 2, 3));

  EXPECT_EQ(error_of([&] { trace_gpaths(hg, route_of(hg, path(kBrokenPath)), 6); }),
            Errc::InvalidRoute);
}

TEST(TraceGPaths, DegenerateAnchorLists) {
  auto spec = f1_spec();
  spec.connectors = {{{"1", "a", 1}}, {}};
  const auto hg = spec.build();
  const auto single = trace_gpaths(hg, route_of(hg, path({"1", "E1", "3"})), 6);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_THAT(single[0].gpath.nodes, ElementsAre("a"));
  EXPECT_FALSE(has_gloop(single[0]));

  const auto none = trace_gpaths(hg, route_of(hg, path({"3", "E2", "5"})), 6);
  ASSERT_EQ(none.size(), 1u);
  EXPECT_THAT(none[0].gpath.nodes, IsEmpty());
}

TEST(TraceGPaths, EnumeratesEverySegmentCombination) {
  // Two ways from x to y, two ways from y to z.
  InstanceSpec spec{{"1", "2"},
                    {{"E", {"1"}, {"2"}, 1}},
                    {"p", "q", "x", "y", "z"},
                    {{"x", "y", 1}, {"x", "p", 1}, {"p", "y", 1}, {"y", "z", 1}, {"y", "q", 1},
                     {"q", "z", 1}},
                    {{{"1", "x", 1}, {"2", "z", 1}}, {{"E", "y", 1}}}};
  const auto hg = spec.build();
  const auto traces = trace_gpaths(hg, route_of(hg, path({"1", "E", "2"})), 5);
  std::vector<std::vector<std::string>> got;
  for (const auto& t : traces) {
    check_trace(hg, route_of(hg, path({"1", "E", "2"})), t);
    got.push_back(t.gpath.nodes);
  }
  EXPECT_EQ(got, (std::vector<std::vector<std::string>>{{"x", "p", "y", "q", "z"},
                                                        {"x", "p", "y", "z"},
                                                        {"x", "y", "q", "z"},
                                                        {"x", "y", "z"}}));
}

TEST(HasGLoop, Basics) {
  EXPECT_FALSE(has_gloop({{{"a", "c", "b", "d", "e"}, 4}, {}}));
  EXPECT_TRUE(has_gloop({{{"a", "c", "a"}, 2}, {}}));
  EXPECT_FALSE(has_gloop({{{"a"}, 0}, {}}));
}

TEST(HasGLoop, RouteMayRevisitGraphNode) {
  // Anchors a, c, a: both segments are simple, their concatenation is not.
  InstanceSpec spec{{"1", "2", "3"},
                    {{"E1", {"1"}, {"2"}, 1}, {"E2", {"2"}, {"3"}, 1}},
                    {"a", "c"},
                    {{"a", "c", 1}, {"c", "a", 1}},
                    {{{"1", "a", 1}, {"3", "a", 1}}, {{"E1", "c", 1}}}};
  const auto hg = spec.build();
  const auto r = route_of(hg, path({"1", "E1", "2", "E2", "3"}));
  ASSERT_TRUE(validate_route(hg, r));
  const auto traces = trace_gpaths(hg, r, 4);
  ASSERT_EQ(traces.size(), 1u);
  EXPECT_THAT(traces[0].gpath.nodes, ElementsAre("a", "c", "a"));
  EXPECT_TRUE(has_gloop(traces[0]));
}

TEST(ClassifyNodes, SampleCaseTwo) {
  const auto hg = f1_spec().build();
  const auto r = route_of(hg, path(kE3Path));
  const auto t = trace_gpaths(hg, r, 6).front();
  const auto roles = classify_nodes(hg, r, t);
  EXPECT_EQ(roles.at("a"), NodeRole::Participating);
  EXPECT_EQ(roles.at("c"), NodeRole::Participating);
  EXPECT_EQ(roles.at("d"), NodeRole::Participating);
  EXPECT_EQ(roles.at("e"), NodeRole::Participating);
  EXPECT_EQ(roles.at("b"), NodeRole::AuxiliaryCase2);
  EXPECT_EQ(roles.size(), 5u);
}

TEST(ClassifyNodes, CaseOneWithoutConnectors) {
  auto spec = f1_spec();
  spec.remove_node_connector("6");
  const auto hg = spec.build();
  const auto r = route_of(hg, path(kE3Path));
  const auto roles = classify_nodes(hg, r, trace_gpaths(hg, r, 6).front());
  EXPECT_EQ(roles.at("b"), NodeRole::AuxiliaryCase1);
}

TEST(ClassifyNodes, AllParticipatingAndMismatch) {
  const auto hg = f1_spec().build();
  const auto r = route_of(hg, path(kE4Path));
  const auto t = trace_gpaths(hg, r, 6).front();
  for (const auto& [node, role] : classify_nodes(hg, r, t)) {
    EXPECT_EQ(role, NodeRole::Participating) << node;
  }
  auto shifted = t;
  shifted.anchor_indices[1] = 2;
  EXPECT_EQ(error_of([&] { classify_nodes(hg, r, shifted); }), Errc::TraceMismatch);
  TracedGPath off_graph{{{"a", "f"}, 1}, {0, 1}};
  EXPECT_EQ(error_of([&] { classify_nodes(hg, r, off_graph); }), Errc::InvalidTrace);
}

TEST(TraceAlong, PlacesAnchors) {
  const auto hg = f1_spec().build();
  const auto r = route_of(hg, path(kE3Path));
  const auto t = trace_along(hg, r, {"a", "c", "b", "d", "e"});
  EXPECT_EQ(t, trace_gpaths(hg, r, 6).front());
  EXPECT_EQ(error_of([&] { trace_along(hg, r, {"a", "c", "b", "f"}); }), Errc::TraceMismatch);
  EXPECT_EQ(error_of([&] { trace_along(hg, r, {"a", "b"}); }), Errc::InvalidTrace);
}

// Random instances against the permutation/closure oracle.
TEST(EnumerateRoutesProperty, MatchesBruteForce) {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 400; ++trial) {
    const auto spec = testing::random_instance(rng);
    const auto hg = spec.build();
    for (const auto& s : spec.h_nodes) {
      for (const auto& t : spec.h_nodes) {
        if (s == t) continue;
        const auto routes = enumerate_routes(hg, s, t);
        const auto expected = testing::oracle_routes(spec, s, t);
        ASSERT_EQ(routes.size(), expected.size()) << "trial " << trial;
        const auto hyperpaths = enumerate_hyperpaths(hg.hypergraph(), s, t);
        for (std::size_t i = 0; i < routes.size(); ++i) {
          ASSERT_TRUE(validate_route(hg, routes[i]));
          ASSERT_EQ(routes[i].hyperpath().sequence(), expected[i].sequence);
          ASSERT_EQ(anchors(routes[i]), expected[i].anchors);
          ASSERT_EQ(route_of(hg, routes[i].hyperpath()), routes[i]);
          ASSERT_NE(std::find(hyperpaths.begin(), hyperpaths.end(), routes[i].hyperpath()),
                    hyperpaths.end());
          for (const auto& tr : trace_gpaths(hg, routes[i], spec.g_nodes.size())) {
            ASSERT_NO_THROW(check_trace(hg, routes[i], tr));
            const auto a = anchors(routes[i]);
            for (const auto& [node, role] : classify_nodes(hg, routes[i], tr)) {
              const bool anchor = std::find(a.begin(), a.end(), node) != a.end();
              ASSERT_EQ(anchor, role == NodeRole::Participating);
            }
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace hg2
