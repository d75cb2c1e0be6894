#include "hg2/io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "hg2/error.hpp"

namespace hg2::io {
namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& what, const std::string& where) {
  throw Error(Errc::SchemaError, what + " at " + (where.empty() ? "/" : where), where);
}

const char* type_name(const json& j) { return j.type_name(); }

void expect_object(const json& j, const std::string& where,
                   std::initializer_list<std::string_view> required,
                   std::initializer_list<std::string_view> optional = {}) {
  if (!j.is_object()) schema_error(std::string("expected object, got ") + type_name(j), where);
  for (auto key : required) {
    if (!j.contains(key)) schema_error("missing field '" + std::string(key) + "'", where);
  }
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto k : required) known = known || k == key;
    for (auto k : optional) known = known || k == key;
    if (!known) schema_error("unexpected field '" + key + "'", where + "/" + key);
  }
}

const json& expect_array(const json& j, const std::string& where) {
  if (!j.is_array()) schema_error(std::string("expected array, got ") + type_name(j), where);
  return j;
}

std::string expect_string(const json& j, const std::string& where) {
  if (!j.is_string()) schema_error(std::string("expected string, got ") + type_name(j), where);
  return j.get<std::string>();
}

std::vector<std::string> string_list(const json& j, const std::string& where) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < expect_array(j, where).size(); ++i) {
    out.push_back(expect_string(j[i], where + "/" + std::to_string(i)));
  }
  return out;
}

Weight weight_of(const json& obj, const std::string& where) {
  if (!obj.contains("weight")) return 1.0;
  const auto& w = obj["weight"];
  if (!w.is_number()) schema_error(std::string("expected number, got ") + type_name(w), where + "/weight");
  return w.get<double>();
}

template <typename Build>
auto semantic(const std::string& prefix, Build&& build) {
  try {
    return build();
  } catch (const Error& e) {
    throw Error(Errc::SemanticError, e.code(),
                std::string(to_string(e.code())) + ": " + e.what(), prefix + e.location());
  }
}

std::string json_string(std::string_view s) { return json(s).dump(); }

}  // namespace

Hg2 load(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, std::string("malformed JSON: ") + e.what(),
                "byte " + std::to_string(e.byte));
  }
  expect_object(doc, "", {"hypergraph", "graph", "connectors"});

  const auto& hj = doc["hypergraph"];
  expect_object(hj, "/hypergraph", {"nodes", "edges"});
  auto h_nodes = string_list(hj["nodes"], "/hypergraph/nodes");
  std::vector<HyperEdge> h_edges;
  const auto& hes = expect_array(hj["edges"], "/hypergraph/edges");
  for (std::size_t i = 0; i < hes.size(); ++i) {
    const auto at = "/hypergraph/edges/" + std::to_string(i);
    expect_object(hes[i], at, {"id", "head", "tail"}, {"weight"});
    h_edges.push_back({expect_string(hes[i]["id"], at + "/id"), string_list(hes[i]["head"], at + "/head"),
                       string_list(hes[i]["tail"], at + "/tail"), weight_of(hes[i], at)});
  }

  const auto& gj = doc["graph"];
  expect_object(gj, "/graph", {"nodes", "edges"});
  auto g_nodes = string_list(gj["nodes"], "/graph/nodes");
  std::vector<GraphEdge> g_edges;
  const auto& ges = expect_array(gj["edges"], "/graph/edges");
  for (std::size_t i = 0; i < ges.size(); ++i) {
    const auto at = "/graph/edges/" + std::to_string(i);
    expect_object(ges[i], at, {"src", "dst"}, {"weight"});
    g_edges.push_back({expect_string(ges[i]["src"], at + "/src"),
                       expect_string(ges[i]["dst"], at + "/dst"), weight_of(ges[i], at)});
  }

  const auto& cj = doc["connectors"];
  expect_object(cj, "/connectors", {"node", "edge"});
  ConnectorSet c;
  for (const auto* kind : {"node", "edge"}) {
    const auto base = std::string("/connectors/") + kind;
    const auto& list = expect_array(cj[kind], base);
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto at = base + "/" + std::to_string(i);
      expect_object(list[i], at, {"h", "g"}, {"weight"});
      auto h = expect_string(list[i]["h"], at + "/h");
      auto g = expect_string(list[i]["g"], at + "/g");
      if (std::string_view(kind) == "node") {
        c.node.push_back({std::move(h), std::move(g), weight_of(list[i], at)});
      } else {
        c.edge.push_back({std::move(h), std::move(g), weight_of(list[i], at)});
      }
    }
  }

  auto h = semantic("/hypergraph", [&] { return Hypergraph::build(std::move(h_nodes), std::move(h_edges)); });
  auto g = semantic("/graph", [&] { return Graph::build(std::move(g_nodes), std::move(g_edges)); });
  return semantic("", [&] { return Hg2::build(std::move(h), std::move(g), std::move(c)); });
}

Hg2 load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return load(text.str());
}

std::string save(const Hg2& hg) {
  std::ostringstream out;
  auto list = [&](const std::vector<std::string>& items) {
    out << "[";
    for (std::size_t i = 0; i < items.size(); ++i) out << (i ? ", " : "") << json_string(items[i]);
    out << "]";
  };
  // Emits `items` as a JSON array with one compact object per line.
  auto block = [&](const auto& items, auto&& emit) {
    if (items.empty()) {
      out << "[]";
      return;
    }
    out << "[\n";
    for (std::size_t i = 0; i < items.size(); ++i) {
      out << "      {";
      emit(items[i]);
      out << "}" << (i + 1 < items.size() ? ",\n" : "\n");
    }
    out << "    ]";
  };

  const auto& c = hg.connectors();
  out << "{\n  \"connectors\": {\n    \"edge\": ";
  block(c.edge, [&](const EdgeConnector& k) {
    out << "\"g\": " << json_string(k.g_node) << ", \"h\": " << json_string(k.h_edge)
        << ", \"weight\": " << format_weight(k.weight);
  });
  out << ",\n    \"node\": ";
  block(c.node, [&](const NodeConnector& k) {
    out << "\"g\": " << json_string(k.g_node) << ", \"h\": " << json_string(k.h_node)
        << ", \"weight\": " << format_weight(k.weight);
  });
  out << "\n  },\n  \"graph\": {\n    \"edges\": ";
  block(hg.graph().edges(), [&](const GraphEdge& e) {
    out << "\"dst\": " << json_string(e.dst) << ", \"src\": " << json_string(e.src)
        << ", \"weight\": " << format_weight(e.weight);
  });
  out << ",\n    \"nodes\": ";
  list(hg.graph().nodes());
  out << "\n  },\n  \"hypergraph\": {\n    \"edges\": ";
  block(hg.hypergraph().edges(), [&](const HyperEdge& e) {
    out << "\"head\": ";
    list(e.head);
    out << ", \"id\": " << json_string(e.id) << ", \"tail\": ";
    list(e.tail);
    out << ", \"weight\": " << format_weight(e.weight);
  });
  out << ",\n    \"nodes\": ";
  list(hg.hypergraph().nodes());
  out << "\n  }\n}\n";
  return out.str();
}

std::string canonicalize(std::string_view text) { return save(load(text)); }

std::string export_dot(const Hg2& hg) {
  std::ostringstream out;
  auto id = [](std::string_view prefix, std::string_view label) {
    return json_string(std::string(prefix) + ":" + std::string(label));
  };
  const auto& h = hg.hypergraph();
  const auto& g = hg.graph();

  out << "digraph hg2 {\n";
  out << "  // connectors point one way, from the hypergraph layer to the graph layer\n";
  if (!h.nodes().empty() || !h.edges().empty()) {
    out << "  subgraph cluster_hypergraph {\n    label=\"hypergraph\";\n";
    for (const auto& n : h.nodes()) {
      out << "    " << id("h", n) << " [label=" << json_string(n) << ", shape=circle];\n";
    }
    for (const auto& e : h.edges()) {
      out << "    " << id("e", e.id) << " [label=" << json_string(e.id + " (" + format_weight(e.weight) + ")")
          << ", shape=box];\n";
    }
    out << "  }\n";
  }
  if (!g.nodes().empty()) {
    out << "  subgraph cluster_graph {\n    label=\"graph\";\n";
    for (const auto& n : g.nodes()) {
      out << "    " << id("g", n) << " [label=" << json_string(n) << ", shape=ellipse];\n";
    }
    out << "  }\n";
  }
  for (const auto& e : h.edges()) {
    for (const auto& n : e.head) out << "  " << id("h", n) << " -> " << id("e", e.id) << " [style=solid];\n";
    for (const auto& n : e.tail) out << "  " << id("e", e.id) << " -> " << id("h", n) << " [style=solid];\n";
  }
  for (const auto& e : g.edges()) {
    out << "  " << id("g", e.src) << " -> " << id("g", e.dst) << " [style=solid, label="
        << json_string(format_weight(e.weight)) << "];\n";
  }
  for (const auto& k : hg.connectors().node) {
    out << "  " << id("h", k.h_node) << " -> " << id("g", k.g_node)
        << " [style=dashed, arrowhead=box, label=" << json_string(format_weight(k.weight)) << "];\n";
  }
  for (const auto& k : hg.connectors().edge) {
    out << "  " << id("e", k.h_edge) << " -> " << id("g", k.g_node)
        << " [style=bold, label=" << json_string(format_weight(k.weight)) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace hg2::io
