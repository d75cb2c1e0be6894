#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "hg2/cost.hpp"
#include "hg2/error.hpp"
#include "hg2/hg2.hpp"
#include "hg2/io.hpp"

namespace hg2::cli {
namespace {

using nlohmann::ordered_json;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  auto flush = [&] {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? std::string{} : item.substr(b, e - b + 1));
    item.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      flush();
    } else {
      item += ch;
    }
  }
  flush();
  return out;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out;
}

ordered_json weight_json(Weight w) {
  if (std::trunc(w) == w && std::abs(w) < 9007199254740992.0) {
    return ordered_json(static_cast<std::int64_t>(w));
  }
  return ordered_json(w);
}

ordered_json route_json(const Route& r) {
  return ordered_json{{"route", to_string(r)},
                      {"hyperpath", r.hyperpath().sequence()},
                      {"anchors", anchors(r)}};
}

Route parse_route(const Hg2& hg, const std::string& spec) {
  const auto seq = split_list(spec);
  return pairs_of(hg, Hyperpath::from_sequence(seq));
}

struct Options {
  std::string file;
  std::string from;
  std::string to;
  std::string route;
  std::string gpath;
  std::string output;
  bool json = false;
};

int cmd_validate(const Hg2&, std::ostream& out) {
  out << "OK\n";
  return kOk;
}

int cmd_routes(const Hg2& hg, const Options& o, std::ostream& out, std::ostream& err) {
  const auto routes = enumerate_routes(hg, o.from, o.to);
  if (o.json) {
    ordered_json doc{{"from", o.from}, {"to", o.to}, {"routes", ordered_json::array()}};
    for (const auto& r : routes) doc["routes"].push_back(route_json(r));
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& r : routes) out << to_string(r) << "\n";
  }
  if (routes.empty()) {
    err << "no route from " << o.from << " to " << o.to << "\n";
    return kInvalid;
  }
  return kOk;
}

int cmd_check(const Hg2& hg, const Options& o, std::ostream& out) {
  const auto check = validate_route(hg, parse_route(hg, o.route));
  if (check) {
    out << "Valid\n";
    return kOk;
  }
  out << "Invalid: " << check.reason << "\n";
  return kInvalid;
}

int cmd_mincost(const Hg2& hg, const Options& o, std::ostream& out, std::ostream& err) {
  const auto best = min_cost_path(hg, o.from, o.to);
  if (!best) {
    if (o.json) {
      out << ordered_json{{"from", o.from}, {"to", o.to}, {"route", nullptr}}.dump(2) << "\n";
    }
    err << "no route from " << o.from << " to " << o.to << "\n";
    return kInvalid;
  }
  const auto& b = best->breakdown;
  if (o.json) {
    ordered_json doc{{"from", o.from},
                     {"to", o.to},
                     {"route", to_string(best->route)},
                     {"hyperpath", best->route.hyperpath().sequence()},
                     {"gpath", best->trace.gpath.nodes},
                     {"route_cost", weight_json(b.route_cost)},
                     {"gpath_cost", weight_json(b.gpath_cost)},
                     {"connector_cost", weight_json(b.connector_cost)},
                     {"total", weight_json(b.total)}};
    out << doc.dump(2) << "\n";
  } else {
    out << "route: " << to_string(best->route) << "\n"
        << "gpath: " << join(best->trace.gpath.nodes) << "\n"
        << "route_cost: " << format_weight(b.route_cost) << "\n"
        << "gpath_cost: " << format_weight(b.gpath_cost) << "\n"
        << "connector_cost: " << format_weight(b.connector_cost) << "\n"
        << "total: " << format_weight(b.total) << "\n";
  }
  return kOk;
}

int cmd_classify(const Hg2& hg, const Options& o, std::ostream& out) {
  const auto route = parse_route(hg, o.route);
  if (auto check = validate_route(hg, route); !check) {
    out << "Invalid: " << check.reason << "\n";
    return kInvalid;
  }
  TracedGPath trace;
  if (!o.gpath.empty()) {
    trace = trace_along(hg, route, split_list(o.gpath));
  } else {
    auto traces = trace_gpaths(hg, route, hg.graph().nodes().size());
    if (traces.empty()) {
      out << "Invalid: route has no trace in G\n";
      return kInvalid;
    }
    trace = std::move(traces.front());
  }
  const auto roles = classify_nodes(hg, route, trace);
  out << "route: " << to_string(route) << "\n";
  out << "gpath: " << join(trace.gpath.nodes) << "\n";
  std::set<std::string> printed;
  for (const auto& n : trace.gpath.nodes) {
    if (printed.insert(n).second) out << n << ": " << to_string(roles.at(n)) << "\n";
  }
  return kOk;
}

int cmd_dot(const Hg2& hg, const Options& o, std::ostream& out, std::ostream& err) {
  const auto dot = io::export_dot(hg);
  if (o.output.empty()) {
    out << dot;
    return kOk;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!(file << dot)) {
    err << "error: cannot write " << o.output << "\n";
    return kUsage;
  }
  return kOk;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::InvalidRoute:
    case Errc::InvalidTrace:
    case Errc::TraceMismatch:
    case Errc::NotAHyperpath:
      return kInvalid;
    default:
      return kUsage;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypergraph-graph (HG(2)) instance tool", "hg2"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "Load FILE and report OK or the first error");
  auto* routes = app.add_subcommand("routes", "List valid routes between two hypernodes");
  auto* check = app.add_subcommand("check", "Validate one route given as n1,E1,n2,...");
  auto* mincost = app.add_subcommand("mincost", "Least-cost route and graph path with cost breakdown");
  auto* classify = app.add_subcommand("classify", "Participating/auxiliary role of each traced graph node");
  auto* dot = app.add_subcommand("dot", "Export the instance as a Graphviz digraph");

  for (auto* sub : {validate, routes, check, mincost, classify, dot}) {
    sub->add_option("file", o.file, "Instance JSON file")->required();
  }
  for (auto* sub : {routes, mincost}) {
    sub->add_option("--from", o.from, "Source hypernode")->required();
    sub->add_option("--to", o.to, "Target hypernode")->required();
    sub->add_flag("--json", o.json, "Machine-readable output");
  }
  for (auto* sub : {check, classify}) {
    sub->add_option("--route", o.route, "Hyperpath as comma-separated nodes and hyperedge ids")
        ->required();
  }
  classify->add_option("--gpath", o.gpath, "Graph walk as comma-separated nodes");
  dot->add_option("-o,--output", o.output, "Write to this path instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const auto hg = io::load_file(o.file);
    if (validate->parsed()) return cmd_validate(hg, out);
    if (routes->parsed()) return cmd_routes(hg, o, out, err);
    if (check->parsed()) return cmd_check(hg, o, out);
    if (mincost->parsed()) return cmd_mincost(hg, o, out, err);
    if (classify->parsed()) return cmd_classify(hg, o, out);
    return cmd_dot(hg, o, out, err);
  } catch (const Error& e) {
    const int code = exit_code_for(e.code());
    if (code == kInvalid) {
      out << "Invalid: " << e.what() << "\n";
    } else {
      err << "error: " << e.what();
      if (!e.location().empty()) err << " (at " << e.location() << ")";
      err << "\n";
    }
    return code;
  }
}

}  // namespace hg2::cli
