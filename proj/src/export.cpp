#include "indegraph/export.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace indegraph {

GraphFormat parse_graph_format(const std::string& name) {
  if (name == "dot") return GraphFormat::kDot;
  if (name == "json") return GraphFormat::kJson;
  if (name == "edgelist") return GraphFormat::kEdgeList;
  throw std::invalid_argument("unknown graph format: " + name);
}

namespace {

template <typename F>
void for_each_edge(const IndependentGraph& g, F&& f) {
  for (std::size_t a = 0; a < g.vertex_count(); ++a) {
    const auto& nb = g.neighbors(a);
    for (auto b = nb.find_next(a); b != VertexSet::npos; b = nb.find_next(b)) f(a, b);
  }
}

}  // namespace

std::string export_graph(const IndependentGraph& g, GraphFormat format, bool label_orders) {
  std::ostringstream out;
  const std::uint64_t n = g.modulus().value();
  switch (format) {
    case GraphFormat::kDot:
      out << "graph indep_" << n << " {\n";
      for (std::size_t a = 0; a < g.vertex_count(); ++a) {
        out << "  " << a;
        if (label_orders) {
          out << " [label=\"" << a << " o=" << element_order(a, g.modulus()) << "\"]";
        }
        out << ";\n";
      }
      for_each_edge(g, [&](std::size_t a, std::size_t b) { out << "  " << a << " -- " << b << ";\n"; });
      out << "}\n";
      break;
    case GraphFormat::kEdgeList:
      for_each_edge(g, [&](std::size_t a, std::size_t b) { out << a << ' ' << b << '\n'; });
      break;
    case GraphFormat::kJson: {
      out << "{ \"n\": " << n << ", \"edges\": [";
      bool first = true;
      for_each_edge(g, [&](std::size_t a, std::size_t b) {
        out << (first ? "" : ",") << '[' << a << ',' << b << ']';
        first = false;
      });
      out << "] }\n";
      break;
    }
  }
  return out.str();
}

std::string invariants_to_json(const InvariantSet& inv) {
  nlohmann::ordered_json j;
  j["n"] = inv.n;
  j["edge_count"] = inv.edge_count;
  auto runs = nlohmann::ordered_json::array();
  for (const auto& r : inv.degree_sequence) {
    runs.push_back({{"degree", r.degree}, {"count", r.count}});
  }
  j["degree_sequence"] = std::move(runs);
  j["connected"] = inv.connected;
  auto length = [](const ExtendedLength& l) {
    return l.is_infinite() ? nlohmann::ordered_json("inf") : nlohmann::ordered_json(l.value());
  };
  j["girth"] = length(inv.girth);
  j["diameter"] = length(inv.diameter);
  j["bipartite"] = inv.bipartite;
  j["complete"] = inv.complete;
  auto opt = [](const auto& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
  };
  j["clique_number"] = opt(inv.clique_number);
  j["chromatic_number"] = opt(inv.chromatic_number);
  j["hamiltonian"] = opt(inv.hamiltonian);
  j["partite_count"] = inv.partite_count;
  return j.dump(2) + "\n";
}

}  // namespace indegraph
