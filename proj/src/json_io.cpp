#include "lbw/json_io.hpp"

#include <fstream>
#include <sstream>

namespace lbw {

namespace {
Json edges_to_json(const std::vector<Edge>& edges) {
  Json arr = Json::array();
  for (const auto& [u, v] : edges) arr.push_back({u, v});
  return arr;
}

std::vector<Edge> edges_from_json(const Json& arr) {
  std::vector<Edge> out;
  for (const auto& e : arr) out.emplace_back(e.at(0).get<NodeId>(), e.at(1).get<NodeId>());
  return out;
}
}  // namespace

Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.node_count();
  j["edges"] = edges_to_json(g.edges());
  Json labels = Json::object();
  for (const auto& [idx, text] : g.labels) labels[std::to_string(idx)] = text;
  j["labels"] = labels;
  return j;
}

Graph graph_from_json(const Json& j) {
  Graph g(j.at("n").get<NodeId>());
  for (const auto& e : edges_from_json(j.at("edges"))) g.add_edge(e.first, e.second);
  if (j.contains("labels"))
    for (const auto& [key, value] : j.at("labels").items())
      g.labels[static_cast<NodeId>(std::stoul(key))] = value.get<std::string>();
  return g;
}

Json partitioned_to_json(const PartitionedGraph& g) {
  Json j;
  j["n"] = g.node_count;
  j["carol"] = edges_to_json(g.carol_edges);
  j["david"] = edges_to_json(g.david_edges);
  Json meta = Json::object();
  for (const auto& [k, v] : g.meta) meta[k] = v;
  meta["matching_required"] = g.matching_required ? "1" : "0";
  j["meta"] = meta;
  return j;
}

PartitionedGraph partitioned_from_json(const Json& j) {
  PartitionedGraph g;
  g.node_count = j.at("n").get<NodeId>();
  g.carol_edges = edges_from_json(j.at("carol"));
  g.david_edges = edges_from_json(j.at("david"));
  if (j.contains("meta"))
    for (const auto& [k, v] : j.at("meta").items()) g.meta[k] = v.get<std::string>();
  auto it = g.meta.find("matching_required");
  g.matching_required = it != g.meta.end() && it->second == "1";
  g.meta.erase("matching_required");
  return g;
}

Json network_to_json(const HardNetwork& net) {
  Json j;
  const auto& p = net.params();
  j["gamma"] = p.gamma;
  j["L"] = p.L;
  j["B"] = p.bandwidth;
  j["k"] = p.k;
  j["n"] = net.graph().node_count();
  Json nodes = Json::array();
  for (NodeId v = 0; v < net.graph().node_count(); ++v) {
    const auto& r = net.roles()[v];
    nodes.push_back({{"id", v},
                     {"kind", r.kind == NodeRole::Kind::Path ? "path" : "highway"},
                     {"line", r.line},
                     {"pos", r.position}});
  }
  j["nodes"] = nodes;
  Json edges = Json::array();
  for (size_t e = 0; e < net.graph().edges().size(); ++e) {
    const auto& [u, v] = net.graph().edges()[e];
    edges.push_back({u, v, edge_cat_name(net.edge_categories()[e])});
  }
  j["edges"] = edges;
  return j;
}

Json ledger_to_json(const CostLedger& ledger) {
  Json j;
  j["k"] = ledger.k;
  j["B"] = ledger.bandwidth;
  j["round_budget_6kB"] = ledger.round_budget();
  j["player_budget_2Bk"] = ledger.player_budget();
  j["server_budget_2kB"] = ledger.server_budget();
  j["total_charged"] = ledger.total_charged();
  j["max_round_charge"] = ledger.max_round_charge();
  j["within_budgets"] = ledger.within_budgets();
  Json rounds = Json::array();
  for (size_t t = 0; t < ledger.rounds.size(); ++t) {
    const auto& r = ledger.rounds[t];
    rounds.push_back({{"round", t},
                      {"to_carol", r.to_carol},
                      {"to_david", r.to_david},
                      {"to_server", r.to_server},
                      {"carol_sent", r.carol_sent},
                      {"david_sent", r.david_sent},
                      {"server_sent", r.server_sent},
                      {"charged", r.charged()}});
  }
  j["rounds"] = rounds;
  return j;
}

std::string ledger_to_csv(const CostLedger& ledger) {
  std::ostringstream os;
  os << "round,to_carol,to_david,to_server,carol_sent,david_sent,server_sent,charged\n";
  for (size_t t = 0; t < ledger.rounds.size(); ++t) {
    const auto& r = ledger.rounds[t];
    os << t << ',' << r.to_carol << ',' << r.to_david << ',' << r.to_server << ','
       << r.carol_sent << ',' << r.david_sent << ',' << r.server_sent << ','
       << r.charged() << "\n";
  }
  return os.str();
}

Json pipeline_report_to_json(const PipelineReport& r) {
  return Json{{"problem", r.problem},
              {"n_bits", r.n_bits},
              {"padded_bits", r.padded_bits},
              {"L", r.L},
              {"k", r.k},
              {"gamma", r.gamma},
              {"universe", r.universe},
              {"B", r.bandwidth},
              {"rounds", r.rounds},
              {"expected", r.expected},
              {"direct_verdict", r.direct_verdict},
              {"three_party_verdict", r.three_party_verdict},
              {"unanimous", r.unanimous},
              {"charged_total", r.charged_total},
              {"max_round_charge", r.max_round_charge},
              {"round_budget", r.round_budget},
              {"cost_ok", r.cost_ok},
              {"ok", r.ok}};
}

Json bound_report_to_json(const BoundReport& r) {
  Json j{{"kind", r.kind},
         {"n", r.n},
         {"B", r.bandwidth},
         {"c", r.c},
         {"cprime", r.cprime},
         {"raw_L", r.raw_L},
         {"L", r.L},
         {"k", r.k},
         {"gamma", r.gamma},
         {"gamma_bumped", r.gamma_bumped},
         {"bound_value", r.bound_value},
         {"contradiction_threshold", r.contradiction_threshold},
         {"t_budget", r.t_budget},
         {"size_consistent", r.size_consistent}};
  if (r.kind == "optimization") {
    j["W"] = r.aspect;
    j["alpha"] = r.alpha;
    j["beta"] = r.beta;
    j["min_branch"] = r.min_branch;
    j["critical_beta"] = r.critical_beta;
    j["far_weight_ok"] = r.far_weight_ok;
  }
  return j;
}

std::string transcript_to_jsonl(const Transcript& t, const Graph& g,
                                const std::vector<std::optional<Bytes>>& outputs) {
  std::ostringstream os;
  for (int round = 0; round < t.rounds; ++round) {
    Json rec;
    rec["round"] = round;
    Json msgs = Json::array();
    if (round < static_cast<int>(t.sent.size())) {
      const auto& row = t.sent[round];
      for (size_t e = 0; e < g.edges().size(); ++e) {
        const auto& [u, v] = g.edges()[e];
        if (row[2 * e])
          msgs.push_back({{"from", u}, {"to", v}, {"bits", row[2 * e]->to_string()}});
        if (row[2 * e + 1])
          msgs.push_back({{"from", v}, {"to", u}, {"bits", row[2 * e + 1]->to_string()}});
      }
    }
    rec["messages"] = msgs;
    os << rec.dump() << "\n";
  }
  Json final;
  final["outputs"] = Json::array();
  for (NodeId v = 0; v < outputs.size(); ++v) {
    if (!outputs[v]) continue;
    std::ostringstream hex;
    for (uint8_t b : *outputs[v]) {
      static const char* digits = "0123456789abcdef";
      hex << digits[b >> 4] << digits[b & 0xf];
    }
    final["outputs"].push_back({{"node", v}, {"value", hex.str()}});
  }
  os << final.dump() << "\n";
  return os.str();
}

std::string graph_to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (NodeId v = 0; v < g.node_count(); ++v) {
    os << "  n" << v;
    auto it = g.labels.find(v);
    if (it != g.labels.end()) os << " [label=\"" << it->second << "\"]";
    os << ";\n";
  }
  for (const auto& [u, v] : g.edges()) os << "  n" << u << " -- n" << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string partitioned_to_dot(const PartitionedGraph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (NodeId v = 0; v < g.node_count; ++v) os << "  n" << v << ";\n";
  for (const auto& [u, v] : g.carol_edges)
    os << "  n" << u << " -- n" << v << " [color=red];\n";
  for (const auto& [u, v] : g.david_edges)
    os << "  n" << u << " -- n" << v << " [color=blue];\n";
  os << "}\n";
  return os.str();
}

std::string network_to_dot(const HardNetwork& net, const EdgeMask* mask) {
  std::ostringstream os;
  os << "graph N {\n";
  for (NodeId v = 0; v < net.graph().node_count(); ++v) {
    const auto& r = net.roles()[v];
    // Highways drawn above the paths, by line.
    int row = r.kind == NodeRole::Kind::Path ? -r.line : r.line;
    os << "  n" << v << " [pos=\"" << r.position << "," << row << "!\", label=\""
       << (r.kind == NodeRole::Kind::Path ? "v" : "h") << r.line << "_" << r.position
       << "\"];\n";
  }
  for (size_t e = 0; e < net.graph().edges().size(); ++e) {
    const auto& [u, v] = net.graph().edges()[e];
    os << "  n" << u << " -- n" << v;
    if (mask && (*mask)[e]) os << " [penwidth=2]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), Err::BadInput, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), Err::BadInput, "cannot write " + path);
  out << content;
}

}  // namespace lbw
