#pragma once

#include <string>

#include <json.hpp>

#include "lbw/bounds.hpp"
#include "lbw/congest.hpp"
#include "lbw/gadgets.hpp"
#include "lbw/graph.hpp"
#include "lbw/network.hpp"
#include "lbw/three_party.hpp"

namespace lbw {

using Json = nlohmann::json;

// Graph schema: { "n": int, "edges": [[u,v],...], "labels": {"idx": "text"} }
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// PartitionedGraph schema:
// { "n": int, "carol": [[u,v]...], "david": [[u,v]...], "meta": {...} }
Json partitioned_to_json(const PartitionedGraph& g);
PartitionedGraph partitioned_from_json(const Json& j);

Json network_to_json(const HardNetwork& net);
Json ledger_to_json(const CostLedger& ledger);
std::string ledger_to_csv(const CostLedger& ledger);
Json pipeline_report_to_json(const PipelineReport& r);
Json bound_report_to_json(const BoundReport& r);

// One JSON record per line: round records then a final outputs record.
std::string transcript_to_jsonl(const Transcript& t, const Graph& g,
                                const std::vector<std::optional<Bytes>>& outputs);

std::string graph_to_dot(const Graph& g);
// Edge-share coloring: Carol red, David blue.
std::string partitioned_to_dot(const PartitionedGraph& g);
// Position-based layout hints on every node.
std::string network_to_dot(const HardNetwork& net, const EdgeMask* mask);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace lbw
