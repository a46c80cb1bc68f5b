#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "labelkit/graph.hpp"
#include "labelkit/node_labeling.hpp"
#include "labelkit/wl.hpp"

namespace labelkit {

using json = nlohmann::json;

/// Graph JSON: {"n", "directed", "edges": [[i, j, feat...]], "node_features": [[...]]}.
/// `one_based` shifts node ids on the way out and in.
json graph_to_json(const Graph& g, bool one_based = true);
Graph graph_from_json(const json& j, bool one_based = true);

/// Hypergraph JSON: {"n", "hyperedges": [[members...]], "node_features", "hyperedge_features"}.
json hypergraph_to_json(const Hypergraph& h, bool one_based = true);
Hypergraph hypergraph_from_json(const json& j, bool one_based = true);

json poset_to_json(const NodePoset& s, bool one_based = true);
NodePoset poset_from_json(const json& j, bool one_based = true);

struct EdgeListOptions {
  bool one_based = true;
  bool directed = false;
  bool allow_empty = false;
  /// Node count; 0 means "largest id seen".
  int n = 0;
};

struct ParsedGraph {
  Graph graph;
  std::vector<std::string> warnings;
};

/// One "i j" per line; blank lines and lines starting with '#' are skipped.
/// Errors carry the 1-based line number. Repeated edges collapse with a warning.
ParsedGraph parse_edge_list(std::istream& in, const EdgeListOptions& opts = {});

enum class GraphFormat { automatic, json, edge_list };

/// automatic picks JSON for a ".json" suffix and the edge list otherwise.
ParsedGraph parse_graph_file(const std::string& path, GraphFormat format = GraphFormat::automatic,
                             const EdgeListOptions& opts = {});
Hypergraph parse_hypergraph_file(const std::string& path, bool one_based = true);

void write_edge_list(std::ostream& out, const Graph& g, bool one_based = true);

/// "1,2,3" is a set; "1<2,2<3" is a poset with reflexive and transitive closure.
NodePoset parse_target(std::string_view text, bool one_based = true);
std::string format_target(const NodePoset& s, bool one_based = true);

/// CSV "node,round,color".
void write_coloring_csv(std::ostream& out, const Coloring& c, bool one_based = true);
/// CSV "node,label" or "node,label1,label2,..." for wider labels.
void write_labeling_csv(std::ostream& out, const NodeLabeling& l, bool one_based = true);

/// Reads a whole file; throws InvalidArgument if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace labelkit
