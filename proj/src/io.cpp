#include "labelkit/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "labelkit/errors.hpp"

namespace labelkit {

namespace {

json feature_to_json(Fixed f) {
  if (f.raw() % Fixed::kScale == 0) return f.raw() / Fixed::kScale;
  return f.to_double();
}

Fixed feature_from_json(const json& j) {
  if (j.is_string()) return Fixed::parse(j.get<std::string>());
  if (j.is_number_integer()) return Fixed::from_int(j.get<std::int64_t>());
  if (j.is_number()) {
    const double x = j.get<double>();
    if (!std::isfinite(x)) throw InvalidArgument("non-finite feature value");
    return Fixed::from_raw(std::llround(x * Fixed::kScale));
  }
  throw InvalidArgument("feature values must be numbers or decimal strings");
}

json features_to_json(const FeatureVec& f) {
  json a = json::array();
  for (Fixed x : f) a.push_back(feature_to_json(x));
  return a;
}

FeatureVec features_from_json(const json& j) {
  if (!j.is_array()) throw InvalidArgument("feature vector must be an array");
  FeatureVec f;
  for (const auto& x : j) f.push_back(feature_from_json(x));
  return f;
}

NodeId node_from_json(const json& j, int n, bool one_based) {
  if (!j.is_number_integer()) throw InvalidArgument("node ids must be integers");
  const long v = j.get<long>() - (one_based ? 1 : 0);
  if (v < 0 || v >= n) throw InvalidArgument("node id " + j.dump() + " outside 1..n range");
  return static_cast<NodeId>(v);
}

int shift(bool one_based) { return one_based ? 1 : 0; }

}  // namespace

json graph_to_json(const Graph& g, bool one_based) {
  json j;
  j["n"] = g.size();
  j["directed"] = g.directed();
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    json row = json::array({e.from + shift(one_based), e.to + shift(one_based)});
    for (Fixed f : e.features) row.push_back(feature_to_json(f));
    edges.push_back(std::move(row));
  }
  j["edges"] = std::move(edges);
  if (g.node_dim() > 0) {
    json feats = json::array();
    for (const auto& f : g.all_node_features()) feats.push_back(features_to_json(f));
    j["node_features"] = std::move(feats);
  }
  return j;
}

Graph graph_from_json(const json& j, bool one_based) {
  if (!j.is_object() || !j.contains("n")) throw InvalidArgument("graph JSON needs an object with \"n\"");
  const int n = j.at("n").get<int>();
  if (n < 0) throw InvalidArgument("negative node count");
  const bool directed = j.value("directed", false);
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    for (const auto& row : j.at("edges")) {
      if (!row.is_array() || row.size() < 2) throw InvalidArgument("edge rows must be [i, j, feat...]");
      Edge e{node_from_json(row[0], n, one_based), node_from_json(row[1], n, one_based), {}};
      for (std::size_t k = 2; k < row.size(); ++k) e.features.push_back(feature_from_json(row[k]));
      edges.push_back(std::move(e));
    }
  }
  std::vector<FeatureVec> feats;
  if (j.contains("node_features")) {
    for (const auto& row : j.at("node_features")) feats.push_back(features_from_json(row));
    if (static_cast<int>(feats.size()) != n) throw InvalidArgument("node_features must have n rows");
  }
  return Graph(n, directed, std::move(edges), std::move(feats));
}

json hypergraph_to_json(const Hypergraph& h, bool one_based) {
  json j;
  j["n"] = h.num_nodes();
  json edges = json::array();
  for (const auto& e : h.hyperedges()) {
    json row = json::array();
    for (NodeId v : e) row.push_back(v + shift(one_based));
    edges.push_back(std::move(row));
  }
  j["hyperedges"] = std::move(edges);
  if (h.feature_dim() > 0) {
    json nf = json::array(), ef = json::array();
    for (int i = 0; i < h.num_nodes(); ++i) nf.push_back(features_to_json(h.node_features(i)));
    for (int e = 0; e < h.num_hyperedges(); ++e) ef.push_back(features_to_json(h.hyperedge_features(e)));
    j["node_features"] = std::move(nf);
    j["hyperedge_features"] = std::move(ef);
  }
  return j;
}

Hypergraph hypergraph_from_json(const json& j, bool one_based) {
  if (!j.is_object() || !j.contains("n")) throw InvalidArgument("hypergraph JSON needs an object with \"n\"");
  const int n = j.at("n").get<int>();
  std::vector<std::vector<NodeId>> edges;
  if (j.contains("hyperedges")) {
    for (const auto& row : j.at("hyperedges")) {
      std::vector<NodeId> members;
      for (const auto& v : row) members.push_back(node_from_json(v, n, one_based));
      edges.push_back(std::move(members));
    }
  }
  std::vector<FeatureVec> nf, ef;
  if (j.contains("node_features"))
    for (const auto& row : j.at("node_features")) nf.push_back(features_from_json(row));
  if (j.contains("hyperedge_features"))
    for (const auto& row : j.at("hyperedge_features")) ef.push_back(features_from_json(row));
  return Hypergraph(n, std::move(edges), std::move(nf), std::move(ef));
}

json poset_to_json(const NodePoset& s, bool one_based) {
  json j;
  json m = json::array();
  for (NodeId v : s.members()) m.push_back(v + shift(one_based));
  j["members"] = std::move(m);
  json rel = json::array();
  for (auto [a, b] : s.relation())
    if (a != b) rel.push_back(json::array({a + shift(one_based), b + shift(one_based)}));
  j["order"] = std::move(rel);
  return j;
}

NodePoset poset_from_json(const json& j, bool one_based) {
  std::vector<NodeId> members;
  for (const auto& v : j.at("members")) members.push_back(v.get<int>() - shift(one_based));
  std::vector<NodePair> pairs;
  if (j.contains("order"))
    for (const auto& p : j.at("order"))
      pairs.push_back({p.at(0).get<int>() - shift(one_based), p.at(1).get<int>() - shift(one_based)});
  return NodePoset::from_order(std::move(members), std::move(pairs));
}

// ---------------------------------------------------------------- edge list

ParsedGraph parse_edge_list(std::istream& in, const EdgeListOptions& opts) {
  ParsedGraph out;
  std::vector<NodePair> pairs;
  std::set<NodePair> seen;
  std::string line;
  int lineno = 0;
  long max_id = -1;
  const int base = shift(opts.one_based);
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string a, b, extra;
    ls >> a >> b;
    if (b.empty()) throw ParseError("expected two node ids, got \"" + line + "\"", lineno);
    if (ls >> extra) throw ParseError("unexpected token \"" + extra + "\" after the node pair", lineno);
    long ids[2];
    const std::string* tok[] = {&a, &b};
    for (int k = 0; k < 2; ++k) {
      std::size_t used = 0;
      try {
        ids[k] = std::stol(*tok[k], &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != tok[k]->size()) throw ParseError("\"" + *tok[k] + "\" is not a node id", lineno);
      ids[k] -= base;
      if (ids[k] < 0) throw ParseError("node id " + *tok[k] + " below the first index " + std::to_string(base), lineno);
      if (opts.n > 0 && ids[k] >= opts.n) {
        throw ParseError("node id " + *tok[k] + " exceeds the declared node count " + std::to_string(opts.n), lineno);
      }
    }
    if (ids[0] == ids[1]) throw ParseError("self loop on node " + a, lineno);
    NodePair p{static_cast<NodeId>(ids[0]), static_cast<NodeId>(ids[1])};
    NodePair key = p;
    if (!opts.directed && key.first > key.second) std::swap(key.first, key.second);
    if (!seen.insert(key).second) {
      out.warnings.push_back("line " + std::to_string(lineno) + ": duplicate edge " + a + " " + b + " ignored");
      continue;
    }
    pairs.push_back(p);
    max_id = std::max({max_id, ids[0], ids[1]});
  }
  const int n = opts.n > 0 ? opts.n : static_cast<int>(max_id + 1);
  if (n == 0 && !opts.allow_empty) throw ParseError("empty graph (pass --allow-empty to accept it)", lineno);
  out.graph = Graph::from_pairs(n, opts.directed, pairs);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

ParsedGraph parse_graph_file(const std::string& path, GraphFormat format, const EdgeListOptions& opts) {
  if (format == GraphFormat::automatic) {
    const bool is_json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    format = is_json ? GraphFormat::json : GraphFormat::edge_list;
  }
  const std::string text = read_file(path);
  if (format == GraphFormat::json) {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(e.what(), 1 + static_cast<int>(std::count(text.begin(), text.begin() + std::min(e.byte, text.size()), '\n')));
    }
    ParsedGraph out{graph_from_json(j, opts.one_based), {}};
    if (out.graph.size() == 0 && !opts.allow_empty) throw ParseError("empty graph (pass --allow-empty to accept it)", 1);
    return out;
  }
  std::istringstream in(text);
  return parse_edge_list(in, opts);
}

Hypergraph parse_hypergraph_file(const std::string& path, bool one_based) {
  const std::string text = read_file(path);
  try {
    return hypergraph_from_json(json::parse(text), one_based);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), 1 + static_cast<int>(std::count(text.begin(), text.begin() + std::min(e.byte, text.size()), '\n')));
  }
}

void write_edge_list(std::ostream& out, const Graph& g, bool one_based) {
  for (const Edge& e : g.edges()) out << e.from + shift(one_based) << ' ' << e.to + shift(one_based) << '\n';
}

// ------------------------------------------------------------------ targets

NodePoset parse_target(std::string_view text, bool one_based) {
  std::vector<NodeId> members;
  std::vector<NodePair> pairs;
  auto node = [&](std::string_view tok) -> NodeId {
    const auto b = tok.find_first_not_of(" \t");
    const auto e = tok.find_last_not_of(" \t");
    if (b == std::string_view::npos) throw InvalidArgument("empty node id in target \"" + std::string(text) + "\"");
    const std::string s(tok.substr(b, e - b + 1));
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || used == 0) throw InvalidArgument("\"" + s + "\" is not a node id");
    v -= shift(one_based);
    if (v < 0) throw InvalidArgument("node id " + s + " below the first index");
    return static_cast<NodeId>(v);
  };
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    const std::size_t lt = item.find('<');
    if (lt == std::string_view::npos) {
      members.push_back(node(item));
    } else {
      const NodeId a = node(item.substr(0, lt));
      const NodeId b = node(item.substr(lt + 1));
      for (NodeId x : {a, b})
        if (std::find(members.begin(), members.end(), x) == members.end()) members.push_back(x);
      pairs.push_back({a, b});
    }
    pos = comma + 1;
  }
  return NodePoset::from_order(std::move(members), std::move(pairs));
}

std::string format_target(const NodePoset& s, bool one_based) {
  std::string out;
  std::set<NodeId> covered;
  for (auto [a, b] : s.relation()) {
    if (a == b) continue;
    if (!out.empty()) out += ",";
    out += std::to_string(a + shift(one_based)) + "<" + std::to_string(b + shift(one_based));
    covered.insert(a);
    covered.insert(b);
  }
  for (NodeId v : s.members()) {
    if (covered.count(v)) continue;
    if (!out.empty()) out += ",";
    out += std::to_string(v + shift(one_based));
  }
  return out;
}

// ---------------------------------------------------------------------- csv

void write_coloring_csv(std::ostream& out, const Coloring& c, bool one_based) {
  out << "node,round,color\n";
  for (std::size_t r = 0; r < c.rounds.size(); ++r)
    for (std::size_t v = 0; v < c.rounds[r].size(); ++v)
      out << v + shift(one_based) << ',' << r << ',' << c.rounds[r][v] << '\n';
}

void write_labeling_csv(std::ostream& out, const NodeLabeling& l, bool one_based) {
  out << "node";
  if (l.width() == 1) {
    out << ",label";
  } else {
    for (int k = 1; k <= l.width(); ++k) out << ",label" << k;
  }
  out << '\n';
  for (NodeId v = 0; v < l.size(); ++v) {
    out << v + shift(one_based);
    for (std::int64_t x : l[v]) out << ',' << x;
    out << '\n';
  }
}

}  // namespace labelkit
