#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "labelkit/audit.hpp"
#include "labelkit/errors.hpp"
#include "labelkit/generators.hpp"
#include "labelkit/heuristics.hpp"
#include "labelkit/io.hpp"
#include "labelkit/isomorphism.hpp"
#include "labelkit/kwl.hpp"
#include "labelkit/labeling.hpp"
#include "labelkit/predictor.hpp"

namespace py = pybind11;
using namespace labelkit;

namespace {

// JSON crosses the boundary as text; the Python side decodes it.
std::string dump(const json& j) { return j.dump(); }

NodePoset as_target(const py::object& t) {
  if (py::isinstance<py::str>(t)) return parse_target(t.cast<std::string>(), false);
  return NodePoset::set(t.cast<std::vector<NodeId>>());
}

Layers as_layers(std::optional<int> depth) { return depth ? Layers::fixed(*depth) : Layers::converge(); }

}  // namespace

PYBIND11_MODULE(_labelkit, m) {
  m.doc() = "Labeling tricks, WL refinement and exact substructure oracles (0-based node ids)";
  m.attr("__version__") = "0.1.0";

  static py::exception<Error> base(m, "LabelkitError");
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<OracleUnavailable>(m, "OracleUnavailable", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<TrainingDiverged>(m, "TrainingDiverged", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<NodePair>& edges, bool directed) {
             return Graph::from_pairs(n, directed, edges);
           }),
           py::arg("n"), py::arg("edges"), py::arg("directed") = false)
      .def_property_readonly("n", &Graph::size)
      .def_property_readonly("directed", &Graph::directed)
      .def("has_edge", &Graph::has_edge)
      .def("degree", &Graph::degree)
      .def("edges",
           [](const Graph& g) {
             std::vector<NodePair> out;
             for (const Edge& e : g.edges()) out.push_back({e.from, e.to});
             return out;
           })
      .def("to_json", [](const Graph& g) { return dump(graph_to_json(g, false)); })
      .def_static("from_json", [](const std::string& s) { return graph_from_json(json::parse(s), false); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.size()) + " edges=" + std::to_string(g.edges().size()) +
               (g.directed() ? " directed>" : ">");
      });

  m.def("cycle_graph", &cycle_graph);
  m.def("path_graph", &path_graph);
  m.def("complete_graph", &complete_graph);
  m.def("star_graph", &star_graph);
  m.def("disjoint_union", &disjoint_union);
  m.def("watts_strogatz", [](int n, int k, double beta, std::uint64_t seed) {
    Rng rng(seed);
    return watts_strogatz(n, k, beta, rng);
  });
  m.def("read_graph", [](const std::string& path, bool directed) {
    EdgeListOptions o;
    o.directed = directed;
    return parse_graph_file(path, GraphFormat::automatic, o).graph;
  }, py::arg("path"), py::arg("directed") = false);
  m.def("incidence_graph", [](int n, const std::vector<std::vector<NodeId>>& hyperedges) {
    return incidence_graph(Hypergraph(n, hyperedges));
  });

  m.def("tricks", [] {
    std::vector<std::string> out;
    for (Trick t : all_tricks()) out.emplace_back(trick_name(t));
    return out;
  });
  m.def("label", [](const std::string& trick, const py::object& target, const Graph& g) {
    return apply_trick(parse_trick(trick), as_target(target), g).rows();
  }, py::arg("trick"), py::arg("target"), py::arg("graph"),
        "Labels per node. Targets are node lists or strings like '0<1,1<2'.");
  m.def("drnl_label", &drnl_label);

  m.def("wl_refine", [](const Graph& g, const std::string& trick, const py::object& target, std::optional<int> depth) {
    std::optional<NodeLabeling> l;
    if (!trick.empty()) l = apply_trick(parse_trick(trick), as_target(target), g);
    return wl_refine(g, l ? &*l : nullptr, as_layers(depth)).rounds;
  }, py::arg("graph"), py::arg("trick") = "", py::arg("target") = py::none(), py::arg("depth") = py::none());

  m.def("wl_distinguishes",
        [](const Graph& g1, const py::object& t1, const Graph& g2, const py::object& t2, const std::string& trick,
           std::optional<int> depth, bool whole_graph) {
          const NodePoset s1 = as_target(t1), s2 = as_target(t2);
          std::optional<NodeLabeling> l1, l2;
          if (trick != "none") {
            l1 = apply_trick(parse_trick(trick), s1, g1);
            l2 = apply_trick(parse_trick(trick), s2, g2);
          }
          return wl_distinguishes(g1, l1 ? &*l1 : nullptr, s1, g2, l2 ? &*l2 : nullptr, s2, as_layers(depth),
                                  whole_graph ? Readout::whole_graph : Readout::targets);
        },
        py::arg("g1"), py::arg("target1"), py::arg("g2"), py::arg("target2"), py::arg("trick") = "zero_one",
        py::arg("depth") = py::none(), py::arg("whole_graph") = false);

  m.def("is_isomorphic", [](const Graph& g1, const py::object& t1, const Graph& g2, const py::object& t2) {
    return are_substructures_isomorphic(as_target(t1), g1, as_target(t2), g2);
  });
  m.def("canonical_code", [](const Graph& g, const py::object& t) {
    return canonical_code(t.is_none() ? NodePoset() : as_target(t), g).hex();
  }, py::arg("graph"), py::arg("target") = py::none());

  m.def("subset_pooling_distinguishes",
        [](const Graph& g1, const py::object& t1, const Graph& g2, const py::object& t2, int k, bool oracle,
           const std::string& readout) {
          const SubsetReadout r = readout == "whole_graph"    ? SubsetReadout::whole_graph
                                  : readout == "labeled_node" ? SubsetReadout::labeled_node
                                                              : SubsetReadout::targets;
          return subset_pooling_distinguishes(g1, as_target(t1), g2, as_target(t2), k,
                                              oracle ? PoolingEngine::exact() : PoolingEngine::wl(), r);
        },
        py::arg("g1"), py::arg("target1"), py::arg("g2"), py::arg("target2"), py::arg("k") = 1,
        py::arg("oracle") = false, py::arg("readout") = "targets");

  m.def("kwl_graph_colors", [](const std::vector<Graph>& graphs, int k) {
    std::vector<LabeledGraph> parts;
    for (const Graph& g : graphs) parts.push_back({&g, nullptr});
    return kwl_refine_joint(parts, k).graph_colors;
  });

  m.def("score_pair", [](const Graph& g, NodeId i, NodeId j) {
    const HeuristicScores s = score_pair(g, i, j);
    return py::dict(py::arg("cn") = s.cn, py::arg("aa") = s.aa, py::arg("ra") = s.ra);
  });

  m.def("validate_trick", [](const std::string& trick, int trials, int n_max, std::uint64_t seed) {
    const ValidationReport r = validate_labeling_trick(trick_under_test(parse_trick(trick)), trials, n_max, seed);
    return py::dict(py::arg("passed") = r.passed(), py::arg("trials") = r.trials,
                    py::arg("equivariance_violations") = r.equivariance_violations,
                    py::arg("distinguishing_violations") = r.distinguishing_violations);
  }, py::arg("trick"), py::arg("trials") = 100, py::arg("n_max") = 7, py::arg("seed") = 0);

  m.def("_audit", [](const std::string& claim, std::uint64_t seed, int n_max, bool quick) {
    AuditConfig cfg;
    cfg.seed = seed;
    cfg.n_max = n_max;
    cfg.quick = quick;
    json out = json::array();
    {
      py::gil_scoped_release release;
      for (const auto& r : run_audit(claim, cfg)) out.push_back(r.to_json());
    }
    return dump(out);
  });
  m.def("_gallery", [] { return dump(gallery_to_json(gallery())); });
  m.def("_check_gallery", [](const std::string& text) { return gallery_from_json(json::parse(text)).size(); });

  m.def("_benchmark",
        [](const Graph& g, const std::vector<std::string>& labelings, const std::vector<std::uint64_t>& seeds,
           int hops, int depth, int epochs) {
          std::vector<Variant> vs;
          for (const auto& name : labelings) vs.push_back(parse_variant(name));
          PredictorConfig cfg;
          cfg.hops = hops;
          cfg.depth = depth;
          cfg.hyper.epochs = epochs;
          py::gil_scoped_release release;
          return dump(benchmark(g, "python", vs, seeds, cfg).manifest());
        });
  m.def("synthetic_benchmark_graph", &synthetic_benchmark_graph, py::arg("seed") = 0);
  m.def("evaluate_auc", &evaluate_auc);
  m.def("gradient_check", &gradient_check, py::arg("seed") = 0, py::arg("step") = 1e-6);
}
