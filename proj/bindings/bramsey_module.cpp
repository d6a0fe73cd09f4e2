// Python bindings for the core operations: graph primitives, cycle
// detection, the extremal colorings, and the coloring search.

#include <pybind11/chrono.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bramsey/bigraph.hpp"
#include "bramsey/constructions.hpp"
#include "bramsey/cycles.hpp"
#include "bramsey/io.hpp"
#include "bramsey/search.hpp"

namespace py = pybind11;
using namespace bramsey;

namespace {

VertexSet left_set(const std::vector<int>& v) { return VertexSet::of(Side::left, v); }
VertexSet right_set(const std::vector<int>& v) { return VertexSet::of(Side::right, v); }

DecideOptions make_options(double timeout_s, int workers, bool deterministic,
                           bool use_seeded) {
  DecideOptions opt;
  opt.budget = std::chrono::milliseconds(static_cast<long long>(timeout_s * 1000.0));
  opt.workers = workers;
  opt.deterministic = deterministic;
  opt.use_seeded = use_seeded;
  return opt;
}

std::string graph_repr(const BipartiteGraph& g) {
  std::ostringstream s;
  s << "BipartiteGraph(" << g.left_size() << "x" << g.right_size() << ", "
    << g.edge_count() << " edges)";
  return s.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "bipartite Ramsey toolkit for even cycles";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<BipartiteGraph>(m, "BipartiteGraph")
      .def(py::init<int, int>(), py::arg("left"), py::arg("right"))
      .def_static("complete", &BipartiteGraph::complete, py::arg("left"), py::arg("right"))
      .def_static("from_edges", &BipartiteGraph::from_edges, py::arg("left"),
                  py::arg("right"), py::arg("edges"))
      .def_property_readonly("left_size", &BipartiteGraph::left_size)
      .def_property_readonly("right_size", &BipartiteGraph::right_size)
      .def("adjacent", &BipartiteGraph::adjacent, py::arg("i"), py::arg("j"))
      .def("add_edge", &BipartiteGraph::add_edge, py::arg("i"), py::arg("j"))
      .def("remove_edge", &BipartiteGraph::remove_edge, py::arg("i"), py::arg("j"))
      .def("edges", &BipartiteGraph::edges)
      .def("edge_count", &BipartiteGraph::edge_count)
      .def("degree_left", &BipartiteGraph::degree_left, py::arg("i"))
      .def("degree_right", &BipartiteGraph::degree_right, py::arg("j"))
      .def("min_degree", &BipartiteGraph::min_degree)
      .def("max_degree", &BipartiteGraph::max_degree)
      .def("copy", [](const BipartiteGraph& g) { return g; })
      .def(py::self == py::self)
      .def("__repr__", &graph_repr);

  m.def("complement", &complement, py::arg("g"));
  m.def(
      "induced",
      [](const BipartiteGraph& g, const std::vector<int>& xs, const std::vector<int>& ys) {
        return induced(g, left_set(xs), right_set(ys));
      },
      py::arg("g"), py::arg("left_vertices"), py::arg("right_vertices"));
  m.def("transpose", &transpose, py::arg("g"));
  m.def("relabel", &relabel, py::arg("g"), py::arg("left_perm"), py::arg("right_perm"));
  m.def(
      "contains_complete",
      [](const BipartiteGraph& g, int a,
         int b) -> std::optional<std::pair<std::vector<int>, std::vector<int>>> {
        const auto w = contains_complete(g, a, b);
        if (!w) return std::nullopt;
        return std::make_pair(w->first.indices(), w->second.indices());
      },
      py::arg("g"), py::arg("a"), py::arg("b"));
  m.def("are_isomorphic", &are_isomorphic, py::arg("g"), py::arg("h"));

  py::class_<TwoColoring>(m, "TwoColoring")
      .def(py::init([](BipartiteGraph red) { return TwoColoring{std::move(red)}; }),
           py::arg("red"))
      .def_readonly("red", &TwoColoring::red)
      .def("blue", &TwoColoring::blue)
      .def_property_readonly("board_left", &TwoColoring::board_left)
      .def_property_readonly("board_right", &TwoColoring::board_right)
      .def(py::self == py::self)
      .def("__repr__", [](const TwoColoring& c) {
        std::ostringstream s;
        s << "TwoColoring(" << c.board_left() << "x" << c.board_right() << ", "
          << c.red.edge_count() << " red)";
        return s.str();
      });

  py::class_<CycleWitness>(m, "CycleWitness")
      .def(py::init([](int k, std::vector<int> left, std::vector<int> right) {
             return CycleWitness{k, std::move(left), std::move(right)};
           }),
           py::arg("k"), py::arg("left"), py::arg("right"))
      .def_readonly("k", &CycleWitness::half_length)
      .def_readonly("left", &CycleWitness::left_seq)
      .def_readonly("right", &CycleWitness::right_seq)
      .def(py::self == py::self)
      .def("__repr__", [](const CycleWitness& w) {
        return "CycleWitness(k=" + std::to_string(w.half_length) + ")";
      });

  m.def("validate_witness", &validate_witness, py::arg("g"), py::arg("witness"));
  m.def("normalized", &normalized, py::arg("witness"));
  m.def("find_cycle", &find_cycle, py::arg("g"), py::arg("k"));
  m.def("find_cycle_through_edge", &find_cycle_through_edge, py::arg("g"), py::arg("k"),
        py::arg("i"), py::arg("j"));
  m.def("oracle_find_cycle", &oracle_find_cycle, py::arg("g"), py::arg("k"));
  m.def("oracle_count_cycles", &oracle_count_cycles, py::arg("g"), py::arg("k"));
  m.def("extend_lemma1", &extend_lemma1, py::arg("g"), py::arg("cycle"), py::arg("x"),
        py::arg("y"));

  py::class_<Lemma2Result>(m, "Lemma2Result")
      .def_property_readonly("extended", &Lemma2Result::extended)
      .def_readonly("witness", &Lemma2Result::witness);
  m.def("extend_lemma2", &extend_lemma2, py::arg("g"), py::arg("cycle"), py::arg("x"),
        py::arg("y"));

  py::class_<ConstructionReport>(m, "ConstructionReport")
      .def_readonly("construction_id", &ConstructionReport::construction_id)
      .def_readonly("coloring", &ConstructionReport::coloring)
      .def_readonly("red_k", &ConstructionReport::checked_red_k)
      .def_readonly("blue_k", &ConstructionReport::checked_blue_k)
      .def_readonly("red_absent", &ConstructionReport::red_cycle_absent)
      .def_readonly("blue_absent", &ConstructionReport::blue_cycle_absent)
      .def("passed", &ConstructionReport::passed);

  m.def("theorem4_construction", &theorem4_construction, py::arg("m"), py::arg("n"));
  m.def("figure1_graph", &figure1_graph);
  m.def("check_construction", &check_construction, py::arg("construction_id"),
        py::arg("coloring"), py::arg("red_k"), py::arg("blue_k"));
  m.def("lower_bound_certificate", &lower_bound_certificate, py::arg("m"), py::arg("n"));

  py::enum_<Prop1Side>(m, "Prop1Side")
      .value("in_graph", Prop1Side::in_graph)
      .value("in_complement", Prop1Side::in_complement)
      .value("neither", Prop1Side::neither)
      .value("hypothesis_unmet", Prop1Side::hypothesis_unmet);

  py::class_<Prop1Verdict>(m, "Prop1Verdict")
      .def_readonly("side", &Prop1Verdict::side)
      .def_readonly("witness", &Prop1Verdict::witness);
  m.def("proposition1_check", &proposition1_check, py::arg("g"));

  py::class_<Prop1SweepReport>(m, "Prop1SweepReport")
      .def_readonly("samples", &Prop1SweepReport::samples)
      .def_readonly("seed", &Prop1SweepReport::seed)
      .def_readonly("in_graph", &Prop1SweepReport::in_graph)
      .def_readonly("in_complement", &Prop1SweepReport::in_complement)
      .def_readonly("neither", &Prop1SweepReport::neither);
  m.def("proposition1_sweep", &proposition1_sweep, py::arg("samples"), py::arg("seed") = 0);

  py::enum_<Verdict>(m, "Verdict")
      .value("holds", Verdict::holds)
      .value("counterexample", Verdict::counterexample)
      .value("timeout", Verdict::timeout);

  py::class_<SearchStats>(m, "SearchStats")
      .def_readonly("nodes", &SearchStats::nodes)
      .def_readonly("prunes_red", &SearchStats::prunes_red)
      .def_readonly("prunes_blue", &SearchStats::prunes_blue)
      .def_readonly("prunes_sym", &SearchStats::prunes_sym)
      .def_readonly("elapsed_ms", &SearchStats::elapsed_ms)
      .def_readonly("workers", &SearchStats::workers)
      .def_readonly("deterministic", &SearchStats::deterministic);

  py::class_<SearchOutcome>(m, "SearchOutcome")
      .def_readonly("verdict", &SearchOutcome::verdict)
      .def_readonly("witness", &SearchOutcome::witness)
      .def_readonly("stats", &SearchOutcome::stats);

  m.def(
      "decide",
      [](int b, int m, int n, double timeout, int workers, bool deterministic,
         bool use_seeded) {
        return decide(RamseyQuery{b, m, n},
                      make_options(timeout, workers, deterministic, use_seeded));
      },
      py::arg("b"), py::arg("m"), py::arg("n"), py::arg("timeout") = 300.0,
      py::arg("workers") = 1, py::arg("deterministic") = false,
      py::arg("use_seeded") = true, py::call_guard<py::gil_scoped_release>());

  m.def(
      "seeded_counterexample",
      [](int b, int m, int n) { return seeded_counterexample(RamseyQuery{b, m, n}); },
      py::arg("b"), py::arg("m"), py::arg("n"));

  py::class_<ComputeBrOutcome>(m, "ComputeBrOutcome")
      .def_readonly("value", &ComputeBrOutcome::value)
      .def_readonly("per_board", &ComputeBrOutcome::per_board);

  m.def(
      "compute_br",
      [](int m, int n, int max_b, double timeout, int workers) {
        return compute_br(m, n, max_b, make_options(timeout, workers, false, true));
      },
      py::arg("m"), py::arg("n"), py::arg("max_b"), py::arg("timeout") = 300.0,
      py::arg("workers") = 1, py::call_guard<py::gil_scoped_release>());

  // JSON string forms, matching the CLI file formats exactly.
  m.def(
      "graph_to_json",
      [](const BipartiteGraph& g, bool compact) { return graph_to_json(g, compact).dump(); },
      py::arg("g"), py::arg("compact") = false);
  m.def("graph_from_json", [](const std::string& text) {
    return graph_from_json(nlohmann::json::parse(text));
  });
  m.def("witness_to_json",
        [](const CycleWitness& w) { return witness_to_json(w).dump(); });
  m.def("witness_from_json", [](const std::string& text) {
    return witness_from_json(nlohmann::json::parse(text));
  });
  m.def(
      "report_to_json",
      [](const ConstructionReport& r, bool compact) {
        return report_to_json(r, compact).dump();
      },
      py::arg("report"), py::arg("compact") = false);
  m.def("report_from_json", [](const std::string& text) {
    return report_from_json(nlohmann::json::parse(text));
  });

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
