#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "resolvedim/analysis.hpp"
#include "resolvedim/constructions.hpp"
#include "resolvedim/families.hpp"
#include "resolvedim/json_io.hpp"
#include "resolvedim/metric.hpp"
#include "resolvedim/sweep.hpp"

namespace py = pybind11;
using namespace resolvedim;

namespace {

Graph graph_from_python(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph::build(n, edges);
}

py::dict report_dict(const ConstructionReport& rep) {
    py::dict d;
    d["method"] = method_name(rep.method);
    d["set"] = rep.set.members;
    d["bound"] = rep.bound;
    d["verified"] = rep.verified;
    d["notes"] = rep.notes;
    return d;
}

FamilySpec spec_of(const std::string& family, int n, std::uint64_t seed) {
    return FamilySpec{family, {{"n", n}, {"seed", static_cast<std::int64_t>(seed)}}};
}

} // namespace

PYBIND11_MODULE(_resolvedim, m) {
    m.doc() = "Metric dimension toolkit: exact solver, constructive bounds, graph families.";

    py::register_exception<Error>(m, "Error");

    py::class_<Graph>(m, "Graph")
        .def(py::init(&graph_from_python), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("edges", [](const Graph& g) { return g.edges(); })
        .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v); }, py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def("to_json", [](const Graph& g) { return graph_to_json(g).dump(); })
        .def_static("from_json",
                    [](const std::string& text) {
                        return graph_from_json(nlohmann::json::parse(text));
                    },
                    py::arg("text"))
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.vertex_count()) +
                   " m=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("generate",
          [](const std::string& family, int n, std::uint64_t seed) {
              return generate(spec_of(family, n, seed));
          },
          py::arg("family"), py::arg("n"), py::arg("seed") = 1,
          "Generate a family member with its certificates.");

    m.def("family_names", [] { return family_names(); });

    m.def("distance_matrix",
          [](const Graph& g) {
              DistanceMatrix d = all_pairs_distances(g);
              std::vector<std::vector<int>> rows(g.vertex_count());
              for (int u = 0; u < g.vertex_count(); ++u)
                  rows[u].assign(d.row(u), d.row(u) + g.vertex_count());
              return rows;
          },
          py::arg("graph"), "All-pairs hop distances as a list of rows.");

    m.def("alike_partition",
          [](const Graph& g) { return alike_partition(g).classes; }, py::arg("graph"),
          "Equivalence classes of vertices with equal open neighborhoods.");

    m.def("alike_lower_bound",
          [](const Graph& g) { return alike_lower_bound(g).value; }, py::arg("graph"),
          "The n - s lower bound on the metric dimension.");

    m.def("is_resolving_set",
          [](const Graph& g, const std::vector<int>& set) {
              DistanceMatrix d = all_pairs_distances(g);
              ResolveCheck check = is_resolving_set(g, d, VertexSet::of(set, g.vertex_count()));
              return py::make_tuple(check.resolving,
                                    check.resolving ? py::none()
                                                    : py::cast(check.witness));
          },
          py::arg("graph"), py::arg("set"),
          "(resolving, unresolved_pair_or_None) for the given vertex set.");

    m.def("resolved_vertices",
          [](const Graph& g, const std::vector<int>& set) {
              DistanceMatrix d = all_pairs_distances(g);
              return resolved_vertices(g, d, VertexSet::of(set, g.vertex_count()));
          },
          py::arg("graph"), py::arg("set"));

    m.def("metric_dimension",
          [](const Graph& g, std::uint64_t budget) {
              ExactResult res = metric_dimension_exact(g, {budget});
              return py::make_tuple(res.beta, res.witness.members);
          },
          py::arg("graph"), py::arg("budget") = 10'000'000ULL,
          "(beta, lexicographically smallest minimum resolving set).");

    m.def("metric_dimension_bruteforce",
          [](const Graph& g, std::uint64_t budget) {
              ExactResult res = metric_dimension_bruteforce(g, {budget});
              return py::make_tuple(res.beta, res.witness.members);
          },
          py::arg("graph"), py::arg("budget") = 10'000'000ULL,
          "All-subsets oracle, for cross-checking the solver.");

    m.def("hamiltonian_outerplanar_set",
          [](const Graph& g, const std::vector<int>& cycle) {
              return report_dict(hamiltonian_outerplanar_set(g, cycle));
          },
          py::arg("graph"), py::arg("cycle"));

    m.def("coloring_bound_set",
          [](const Graph& g, const std::vector<int>& colors) {
              int used = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
              return report_dict(coloring_bound_set(g, Coloring{colors, used}));
          },
          py::arg("graph"), py::arg("colors"));

    m.def("outerplanar_set",
          [](const Graph& g) { return report_dict(outerplanar_set(g)); }, py::arg("graph"));

    m.def("maximal_planar_set",
          [](const Graph& g) { return report_dict(maximal_planar_set(g)); }, py::arg("graph"));

    m.def("bipyramid_set", [](int n) { return report_dict(bipyramid_set(n)); },
          py::arg("cycle_size"));

    m.def("bipyramid_dimension", &bipyramid_dimension, py::arg("cycle_size"),
          "The closed form floor(2n/5) + 1 for rims n >= 5.");

    m.def("hamiltonian_cycle",
          [](const Graph& g, std::uint64_t budget) -> py::object {
              auto cyc = hamiltonian_cycle(g, {budget});
              if (!cyc)
                  return py::none();
              return py::cast(*cyc);
          },
          py::arg("graph"), py::arg("budget") = 10'000'000ULL);

    m.def("is_bipyramid",
          [](const Graph& g) -> py::object {
              auto dec = is_bipyramid(g);
              if (!dec)
                  return py::none();
              return py::make_tuple(dec->apexes, dec->rim);
          },
          py::arg("graph"), "((apex, apex), rim_cycle) or None.");

    m.def("color_with",
          [](const Graph& g, int k, std::uint64_t budget) -> py::object {
              ColorResult res = color_with(g, k, {budget});
              if (res.outcome == ColorOutcome::NoneExists)
                  return py::none();
              return py::cast(res.coloring->colors);
          },
          py::arg("graph"), py::arg("k"), py::arg("budget") = 10'000'000ULL,
          "A proper k-coloring as a list, or None when none exists.");

    m.def("color_outerplanar",
          [](const Graph& g) { return color_outerplanar(g).colors; }, py::arg("graph"));

    m.def("is_outerplanar_certificate",
          [](const Graph& g) { return is_outerplanar_certificate(g); }, py::arg("graph"));

    m.def("is_maximal_planar_certificate",
          [](const Graph& g) { return is_maximal_planar_certificate(g); }, py::arg("graph"));

    m.def("has_minor",
          [](const Graph& g, const std::string& target) {
              if (target == "K4")
                  return has_minor_small(g, MinorTarget::K4);
              if (target == "K23")
                  return has_minor_small(g, MinorTarget::K23);
              throw Error(ErrorCode::BadInput, "target must be 'K4' or 'K23'");
          },
          py::arg("graph"), py::arg("target"));

    m.attr("__version__") = "0.1.0";
}
