#include "stocnet/census.hpp"
#include "stocnet/decomposition.hpp"
#include "stocnet/error.hpp"
#include "stocnet/generators.hpp"
#include "stocnet/indices.hpp"
#include "stocnet/sweep.hpp"
#include "stocnet/verification.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

namespace py = pybind11;
using namespace stocnet;

namespace {

StartSampling sampling_of(std::optional<std::size_t> sample, std::uint64_t seed) {
    return sample ? StartSampling::sample(*sample, seed) : StartSampling::all();
}

py::list edge_list(const Graph& g) {
    py::list out;
    for (const auto& e : g.edges()) out.append(py::make_tuple(e.u, e.v));
    return out;
}

const char* class_name(EdgeClass c) {
    switch (c) {
    case EdgeClass::primary: return "primary";
    case EdgeClass::secondary: return "secondary";
    case EdgeClass::unreached: break;
    }
    return "unreached";
}

} // namespace

PYBIND11_MODULE(_stocnet, m) {
    m.doc() = "Generation decomposition, propagation indices and cycle census";

    static py::exception<Error> error_type(m, "StocnetError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object cls = py::reinterpret_borrow<py::object>(error_type.ptr());
            py::object inst = cls(e.what());
            inst.attr("kind") = to_string(e.kind());
            PyErr_SetObject(error_type.ptr(), inst.ptr());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def_property_readonly("node_count", &Graph::node_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("degree", &Graph::degree)
        .def("neighbors", [](const Graph& g, NodeId v) {
            if (!g.contains(v)) throw Error(ErrorKind::IdOutOfRange, "node " + std::to_string(v));
            auto n = g.neighbors(v);
            return std::vector<NodeId>(n.begin(), n.end());
        })
        .def("edges", &edge_list)
        .def("labels", [](const Graph& g) { return std::vector<Label>(g.labels().begin(), g.labels().end()); })
        .def("__repr__", [](const Graph& g) {
            return "<Graph nodes=" + std::to_string(g.node_count()) + " edges=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("build_graph", [](const std::vector<std::pair<Label, Label>>& pairs, std::optional<Label> node_count) {
        return build_graph(pairs, node_count);
    }, py::arg("pairs"), py::arg("node_count") = py::none());
    m.def("load_edge_list", py::overload_cast<const std::filesystem::path&>(&load_edge_list), py::arg("path"));
    m.def("write_edge_list", py::overload_cast<const std::filesystem::path&, const Graph&>(&write_edge_list),
          py::arg("path"), py::arg("graph"));
    m.def("is_connected", &is_connected);

    m.def("ring", &ring, py::arg("n"));
    m.def("extended_ring", &extended_ring, py::arg("n"), py::arg("r"));
    m.def("square_lattice", &square_lattice, py::arg("rows"), py::arg("cols"), py::arg("torus") = false);
    m.def("triangular_lattice", &triangular_lattice, py::arg("rows"), py::arg("cols"));
    m.def("watts_strogatz", &watts_strogatz, py::arg("n"), py::arg("k"), py::arg("p"), py::arg("seed"));
    m.def("holme_kim", &holme_kim, py::arg("n"), py::arg("m"), py::arg("q"), py::arg("seed"));
    m.def("barabasi_albert", &barabasi_albert, py::arg("n"), py::arg("m"), py::arg("seed"));
    m.def("erdos_renyi", &erdos_renyi, py::arg("n"), py::arg("edge_count"), py::arg("seed"));

    py::class_<GenerationDecomposition>(m, "Decomposition")
        .def_readonly("start", &GenerationDecomposition::start)
        .def_readonly("node_gen", &GenerationDecomposition::node_gen)
        .def_readonly("parent", &GenerationDecomposition::parent)
        .def_readonly("edge_gen", &GenerationDecomposition::edge_gen)
        .def_readonly("level_sets", &GenerationDecomposition::level_sets)
        .def_property_readonly("edge_class", [](const GenerationDecomposition& d) {
            std::vector<std::string> out;
            for (auto c : d.edge_class) out.emplace_back(class_name(c));
            return out;
        })
        .def_property_readonly("last_generation", &GenerationDecomposition::last_generation);

    m.def("decompose", [](const Graph& g, NodeId start, std::optional<std::uint64_t> seed) {
        return decompose(g, start, seed ? TieBreak::random(*seed) : TieBreak::lowest_id());
    }, py::arg("graph"), py::arg("start"), py::arg("tie_break_seed") = py::none(),
       "BFS generations from start; parents go to the lowest-id candidate unless a tie-break seed is given.");

    py::class_<StocCensus>(m, "Census")
        .def_readonly("start", &StocCensus::start)
        .def_readonly("counts", &StocCensus::counts)
        .def_readonly("per_gen_total", &StocCensus::per_gen_total)
        .def_readonly("cumulative", &StocCensus::cumulative)
        .def_readonly("total", &StocCensus::total)
        .def("count", &StocCensus::count, py::arg("generation"), py::arg("nodes"));

    m.def("census", &census, py::arg("graph"), py::arg("decomposition"));
    m.def("euler_total", &euler_total, py::arg("graph"), py::arg("node"));
    m.def("cumulative_stoc", &cumulative_stoc, py::arg("census"), py::arg("generation"));
    m.def("stoc_per_generation_by_difference", &stoc_per_generation_by_difference, py::arg("graph"),
          py::arg("decomposition"));

    py::class_<IndexSeries>(m, "IndexSeries")
        .def_readonly("start", &IndexSeries::start)
        .def_readonly("values", &IndexSeries::values)
        .def_readonly("support_counts", &IndexSeries::support_counts)
        .def_readonly("dispersion", &IndexSeries::dispersion);

    m.def("local_absolute_index", &local_absolute_index, py::arg("decomposition"));
    m.def("local_relative_index", &local_relative_index, py::arg("decomposition"));
    m.def("absolute_index", [](const Graph& g, std::optional<std::size_t> sample, std::uint64_t seed) {
        return absolute_index(g, sampling_of(sample, seed));
    }, py::arg("graph"), py::arg("sample") = py::none(), py::arg("sample_seed") = 0);
    m.def("relative_index", [](const Graph& g, std::optional<std::size_t> sample, std::uint64_t seed) {
        return relative_index(g, sampling_of(sample, seed));
    }, py::arg("graph"), py::arg("sample") = py::none(), py::arg("sample_seed") = 0);

    m.def("recursion_residual", &recursion_residual, py::arg("graph"), py::arg("decomposition"), py::arg("census"),
          py::arg("generation"));
    m.def("recursion_residuals", [](const Graph& g, const GenerationDecomposition& d, const StocCensus& c) {
        return recursion_report(g, d, c).residuals;
    }, py::arg("graph"), py::arg("decomposition"), py::arg("census"), "Residuals for M = 2..L+1.");
    m.def("closed_form_index", py::overload_cast<int, const StocCensus&, int>(&closed_form_index), py::arg("k"),
          py::arg("census"), py::arg("generation"));
    m.def("iterated_regular_index", &iterated_regular_index, py::arg("k"), py::arg("census"), py::arg("generation"));
    m.def("tie_break_invariant", [](const Graph& g, NodeId start, int trials, std::uint64_t seed) {
        return tie_break_invariance_check(g, start, trials, seed).invariant();
    }, py::arg("graph"), py::arg("start"), py::arg("trials") = 10, py::arg("seed") = 1);

    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("model", &SweepRow::model)
        .def_readonly("parameter", &SweepRow::parameter)
        .def_readonly("generation", &SweepRow::generation)
        .def_readonly("n_abs_mean", &SweepRow::n_abs_mean)
        .def_readonly("n_abs_std", &SweepRow::n_abs_std)
        .def_readonly("r_rel_mean", &SweepRow::r_rel_mean)
        .def_readonly("r_rel_std", &SweepRow::r_rel_std)
        .def_readonly("stoc_mean", &SweepRow::stoc_mean)
        .def_readonly("stoc_std", &SweepRow::stoc_std)
        .def_readonly("support_count", &SweepRow::support_count);

    py::class_<ReplicateRecord>(m, "Replicate")
        .def_readonly("parameter", &ReplicateRecord::parameter)
        .def_readonly("replicate", &ReplicateRecord::replicate)
        .def_readonly("seed", &ReplicateRecord::seed)
        .def_readonly("nodes", &ReplicateRecord::nodes)
        .def_readonly("edges", &ReplicateRecord::edges)
        .def_readonly("euler_total", &ReplicateRecord::euler_total)
        .def_readonly("stoc_sum", &ReplicateRecord::stoc_sum)
        .def_readonly("stoc_sum_mismatches", &ReplicateRecord::stoc_sum_mismatches);

    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("model", &SweepResult::model)
        .def_readonly("rows", &SweepResult::rows)
        .def_readonly("replicates", &SweepResult::replicates)
        .def("csv", [](const SweepResult& r) {
            std::ostringstream out;
            emit_csv(r, out);
            return out.str();
        })
        .def("write_csv", py::overload_cast<const SweepResult&, const std::filesystem::path&>(&emit_csv),
             py::arg("path"));

    m.def("run_sweep", [](const py::kwargs& settings) {
        SweepConfig cfg;
        // model first so its defaults do not overwrite later keys
        if (settings.contains("model")) apply_setting(cfg, "model", py::str(settings["model"]));
        for (const auto& [key, value] : settings) {
            auto name = py::str(key).cast<std::string>();
            if (name == "model") continue;
            for (auto& ch : name)
                if (ch == '_') ch = '-';
            std::string text;
            if (py::isinstance<py::list>(value) || py::isinstance<py::tuple>(value)) {
                for (const auto& x : value) text += (text.empty() ? "" : ",") + py::str(x).cast<std::string>();
            } else {
                text = py::str(value);
            }
            apply_setting(cfg, name, text);
        }
        cfg.validate();
        py::gil_scoped_release release;
        return run_sweep(cfg);
    }, "Keyword arguments mirror the config keys: model, n, k, m, grid, replicates, seed, sample, sample_seed, "
       "max_regenerations.");
    m.def("analyze_graph", [](const Graph& g, std::optional<std::size_t> sample, std::uint64_t seed,
                              const std::string& name) { return analyze_graph(g, sampling_of(sample, seed), name); },
          py::arg("graph"), py::arg("sample") = py::none(), py::arg("sample_seed") = 0, py::arg("name") = "graph");
}
