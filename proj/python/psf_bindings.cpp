// Python bindings. Simplices cross the boundary as sorted tuples of ints, folding
// maps as (source, target) pairs of vertex lists.

#include "psf/analysis.hpp"
#include "psf/decompose.hpp"
#include "psf/enumerative.hpp"
#include "psf/error.hpp"
#include "psf/identities.hpp"
#include "psf/io.hpp"
#include "psf/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace psf;

namespace {

using Seq = std::vector<VertexId>;

py::tuple to_py(const Simplex& s)
{
    py::tuple t(s.size());
    std::size_t i = 0;
    for (VertexId v : s) t[i++] = v;
    return t;
}

Simplex to_simplex(const Seq& v) { return Simplex(std::span<const VertexId>(v)); }

std::vector<py::tuple> to_py(const std::vector<Simplex>& ss)
{
    std::vector<py::tuple> out;
    out.reserve(ss.size());
    for (const Simplex& s : ss) out.push_back(to_py(s));
    return out;
}

FoldingMap make_map(const Seq& source, const Seq& target, FoldKind kind)
{
    return FoldingMap::from_sequences(source, target, kind);
}

std::optional<std::pair<Seq, Seq>> as_pair(const std::optional<FoldingMap>& psi)
{
    if (!psi) return std::nullopt;
    Seq src, dst;
    for (VertexId v : psi->source_facet) {
        src.push_back(v);
        dst.push_back(psi->image(v));
    }
    return std::pair{src, dst};
}

Mode mode_from(const std::string& name)
{
    const auto m = parse_mode(name);
    if (!m) throw Error(Errc::InvalidArgument, "unknown mode '" + name + "'");
    return *m;
}

} // namespace

PYBIND11_MODULE(_psf, m)
{
    m.doc() = "Normal pseudomanifolds: face numbers, folds, optimality and decompositions";

    // args are (code, message), e.g. ("NotOptimal", "NotOptimal: ...")
    static PyObject* error = PyErr_NewException("psf._psf.PsfError", PyExc_ValueError, nullptr);
    m.attr("PsfError") = py::handle(error);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetObject(error, py::make_tuple(std::string(to_string(e.code())), e.what()).ptr());
        }
    });

    py::class_<Complex>(m, "Complex")
        .def(py::init([](const std::vector<Seq>& facets) { return Complex::from_facets(facets); }), py::arg("facets"))
        .def_property_readonly("dimension", &Complex::dimension)
        .def_property_readonly("vertices", [](const Complex& K) { return K.vertices(); })
        .def_property_readonly("facets", [](const Complex& K) { return to_py(K.facets()); })
        .def("num_facets", &Complex::num_facets)
        .def("num_vertices", &Complex::num_vertices)
        .def("contains", [](const Complex& K, const Seq& s) { return K.contains(to_simplex(s)); })
        .def("link", [](const Complex& K, const Seq& s) { return link(to_simplex(s), K); })
        .def("star", [](const Complex& K, const Seq& s) { return star(to_simplex(s), K); })
        .def("__eq__", [](const Complex& a, const Complex& b) { return a == b; })
        .def("__len__", &Complex::num_facets)
        .def("__repr__", [](const Complex& K) {
            return "Complex(dimension=" + std::to_string(K.dimension()) + ", vertices=" + std::to_string(K.num_vertices()) +
                   ", facets=" + std::to_string(K.num_facets()) + ")";
        });

    m.def("parse_facets", [](const std::string& text) { return parse_facets(text); });
    m.def("print_facets", &print_facets);

    // invariants
    m.def("f_vector", [](const Complex& K) { return f_vector(K).entries; });
    m.def("h_vector", [](const Complex& K) { return h_vector(K).h; });
    m.def("g2", &g2);
    m.def("g3", &g3);
    m.def("is_normal_pseudomanifold", [](const Complex& K) { return is_normal_pseudomanifold(K).normal(); });
    m.def("homology_gf2", [](const Complex& K) { return homology_gf2(K).betti; });
    m.def("is_stacked_sphere", &is_stacked_sphere);
    m.def("is_isomorphic", [](const Complex& a, const Complex& b) -> std::optional<std::map<VertexId, VertexId>> {
        const auto iso = is_isomorphic(a, b);
        if (!iso) return std::nullopt;
        return iso->pairs;
    });
    m.def("classify_vertices", [](const Complex& K) {
        std::vector<std::tuple<VertexId, std::string, std::string>> out;
        for (const auto& sv : classify_vertices(K)) out.emplace_back(sv.vertex, std::string(to_string(sv.verdict)), sv.certificate);
        return out;
    });
    m.def("optimality_check", [](const Complex& K, VertexId t) {
        const Optimality o = optimality_check(K, t);
        return std::pair{o.g2_optimal, o.g3_optimal};
    });

    // constructors
    m.def("boundary_simplex", &boundary_simplex, py::arg("n"));
    m.def("stacked_sphere", &stacked_sphere, py::arg("d"), py::arg("k"), py::arg("seed") = 0);
    m.def(
        "stacked_chain",
        [](int d, int k, const Seq& focus, std::uint64_t seed) { return stacked_chain(d, k, to_simplex(focus), seed); },
        py::arg("d"), py::arg("k"), py::arg("focus") = Seq{}, py::arg("seed") = 0);
    m.def("join", &join);
    m.def("shift_labels", &shift_labels);
    m.def("one_vertex_suspension", &one_vertex_suspension, py::arg("K"), py::arg("v"), py::arg("apex") = std::nullopt);
    m.def(
        "facet_subdivision", [](const Complex& K, const Seq& f) { return facet_subdivision(K, to_simplex(f)); }, py::arg("K"),
        py::arg("facet"));
    m.def(
        "connected_sum",
        [](const Complex& a, const Complex& b, const Seq& source, const Seq& target) {
            return connected_sum(a, b, make_map(source, target, FoldKind::ConnectedSum));
        },
        py::arg("K1"), py::arg("K2"), py::arg("source"), py::arg("target"));
    m.def(
        "vertex_fold",
        [](const Complex& K, const Seq& source, const Seq& target) { return vertex_fold(K, make_map(source, target, FoldKind::VertexFold)); },
        py::arg("K"), py::arg("source"), py::arg("target"));
    m.def(
        "edge_fold",
        [](const Complex& K, const Seq& source, const Seq& target) { return edge_fold(K, make_map(source, target, FoldKind::EdgeFold)); },
        py::arg("K"), py::arg("source"), py::arg("target"));
    m.def(
        "handle_addition",
        [](const Complex& K, const Seq& source, const Seq& target) { return handle_addition(K, make_map(source, target, FoldKind::Handle)); },
        py::arg("K"), py::arg("source"), py::arg("target"));
    m.def(
        "find_vertex_fold",
        [](const Complex& K, std::optional<VertexId> at, std::uint64_t seed) {
            SplitMix64 rng(seed);
            return as_pair(find_vertex_fold(K, at, rng));
        },
        py::arg("K"), py::arg("at") = std::nullopt, py::arg("seed") = 0);
    m.def(
        "find_edge_fold",
        [](const Complex& K, std::optional<Seq> along, std::uint64_t seed) {
            SplitMix64 rng(seed);
            return as_pair(find_edge_fold(K, along ? std::optional<Simplex>(to_simplex(*along)) : std::nullopt, rng));
        },
        py::arg("K"), py::arg("along") = std::nullopt, py::arg("seed") = 0);
    m.def(
        "find_handle",
        [](const Complex& K, std::uint64_t seed) {
            SplitMix64 rng(seed);
            return as_pair(find_handle(K, rng));
        },
        py::arg("K"), py::arg("seed") = 0);

    // analysis
    m.def("missing_facets", [](const Complex& K) { return to_py(missing_simplices(K, K.dimension())); });
    m.def("separation_components", [](const Complex& K, VertexId x, const Seq& tau) {
        return separates_link(K, x, to_simplex(tau)).components;
    });
    m.def("classify_missing_facet", [](const Complex& K, const Seq& tau) {
        const MissingFacetClass c = classify_missing_facet(K, to_simplex(tau));
        py::dict d;
        d["kind"] = std::string(to_string(c.kind));
        if (c.kind == MissingFacetKind::VertexFoldAt) d["vertex"] = c.vertex;
        if (c.kind == MissingFacetKind::EdgeFoldAt) d["edge"] = to_py(c.edge);
        return d;
    });

    // decomposition
    py::class_<DecompositionTree>(m, "DecompositionTree")
        .def_property_readonly("mode", [](const DecompositionTree& t) { return std::string(to_string(t.mode)); })
        .def_property_readonly("t", [](const DecompositionTree& t) { return t.t; })
        .def_property_readonly("counters",
                               [](const DecompositionTree& t) {
                                   const Provenance& p = t.counters;
                                   py::dict d;
                                   d["m"] = p.m;
                                   d["n"] = p.n;
                                   d["s"] = p.s;
                                   d["subdivisions"] = p.subdivisions;
                                   d["handles"] = p.handles;
                                   d["irreducible"] = p.irreducible;
                                   d["leaf_g2"] = p.leaf_g2;
                                   return d;
                               })
        .def_property_readonly("classes",
                               [](const DecompositionTree& t) {
                                   std::vector<std::string> out;
                                   for (auto k : t.classes) out.emplace_back(to_string(k));
                                   return out;
                               })
        .def_property_readonly("steps",
                               [](const DecompositionTree& t) {
                                   std::vector<std::string> out;
                                   for (const auto& s : t.steps) out.emplace_back(to_string(s.kind));
                                   return out;
                               })
        .def("to_json", &tree_to_json)
        .def_static("from_json", [](const std::string& s) { return tree_from_json(s); });

    m.def(
        "decompose",
        [](const Complex& K, VertexId t, const std::string& mode, bool verify) { return decompose(K, t, {mode_from(mode), verify}); },
        py::arg("K"), py::arg("t"), py::arg("mode") = "two-singularity-edge-fold", py::arg("verify") = false);
    m.def("rebuild", &rebuild);

    // build scripts and the identity harness
    m.def(
        "run_script",
        [](const std::string& script, bool fault) {
            const BuildResult r = run_script(script, fault);
            std::vector<py::dict> ledger;
            for (const LedgerEntry& e : r.ledger) {
                py::dict d;
                d["step"] = e.step;
                d["op"] = e.op;
                d["dg2"] = e.dg2;
                d["dg3"] = e.dg3;
                d["expected"] = e.expected ? py::object(py::make_tuple(e.expected->first, e.expected->second)) : py::none();
                d["ok"] = e.ok;
                ledger.push_back(d);
            }
            return std::pair{r.complex, ledger};
        },
        py::arg("script"), py::arg("fault") = false);
    m.def(
        "verify_identities",
        [](int seeds, int ops, bool fault, std::uint64_t first) {
            const IdentityReport r = verify_identities(seeds, ops, fault, first);
            std::map<std::string, std::pair<int, int>> out;
            for (const auto& [name, t] : r.tallies) out[name] = {t.checked, t.failed};
            return std::pair{r.all_exact(), out};
        },
        py::arg("seeds") = 100, py::arg("ops") = 12, py::arg("fault") = false, py::arg("first_seed") = 0);
}
