#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "conn2k/augmentation.hpp"
#include "conn2k/connectivity.hpp"
#include "conn2k/construction.hpp"
#include "conn2k/errors.hpp"
#include "conn2k/json_io.hpp"
#include "conn2k/multigraph.hpp"
#include "conn2k/splitting.hpp"

namespace py = pybind11;
using namespace conn2k;

namespace {

std::vector<std::pair<int, int>> pair_list(const std::vector<SplitPair>& pairs) {
    std::vector<std::pair<int, int>> out;
    out.reserve(pairs.size());
    for (const SplitPair& p : pairs) out.push_back({p.u, p.v});
    return out;
}

}  // namespace

PYBIND11_MODULE(_conn2k, m) {
    m.doc() = "Multigraph (2k,k)-connectivity: checking, splitting-off, "
              "construction, and optimal augmentation.";

    // base registered first so the derived translator takes precedence
    auto precondition =
        py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<unsupported_k_error>(m, "UnsupportedKError", precondition.ptr());
    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);

    py::class_<Edge>(m, "Edge")
        .def_readonly("u", &Edge::u)
        .def_readonly("v", &Edge::v)
        .def_readonly("id", &Edge::id)
        .def("__repr__", [](const Edge& e) {
            return "Edge(u=" + std::to_string(e.u) + ", v=" + std::to_string(e.v) +
                   ", id=" + std::to_string(e.id) + ")";
        });

    py::class_<MultiGraph>(m, "MultiGraph")
        .def(py::init<>())
        .def(py::init<int>(), py::arg("n"))
        .def_property_readonly("num_vertices", &MultiGraph::num_vertices)
        .def_property_readonly("num_edges", &MultiGraph::num_edges)
        .def("vertices", &MultiGraph::vertices)
        .def("edges", &MultiGraph::edges)
        .def("degree", &MultiGraph::degree, py::arg("v"))
        .def("multiplicity", &MultiGraph::multiplicity, py::arg("u"), py::arg("v"))
        .def("neighbors", &MultiGraph::neighbors, py::arg("v"))
        .def("cut_degree", &MultiGraph::cut_degree, py::arg("us"))
        .def("cross_degree", &MultiGraph::cross_degree, py::arg("us"), py::arg("ws"))
        .def("add_vertex", [](MultiGraph& g) { return g.add_vertex(); })
        .def("add_vertex", [](MultiGraph& g, VertexId v) { g.add_vertex(v); },
             py::arg("v"))
        .def("add_edge", &MultiGraph::add_edge, py::arg("u"), py::arg("v"))
        .def("remove_edge", &MultiGraph::remove_edge, py::arg("id"))
        .def("delete_vertex", &MultiGraph::delete_vertex, py::arg("v"))
        .def("same_edge_multiset", &MultiGraph::same_edge_multiset, py::arg("other"))
        .def("serialize", &MultiGraph::serialize)
        .def_static("parse", &MultiGraph::parse, py::arg("text"))
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__repr__", [](const MultiGraph& g) {
            return "MultiGraph(" + std::to_string(g.num_vertices()) + " vertices, " +
                   std::to_string(g.num_edges()) + " edges)";
        });

    py::class_<BiSet>(m, "BiSet")
        .def(py::init<std::vector<VertexId>, const std::vector<VertexId>&,
                      const std::vector<VertexId>&>(),
             py::arg("ground"), py::arg("inner"), py::arg("outer"))
        .def("ground", &BiSet::ground)
        .def("inner", &BiSet::inner)
        .def("outer", &BiSet::outer)
        .def("wall", &BiSet::wall)
        .def_property_readonly("is_trivial", &BiSet::is_trivial)
        .def("meet", &BiSet::meet)
        .def("join", &BiSet::join)
        .def("complement", &BiSet::complement)
        .def("is_included", &BiSet::is_included)
        .def("innerly_disjoint", &BiSet::innerly_disjoint)
        .def(py::self == py::self)
        .def("__repr__", [](const BiSet& x) {
            auto fmt = [](const std::vector<VertexId>& vs) {
                std::string s = "{";
                for (size_t i = 0; i < vs.size(); ++i)
                    s += (i ? "," : "") + std::to_string(vs[i]);
                return s + "}";
            };
            return "BiSet(inner=" + fmt(x.inner()) + ", outer=" + fmt(x.outer()) + ")";
        });

    py::class_<ConnectivityVerdict>(m, "Verdict")
        .def_readonly("ok", &ConnectivityVerdict::ok)
        .def_readonly("witness", &ConnectivityVerdict::witness)
        .def_readonly("f_val", &ConnectivityVerdict::f_val)
        .def_readonly("k", &ConnectivityVerdict::k)
        .def("__bool__", [](const ConnectivityVerdict& v) { return v.ok; })
        .def("__repr__", [](const ConnectivityVerdict& v) {
            return std::string("Verdict(ok=") + (v.ok ? "True" : "False") + ")";
        });

    py::class_<Obstacle>(m, "Obstacle")
        .def_readonly("t", &Obstacle::t)
        .def_readonly("members", &Obstacle::members);

    py::class_<SplitTrace>(m, "SplitTrace")
        .def_readonly("s", &SplitTrace::s)
        .def_property_readonly(
            "pairs", [](const SplitTrace& tr) { return pair_list(tr.pairs); })
        .def_readonly("final_graph", &SplitTrace::final_graph);

    py::class_<BlockingBiSet>(m, "BlockingBiSet")
        .def_readonly("biset", &BlockingBiSet::biset)
        .def_property_readonly("kind", [](const BlockingBiSet& b) {
            return b.kind == BlockingKind::dangerous ? "dangerous" : "critical";
        });

    py::class_<SplitOutcome>(m, "SplitOutcome")
        .def_readonly("trace", &SplitOutcome::trace)
        .def_readonly("obstacle", &SplitOutcome::obstacle)
        .def_readonly("blocked", &SplitOutcome::blocked);

    py::class_<ConstructionTrace>(m, "ConstructionTrace")
        .def_readonly("k", &ConstructionTrace::k)
        .def("__len__",
             [](const ConstructionTrace& tr) { return tr.steps.size(); })
        .def("to_jsonl", [](const ConstructionTrace& tr) { return to_jsonl(tr); })
        .def_static(
            "from_jsonl",
            [](const std::string& text, int k) { return trace_from_jsonl(text, k); },
            py::arg("text"), py::arg("k"));

    py::class_<Extension>(m, "Extension")
        .def_readonly("host", &Extension::host)
        .def_readonly("s", &Extension::s);

    py::class_<CertificateFamily>(m, "CertificateFamily")
        .def_readonly("members", &CertificateFamily::members)
        .def_readonly("value", &CertificateFamily::value)
        .def_readonly("exhaustive", &CertificateFamily::exhaustive);

    py::class_<AugmentationResult>(m, "AugmentationResult")
        .def_readonly("k", &AugmentationResult::k)
        .def_property_readonly(
            "added_edges",
            [](const AugmentationResult& r) { return pair_list(r.added_edges); })
        .def_readonly("certificate", &AugmentationResult::certificate)
        .def_readonly("augmented", &AugmentationResult::augmented);

    py::class_<GenerateResult>(m, "GenerateResult")
        .def_readonly("graph", &GenerateResult::graph)
        .def_readonly("trace", &GenerateResult::trace);

    m.def(
        "check",
        [](const MultiGraph& g, int k) { return check(g, ConnParams{k}); },
        py::arg("g"), py::arg("k"));
    m.def(
        "check_in_V",
        [](const MultiGraph& h, VertexId s, int k) {
            return check_in_V(h, s, ConnParams{k});
        },
        py::arg("h"), py::arg("s"), py::arg("k"));
    m.def(
        "f_value",
        [](const MultiGraph& g, int k, const BiSet& x) {
            return f_value(g, ConnParams{k}, x);
        },
        py::arg("g"), py::arg("k"), py::arg("x"));
    m.def("entering_degree", &entering_degree, py::arg("g"), py::arg("x"));
    m.def("local_edge_connectivity", &local_edge_connectivity, py::arg("g"),
          py::arg("u"), py::arg("v"));
    m.def(
        "split_pair",
        [](const MultiGraph& h, VertexId s, VertexId u, VertexId v) {
            return split_pair(h, s, SplitPair{u, v});
        },
        py::arg("h"), py::arg("s"), py::arg("u"), py::arg("v"));
    m.def(
        "complete_splitting",
        [](const MultiGraph& h, VertexId s, int k) {
            return complete_splitting(h, s, ConnParams{k});
        },
        py::arg("h"), py::arg("s"), py::arg("k"));
    m.def(
        "k_K3", [](int k) { return k_K3(ConnParams{k}); }, py::arg("k"));
    m.def(
        "generate",
        [](int k, int steps, uint64_t seed) {
            return generate(ConnParams{k}, steps, seed);
        },
        py::arg("k"), py::arg("steps"), py::arg("seed"));
    m.def(
        "decompose",
        [](const MultiGraph& g, int k) { return decompose(g, ConnParams{k}); },
        py::arg("g"), py::arg("k"));
    m.def(
        "replay",
        [](int k, const ConstructionTrace& tr) { return replay(ConnParams{k}, tr); },
        py::arg("k"), py::arg("trace"));
    m.def(
        "minimal_extension",
        [](const MultiGraph& g, int k) { return minimal_extension(g, ConnParams{k}); },
        py::arg("g"), py::arg("k"));
    m.def(
        "certificate_bruteforce",
        [](const MultiGraph& g, int k, int max_vertices) {
            return certificate_bruteforce(g, ConnParams{k}, max_vertices);
        },
        py::arg("g"), py::arg("k"), py::arg("max_vertices") = 7);
    m.def(
        "verify_certificate",
        [](const MultiGraph& g, int k, const CertificateFamily& fam) {
            return verify_certificate(g, ConnParams{k}, fam);
        },
        py::arg("g"), py::arg("k"), py::arg("family"));
    m.def(
        "augment",
        [](const MultiGraph& g, int k) { return augment(g, ConnParams{k}); },
        py::arg("g"), py::arg("k"));
}
