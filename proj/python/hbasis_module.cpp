// Python bindings for the main pipeline operations.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "hbasis/annotate.hpp"
#include "hbasis/approx.hpp"
#include "hbasis/errors.hpp"
#include "hbasis/hd_persistence.hpp"
#include "hbasis/io.hpp"
#include "hbasis/minbasis.hpp"
#include "hbasis/oracle.hpp"
#include "hbasis/runner.hpp"

namespace py = pybind11;

namespace {

hbasis::SizeKind parse_measure(const std::string& name)
{
    if (name == "sum")
        return hbasis::SizeKind::SumOfWeights;
    if (name == "radius")
        return hbasis::SizeKind::Radius;
    throw py::value_error("measure must be 'sum' or 'radius'");
}

hbasis::DistanceKind parse_distance(const std::string& name)
{
    if (name == "graph")
        return hbasis::DistanceKind::Graph;
    if (name == "function")
        return hbasis::DistanceKind::Function;
    throw py::value_error("distance must be 'graph' or 'function'");
}

py::dict basis_to_dict(const hbasis::BasisResult& basis, const hbasis::SimplicialComplex& k)
{
    py::dict out;
    out["g"] = basis.g;
    py::list cycles;
    for (const hbasis::CycleRepr& c : basis.cycles) {
        py::dict entry;
        py::list simplices;
        for (std::size_t s : c.simplices) {
            py::list verts;
            for (hbasis::VertexId v : k.simplex_vertices(c.dim, s))
                verts.append(v);
            simplices.append(verts);
        }
        entry[c.dim == 1 ? "edges" : "simplices"] = simplices;
        entry["size"] = c.size;
        std::string bits;
        for (std::size_t i = c.annotation.size(); i-- > 0;)
            bits.push_back(c.annotation.get(i) ? '1' : '0');
        entry["annotation"] = bits;
        cycles.append(entry);
    }
    out["basis"] = cycles;
    out["size_sequence"] = basis.size_sequence;
    out["total_size"] = basis.total_size;
    return out;
}

hbasis::DistanceEvaluator make_distance(const hbasis::SimplicialComplex& k,
                                        hbasis::DistanceKind kind)
{
    return kind == hbasis::DistanceKind::Graph
               ? hbasis::DistanceEvaluator::graph_distance(k)
               : hbasis::DistanceEvaluator::function_distance(k);
}

} // namespace

PYBIND11_MODULE(_hbasis, m)
{
    m.doc() = "Minimal homology bases of weighted simplicial complexes over Z2";

    py::register_exception<hbasis::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<hbasis::ValidateError>(m, "ValidateError", PyExc_ValueError);
    py::register_exception<hbasis::GuardError>(m, "GuardError", PyExc_RuntimeError);

    py::class_<hbasis::SimplicialComplex>(m, "Complex")
        .def_static("from_json", [](const std::string& text) {
            return hbasis::parse_complex(text);
        })
        .def_static("from_file", [](const std::string& path) {
            return hbasis::parse_complex_file(path);
        })
        .def_property_readonly("n_vertices", &hbasis::SimplicialComplex::n_vertices)
        .def_property_readonly("n_edges", &hbasis::SimplicialComplex::n_edges)
        .def_property_readonly("n_triangles", &hbasis::SimplicialComplex::n_triangles)
        .def("betti1", &hbasis::SimplicialComplex::betti_1)
        .def("validate", &hbasis::SimplicialComplex::validate)
        .def("to_json", [](const hbasis::SimplicialComplex& k) {
            return hbasis::write_complex(k);
        });

    m.def(
        "exact_basis",
        [](const hbasis::SimplicialComplex& k, const std::string& measure,
           const std::string& distance) {
            const auto dist = make_distance(k, parse_distance(distance));
            const auto ann = hbasis::annotate_edges(k);
            const auto cands = hbasis::HortonCandidates::build(
                k, dist, hbasis::SizeMeasure{parse_measure(measure)});
            return basis_to_dict(hbasis::cycle_basis(cands, ann), k);
        },
        py::arg("complex"), py::arg("measure") = "sum", py::arg("distance") = "graph");

    m.def(
        "approx_basis",
        [](const hbasis::SimplicialComplex& k, std::uint64_t seed, double c0) {
            const auto dist = hbasis::DistanceEvaluator::graph_distance(k);
            const auto ann = hbasis::annotate_edges(k);
            hbasis::ApproxCertificate cert;
            py::dict out = basis_to_dict(hbasis::approx_basis(k, dist, ann, {seed, c0}, &cert), k);
            py::dict certificate;
            certificate["requested_roots"] = cert.requested_roots;
            certificate["used_roots"] = cert.used_roots;
            certificate["doublings"] = cert.doublings;
            certificate["seed"] = cert.seed;
            certificate["c0"] = cert.c0;
            out["certificate"] = certificate;
            return out;
        },
        py::arg("complex"), py::arg("seed") = 0, py::arg("c0") = 2.0);

    m.def(
        "hd_basis",
        [](const hbasis::SimplicialComplex& k, int dim) {
            const auto dist = hbasis::DistanceEvaluator::graph_distance(k);
            return basis_to_dict(hbasis::hd_minimal_basis(k, dim, dist), k);
        },
        py::arg("complex"), py::arg("dim"));

    m.def(
        "oracle_basis",
        [](const hbasis::SimplicialComplex& k, const std::string& measure,
           const std::string& distance) {
            const auto dist = make_distance(k, parse_distance(distance));
            return basis_to_dict(
                hbasis::oracle_min_basis(k, dist, hbasis::SizeMeasure{parse_measure(measure)}),
                k);
        },
        py::arg("complex"), py::arg("measure") = "sum", py::arg("distance") = "graph");
}
