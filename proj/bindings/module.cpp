// Python bindings: a thin layer over the C++ core. Graphs come in as JSON
// strings (the same format the CLI reads); field elements travel as strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "graphlie/classify.hpp"
#include "graphlie/cohomology.hpp"
#include "graphlie/golden.hpp"
#include "graphlie/graphs.hpp"
#include "graphlie/lie.hpp"
#include "graphlie/series.hpp"

namespace py = pybind11;
using namespace graphlie;
using gf2k::Field;
using gf2k::Mat;

namespace {

const Field& field_of(const std::string& name) {
    if (name == "f2") return Field::f2();
    if (name == "f4") return Field::f4();
    fail(errc::usage, "field must be 'f2' or 'f4'");
}

graphs::ParsedGraph parse(const std::string& graph_json) { return graphs::parse_graph_json(graph_json); }

tensor::QuadraticPresentation presentation_of(const graphs::ParsedGraph& g, const Field& F) {
    return g.is_labelled() ? lie::era_presentation(*g.labelled, F) : lie::traag_presentation(*g.mixed, F);
}

py::int_ big_to_py(const series::Rational& r) {
    require(boost::multiprecision::denominator(r) == 1, errc::internal, "expected an integer value");
    std::ostringstream ss;
    ss << boost::multiprecision::numerator(r);
    return py::cast<py::int_>(py::module_::import("builtins").attr("int")(ss.str()));
}

std::vector<py::int_> series_to_py(const series::PowerSeries& s) {
    std::vector<py::int_> out;
    for (const auto& c : s.c) out.push_back(big_to_py(c));
    return out;
}

Mat rows_from_py(const std::vector<std::vector<std::string>>& rows, int n, const Field& F) {
    Mat m(F, 0, size_t(n));
    for (const auto& row : rows) {
        require(int(row.size()) == n, errc::bad_coefficients, "generator rows must have one entry per vertex");
        std::vector<uint8_t> entries;
        for (const auto& cell : row) entries.push_back(F.parse(cell));
        m.append_row(entries);
    }
    return m;
}

py::object witness_to_py(const std::optional<lie::DefectWitness>& w, const Field& F) {
    if (!w) return py::none();
    py::dict d;
    py::list gens;
    for (size_t i = 0; i < w->generators.rows(); ++i) {
        py::list row;
        for (size_t j = 0; j < w->generators.cols(); ++j)
            row.append(F.to_string(w->generators.get(i, j)));
        gens.append(row);
    }
    d["generators"] = gens;
    d["defect_degree"] = w->defect_degree;
    d["cover_dim"] = w->cover_dim;
    d["subalgebra_dim"] = w->subalgebra_dim;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "graph-defined restricted Lie algebras over characteristic-2 fields";

    py::register_exception<error>(m, "GraphlieError");

    m.def("mobius2", &series::mobius2, py::arg("n"), "Mod-2 Mobius function.");
    m.def("necklace2", &series::necklace2_int, py::arg("k"), py::arg("t"),
          "Generalized mod-2 necklace polynomial M_{2,k}(t) at an integer.");

    m.def(
        "froberg_reciprocal",
        [](const std::vector<long long>& clique_poly, int order) {
            return series_to_py(series::froberg_reciprocal(clique_poly, order));
        },
        py::arg("clique_poly"), py::arg("order"),
        "Truncated inverse of p(-z): the Hilbert series of the restricted envelope.");
    m.def(
        "petrogradsky_dims",
        [](const std::vector<long long>& hilbert, int order) {
            return series::petrogradsky_dims(series::PowerSeries::from_ints(hilbert, order), order).ell;
        },
        py::arg("hilbert"), py::arg("order"),
        "Graded dimensions recovered from an envelope Hilbert series.");
    m.def(
        "pbw_product",
        [](const std::vector<long long>& ell, int order) {
            series::DimensionVector d;
            d.ell = ell;
            return series_to_py(series::pbw_product(d, order));
        },
        py::arg("dims"), py::arg("order"), "prod_k (1+z^k)^{ell_k}, truncated.");

    m.def(
        "is_special",
        [](const std::string& g) {
            auto p = parse(g);
            require(p.mixed.has_value(), errc::kind_mismatch, "is_special needs a mixed graph");
            return graphs::is_special(*p.mixed);
        },
        py::arg("graph_json"));
    m.def(
        "is_mixed_droms",
        [](const std::string& g) {
            auto p = parse(g);
            require(p.mixed.has_value(), errc::kind_mismatch, "is_mixed_droms needs a mixed graph");
            return graphs::is_mixed_droms(*p.mixed);
        },
        py::arg("graph_json"));
    m.def(
        "is_labelled_droms",
        [](const std::string& g) {
            auto p = parse(g);
            require(p.labelled.has_value(), errc::kind_mismatch, "is_labelled_droms needs a labelled graph");
            return graphs::is_labelled_droms(*p.labelled);
        },
        py::arg("graph_json"));
    m.def(
        "clique_polynomial",
        [](const std::string& g) {
            auto p = parse(g);
            const graphs::MixedGraph& mg = p.is_labelled() ? p.labelled->graph() : *p.mixed;
            return graphs::clique_polynomial(mg).coefficients;
        },
        py::arg("graph_json"), "Clique counts of the underlying simple graph, degree by degree.");
    m.def(
        "signature",
        [](const std::string& g) {
            auto p = parse(g);
            require(p.mixed.has_value(), errc::kind_mismatch, "signature needs a mixed graph");
            graphs::Signature s = graphs::signature_of(*p.mixed);
            py::dict out;
            for (int v = 0; v < p.mixed->n(); ++v) out[py::str(p.mixed->name(v))] = int(s.theta[size_t(v)]);
            return out;
        },
        py::arg("graph_json"));

    m.def(
        "graded_dims",
        [](const std::string& g, const std::string& field, int depth) {
            const Field& F = field_of(field);
            auto h = lie::make_handle(presentation_of(parse(g), F), depth);
            return lie::graded_dims(*h, depth).ell;
        },
        py::arg("graph_json"), py::arg("field") = "f2", py::arg("depth") = 4,
        "dim g_d for d = 1..depth, computed inside the restricted envelope.");
    m.def(
        "envelope_dims",
        [](const std::string& g, const std::string& field, int depth) {
            const Field& F = field_of(field);
            tensor::SliceTower t(tensor::envelope_algebra(presentation_of(parse(g), F)), depth);
            return t.dims();
        },
        py::arg("graph_json"), py::arg("field") = "f2", py::arg("depth") = 6,
        "Hilbert dimensions of the restricted envelope, degrees 0..depth.");
    m.def(
        "poincare_dims",
        [](const std::string& g, const std::string& field, int depth) {
            const Field& F = field_of(field);
            auto p = parse(g);
            coho::CohomologyPresentation c =
                p.is_labelled() ? coho::era_cohomology(*p.labelled, F) : coho::traag_cohomology(*p.mixed, F);
            tensor::SliceTower t(c.dual, depth);
            return t.dims();
        },
        py::arg("graph_json"), py::arg("field") = "f2", py::arg("depth") = 6,
        "Dimensions of the cohomology ring, degrees 0..depth.");
    m.def(
        "cohomology_relations",
        [](const std::string& g, const std::string& field) {
            const Field& F = field_of(field);
            auto p = parse(g);
            coho::CohomologyPresentation c =
                p.is_labelled() ? coho::era_cohomology(*p.labelled, F) : coho::traag_cohomology(*p.mixed, F);
            return py::make_tuple(c.generator_names, c.display);
        },
        py::arg("graph_json"), py::arg("field") = "f2",
        "Generators and displayed relations of the cohomology presentation.");
    m.def(
        "ker_pi_star_dims",
        [](const std::string& g, const std::string& field) {
            auto p = parse(g);
            require(p.mixed.has_value(), errc::kind_mismatch, "ker_pi_star_dims needs a mixed graph");
            return coho::ker_pi_star_dims(*p.mixed, field_of(field));
        },
        py::arg("graph_json"), py::arg("field") = "f2");

    m.def(
        "subalgebra_defect",
        [](const std::string& g, const std::vector<std::vector<std::string>>& gens,
           const std::string& field, int depth) {
            const Field& F = field_of(field);
            auto h = lie::make_handle(presentation_of(parse(g), F), depth);
            Mat U = rows_from_py(gens, h->n(), F);
            return witness_to_py(lie::quadraticity_defect(*h, U, depth), F);
        },
        py::arg("graph_json"), py::arg("generators"), py::arg("field") = "f2", py::arg("depth") = 4,
        "First degree where the quadratic cover of <generators> outgrows the subalgebra, or None.");
    m.def(
        "brute_force_bk",
        [](const std::string& g, const std::string& field, int depth, int jobs) {
            const Field& F = field_of(field);
            auto h = lie::make_handle(presentation_of(parse(g), F), depth);
            classify::OracleResult r = classify::brute_force_bk(*h, depth, jobs);
            py::dict out;
            out["witness"] = witness_to_py(r.witness, F);
            out["subspaces_checked"] = r.subspaces_checked;
            return out;
        },
        py::arg("graph_json"), py::arg("field") = "f2", py::arg("depth") = 4, py::arg("jobs") = 1,
        "Search every standard subspace for a quadraticity defect.");
    m.def(
        "bk_predicate",
        [](const std::string& g, const std::string& field_kind, const std::string& kind) {
            classify::FieldKind fk;
            if (field_kind == "f2")
                fk = classify::FieldKind::f2;
            else if (field_kind == "contains_f4")
                fk = classify::FieldKind::contains_f4;
            else
                fail(errc::usage, "field_kind must be 'f2' or 'contains_f4'");
            classify::AlgebraKind ak;
            if (kind == "traag")
                ak = classify::AlgebraKind::traag;
            else if (kind == "era")
                ak = classify::AlgebraKind::era;
            else
                fail(errc::usage, "kind must be 'traag' or 'era'");
            return classify::bk_predicate(parse(g), fk, ak);
        },
        py::arg("graph_json"), py::arg("field_kind") = "f2", py::arg("kind") = "traag",
        "Graph-theoretic Bloch-Kato criterion.");

    m.def("run_examples", [] {
        py::list out;
        for (const auto& r : golden::run_examples())
            out.append(py::make_tuple(r.name, r.pass, r.detail));
        return out;
    });

    m.attr("__version__") = "0.1.0";
}
