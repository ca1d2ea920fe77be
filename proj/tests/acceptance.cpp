// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance is exact equality (the arithmetic is exact).

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "graphlie/classify.hpp"
#include "graphlie/cohomology.hpp"
#include "graphlie/golden.hpp"
#include "graphlie/graphs.hpp"
#include "graphlie/lie.hpp"
#include "graphlie/series.hpp"

using namespace graphlie;
using gf2k::Field;
using gf2k::Mat;
namespace fx = golden::fixtures;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::function<void()> body;
};

void expect(bool cond, const std::string& what) {
    if (!cond) fail(errc::internal, what);
}

Mat rows(const Field& F, const std::vector<std::vector<uint8_t>>& rs, size_t cols) {
    Mat m(F, 0, cols);
    for (const auto& r : rs) m.append_row(r);
    return m;
}

std::vector<graphs::MixedGraph> special_family(int up_to) {
    std::vector<graphs::MixedGraph> out;
    for (int n = 1; n <= up_to; ++n)
        for (auto& g : graphs::all_special_mixed_graphs(n)) out.push_back(std::move(g));
    return out;
}

std::vector<graphs::LabelledGraph> labelled_family(int up_to) {
    std::vector<graphs::LabelledGraph> out;
    for (int n = 1; n <= up_to; ++n)
        for (auto& g : graphs::all_labelled_graphs(n)) out.push_back(std::move(g));
    return out;
}

void criterion_witt_formula() {
    const Field& F = Field::f2();
    for (int n = 1; n <= 3; ++n) {
        auto h = lie::make_handle(tensor::make_presentation(n, F, Mat(F, 0, size_t(tensor::lie2_dim(n)))), 6);
        series::DimensionVector dims = lie::graded_dims(*h, 6);
        for (int k = 1; k <= 6; ++k)
            expect(dims.at(k) == series::necklace2_int(k, n),
                   "free algebra dimension mismatch at n=" + std::to_string(n) + ", k=" + std::to_string(k));
    }
}

void criterion_poincare_theorem() {
    const Field& F = Field::f2();
    for (const auto& g : special_family(5)) {
        // Poincare series equals the clique polynomial of the underlying graph
        auto cp = graphs::clique_polynomial(g);
        int top = cp.degree() + 1;
        auto p = coho::poincare_series(coho::traag_cohomology(g, F), top);
        expect(p.series == series::PowerSeries::from_ints(cp.coefficients, top),
               "Poincare series differs from the clique polynomial on " + graphs::graph_to_json(g));
        // clique identity
        auto plain = graphs::clique_polynomial(g.simple_part());
        auto neg = graphs::negative_clique_counts(g);
        std::vector<long long> rhs = plain.coefficients;
        rhs.resize(std::max(rhs.size(), neg.size()), 0);
        for (size_t i = 0; i < neg.size(); ++i) rhs[i] += neg[i];
        std::vector<long long> lhs = cp.coefficients;
        lhs.resize(std::max(lhs.size(), rhs.size()), 0);
        rhs.resize(lhs.size(), 0);
        expect(lhs == rhs, "clique identity fails on " + graphs::graph_to_json(g));
    }
}

void criterion_froberg_pbw() {
    for (const auto& g : special_family(5)) {
        auto cp = graphs::clique_polynomial(g).coefficients;
        series::PowerSeries hu = series::froberg_reciprocal(cp, 6);
        // h_u(z) * C(-z) = 1
        series::PowerSeries cz(6);
        for (size_t i = 0; i < cp.size() && int(i) <= 6; ++i)
            cz.at(int(i)) = (i % 2 == 0) ? series::Rational(cp[i]) : series::Rational(-cp[i]);
        expect(series::series_mul(hu, cz) == series::PowerSeries::one(6),
               "Froberg reciprocity fails on " + graphs::graph_to_json(g));
        // PBW round-trip
        series::DimensionVector ell = series::petrogradsky_dims(hu, 6);
        expect(series::pbw_product(ell, 6) == hu, "PBW round-trip fails on " + graphs::graph_to_json(g));
        // the Newton-identity route to the dimensions agrees
        series::DimensionVector witt =
            series::witt_dims_from_power_sums(series::power_sums_int(cp, 6), 6);
        expect(witt == ell, "Witt inversion disagrees with the series route on " + graphs::graph_to_json(g));
    }
}

void criterion_f2_classification() {
    auto family = special_family(4);
    classify::TheoremReport rep = classify::verify_theorem(family, classify::FieldKind::f2, 4);
    expect(rep.all_agree, "predicate and oracle disagree somewhere in the F2 family");
    expect(!rep.any_violation, "a mixed Droms graph produced a defect witness over F2");
    for (const auto& rec : rep.records)
        if (rec.witness)
            expect(rec.witness->defect_degree == 3,
                   "a witness in the F2 family has defect degree " +
                       std::to_string(rec.witness->defect_degree) + " instead of 3");
    // the named obstructions carry degree-3 witnesses
    const Field& F = Field::f2();
    for (const auto& g : {fx::lambda_s(), fx::square_c4(), fx::path_p4()}) {
        auto h = lie::make_handle(lie::traag_presentation(g, F), 4);
        auto oracle = classify::brute_force_bk(*h, 4);
        expect(oracle.witness && oracle.witness->defect_degree == 3,
               "expected a degree-3 witness on " + graphs::graph_to_json(g));
    }
}

void criterion_field_sensitivity() {
    const Field& F2 = Field::f2();
    const Field& F4 = Field::f4();
    graphs::MixedGraph g = fx::f4_cone();
    auto h2 = lie::make_handle(lie::traag_presentation(g, F2), 4);
    expect(!classify::brute_force_bk(*h2, 4).witness.has_value(), "unexpected witness over F2");
    auto h4 = lie::make_handle(lie::traag_presentation(g, F4), 4);
    Mat u = rows(F4, {{2, 1, 0}, {0, 0, 1}}, 3);  // v1 + T v, v2
    auto w = lie::quadraticity_defect(*h4, u, 4);
    expect(w && w->defect_degree == 3, "span{v1+Tv, v2} must fail quadraticity at degree 3 over F4");
    expect(classify::brute_force_bk(*h4, 4).witness.has_value(), "the F4 oracle must find a witness");
    // cohomology products: a (Tb+c)(Ta+b) = 0 while xa, xb, xc are independent
    auto c = coho::traag_cohomology(g, F4);
    auto prod = coho::ring_product(c, rows(F4, {{1, 0, 0}, {0, 2, 1}, {2, 1, 0}}, 3), 3);
    expect(prod.is_zero, "a (Tb+c)(Ta+b) must vanish");
    tensor::SliceTower dual(c.dual, 2);
    Mat products(F4, 0, size_t(dual.dim(2)));
    for (int i = 0; i < 3; ++i) {
        std::vector<uint8_t> e(3, 0);
        e[size_t(i)] = 1;
        products.append_row(dual.mul(1, {2, 1, 0}, 1, e));
    }
    expect(gf2k::rank_of(products) == 3, "xa, xb, xc must be linearly independent");
}

void criterion_f4_classification() {
    // restrict to mixed Droms graphs; the F4 predicate adds the common-origin test
    std::vector<graphs::MixedGraph> droms;
    for (const auto& g : special_family(4))
        if (graphs::is_mixed_droms(g)) droms.push_back(g);
    classify::TheoremReport rep = classify::verify_theorem(droms, classify::FieldKind::contains_f4, 4);
    expect(rep.all_agree, "predicate and oracle disagree somewhere in the F4 family");
    expect(!rep.any_violation, "a common-origin Droms graph produced a witness over F4");
    // cones over a Droms base plus one negative vertex stay Bloch-Kato
    const Field& F4 = Field::f4();
    std::vector<graphs::MixedGraph> bases = {
        graphs::MixedGraph({"a"}, {}, {}),
        graphs::MixedGraph({"a", "b"}, {}, {}),
        graphs::MixedGraph({"a", "b"}, {{"a", "b"}}, {}),
    };
    for (const auto& base : bases) {
        graphs::MixedGraph withneg = graphs::disjoint_union(base, graphs::MixedGraph({"y"}, {}, {}));
        graphs::Signature sig = graphs::signature_of(withneg, {"y"});
        graphs::MixedGraph cone = graphs::cone(withneg, sig, "tip");
        expect(classify::bk_predicate(cone, classify::FieldKind::contains_f4),
               "single-negative cones satisfy the F4 predicate");
        auto h = lie::make_handle(lie::traag_presentation(cone, F4), 4);
        expect(!classify::brute_force_bk(*h, 4).witness.has_value(),
               "single-negative cone produced a witness over F4: " + graphs::graph_to_json(cone));
    }
}

void criterion_era_theorem() {
    auto family = labelled_family(4);
    classify::TheoremReport rep = classify::verify_theorem(family, classify::FieldKind::f2, 4);
    expect(rep.all_agree, "labelled predicate and oracle disagree somewhere");
    expect(!rep.any_violation, "a Droms labelled graph produced a witness");
    for (const auto& rec : rep.records)
        if (rec.witness)
            expect(rec.witness->defect_degree == 3,
                   "a witness in the labelled family has defect degree " +
                       std::to_string(rec.witness->defect_degree) + " instead of 3");
    const Field& F = Field::f2();
    for (const auto& g : {fx::labelled_path(1, 0, 0), fx::labelled_path(1, 0, 1)}) {
        auto h = lie::make_handle(lie::era_presentation(g, F), 4);
        auto oracle = classify::brute_force_bk(*h, 4);
        expect(oracle.witness && oracle.witness->defect_degree == 3,
               "forbidden labelled path must carry a degree-3 witness");
    }
    for (const auto& g : family) {
        if (!graphs::is_simple_droms(g.graph())) continue;
        expect(graphs::is_labelled_droms(g) == graphs::central_condition(g),
               "labelled Droms and the central condition disagree on " + graphs::graph_to_json(g));
    }
}

void criterion_golden_examples() {
    auto results = golden::run_examples();
    for (const auto& r : results)
        expect(r.pass, "example " + r.name + " failed: " + r.detail);
}

void criterion_embeddings() {
    const Field& F = Field::f2();
    for (const auto& g : special_family(4)) {
        auto h = lie::make_handle(lie::traag_presentation(g, F), 4);
        for (graphs::VertexMask mask = 1; mask < (1u << g.n()); ++mask) {
            Mat u(F, 0, size_t(g.n()));
            for (int v = 0; v < g.n(); ++v)
                if ((mask >> v) & 1u) {
                    std::vector<uint8_t> e(size_t(g.n()), 0);
                    e[size_t(v)] = 1;
                    u.append_row(e);
                }
            lie::SubalgebraData s = lie::subalgebra_closure(*h, u, 4);
            auto sub = lie::make_handle(lie::traag_presentation(graphs::induced_subgraph(g, mask), F), 4);
            expect(s.dims() == lie::graded_dims(*sub, 4),
                   "induced subalgebra dimensions differ on " + graphs::graph_to_json(g));
        }
    }
    for (const auto& g : labelled_family(4)) {
        auto h = lie::make_handle(lie::era_presentation(g, F), 4);
        for (graphs::VertexMask mask = 1; mask < (1u << g.n()); ++mask) {
            Mat u(F, 0, size_t(g.n()));
            for (int v = 0; v < g.n(); ++v)
                if ((mask >> v) & 1u) {
                    std::vector<uint8_t> e(size_t(g.n()), 0);
                    e[size_t(v)] = 1;
                    u.append_row(e);
                }
            lie::SubalgebraData s = lie::subalgebra_closure(*h, u, 4);
            auto sub = lie::make_handle(lie::era_presentation(graphs::induced_subgraph(g, mask), F), 4);
            expect(s.dims() == lie::graded_dims(*sub, 4),
                   "induced ERA subalgebra dimensions differ on " + graphs::graph_to_json(g));
        }
    }
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "restricted Witt formula for free algebras (n = 1..3, degree 6)", criterion_witt_formula},
        {2, "Poincare series = clique polynomial + clique identity (special graphs <= 5 vertices)",
         criterion_poincare_theorem},
        {3, "Froberg reciprocity and PBW round-trip (same family, degree 6)", criterion_froberg_pbw},
        {4, "F2 classification: predicate vs oracle (special graphs <= 4 vertices, depth 4)",
         criterion_f2_classification},
        {5, "field sensitivity on the 3-vertex cone (F2 vs F4, products in cohomology)",
         criterion_field_sensitivity},
        {6, "F4 classification: common-origin predicate vs oracle + single-negative cones",
         criterion_f4_classification},
        {7, "ERA theorem: labelled Droms vs oracle + central condition (<= 4 vertices)",
         criterion_era_theorem},
        {8, "golden examples", criterion_golden_examples},
        {9, "induced-subgraph embeddings (closure dims = subgraph dims, depth 4)", criterion_embeddings},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool pass = true;
        try {
            c.body();
        } catch (const std::exception& e) {
            pass = false;
            detail = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s criterion %d (%.2fs): %s%s%s\n", pass ? "PASS" : "FAIL", c.number, secs,
                    c.title.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!pass) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
