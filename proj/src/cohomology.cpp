#include "graphlie/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace graphlie::coho {

using graphs::LabelledGraph;
using graphs::MixedGraph;
using tensor::QuadraticPresentation;

namespace {

std::string star(const std::string& name) { return name + "*"; }
std::string sq(const std::string& name) { return "(" + name + "*)^2"; }
std::string prod(const std::string& a, const std::string& b) { return a + "*" + b + "*"; }

// Display relations are checked against the dual annihilator: commutators
// for adjacent pairs plus the listed relations must span it exactly.
void check_display_span(const QuadraticAlgebra& dual, const Mat& rows) {
    Mat r = rows;
    r.rref();
    require(r == dual.q, errc::internal, "display relations do not span the dual annihilator");
}

}  // namespace

CohomologyPresentation traag_cohomology(const MixedGraph& g, const Field& F) {
    require(graphs::is_special(g), errc::not_special, "cohomology presentations need a special graph");
    QuadraticPresentation pres = lie::traag_presentation(g, F);
    CohomologyPresentation out;
    out.n = g.n();
    out.field = &F;
    out.dual = tensor::quadratic_dual(pres);
    int n = g.n();
    for (int v = 0; v < n; ++v) out.generator_names.push_back(star(g.name(v)));

    Mat rows(F, 0, size_t(n) * size_t(n));
    auto add_tensor = [&](std::vector<std::pair<int, int>> words) {
        std::vector<uint8_t> r(size_t(n) * size_t(n), 0);
        for (auto [i, j] : words) r[size_t(i) * n + j] ^= 1;
        rows.append_row(r);
    };
    // commutativity (implicit in the commutative display)
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.has_edge(i, j)) add_tensor({{i, j}, {j, i}});
    // vanishing products on non-edges
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.has_edge(i, j)) {
                add_tensor({{i, j}});
                add_tensor({{j, i}});
                out.display.push_back(prod(g.name(i), g.name(j)));
                out.display.push_back(prod(g.name(j), g.name(i)));
            }
    // squares: one relation per vertex; origins pick up their out-neighbours
    graphs::VertexMask origins = g.origins_mask();
    for (int v = 0; v < n; ++v) {
        if (!((origins >> v) & 1u)) {
            add_tensor({{v, v}});
            out.display.push_back(sq(g.name(v)));
        } else {
            std::vector<std::pair<int, int>> words{{v, v}};
            std::string text = sq(g.name(v));
            for (const auto& [o, t] : g.directed_edges())
                if (o == v) {
                    words.push_back({v, t});
                    text += " + " + prod(g.name(v), g.name(t));
                }
            add_tensor(words);
            out.display.push_back(text);
        }
    }
    check_display_span(out.dual, rows);
    return out;
}

CohomologyPresentation era_cohomology(const LabelledGraph& lg, const Field& F) {
    const MixedGraph& g = lg.graph();
    QuadraticPresentation pres = lie::era_presentation(lg, F);
    CohomologyPresentation out;
    out.n = g.n();
    out.field = &F;
    out.dual = tensor::quadratic_dual(pres);
    int n = g.n();
    for (int v = 0; v < n; ++v) out.generator_names.push_back(star(g.name(v)));

    Mat rows(F, 0, size_t(n) * size_t(n));
    auto add_tensor = [&](std::vector<std::pair<int, int>> words) {
        std::vector<uint8_t> r(size_t(n) * size_t(n), 0);
        for (auto [i, j] : words) r[size_t(i) * n + j] ^= 1;
        rows.append_row(r);
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (g.has_edge(i, j)) {
                add_tensor({{i, j}, {j, i}});
            } else {
                add_tensor({{i, j}});
                add_tensor({{j, i}});
                out.display.push_back(prod(g.name(i), g.name(j)));
                out.display.push_back(prod(g.name(j), g.name(i)));
            }
        }
    for (int v = 0; v < n; ++v)
        if (lg.theta(v) == 0) {
            add_tensor({{v, v}});
            out.display.push_back(sq(g.name(v)));
        }
    check_display_span(out.dual, rows);
    return out;
}

PoincareSeries poincare_series(const CohomologyPresentation& p, int depth, size_t budget) {
    tensor::SliceTower tower(p.dual, depth, budget);
    PoincareSeries out;
    out.series = series::PowerSeries::from_ints(tower.dims(), depth);
    return out;
}

std::vector<long long> ker_pi_star_dims(const graphs::MixedGraph& g, const Field& F, size_t budget) {
    std::vector<long long> counts = graphs::negative_clique_counts(g);  // NotSpecial checked there
    int depth = graphs::clique_number(g.underlying()) + 1;
    PoincareSeries full = poincare_series(traag_cohomology(g, F), depth, budget);
    PoincareSeries plain = poincare_series(traag_cohomology(g.simple_part(), F), depth, budget);
    for (int d = 0; d <= depth; ++d) {
        series::Rational diff = full.series.at(d) - plain.series.at(d);
        long long expected = d < int(counts.size()) ? counts[size_t(d)] : 0;
        require(diff == expected, errc::internal,
                "kernel dimension mismatch at degree " + std::to_string(d));
    }
    return counts;
}

RingProduct ring_product(const CohomologyPresentation& p, const Mat& factors, int depth, size_t budget) {
    int k = int(factors.rows());
    require(k >= 1, errc::usage, "need at least one factor");
    require(factors.cols() == size_t(p.n), errc::bad_coefficients,
            "factors must be degree-1 elements of the cohomology ring");
    require(k <= depth, errc::degree_out_of_range,
            "product degree " + std::to_string(k) + " exceeds depth " + std::to_string(depth));
    tensor::SliceTower tower(p.dual, depth, budget);
    std::vector<uint8_t> acc = factors.row_bytes(0);
    for (int i = 1; i < k; ++i) acc = tower.mul(i, acc, 1, factors.row_bytes(size_t(i)));
    RingProduct out;
    out.degree = k;
    out.coords = std::move(acc);
    out.is_zero = std::all_of(out.coords.begin(), out.coords.end(), [](uint8_t v) { return v == 0; });
    return out;
}

std::vector<long long> era_monomial_count(const LabelledGraph& lg, int depth) {
    const MixedGraph& g = lg.graph();
    std::vector<long long> dims(size_t(depth) + 1, 0);
    dims[0] = 1;
    // enumerate cliques; a clique with s vertices labelled 0 and t labelled 1
    // carries C(d-s-1, t-1) monomials of degree d (t >= 1), one when t = 0, d = s
    std::vector<int> stack;
    auto count_clique = [&](graphs::VertexMask clique) {
        int s = 0, t = 0;
        for (int v = 0; v < g.n(); ++v)
            if ((clique >> v) & 1u) (lg.theta(v) ? t : s)++;
        if (s + t == 0) return;
        for (int d = 1; d <= depth; ++d) {
            if (t == 0) {
                if (d == s) ++dims[size_t(d)];
            } else if (d >= s + t) {
                // compositions of d - s into t positive parts
                long long c = 1;
                int top = d - s - 1, bot = t - 1;
                for (int i = 1; i <= bot; ++i) c = c * (top - bot + i) / i;
                dims[size_t(d)] += c;
            }
        }
    };
    std::function<void(graphs::VertexMask, graphs::VertexMask)> rec =
        [&](graphs::VertexMask chosen, graphs::VertexMask cand) {
            if (chosen) count_clique(chosen);
            while (cand) {
                int v = std::countr_zero(cand);
                cand &= cand - 1;
                rec(chosen | (graphs::VertexMask(1) << v), cand & g.adjacency(v));
            }
        };
    rec(0, g.full_mask());
    return dims;
}

}  // namespace graphlie::coho
