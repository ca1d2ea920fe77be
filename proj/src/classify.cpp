#include "graphlie/classify.hpp"

#include <atomic>
#include <chrono>
#include <thread>

namespace graphlie::classify {

const Field& field_for(FieldKind k) { return k == FieldKind::f2 ? Field::f2() : Field::f4(); }

bool bk_predicate(const graphs::MixedGraph& g, FieldKind kind) {
    if (!graphs::is_mixed_droms(g)) return false;
    if (kind == FieldKind::contains_f4) return graphs::common_origin_per_component(g);
    return true;
}

bool bk_predicate(const graphs::LabelledGraph& g) { return graphs::is_labelled_droms(g); }

bool bk_predicate(const graphs::ParsedGraph& g, FieldKind field_kind, AlgebraKind kind) {
    if (kind == AlgebraKind::traag) {
        require(g.mixed.has_value(), errc::kind_mismatch, "T-RAAG classification needs a mixed graph");
        return bk_predicate(*g.mixed, field_kind);
    }
    require(g.labelled.has_value(), errc::kind_mismatch, "ERA classification needs a labelled graph");
    return bk_predicate(*g.labelled);
}

std::vector<Mat> enumerate_subspaces(const Field& F, int n, int dim_lo, int dim_hi) {
    int limit = F.degree() == 1 ? 5 : (F.degree() == 2 ? 4 : 3);
    require(n <= limit, errc::budget_exceeded,
            "subspace enumeration over F" + std::to_string(F.order()) + " is capped at n = " +
                std::to_string(limit));
    require(0 <= dim_lo && dim_lo <= dim_hi && dim_hi <= n, errc::usage, "bad dimension range");
    int q = F.order();
    std::vector<Mat> out;
    for (int k = dim_lo; k <= dim_hi; ++k) {
        if (k == 0) {
            out.push_back(Mat(F, 0, size_t(n)));
            continue;
        }
        // pivot column sets in lexicographic order
        std::vector<int> piv(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) piv[size_t(i)] = i;
        while (true) {
            // free positions: (row i, col j) with j > piv[i], j not a pivot
            std::vector<std::pair<int, int>> free_pos;
            std::vector<bool> is_piv(size_t(n), false);
            for (int p : piv) is_piv[size_t(p)] = true;
            for (int i = 0; i < k; ++i)
                for (int j = piv[size_t(i)] + 1; j < n; ++j)
                    if (!is_piv[size_t(j)]) free_pos.push_back({i, j});
            std::vector<uint8_t> vals(free_pos.size(), 0);
            while (true) {
                Mat m(F, size_t(k), size_t(n));
                for (int i = 0; i < k; ++i) m.set(size_t(i), size_t(piv[size_t(i)]), 1);
                for (size_t p = 0; p < free_pos.size(); ++p)
                    if (vals[p]) m.set(size_t(free_pos[p].first), size_t(free_pos[p].second), vals[p]);
                out.push_back(std::move(m));
                // next assignment, counting in base q from the last position
                size_t pos = vals.size();
                while (pos > 0) {
                    --pos;
                    if (int(vals[pos]) + 1 < q) {
                        ++vals[pos];
                        std::fill(vals.begin() + ptrdiff_t(pos) + 1, vals.end(), 0);
                        break;
                    }
                    if (pos == 0) {
                        pos = SIZE_MAX;
                        break;
                    }
                }
                if (vals.empty() || pos == SIZE_MAX) break;
            }
            // next pivot combination
            int i = k - 1;
            while (i >= 0 && piv[size_t(i)] == n - k + i) --i;
            if (i < 0) break;
            ++piv[size_t(i)];
            for (int j = i + 1; j < k; ++j) piv[size_t(j)] = piv[size_t(j) - 1] + 1;
        }
    }
    return out;
}

std::vector<Mat> enumerate_subspaces(const Field& F, int n) { return enumerate_subspaces(F, n, 0, n); }

long long gaussian_binomial(int n, int k, int q) {
    if (k < 0 || k > n) return 0;
    // prod_{i=0}^{k-1} (q^{n-i} - 1) / (q^{i+1} - 1)
    long long num = 1, den = 1;
    auto qpow = [&](int e) {
        long long r = 1;
        for (int i = 0; i < e; ++i) r *= q;
        return r;
    };
    for (int i = 0; i < k; ++i) {
        num *= qpow(n - i) - 1;
        den *= qpow(i + 1) - 1;
    }
    return num / den;
}

OracleResult brute_force_bk(const lie::LieAlgebraHandle& h, int depth, int jobs) {
    std::vector<Mat> subs = enumerate_subspaces(h.field(), h.n());
    OracleResult out;
    out.subspaces_checked = long(subs.size());
    if (jobs <= 1) {
        for (const Mat& u : subs) {
            auto w = lie::quadraticity_defect(h, u, depth);
            if (w) {
                out.witness = std::move(w);
                return out;
            }
        }
        return out;
    }
    std::atomic<size_t> next{0};
    std::atomic<size_t> best{SIZE_MAX};
    std::vector<std::optional<lie::DefectWitness>> results(subs.size());
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= subs.size()) return;
            if (i >= best.load()) continue;
            auto w = lie::quadraticity_defect(h, subs[i], depth);
            if (w) {
                results[i] = std::move(w);
                size_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    size_t b = best.load();
    if (b != SIZE_MAX) out.witness = results[b];
    return out;
}

namespace {

template <typename GraphT>
GraphRecord run_one(const GraphT& g, FieldKind field_kind, int depth, size_t budget, int jobs) {
    GraphRecord rec;
    rec.depth = depth;
    rec.graph_json = graphs::graph_to_json(g);
    auto t0 = std::chrono::steady_clock::now();
    const Field& F = field_for(field_kind);
    try {
        if constexpr (std::is_same_v<GraphT, graphs::MixedGraph>) {
            rec.predicate = bk_predicate(g, field_kind);
            auto h = lie::make_handle(lie::traag_presentation(g, F), depth, budget);
            OracleResult oracle = brute_force_bk(*h, depth, jobs);
            rec.witness = oracle.witness;
            rec.subspaces_checked = oracle.subspaces_checked;
        } else {
            rec.predicate = bk_predicate(g);
            auto h = lie::make_handle(lie::era_presentation(g, F), depth, budget);
            OracleResult oracle = brute_force_bk(*h, depth, jobs);
            rec.witness = oracle.witness;
            rec.subspaces_checked = oracle.subspaces_checked;
        }
        rec.agree = rec.predicate ? !rec.witness.has_value() : rec.witness.has_value();
        rec.unresolved = !rec.predicate && !rec.witness.has_value();
    } catch (const error& e) {
        if (e.code() != errc::budget_exceeded) throw;
        rec.error = e.what();
        rec.agree = false;
    }
    rec.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

template <typename GraphT>
TheoremReport verify_family(const std::vector<GraphT>& family, FieldKind field_kind, int depth, size_t budget,
                            int jobs) {
    TheoremReport report;
    for (const auto& g : family) {
        GraphRecord rec = run_one(g, field_kind, depth, budget, jobs);
        report.all_agree = report.all_agree && rec.agree;
        if (rec.predicate && rec.witness) report.any_violation = true;
        report.records.push_back(std::move(rec));
    }
    return report;
}

}  // namespace

TheoremReport verify_theorem(const std::vector<graphs::MixedGraph>& family, FieldKind field_kind, int depth,
                             size_t budget, int jobs) {
    return verify_family(family, field_kind, depth, budget, jobs);
}

TheoremReport verify_theorem(const std::vector<graphs::LabelledGraph>& family, FieldKind field_kind, int depth,
                             size_t budget, int jobs) {
    return verify_family(family, field_kind, depth, budget, jobs);
}

}  // namespace graphlie::classify
