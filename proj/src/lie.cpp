#include "graphlie/lie.hpp"

#include <map>
#include <mutex>

namespace graphlie::lie {

using graphs::LabelledGraph;
using graphs::MixedGraph;

LieAlgebraHandle::LieAlgebraHandle(QuadraticPresentation pres, int depth, size_t budget)
    : pres_(std::move(pres)), tower_(tensor::envelope_algebra(pres_), depth, budget) {
    lie_.resize(size_t(depth) + 1);
    int n = pres_.n;
    const Field& F = *pres_.field;
    for (int d = 1; d <= depth; ++d) {
        Mat span = tensor::restricted_lie_span(n, d, F, budget);
        gf2k::Echelonizer ech(F, size_t(tower_.dim(d)));
        for (size_t r = 0; r < span.rows(); ++r) ech.add_row(tower_.normal_form(d, span.row_bytes(r)));
        lie_[size_t(d)] = ech.matrix();
    }
}

const Mat& LieAlgebraHandle::component(int d) const {
    require(d >= 1 && d <= depth(), errc::degree_out_of_range,
            "component degree " + std::to_string(d) + " out of range");
    return lie_[size_t(d)];
}

HandlePtr make_handle(const QuadraticPresentation& pres, int depth, size_t budget) {
    static std::mutex mu;
    static std::map<std::string, HandlePtr> cache;
    std::string key = std::to_string(pres.field->degree()) + "|" + std::to_string(depth) + "|" +
                      std::to_string(budget) + "|" + pres.key();
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto h = std::make_shared<const LieAlgebraHandle>(pres, depth, budget);
    {
        std::lock_guard<std::mutex> lock(mu);
        if (cache.size() > 4096) cache.clear();
        cache.emplace(std::move(key), h);
    }
    return h;
}

// ---- graph -> presentation ---------------------------------------------------

QuadraticPresentation traag_presentation(const MixedGraph& g, const Field& F) {
    int n = g.n();
    Mat rel(F, 0, size_t(tensor::lie2_dim(n)));
    for (const auto& [a, b] : g.plain_edges()) {
        std::vector<uint8_t> r(size_t(tensor::lie2_dim(n)), 0);
        r[size_t(tensor::lie2_bracket_index(n, a, b))] = 1;
        rel.append_row(r);
    }
    for (const auto& [o, t] : g.directed_edges()) {
        std::vector<uint8_t> r(size_t(tensor::lie2_dim(n)), 0);
        int i = std::min(o, t), j = std::max(o, t);
        r[size_t(tensor::lie2_bracket_index(n, i, j))] = 1;
        r[size_t(tensor::lie2_square_index(n, o))] ^= 1;
        rel.append_row(r);
    }
    return tensor::make_presentation(n, F, std::move(rel));
}

QuadraticPresentation traag_presentation_signature_form(const MixedGraph& g, const Field& F) {
    graphs::Signature sig = graphs::signature_of(g);
    int n = g.n();
    Mat rel(F, 0, size_t(tensor::lie2_dim(n)));
    auto add_edge = [&](int v, int w) {
        std::vector<uint8_t> r(size_t(tensor::lie2_dim(n)), 0);
        int i = std::min(v, w), j = std::max(v, w);
        r[size_t(tensor::lie2_bracket_index(n, i, j))] = 1;
        if (sig.theta[size_t(v)]) r[size_t(tensor::lie2_square_index(n, w))] ^= 1;
        if (sig.theta[size_t(w)]) r[size_t(tensor::lie2_square_index(n, v))] ^= 1;
        rel.append_row(r);
    };
    for (const auto& [a, b] : g.plain_edges()) add_edge(a, b);
    for (const auto& [o, t] : g.directed_edges()) add_edge(o, t);
    return tensor::make_presentation(n, F, std::move(rel));
}

QuadraticPresentation traag_presentation_bracket_free(const MixedGraph& g, const Field& F) {
    int n = g.n();
    Mat rel(F, 0, size_t(tensor::lie2_dim(n)));
    auto square_sum = [&](int v, int w) {
        std::vector<uint8_t> coeffs(size_t(n), 0);
        coeffs[size_t(v)] = 1;
        coeffs[size_t(w)] = 1;
        return tensor::square_of_linear(coeffs, F);
    };
    for (const auto& [a, b] : g.plain_edges()) {
        std::vector<uint8_t> r = square_sum(a, b);
        r[size_t(tensor::lie2_square_index(n, a))] ^= 1;
        r[size_t(tensor::lie2_square_index(n, b))] ^= 1;
        rel.append_row(r);
    }
    for (const auto& [o, t] : g.directed_edges()) {
        std::vector<uint8_t> r = square_sum(o, t);
        r[size_t(tensor::lie2_square_index(n, t))] ^= 1;
        rel.append_row(r);
    }
    return tensor::make_presentation(n, F, std::move(rel));
}

QuadraticPresentation era_presentation(const LabelledGraph& g, const Field& F) {
    int n = g.n();
    Mat rel(F, 0, size_t(tensor::lie2_dim(n)));
    for (int v = 0; v < n; ++v) {
        if (!g.theta(v)) continue;
        std::vector<uint8_t> r(size_t(tensor::lie2_dim(n)), 0);
        r[size_t(tensor::lie2_square_index(n, v))] = 1;
        rel.append_row(r);
    }
    for (const auto& [a, b] : g.graph().plain_edges()) {
        std::vector<uint8_t> r(size_t(tensor::lie2_dim(n)), 0);
        r[size_t(tensor::lie2_bracket_index(n, a, b))] = 1;
        rel.append_row(r);
    }
    return tensor::make_presentation(n, F, std::move(rel));
}

QuadraticPresentation racg_presentation(const MixedGraph& simple, const Field& F) {
    require(simple.is_simple(), errc::kind_mismatch, "RACG presentations need a simple graph");
    return era_presentation(LabelledGraph(simple, std::vector<uint8_t>(size_t(simple.n()), 1)), F);
}

// ---- graded data -------------------------------------------------------------

series::DimensionVector graded_dims(const LieAlgebraHandle& h, int depth) {
    require(depth <= h.depth(), errc::degree_out_of_range, "graded_dims beyond handle depth");
    series::DimensionVector out;
    for (int d = 1; d <= depth; ++d) out.ell.push_back(h.component_dim(d));
    return out;
}

series::DimensionVector SubalgebraData::dims() const {
    series::DimensionVector out;
    for (int d = 1; d <= depth; ++d) out.ell.push_back(dim(d));
    return out;
}

SubalgebraData subalgebra_closure(const LieAlgebraHandle& h, const Mat& U, int depth) {
    require(depth >= 1 && depth <= h.depth(), errc::degree_out_of_range, "closure depth out of range");
    require(U.cols() == size_t(h.n()), errc::bad_coefficients, "generator rows must have one entry per generator");
    const SliceTower& T = h.tower();
    SubalgebraData s;
    s.depth = depth;
    s.generators = gf2k::rref_copy(U);
    s.comps.resize(size_t(depth) + 1);
    s.comps[1] = s.generators;
    for (int d = 2; d <= depth; ++d) {
        gf2k::Echelonizer ech(h.field(), size_t(T.dim(d)));
        for (int i = 1; 2 * i <= d; ++i) {
            int j = d - i;
            const Mat& A = s.comps[size_t(i)];
            const Mat& B = s.comps[size_t(j)];
            for (size_t ra = 0; ra < A.rows(); ++ra) {
                std::vector<uint8_t> x = A.row_bytes(ra);
                size_t rb_start = (i == j) ? ra + 1 : 0;
                for (size_t rb = rb_start; rb < B.rows(); ++rb)
                    ech.add_row(T.bracket(i, x, j, B.row_bytes(rb)));
            }
        }
        if (d % 2 == 0) {
            const Mat& H = s.comps[size_t(d / 2)];
            for (size_t r = 0; r < H.rows(); ++r) {
                std::vector<uint8_t> b = H.row_bytes(r);
                ech.add_row(T.mul(d / 2, b, d / 2, b));
            }
        }
        s.comps[size_t(d)] = ech.matrix();
    }
    return s;
}

QuadraticPresentation quadratic_cover_presentation(const LieAlgebraHandle& h, const SubalgebraData& s) {
    require(s.depth >= 2, errc::degree_out_of_range, "cover needs closure to degree >= 2");
    const SliceTower& T = h.tower();
    const Field& F = h.field();
    int m = int(s.generators.rows());
    Mat images(F, 0, size_t(T.dim(2)));
    std::vector<std::vector<uint8_t>> gens;
    for (int i = 0; i < m; ++i) gens.push_back(s.generators.row_bytes(size_t(i)));
    for (int i = 0; i < m; ++i) images.append_row(T.mul(1, gens[size_t(i)], 1, gens[size_t(i)]));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) images.append_row(T.bracket(1, gens[size_t(i)], 1, gens[size_t(j)]));
    // rows are ordered squares-then-brackets, matching the lie2 basis
    Mat kernel = images.transposed().nullspace();
    return tensor::make_presentation(m, F, std::move(kernel));
}

std::optional<DefectWitness> quadraticity_defect(const LieAlgebraHandle& h, const Mat& U, int depth) {
    require(depth >= 2, errc::degree_out_of_range, "defect checking needs depth >= 2");
    SubalgebraData s = subalgebra_closure(h, U, depth);
    if (s.generators.rows() == 0) return std::nullopt;
    QuadraticPresentation cover = quadratic_cover_presentation(h, s);
    HandlePtr ch = make_handle(cover, depth, h.tower().budget());
    for (int d = 1; d <= depth; ++d) {
        long long cdim = ch->component_dim(d);
        long long sdim = s.dim(d);
        if (cdim != sdim) {
            require(cdim > sdim, errc::internal, "quadratic cover dimension fell below the subalgebra");
            DefectWitness w;
            w.generators = s.generators;
            w.defect_degree = d;
            w.cover_dim = cdim;
            w.subalgebra_dim = sdim;
            return w;
        }
    }
    return std::nullopt;
}

HomCheck check_homomorphism(const QuadraticPresentation& src, const LieAlgebraHandle& tgt, const Mat& images,
                            int depth) {
    require(int(images.rows()) == src.n, errc::arity_mismatch,
            "need one image per source generator (" + std::to_string(src.n) + ")");
    require(images.cols() == size_t(tgt.n()), errc::arity_mismatch, "images must be degree-1 target elements");
    const SliceTower& T = tgt.tower();
    const Field& F = tgt.field();
    int n = src.n;
    std::vector<std::vector<uint8_t>> img;
    for (int i = 0; i < n; ++i) img.push_back(images.row_bytes(size_t(i)));
    // each source relation must map to zero in A_2
    for (size_t r = 0; r < src.relations.rows(); ++r) {
        std::vector<uint8_t> rel = src.relations.row_bytes(r);
        std::vector<uint8_t> acc(size_t(T.dim(2)), 0);
        auto add = [&](const std::vector<uint8_t>& v, uint8_t c) {
            for (size_t k = 0; k < acc.size(); ++k)
                if (v[k]) acc[k] ^= F.mul(c, v[k]);
        };
        for (int i = 0; i < n; ++i) {
            uint8_t c = rel[size_t(tensor::lie2_square_index(n, i))];
            if (c) add(T.mul(1, img[size_t(i)], 1, img[size_t(i)]), c);
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                uint8_t c = rel[size_t(tensor::lie2_bracket_index(n, i, j))];
                if (c) add(T.bracket(1, img[size_t(i)], 1, img[size_t(j)]), c);
            }
        for (uint8_t v : acc)
            if (v) return HomCheck::neither;
    }
    // graded iso: the closure of the images matches both source and target
    HandlePtr sh = make_handle(src, depth, T.budget());
    SubalgebraData closure = subalgebra_closure(tgt, images, depth);
    for (int d = 1; d <= depth; ++d)
        if (sh->component_dim(d) != closure.dim(d) || closure.dim(d) != tgt.component_dim(d))
            return HomCheck::valid;
    return HomCheck::graded_iso;
}

HnnPresentation hnn_presentation(const DerivationData& data, int depth, size_t budget) {
    const LieAlgebraHandle& base = *data.base;
    const Field& F = base.field();
    int n = base.n();
    require(data.domain.cols() == size_t(n), errc::arity_mismatch, "domain rows must be degree-1 elements");
    require(data.values.rows() == data.domain.rows(), errc::arity_mismatch,
            "need one value per domain generator");
    require(data.degree >= 1, errc::usage, "derivation degree must be positive");

    HnnPresentation out;
    out.record.generators = n + 1;
    out.record.stable_letter = n;
    out.record.derivation_degree = data.degree;
    out.record.base = base.presentation();
    out.record.domain = gf2k::rref_copy(data.domain);
    out.record.values = data.values;
    if (data.degree != 1) return out;  // only degree-1 derivations stay quadratic

    require(data.values.cols() == size_t(tensor::lie2_dim(n)), errc::arity_mismatch,
            "degree-1 derivation values live in the degree-2 free Lie component");

    const SliceTower& T = base.tower();
    require(T.depth() >= 3, errc::degree_out_of_range, "derivation law check needs slices to degree 3");
    int m = int(data.domain.rows());
    std::vector<std::vector<uint8_t>> dom, val2;
    for (int i = 0; i < m; ++i) {
        dom.push_back(data.domain.row_bytes(size_t(i)));
        val2.push_back(T.normal_form(2, tensor::relation_to_quadratic_tensor(data.values.row_bytes(size_t(i)), n, F)));
    }
    // phi must kill the degree-2 relations of the domain subalgebra:
    // phi([x,y]) = [phi x, y] + [x, phi y], phi(x^[2]) = [x, phi x].
    {
        SubalgebraData s = subalgebra_closure(base, data.domain, 2);
        // relations in terms of the raw generator list, not the echelonized basis
        Mat images(F, 0, size_t(T.dim(2)));
        for (int i = 0; i < m; ++i) images.append_row(T.mul(1, dom[size_t(i)], 1, dom[size_t(i)]));
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                images.append_row(T.bracket(1, dom[size_t(i)], 1, dom[size_t(j)]));
        Mat kernel = images.transposed().nullspace();
        for (size_t r = 0; r < kernel.rows(); ++r) {
            std::vector<uint8_t> rel = kernel.row_bytes(r);
            std::vector<uint8_t> acc(size_t(T.dim(3)), 0);
            auto add = [&](const std::vector<uint8_t>& v, uint8_t c) {
                for (size_t k = 0; k < acc.size(); ++k)
                    if (v[k]) acc[k] ^= F.mul(c, v[k]);
            };
            for (int i = 0; i < m; ++i) {
                uint8_t c = rel[size_t(tensor::lie2_square_index(m, i))];
                if (c) add(T.bracket(1, dom[size_t(i)], 2, val2[size_t(i)]), c);
            }
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j) {
                    uint8_t c = rel[size_t(tensor::lie2_bracket_index(m, i, j))];
                    if (!c) continue;
                    add(T.bracket(2, val2[size_t(i)], 1, dom[size_t(j)]), c);
                    add(T.bracket(1, dom[size_t(i)], 2, val2[size_t(j)]), c);
                }
            for (uint8_t v : acc)
                if (v)
                    fail(errc::derivation_law_violated,
                         "derivation does not respect the domain's degree-2 relations");
        }
    }

    // presentation <V, t | R, [t, x_i] + phi(x_i)>, t appended as last generator
    int N = n + 1;
    Mat rel(F, 0, size_t(tensor::lie2_dim(N)));
    auto lift_index = [&](int idx) {
        if (idx < n) return tensor::lie2_square_index(N, idx);
        idx -= n;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (idx-- == 0) return tensor::lie2_bracket_index(N, i, j);
        fail(errc::internal, "bad lie2 index");
    };
    for (size_t r = 0; r < base.presentation().relations.rows(); ++r) {
        std::vector<uint8_t> old = base.presentation().relations.row_bytes(r);
        std::vector<uint8_t> nr(size_t(tensor::lie2_dim(N)), 0);
        for (size_t idx = 0; idx < old.size(); ++idx)
            if (old[idx]) nr[size_t(lift_index(int(idx)))] ^= old[idx];
        rel.append_row(nr);
    }
    for (int i = 0; i < m; ++i) {
        std::vector<uint8_t> nr(size_t(tensor::lie2_dim(N)), 0);
        for (int j = 0; j < n; ++j)
            if (dom[size_t(i)][size_t(j)])
                nr[size_t(tensor::lie2_bracket_index(N, j, n))] ^= dom[size_t(i)][size_t(j)];
        std::vector<uint8_t> value = data.values.row_bytes(size_t(i));
        for (size_t idx = 0; idx < value.size(); ++idx)
            if (value[idx]) nr[size_t(lift_index(int(idx)))] ^= value[idx];
        rel.append_row(nr);
    }
    out.quadratic = tensor::make_presentation(N, F, std::move(rel));

    // the base embeds: its graded dimensions are reproduced by the closure of
    // the old generators inside the extension
    HandlePtr eh = make_handle(*out.quadratic, depth, budget);
    Mat old_gens(F, size_t(n), size_t(N));
    for (int i = 0; i < n; ++i) old_gens.set(size_t(i), size_t(i), 1);
    SubalgebraData emb = subalgebra_closure(*eh, old_gens, depth);
    for (int d = 1; d <= depth && d <= base.depth(); ++d)
        require(emb.dim(d) == base.component_dim(d), errc::internal,
                "base algebra does not embed into its HNN-extension");
    return out;
}

std::optional<int> torsion_witness(const LieAlgebraHandle& h, const std::vector<uint8_t>& x, int maxpow) {
    require(x.size() == size_t(h.n()), errc::bad_coefficients, "element must be degree 1");
    require(maxpow >= 1, errc::usage, "maxpow must be >= 1");
    int needed = 1 << maxpow;
    require(needed <= h.depth(), errc::budget_exceeded,
            "torsion check to power 2^" + std::to_string(maxpow) + " needs slices to degree " +
                std::to_string(needed));
    const SliceTower& T = h.tower();
    std::vector<uint8_t> cur = x;
    int deg = 1;
    for (int s = 1; s <= maxpow; ++s) {
        cur = T.mul(deg, cur, deg, cur);
        deg *= 2;
        bool zero = true;
        for (uint8_t v : cur)
            if (v) zero = false;
        if (zero) return s;
    }
    return std::nullopt;
}

RetractComparison retract_quotient(const MixedGraph& g, const std::vector<std::string>& X, const Field& F,
                                   int depth, size_t budget) {
    require(graphs::is_special(g), errc::not_special, "retract quotients need a special graph");
    graphs::VertexMask xmask = 0;
    for (const auto& name : X) xmask |= graphs::VertexMask(1) << g.index_of(name);
    graphs::VertexMask termini = g.termini_mask();
    require((xmask & termini) == 0, errc::terminus_in_x,
            "killed vertices must not contain the terminus of a directed edge");

    HandlePtr big = make_handle(traag_presentation(g, F), depth, budget);
    const SliceTower& T = big->tower();
    // two-sided ideal generated by the killed generators
    std::vector<Mat> ideal(size_t(depth) + 1);
    {
        Mat j1(F, 0, size_t(g.n()));
        for (int v = 0; v < g.n(); ++v) {
            if (!((xmask >> v) & 1u)) continue;
            std::vector<uint8_t> e(size_t(g.n()), 0);
            e[size_t(v)] = 1;
            j1.append_row(e);
        }
        j1.rref();
        ideal[1] = std::move(j1);
    }
    for (int d = 2; d <= depth; ++d) {
        gf2k::Echelonizer ech(F, size_t(T.dim(d)));
        const Mat& prev = ideal[size_t(d - 1)];
        for (size_t r = 0; r < prev.rows(); ++r) {
            std::vector<uint8_t> row = prev.row_bytes(r);
            for (int j = 0; j < g.n(); ++j) {
                ech.add_row(T.rightmul(d - 1, row, j));
                std::vector<uint8_t> unit(size_t(g.n()), 0);
                unit[size_t(j)] = 1;
                ech.add_row(T.mul(1, unit, d - 1, row));
            }
        }
        ideal[size_t(d)] = ech.matrix();
    }

    RetractComparison out;
    for (int d = 1; d <= depth; ++d) {
        const Mat& comp = big->component(d);
        gf2k::Echelonizer joint(F, size_t(T.dim(d)));
        for (size_t r = 0; r < ideal[size_t(d)].rows(); ++r) joint.add_row(ideal[size_t(d)].row_bytes(r));
        long long meet = 0;
        for (size_t r = 0; r < comp.rows(); ++r)
            if (!joint.add_row(comp.row_bytes(r))) ++meet;  // already in the ideal span? no: not independent
        // dim(g_d ∩ J_d) = dim g_d + dim J_d - dim(g_d + J_d)
        long long sum_dim = joint.rank();
        long long inter = long(comp.rows()) + long(ideal[size_t(d)].rows()) - sum_dim;
        (void)meet;
        out.quotient_dims.ell.push_back(long(comp.rows()) - inter);
    }

    graphs::MixedGraph induced = graphs::induced_subgraph(g, g.full_mask() & ~xmask);
    HandlePtr small = make_handle(traag_presentation(induced, F), depth, budget);
    out.induced_dims = graded_dims(*small, depth);
    out.equal = out.quotient_dims == out.induced_dims;
    return out;
}

}  // namespace graphlie::lie
