#include "graphlie/tensor.hpp"

#include <map>
#include <mutex>

#include "graphlie/series.hpp"

namespace graphlie::tensor {

int lie2_dim(int n) { return n + n * (n - 1) / 2; }

int lie2_square_index(int n, int i) {
    (void)n;
    return i;
}

int lie2_bracket_index(int n, int i, int j) {
    // brackets (i,j), i<j, ordered (0,1),(0,2),...,(0,n-1),(1,2),...
    return n + i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::vector<uint8_t> square_of_linear(const std::vector<uint8_t>& coeffs, const Field& F) {
    int n = int(coeffs.size());
    std::vector<uint8_t> out(size_t(lie2_dim(n)), 0);
    for (int i = 0; i < n; ++i) {
        if (coeffs[size_t(i)]) out[size_t(lie2_square_index(n, i))] ^= F.square(coeffs[size_t(i)]);
        for (int j = i + 1; j < n; ++j)
            if (coeffs[size_t(i)] && coeffs[size_t(j)])
                out[size_t(lie2_bracket_index(n, i, j))] ^= F.mul(coeffs[size_t(i)], coeffs[size_t(j)]);
    }
    return out;
}

QuadraticPresentation make_presentation(int n, const Field& F, Mat relations) {
    require(relations.cols() == size_t(lie2_dim(n)), errc::internal, "relation matrix has wrong width");
    relations.rref();
    QuadraticPresentation p;
    p.n = n;
    p.field = &F;
    p.relations = std::move(relations);
    return p;
}

std::vector<uint8_t> relation_to_quadratic_tensor(const std::vector<uint8_t>& rel, int n, const Field& F) {
    (void)F;
    require(rel.size() == size_t(lie2_dim(n)), errc::internal, "relation vector has wrong length");
    std::vector<uint8_t> out(size_t(n) * size_t(n), 0);
    for (int i = 0; i < n; ++i) {
        uint8_t c = rel[size_t(lie2_square_index(n, i))];
        if (c) out[size_t(i) * n + i] ^= c;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            uint8_t c = rel[size_t(lie2_bracket_index(n, i, j))];
            if (c) {
                out[size_t(i) * n + j] ^= c;
                out[size_t(j) * n + i] ^= c;
            }
        }
    return out;
}

QuadraticAlgebra envelope_algebra(const QuadraticPresentation& p) {
    Mat q(*p.field, 0, size_t(p.n) * size_t(p.n));
    for (size_t r = 0; r < p.relations.rows(); ++r)
        q.append_row(relation_to_quadratic_tensor(p.relations.row_bytes(r), p.n, *p.field));
    q.rref();
    QuadraticAlgebra a;
    a.n = p.n;
    a.field = p.field;
    a.q = std::move(q);
    return a;
}

QuadraticAlgebra quadratic_dual(const QuadraticAlgebra& a) {
    QuadraticAlgebra d;
    d.n = a.n;
    d.field = a.field;
    d.q = a.q.nullspace();
    return d;
}

QuadraticAlgebra quadratic_dual(const QuadraticPresentation& p) { return quadratic_dual(envelope_algebra(p)); }

const GradedSlice& SliceTower::slice(int d) const {
    require(d >= 0 && d <= depth(), errc::degree_out_of_range,
            "slice degree " + std::to_string(d) + " out of range (depth " + std::to_string(depth()) + ")");
    return slices_[size_t(d)];
}

std::vector<long long> SliceTower::dims() const {
    std::vector<long long> out;
    for (const auto& s : slices_) out.push_back(s.dim);
    return out;
}

SliceTower::SliceTower(QuadraticAlgebra a, int N, size_t budget) : alg_(std::move(a)), budget_(budget) {
    require(N >= 0, errc::usage, "slice depth must be >= 0");
    int n = alg_.n;
    const Field& F = *alg_.field;

    GradedSlice s0;
    s0.degree = 0;
    s0.ambient_dim = 1;
    s0.words = {{}};
    s0.dim = 1;
    slices_.push_back(std::move(s0));
    if (N == 0) {
        projectors_.resize(1);
        return;
    }

    GradedSlice s1;
    s1.degree = 1;
    s1.ambient_dim = n;
    for (int i = 0; i < n; ++i) s1.words.push_back({uint8_t(i)});
    s1.dim = n;
    slices_.push_back(std::move(s1));
    mult_.push_back(gf2k::identity(F, size_t(n)));  // A_0 basis x V -> A_1

    const Mat& Q = alg_.q;
    size_t qrank = Q.rows();

    for (int d = 1; d < N; ++d) {
        const GradedSlice& cur = slices_[size_t(d)];
        const GradedSlice& prev = slices_[size_t(d - 1)];
        size_t cols = size_t(cur.dim) * size_t(n);
        require(cols <= budget_, errc::budget_exceeded,
                "slice at degree " + std::to_string(d + 1) + " needs " + std::to_string(cols) +
                    " columns, budget " + std::to_string(budget_));
        gf2k::Echelonizer ech(F, cols);
        if (qrank > 0) {
            const Mat& table = mult_[size_t(d - 1)];
            std::vector<uint8_t> row(cols);
            for (int b = 0; b < prev.dim; ++b) {
                for (size_t qr = 0; qr < qrank; ++qr) {
                    std::fill(row.begin(), row.end(), 0);
                    bool nonzero = false;
                    for (int i = 0; i < n; ++i) {
                        // nf(prev_b * v_i) spread against letter j with coeff Q[qr][(i,j)]
                        for (int j = 0; j < n; ++j) {
                            uint8_t c = Q.get(qr, size_t(i) * n + j);
                            if (!c) continue;
                            size_t trow = size_t(b) * n + size_t(i);
                            for (int k = 0; k < cur.dim; ++k) {
                                uint8_t v = table.get(trow, size_t(k));
                                if (!v) continue;
                                row[size_t(k) * n + j] ^= F.mul(c, v);
                                nonzero = true;
                            }
                        }
                    }
                    if (nonzero) ech.add_row(row);
                }
            }
        }

        const auto& pivots = ech.pivots();
        std::vector<int> coord_to_basis(cols, -1);
        GradedSlice next;
        next.degree = d + 1;
        next.ambient_dim = cur.ambient_dim * n;
        {
            size_t pi = 0;
            int idx = 0;
            for (size_t c = 0; c < cols; ++c) {
                if (pi < pivots.size() && size_t(pivots[pi]) == c) {
                    ++pi;
                    continue;
                }
                coord_to_basis[c] = idx++;
                std::vector<uint8_t> w = cur.words[c / size_t(n)];
                w.push_back(uint8_t(c % size_t(n)));
                next.words.push_back(std::move(w));
            }
            next.dim = idx;
        }

        Mat table(F, cols, size_t(next.dim));
        Mat ebasis = ech.matrix();
        for (size_t c = 0; c < cols; ++c) {
            if (coord_to_basis[c] >= 0) {
                table.set(c, size_t(coord_to_basis[c]), 1);
            } else {
                // pivot word: its class is the (char-2) sum of the row's
                // non-pivot entries
                size_t prow = 0;
                while (size_t(pivots[prow]) != c) ++prow;
                for (size_t cc = 0; cc < cols; ++cc) {
                    if (coord_to_basis[cc] < 0) continue;
                    uint8_t v = ebasis.get(prow, cc);
                    if (v) table.set(c, size_t(coord_to_basis[cc]), v);
                }
            }
        }
        mult_.push_back(std::move(table));
        slices_.push_back(std::move(next));
    }
    projectors_.resize(slices_.size());
}

std::vector<uint8_t> SliceTower::rightmul(int d, const std::vector<uint8_t>& vec, int letter) const {
    require(d >= 0 && d < depth(), errc::degree_out_of_range, "rightmul degree out of range");
    require(vec.size() == size_t(dim(d)), errc::internal, "rightmul: vector length mismatch");
    const Field& F = field();
    const Mat& table = mult_[size_t(d)];
    std::vector<uint8_t> out(size_t(dim(d + 1)), 0);
    int n = alg_.n;
    for (size_t b = 0; b < vec.size(); ++b) {
        uint8_t c = vec[b];
        if (!c) continue;
        size_t trow = b * size_t(n) + size_t(letter);
        for (size_t k = 0; k < out.size(); ++k) {
            uint8_t v = table.get(trow, k);
            if (v) out[k] ^= F.mul(c, v);
        }
    }
    return out;
}

std::vector<uint8_t> SliceTower::mul(int d1, const std::vector<uint8_t>& x, int d2,
                                     const std::vector<uint8_t>& y) const {
    require(d1 + d2 <= depth(), errc::degree_out_of_range, "product degree exceeds tower depth");
    if (d2 == 0) {
        const Field& F = field();
        std::vector<uint8_t> out(x.size(), 0);
        for (size_t i = 0; i < x.size(); ++i) out[i] = F.mul(x[i], y[0]);
        return out;
    }
    const Field& F = field();
    const GradedSlice& sy = slice(d2);
    std::vector<uint8_t> acc(size_t(dim(d1 + d2)), 0);
    for (int b = 0; b < sy.dim; ++b) {
        uint8_t c = y[size_t(b)];
        if (!c) continue;
        std::vector<uint8_t> cur = x;
        int deg = d1;
        for (uint8_t letter : sy.words[size_t(b)]) {
            cur = rightmul(deg, cur, letter);
            ++deg;
        }
        for (size_t k = 0; k < acc.size(); ++k)
            if (cur[k]) acc[k] ^= F.mul(c, cur[k]);
    }
    return acc;
}

std::vector<uint8_t> SliceTower::bracket(int d1, const std::vector<uint8_t>& x, int d2,
                                         const std::vector<uint8_t>& y) const {
    std::vector<uint8_t> a = mul(d1, x, d2, y);
    std::vector<uint8_t> b = mul(d2, y, d1, x);
    for (size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
    return a;
}

const Mat& SliceTower::projector(int d) const {
    require(d >= 0 && d <= depth(), errc::degree_out_of_range, "projector degree out of range");
    if (projectors_[size_t(d)]) return *projectors_[size_t(d)];
    const Field& F = field();
    int n = alg_.n;
    long long ambient = slice(d).ambient_dim;
    require(size_t(ambient) <= budget_, errc::budget_exceeded,
            "word space of dimension " + std::to_string(ambient) + " exceeds budget " + std::to_string(budget_));
    // built iteratively: row(w . j) = rightmul(row(w), j)
    Mat proj(F, 1, 1);
    proj.set(0, 0, 1);
    for (int deg = 0; deg < d; ++deg) {
        long long sz = slice(deg).ambient_dim;
        Mat next(F, size_t(sz) * size_t(n), size_t(dim(deg + 1)));
        for (long long w = 0; w < sz; ++w) {
            std::vector<uint8_t> base = proj.row_bytes(size_t(w));
            for (int j = 0; j < n; ++j) {
                std::vector<uint8_t> r = rightmul(deg, base, j);
                next.set_row(size_t(w) * size_t(n) + size_t(j), r);
            }
        }
        proj = std::move(next);
    }
    projectors_[size_t(d)] = std::move(proj);
    return *projectors_[size_t(d)];
}

std::vector<uint8_t> SliceTower::normal_form(int d, const std::vector<uint8_t>& word_vec) const {
    const Mat& proj = projector(d);
    require(word_vec.size() == proj.rows(), errc::internal, "normal_form: vector length mismatch");
    const Field& F = field();
    std::vector<uint8_t> out(size_t(dim(d)), 0);
    for (size_t w = 0; w < word_vec.size(); ++w) {
        uint8_t c = word_vec[w];
        if (!c) continue;
        for (size_t k = 0; k < out.size(); ++k) {
            uint8_t v = proj.get(w, k);
            if (v) out[k] ^= F.mul(c, v);
        }
    }
    return out;
}

namespace {

// outer(s,t)[a*n^j + b] = s[a] * t[b]
std::vector<uint8_t> outer_sym(const std::vector<uint8_t>& s, const std::vector<uint8_t>& t, const Field& F) {
    size_t ns = s.size(), nt = t.size();
    std::vector<uint8_t> out(ns * nt, 0);
    for (size_t a = 0; a < ns; ++a) {
        if (!s[a]) continue;
        for (size_t b = 0; b < nt; ++b)
            if (t[b]) out[a * nt + b] = F.mul(s[a], t[b]);
    }
    return out;
}

}  // namespace

Mat restricted_lie_span(int n, int d, const Field& F, size_t budget) {
    require(d >= 1, errc::usage, "restricted_lie_span needs degree >= 1");
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, Mat> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({F.degree(), n, d});
        if (it != cache.end()) return it->second;
    }
    double amb = 1;
    for (int i = 0; i < d; ++i) amb *= n;
    require(amb <= double(budget), errc::budget_exceeded,
            "free Lie span at degree " + std::to_string(d) + " exceeds budget");

    std::vector<Mat> F_;  // F_[k] for 1..d
    F_.resize(size_t(d) + 1);
    F_[1] = gf2k::identity(F, size_t(n));
    std::vector<long long> pow(size_t(d) + 1, 1);
    for (int i = 1; i <= d; ++i) pow[size_t(i)] = pow[size_t(i) - 1] * n;

    for (int deg = 2; deg <= d; ++deg) {
        gf2k::Echelonizer ech(F, size_t(pow[size_t(deg)]));
        for (int i = 1; i * 2 <= deg; ++i) {
            int j = deg - i;
            const Mat& A = F_[size_t(i)];
            const Mat& B = F_[size_t(j)];
            for (size_t ra = 0; ra < A.rows(); ++ra) {
                std::vector<uint8_t> s = A.row_bytes(ra);
                size_t rb_start = (i == j) ? ra + 1 : 0;
                for (size_t rb = rb_start; rb < B.rows(); ++rb) {
                    std::vector<uint8_t> t = B.row_bytes(rb);
                    std::vector<uint8_t> st = outer_sym(s, t, F);
                    std::vector<uint8_t> ts = outer_sym(t, s, F);
                    for (size_t k = 0; k < st.size(); ++k) st[k] ^= ts[k];
                    ech.add_row(std::move(st));
                }
            }
        }
        if (deg % 2 == 0) {
            const Mat& H = F_[size_t(deg / 2)];
            for (size_t r = 0; r < H.rows(); ++r) {
                std::vector<uint8_t> b = H.row_bytes(r);
                ech.add_row(outer_sym(b, b, F));
            }
        }
        F_[size_t(deg)] = ech.matrix();
    }
    Mat result = F_[size_t(d)];
    {
        std::lock_guard<std::mutex> lock(mu);
        cache.emplace(std::make_tuple(F.degree(), n, d), result);
    }
    return result;
}

std::vector<long long> quad_algebra_dims(const QuadraticPresentation& p, int depth, size_t budget) {
    SliceTower t(envelope_algebra(p), depth, budget);
    return t.dims();
}

}  // namespace graphlie::tensor
