#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphlie/gf2k.hpp"

namespace graphlie::tensor {

using gf2k::Field;
using gf2k::Mat;

inline constexpr size_t kDefaultBudget = 2'000'000;

/// Basis of the degree-2 component of the free restricted Lie algebra on n
/// generators: squares v_i^[2] for i = 0..n-1, then brackets [v_i,v_j] for
/// i < j in lexicographic order.
int lie2_dim(int n);
int lie2_square_index(int n, int i);
int lie2_bracket_index(int n, int i, int j);

/// (sum_i c_i v_i)^[2] expanded over the degree-2 basis:
/// sum c_i^2 v_i^[2] + sum_{i<j} c_i c_j [v_i,v_j].
std::vector<uint8_t> square_of_linear(const std::vector<uint8_t>& coeffs, const Field& F);

/// Generators plus a relation subspace inside the degree-2 component of the
/// free restricted Lie algebra. The relation matrix is kept in RREF.
struct QuadraticPresentation {
    int n = 0;
    const Field* field = &Field::f2();
    Mat relations;  // rows over the lie2 basis

    std::string key() const { return std::to_string(n) + "|" + relations.key(); }
};

QuadraticPresentation make_presentation(int n, const Field& F, Mat relations);

/// v_i^[2] -> v_i (x) v_i and [v_i,v_j] -> v_i (x) v_j + v_j (x) v_i,
/// extended linearly: the quadratic ideal generator in the tensor square.
std::vector<uint8_t> relation_to_quadratic_tensor(const std::vector<uint8_t>& rel, int n, const Field& F);

/// Quadratic associative algebra T(V)/(Q), Q a subspace of V (x) V stored as
/// an RREF matrix with column index i*n+j for the word v_i v_j.
struct QuadraticAlgebra {
    int n = 0;
    const Field* field = &Field::f2();
    Mat q;  // RREF, columns n^2

    std::string key() const { return std::to_string(n) + "|" + q.key(); }
};

/// The restricted envelope of a presented algebra: relations embedded into
/// the tensor square.
QuadraticAlgebra envelope_algebra(const QuadraticPresentation& p);

/// Annihilator of Q inside the dual tensor square (same index convention);
/// dim Q + dim Q-perp = n^2. Involutive: dual(dual(a)) == a.
QuadraticAlgebra quadratic_dual(const QuadraticAlgebra& a);
QuadraticAlgebra quadratic_dual(const QuadraticPresentation& p);

/// One graded component of the quotient algebra: an explicit basis of normal
/// words of length `degree` plus the data to reduce arbitrary tensors.
struct GradedSlice {
    int degree = 0;
    long long ambient_dim = 1;               // n^degree
    std::vector<std::vector<uint8_t>> words;  // normal words, lexicographic
    int dim = 0;
};

/// Degree-by-degree bases of A_d = V^{(x)d} / sum V^i (x) Q (x) V^j together
/// with right-multiplication tables. Normal words are the non-pivot columns
/// under the lexicographic word order with leftmost-pivot reduction, so every
/// basis and every witness is reproducible bit for bit.
class SliceTower {
public:
    SliceTower(QuadraticAlgebra a, int depth, size_t budget = kDefaultBudget);

    const QuadraticAlgebra& algebra() const { return alg_; }
    const Field& field() const { return *alg_.field; }
    int n() const { return alg_.n; }
    int depth() const { return int(slices_.size()) - 1; }

    const GradedSlice& slice(int d) const;
    int dim(int d) const { return slice(d).dim; }
    std::vector<long long> dims() const;

    /// Normal form of (coordinate vector in A_d) * v_letter, in A_{d+1}.
    std::vector<uint8_t> rightmul(int d, const std::vector<uint8_t>& vec, int letter) const;
    /// Product A_{d1} x A_{d2} -> A_{d1+d2}.
    std::vector<uint8_t> mul(int d1, const std::vector<uint8_t>& x, int d2, const std::vector<uint8_t>& y) const;
    /// xy + yx.
    std::vector<uint8_t> bracket(int d1, const std::vector<uint8_t>& x, int d2,
                                 const std::vector<uint8_t>& y) const;

    /// Linear projection of the full degree-d word space onto A_d; zero
    /// output exactly on the degree-d component of the ideal. Builds (and
    /// caches) the n^d-row projector, subject to the budget guard.
    const Mat& projector(int d) const;
    std::vector<uint8_t> normal_form(int d, const std::vector<uint8_t>& word_vec) const;

    size_t budget() const { return budget_; }

private:
    QuadraticAlgebra alg_;
    size_t budget_;
    std::vector<GradedSlice> slices_;
    std::vector<Mat> mult_;  // mult_[d]: rows (b * n + j) -> coords in A_{d+1}
    mutable std::vector<std::optional<Mat>> projectors_;
};

/// Echelon basis of the degree-d component of the free restricted Lie
/// algebra inside the word space: F_1 = V and
/// F_d = sum_{i+j=d} [F_i, F_j] (+ squares of F_{d/2} when d is even).
/// dim F_d = M_{2,d}(n). Cached per (field, n, d).
Mat restricted_lie_span(int n, int d, const Field& F, size_t budget = kDefaultBudget);

/// All quotient slices at once (ties the pieces together for callers that
/// just want dimensions).
std::vector<long long> quad_algebra_dims(const QuadraticPresentation& p, int depth,
                                         size_t budget = kDefaultBudget);

}  // namespace graphlie::tensor
