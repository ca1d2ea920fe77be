#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphlie/errors.hpp"

namespace graphlie::gf2k {

/// Finite field F_{2^m}, 1 <= m <= 8. Elements are bit patterns of length m
/// (coordinates in the polynomial basis 1, T, ..., T^{m-1}); addition is XOR.
/// Multiplication reduces modulo a fixed irreducible polynomial per degree,
/// so equal degrees mean bit-identical arithmetic everywhere.
class Field {
public:
    explicit Field(int m);

    static const Field& f2();
    static const Field& f4();

    int degree() const { return m_; }
    unsigned modulus() const { return modulus_; }
    int order() const { return 1 << m_; }

    uint8_t add(uint8_t a, uint8_t b) const { return a ^ b; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[(size_t(a) << m_) | b]; }
    uint8_t inv(uint8_t a) const;
    uint8_t square(uint8_t a) const { return mul(a, a); }

    bool operator==(const Field& o) const { return m_ == o.m_; }
    bool operator!=(const Field& o) const { return m_ != o.m_; }

    /// "T", "T+1", "1", "0", "T^2+T", ... (polynomial-basis display).
    std::string to_string(uint8_t a) const;
    /// Inverse of to_string; also accepts plain integer bit patterns.
    uint8_t parse(const std::string& s) const;

private:
    int m_;
    unsigned modulus_;
    std::vector<uint8_t> mul_;
    std::vector<uint8_t> inv_;
};

struct RrefInfo {
    int rank = 0;
    std::vector<int> pivots;  // strictly increasing columns, pivot entries are 1
};

/// Dense matrix over F_{2^m}. Rows are bit-packed into 64-bit words when
/// m = 1 (the tensor slices over F_2 reach thousands of columns) and stored
/// as bytes otherwise.
class Mat {
public:
    Mat() : field_(&Field::f2()), rows_(0), cols_(0) {}
    Mat(const Field& f, size_t rows, size_t cols);

    const Field& field() const { return *field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    uint8_t get(size_t i, size_t j) const;
    void set(size_t i, size_t j, uint8_t v);

    /// row_dst += c * row_src
    void add_row_multiple(size_t dst, size_t src, uint8_t c);
    void scale_row(size_t i, uint8_t c);
    void swap_rows(size_t i, size_t j);
    bool row_is_zero(size_t i) const;

    std::vector<uint8_t> row_bytes(size_t i) const;
    void set_row(size_t i, const std::vector<uint8_t>& bytes);
    void append_row(const std::vector<uint8_t>& bytes);

    /// In-place reduction to reduced row-echelon form. Deterministic:
    /// pivot = leftmost nonzero column, ties broken by lowest row index.
    /// Zero rows are dropped.
    RrefInfo rref();
    const std::optional<RrefInfo>& rref_info() const { return rref_; }

    Mat transposed() const;

    /// Right nullspace {x : M x = 0} of an RREF matrix, itself in RREF.
    Mat nullspace() const;

    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    /// Stable byte serialization (used as cache key and in reports).
    std::string key() const;

private:
    friend class Echelonizer;
    const Field* field_;
    size_t rows_, cols_;
    size_t words_per_row_ = 0;           // m == 1
    std::vector<uint64_t> bits_;         // m == 1
    std::vector<uint8_t> bytes_;         // m > 1
    std::optional<RrefInfo> rref_;       // valid only right after rref()
};

/// Incremental RREF: rows stream in, the reduced basis and pivot set are
/// maintained after every insertion.
class Echelonizer {
public:
    Echelonizer(const Field& f, size_t cols);

    /// Reduces the row against the current basis; if a new pivot appears the
    /// row joins the basis (kept fully reduced). Returns true iff rank grew.
    bool add_row(std::vector<uint8_t> row);

    int rank() const { return int(basis_.size()); }
    size_t cols() const { return cols_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// Coordinates of `row` over the non-pivot columns after reduction, or
    /// nullopt if the row is not in the span.
    std::optional<std::vector<uint8_t>> reduce(std::vector<uint8_t> row) const;
    bool contains(const std::vector<uint8_t>& row) const;

    /// Basis as an RREF matrix (rows sorted by pivot column).
    Mat matrix() const;

private:
    const Field* field_;
    size_t cols_;
    std::vector<std::vector<uint8_t>> basis_;  // sorted by pivot column
    std::vector<int> pivots_;
};

/// Helpers shared by the algebra engines.
Mat identity(const Field& f, size_t n);
Mat rref_copy(const Mat& m, RrefInfo* info = nullptr);
int rank_of(const Mat& m);

}  // namespace graphlie::gf2k
