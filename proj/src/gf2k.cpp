#include "graphlie/gf2k.hpp"

#include <algorithm>
#include <sstream>

namespace graphlie::gf2k {

namespace {

// Conway polynomials over F_2 for degrees 1..8, as bit patterns
// (bit i = coefficient of T^i). Degree 2 is T^2+T+1.
constexpr unsigned kModulus[9] = {0, 0b11, 0b111, 0b1011, 0b10011, 0b100101, 0b1011011, 0b10000011, 0b100011101};

uint8_t poly_mul_mod(unsigned a, unsigned b, unsigned modulus, int m) {
    unsigned acc = 0;
    for (int i = 0; i < m; ++i)
        if (b & (1u << i)) acc ^= a << i;
    for (int i = 2 * m - 2; i >= m; --i)
        if (acc & (1u << i)) acc ^= modulus << (i - m);
    return uint8_t(acc);
}

}  // namespace

Field::Field(int m) : m_(m) {
    require(m >= 1 && m <= 8, errc::usage, "field extension degree must be in 1..8");
    modulus_ = kModulus[m];
    int q = order();
    mul_.assign(size_t(q) * q, 0);
    inv_.assign(q, 0);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            mul_[(size_t(a) << m_) | b] = poly_mul_mod(unsigned(a), unsigned(b), modulus_, m_);
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (mul(uint8_t(a), uint8_t(b)) == 1) inv_[a] = uint8_t(b);
}

const Field& Field::f2() {
    static const Field f(1);
    return f;
}

const Field& Field::f4() {
    static const Field f(2);
    return f;
}

uint8_t Field::inv(uint8_t a) const {
    require(a != 0, errc::internal, "inverse of zero field element");
    return inv_[a];
}

std::string Field::to_string(uint8_t a) const {
    if (a == 0) return "0";
    std::string out;
    for (int i = m_ - 1; i >= 0; --i) {
        if (!(a & (1 << i))) continue;
        if (!out.empty()) out += "+";
        if (i == 0)
            out += "1";
        else if (i == 1)
            out += "T";
        else
            out += "T^" + std::to_string(i);
    }
    return out;
}

uint8_t Field::parse(const std::string& s) const {
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t += c;
    require(!t.empty(), errc::bad_coefficients, "empty field element");
    unsigned acc = 0;
    size_t pos = 0;
    bool is_poly = t.find_first_of("Tt") != std::string::npos;
    if (!is_poly) {
        // plain bit pattern, e.g. "0", "1", "2" (=T), "3" (=T+1)
        try {
            size_t used = 0;
            unsigned long v = std::stoul(t, &used);
            require(used == t.size() && v < unsigned(order()), errc::bad_coefficients,
                    "field element out of range: " + s);
            return uint8_t(v);
        } catch (const error&) {
            throw;
        } catch (...) {
            fail(errc::bad_coefficients, "cannot parse field element: " + s);
        }
    }
    while (pos < t.size()) {
        if (t[pos] == '+') {
            ++pos;
            continue;
        }
        if (t[pos] == 'T' || t[pos] == 't') {
            ++pos;
            int e = 1;
            if (pos < t.size() && t[pos] == '^') {
                ++pos;
                size_t start = pos;
                while (pos < t.size() && isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
                require(pos > start, errc::bad_coefficients, "bad exponent in " + s);
                e = std::stoi(t.substr(start, pos - start));
            }
            require(e < m_, errc::bad_coefficients, "exponent too large for field: " + s);
            acc ^= 1u << e;
        } else if (t[pos] == '1') {
            acc ^= 1u;
            ++pos;
        } else if (t[pos] == '0') {
            ++pos;
        } else {
            fail(errc::bad_coefficients, "cannot parse field element: " + s);
        }
    }
    return uint8_t(acc);
}

Mat::Mat(const Field& f, size_t rows, size_t cols) : field_(&f), rows_(rows), cols_(cols) {
    if (f.degree() == 1) {
        words_per_row_ = (cols + 63) / 64;
        bits_.assign(rows * words_per_row_, 0);
    } else {
        bytes_.assign(rows * cols, 0);
    }
}

uint8_t Mat::get(size_t i, size_t j) const {
    if (words_per_row_) return (bits_[i * words_per_row_ + j / 64] >> (j % 64)) & 1u;
    return bytes_[i * cols_ + j];
}

void Mat::set(size_t i, size_t j, uint8_t v) {
    rref_.reset();
    if (words_per_row_) {
        uint64_t& w = bits_[i * words_per_row_ + j / 64];
        uint64_t bit = uint64_t(1) << (j % 64);
        w = v ? (w | bit) : (w & ~bit);
    } else {
        bytes_[i * cols_ + j] = v;
    }
}

void Mat::add_row_multiple(size_t dst, size_t src, uint8_t c) {
    rref_.reset();
    if (c == 0) return;
    if (words_per_row_) {
        uint64_t* d = &bits_[dst * words_per_row_];
        const uint64_t* s = &bits_[src * words_per_row_];
        for (size_t w = 0; w < words_per_row_; ++w) d[w] ^= s[w];
    } else {
        uint8_t* d = &bytes_[dst * cols_];
        const uint8_t* s = &bytes_[src * cols_];
        for (size_t j = 0; j < cols_; ++j) d[j] ^= field_->mul(c, s[j]);
    }
}

void Mat::scale_row(size_t i, uint8_t c) {
    rref_.reset();
    if (c == 1) return;
    if (words_per_row_) {
        if (c == 0) std::fill_n(&bits_[i * words_per_row_], words_per_row_, uint64_t(0));
        return;
    }
    uint8_t* r = &bytes_[i * cols_];
    for (size_t j = 0; j < cols_; ++j) r[j] = field_->mul(c, r[j]);
}

void Mat::swap_rows(size_t i, size_t j) {
    if (i == j) return;
    rref_.reset();
    if (words_per_row_)
        std::swap_ranges(&bits_[i * words_per_row_], &bits_[(i + 1) * words_per_row_], &bits_[j * words_per_row_]);
    else
        std::swap_ranges(&bytes_[i * cols_], &bytes_[(i + 1) * cols_], &bytes_[j * cols_]);
}

bool Mat::row_is_zero(size_t i) const {
    if (words_per_row_) {
        for (size_t w = 0; w < words_per_row_; ++w)
            if (bits_[i * words_per_row_ + w]) return false;
        return true;
    }
    for (size_t j = 0; j < cols_; ++j)
        if (bytes_[i * cols_ + j]) return false;
    return true;
}

std::vector<uint8_t> Mat::row_bytes(size_t i) const {
    std::vector<uint8_t> out(cols_);
    for (size_t j = 0; j < cols_; ++j) out[j] = get(i, j);
    return out;
}

void Mat::set_row(size_t i, const std::vector<uint8_t>& bytes) {
    require(bytes.size() == cols_, errc::internal, "row length mismatch");
    for (size_t j = 0; j < cols_; ++j) set(i, j, bytes[j]);
}

void Mat::append_row(const std::vector<uint8_t>& bytes) {
    rref_.reset();
    ++rows_;
    if (words_per_row_)
        bits_.resize(rows_ * words_per_row_, 0);
    else
        bytes_.resize(rows_ * cols_, 0);
    set_row(rows_ - 1, bytes);
}

RrefInfo Mat::rref() {
    RrefInfo info;
    size_t r = 0;
    for (size_t col = 0; col < cols_ && r < rows_; ++col) {
        size_t piv = rows_;
        for (size_t i = r; i < rows_; ++i)
            if (get(i, col)) {
                piv = i;
                break;
            }
        if (piv == rows_) continue;
        swap_rows(r, piv);
        uint8_t lead = get(r, col);
        if (lead != 1) scale_row(r, field_->inv(lead));
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            uint8_t v = get(i, col);
            if (v) add_row_multiple(i, r, v);
        }
        info.pivots.push_back(int(col));
        ++r;
    }
    info.rank = int(r);
    // drop zero rows
    rows_ = r;
    if (words_per_row_)
        bits_.resize(rows_ * words_per_row_);
    else
        bytes_.resize(rows_ * cols_);
    rref_ = info;
    return info;
}

Mat Mat::transposed() const {
    Mat t(*field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            uint8_t v = get(i, j);
            if (v) t.set(j, i, v);
        }
    return t;
}

Mat Mat::nullspace() const {
    Mat m = *this;
    RrefInfo info = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int p : info.pivots) is_pivot[size_t(p)] = true;
    Mat null(*field_, 0, cols_);
    for (size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<uint8_t> v(cols_, 0);
        v[f] = 1;
        // row i states: x_{pivot_i} = sum over free cols of entry * x_free (char 2)
        for (size_t i = 0; i < size_t(info.rank); ++i) {
            uint8_t c = m.get(i, f);
            if (c) v[size_t(info.pivots[i])] = c;
        }
        null.append_row(v);
    }
    null.rref();
    return null;
}

bool Mat::operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_->degree() != o.field_->degree()) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (get(i, j) != o.get(i, j)) return false;
    return true;
}

std::string Mat::key() const {
    std::string k;
    k.reserve(rows_ * cols_ + 16);
    k += std::to_string(field_->degree()) + ":" + std::to_string(rows_) + "x" + std::to_string(cols_) + ":";
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) k += char('0' + get(i, j));
    return k;
}

Echelonizer::Echelonizer(const Field& f, size_t cols) : field_(&f), cols_(cols) {}

bool Echelonizer::add_row(std::vector<uint8_t> row) {
    require(row.size() == cols_, errc::internal, "echelonizer row length mismatch");
    const Field& F = *field_;
    for (size_t b = 0; b < basis_.size(); ++b) {
        uint8_t c = row[size_t(pivots_[b])];
        if (!c) continue;
        const auto& br = basis_[b];
        for (size_t j = 0; j < cols_; ++j) row[j] ^= F.mul(c, br[j]);
    }
    size_t lead = cols_;
    for (size_t j = 0; j < cols_; ++j)
        if (row[j]) {
            lead = j;
            break;
        }
    if (lead == cols_) return false;
    uint8_t ic = F.inv(row[lead]);
    if (ic != 1)
        for (size_t j = lead; j < cols_; ++j) row[j] = F.mul(ic, row[j]);
    // back-eliminate the new pivot column from the existing basis
    for (size_t b = 0; b < basis_.size(); ++b) {
        uint8_t c = basis_[b][lead];
        if (!c) continue;
        auto& br = basis_[b];
        for (size_t j = lead; j < cols_; ++j) br[j] ^= F.mul(c, row[j]);
    }
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), int(lead));
    size_t idx = size_t(it - pivots_.begin());
    pivots_.insert(it, int(lead));
    basis_.insert(basis_.begin() + idx, std::move(row));
    return true;
}

std::optional<std::vector<uint8_t>> Echelonizer::reduce(std::vector<uint8_t> row) const {
    const Field& F = *field_;
    std::vector<uint8_t> coords(basis_.size(), 0);
    for (size_t b = 0; b < basis_.size(); ++b) {
        uint8_t c = row[size_t(pivots_[b])];
        if (!c) continue;
        coords[b] = c;
        const auto& br = basis_[b];
        for (size_t j = 0; j < cols_; ++j) row[j] ^= F.mul(c, br[j]);
    }
    for (size_t j = 0; j < cols_; ++j)
        if (row[j]) return std::nullopt;
    return coords;
}

bool Echelonizer::contains(const std::vector<uint8_t>& row) const { return reduce(row).has_value(); }

Mat Echelonizer::matrix() const {
    Mat m(*field_, basis_.size(), cols_);
    for (size_t i = 0; i < basis_.size(); ++i) m.set_row(i, basis_[i]);
    return m;
}

Mat identity(const Field& f, size_t n) {
    Mat m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Mat rref_copy(const Mat& m, RrefInfo* info) {
    Mat c = m;
    RrefInfo i = c.rref();
    if (info) *info = i;
    return c;
}

int rank_of(const Mat& m) {
    Mat c = m;
    return c.rref().rank;
}

}  // namespace graphlie::gf2k
