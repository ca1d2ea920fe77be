#include <random>

#include "doctest.h"
#include "graphlie/gf2k.hpp"

using namespace graphlie;
using gf2k::Echelonizer;
using gf2k::Field;
using gf2k::Mat;

namespace {

Mat random_matrix(const Field& F, size_t rows, size_t cols, std::mt19937& rng) {
    Mat m(F, rows, cols);
    std::uniform_int_distribution<int> dist(0, F.order() - 1);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.set(i, j, uint8_t(dist(rng)));
    return m;
}

}  // namespace

TEST_CASE("f4 multiplication follows the T^2+T+1 modulus") {
    const Field& F = Field::f4();
    uint8_t T = 2, Tp1 = 3;
    CHECK(F.modulus() == 0b111);
    CHECK(F.mul(T, T) == Tp1);     // T*T = T+1
    CHECK(F.mul(T, Tp1) == 1);     // T*(T+1) = 1
    for (int x = 0; x < 4; ++x) CHECK(F.mul(1, uint8_t(x)) == x);
}

TEST_CASE("field laws hold exhaustively for m <= 4") {
    for (int m = 1; m <= 4; ++m) {
        Field F(m);
        int q = F.order();
        for (int a = 0; a < q; ++a) {
            CHECK(F.add(uint8_t(a), uint8_t(a)) == 0);
            for (int b = 0; b < q; ++b) {
                // Frobenius additivity
                CHECK(F.square(F.add(uint8_t(a), uint8_t(b))) ==
                      F.add(F.square(uint8_t(a)), F.square(uint8_t(b))));
                CHECK(F.mul(uint8_t(a), uint8_t(b)) == F.mul(uint8_t(b), uint8_t(a)));
                for (int c = 0; c < q; ++c) {
                    CHECK(F.mul(F.mul(uint8_t(a), uint8_t(b)), uint8_t(c)) ==
                          F.mul(uint8_t(a), F.mul(uint8_t(b), uint8_t(c))));
                    CHECK(F.mul(uint8_t(a), F.add(uint8_t(b), uint8_t(c))) ==
                          F.add(F.mul(uint8_t(a), uint8_t(b)), F.mul(uint8_t(a), uint8_t(c))));
                }
            }
        }
    }
}

TEST_CASE("every nonzero element is invertible for m <= 8") {
    for (int m = 1; m <= 8; ++m) {
        Field F(m);
        for (int a = 1; a < F.order(); ++a) CHECK(F.mul(uint8_t(a), F.inv(uint8_t(a))) == 1);
    }
}

TEST_CASE("element parsing and printing round-trip") {
    const Field& F = Field::f4();
    CHECK(F.to_string(0) == "0");
    CHECK(F.to_string(1) == "1");
    CHECK(F.to_string(2) == "T");
    CHECK(F.to_string(3) == "T+1");
    for (int a = 0; a < 4; ++a) CHECK(F.parse(F.to_string(uint8_t(a))) == a);
    CHECK(F.parse("1+T") == 3);
    CHECK(F.parse("2") == 2);
    CHECK_THROWS_AS(F.parse("T^5"), error);
}

TEST_CASE("rref of simple matrices") {
    const Field& F = Field::f2();
    Mat zero(F, 3, 4);
    CHECK(zero.rref().rank == 0);

    Mat id = gf2k::identity(F, 3);
    auto info = id.rref();
    CHECK(info.rank == 3);
    CHECK(info.pivots == std::vector<int>({0, 1, 2}));

    // duplicate rows: x(x)y + y(x)x twice in the 4-dim tensor basis
    Mat dup(F, 2, 4);
    for (size_t r = 0; r < 2; ++r) {
        dup.set(r, 1, 1);
        dup.set(r, 2, 1);
    }
    CHECK(dup.rref().rank == 1);
}

TEST_CASE("rref is idempotent and rank is transpose-invariant") {
    std::mt19937 rng(12345);
    for (const Field* Fp : {&Field::f2(), &Field::f4()}) {
        for (int trial = 0; trial < 25; ++trial) {
            Mat m = random_matrix(*Fp, 6, 9, rng);
            Mat r = gf2k::rref_copy(m);
            CHECK(gf2k::rref_copy(r) == r);
            CHECK(gf2k::rank_of(m) == gf2k::rank_of(m.transposed()));
        }
    }
}

TEST_CASE("rref pivots are strictly increasing with unit entries") {
    std::mt19937 rng(99);
    Mat m = random_matrix(Field::f4(), 5, 8, rng);
    gf2k::RrefInfo info;
    Mat r = gf2k::rref_copy(m, &info);
    for (size_t i = 1; i < info.pivots.size(); ++i) CHECK(info.pivots[i] > info.pivots[i - 1]);
    for (size_t i = 0; i < size_t(info.rank); ++i) {
        CHECK(r.get(i, size_t(info.pivots[i])) == 1);
        for (size_t other = 0; other < size_t(info.rank); ++other)
            if (other != i) CHECK(r.get(other, size_t(info.pivots[i])) == 0);
    }
}

TEST_CASE("nullspace complements the row space") {
    std::mt19937 rng(7);
    for (const Field* Fp : {&Field::f2(), &Field::f4()}) {
        const Field& F = *Fp;
        for (int trial = 0; trial < 20; ++trial) {
            Mat m = random_matrix(F, 4, 7, rng);
            int rank = gf2k::rank_of(m);
            Mat null = m.nullspace();
            CHECK(int(null.rows()) == 7 - rank);
            for (size_t i = 0; i < m.rows(); ++i)
                for (size_t k = 0; k < null.rows(); ++k) {
                    uint8_t dot = 0;
                    for (size_t j = 0; j < 7; ++j) dot ^= F.mul(m.get(i, j), null.get(k, j));
                    CHECK(dot == 0);
                }
        }
    }
}

TEST_CASE("echelonizer matches batch reduction") {
    std::mt19937 rng(2024);
    for (const Field* Fp : {&Field::f2(), &Field::f4()}) {
        for (int trial = 0; trial < 20; ++trial) {
            Mat m = random_matrix(*Fp, 8, 6, rng);
            Echelonizer ech(*Fp, 6);
            for (size_t r = 0; r < m.rows(); ++r) ech.add_row(m.row_bytes(r));
            CHECK(ech.matrix() == gf2k::rref_copy(m));
        }
    }
}

TEST_CASE("echelonizer membership and coordinates") {
    const Field& F = Field::f4();
    Echelonizer ech(F, 3);
    ech.add_row({1, 2, 0});
    ech.add_row({0, 0, 1});
    CHECK(ech.rank() == 2);
    CHECK(ech.contains({1, 2, 0}));
    CHECK(ech.contains({2, 3, 2}));  // T*(1,T,0) + T*(0,0,1)? T*(1,T,0) = (T, T+1, 0); plus 2*(0,0,1)
    CHECK(!ech.contains({1, 0, 0}));
}
