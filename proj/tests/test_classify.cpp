#include <set>

#include "doctest.h"
#include "graphlie/classify.hpp"
#include "graphlie/golden.hpp"

using namespace graphlie;
using gf2k::Field;
using gf2k::Mat;
using namespace graphlie::classify;
namespace fx = golden::fixtures;

TEST_CASE("graph-theoretic predicates") {
    CHECK(!bk_predicate(fx::lambda_s(), FieldKind::f2));
    CHECK(!bk_predicate(fx::square_c4(), FieldKind::f2));
    CHECK(bk_predicate(fx::f4_cone(), FieldKind::f2));
    CHECK(!bk_predicate(fx::f4_cone(), FieldKind::contains_f4));
    CHECK(bk_predicate(fx::directed_star(2), FieldKind::f2));
    CHECK(bk_predicate(fx::directed_star(2), FieldKind::contains_f4));
    CHECK(!bk_predicate(fx::labelled_path(1, 0, 1)));
    CHECK(!bk_predicate(fx::labelled_path(1, 0, 0)));
    CHECK(bk_predicate(fx::labelled_path(0, 0, 0)));
}

TEST_CASE("predicate dispatch checks the graph kind") {
    graphs::ParsedGraph mixed;
    mixed.mixed = fx::lambda_s();
    CHECK(!bk_predicate(mixed, FieldKind::f2, AlgebraKind::traag));
    CHECK_THROWS_AS(bk_predicate(mixed, FieldKind::f2, AlgebraKind::era), error);
    graphs::ParsedGraph labelled;
    labelled.labelled = fx::labelled_path(0, 0, 0);
    CHECK(bk_predicate(labelled, FieldKind::f2, AlgebraKind::era));
    CHECK_THROWS_AS(bk_predicate(labelled, FieldKind::f2, AlgebraKind::traag), error);
}

TEST_CASE("subspace enumeration counts match Gaussian binomials") {
    const Field& F2 = Field::f2();
    const Field& F4 = Field::f4();
    CHECK(enumerate_subspaces(F2, 2).size() == 5);
    CHECK(enumerate_subspaces(F4, 2).size() == 7);
    CHECK(enumerate_subspaces(F2, 4).size() == 67);
    CHECK(enumerate_subspaces(F2, 5).size() == 374);
    CHECK(enumerate_subspaces(F4, 4).size() == 529);
    for (int n = 1; n <= 4; ++n) {
        long long total2 = 0, total4 = 0;
        for (int k = 0; k <= n; ++k) {
            total2 += gaussian_binomial(n, k, 2);
            total4 += gaussian_binomial(n, k, 4);
        }
        CHECK(static_cast<long long>(enumerate_subspaces(F2, n).size()) == total2);
        CHECK(static_cast<long long>(enumerate_subspaces(F4, n).size()) == total4);
    }
    CHECK_THROWS_AS(enumerate_subspaces(F2, 6), error);
    CHECK_THROWS_AS(enumerate_subspaces(F4, 5), error);
}

TEST_CASE("enumerated subspaces are distinct echelon bases") {
    const Field& F = Field::f4();
    std::set<std::string> seen;
    for (const Mat& m : enumerate_subspaces(F, 3)) {
        Mat copy = m;
        auto info = copy.rref();
        CHECK(copy == m);  // already reduced
        CHECK(info.rank == int(m.rows()));
        CHECK(seen.insert(m.key()).second);
    }
}

TEST_CASE("dimension-range filtering") {
    const Field& F = Field::f2();
    auto lines = enumerate_subspaces(F, 3, 1, 1);
    CHECK(lines.size() == 7);
    for (const Mat& m : lines) CHECK(m.rows() == 1);
}

TEST_CASE("the oracle finds the lambda_s defect and certifies free algebras") {
    const Field& F = Field::f2();
    auto ls = lie::make_handle(lie::traag_presentation(fx::lambda_s(), F), 4);
    OracleResult r = brute_force_bk(*ls, 4);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->defect_degree == 3);
    CHECK(r.subspaces_checked == 16);  // all subspaces of F_2^3

    // the witness re-verifies
    auto again = lie::quadraticity_defect(*ls, r.witness->generators, 4);
    REQUIRE(again.has_value());
    CHECK(again->defect_degree == r.witness->defect_degree);

    auto free3 = lie::make_handle(tensor::make_presentation(3, F, Mat(F, 0, 6)), 4);
    CHECK(!brute_force_bk(*free3, 4).witness.has_value());
}

TEST_CASE("parallel and sequential oracle runs return the same witness") {
    const Field& F = Field::f2();
    for (const auto& g : {fx::lambda_s(), fx::square_c4(), fx::path_p4()}) {
        auto h = lie::make_handle(lie::traag_presentation(g, F), 4);
        OracleResult seq = brute_force_bk(*h, 4, 1);
        OracleResult par = brute_force_bk(*h, 4, 4);
        REQUIRE(seq.witness.has_value());
        REQUIRE(par.witness.has_value());
        CHECK(seq.witness->generators == par.witness->generators);
        CHECK(seq.witness->defect_degree == par.witness->defect_degree);
    }
}

TEST_CASE("theorem verification on a small mixed family") {
    std::vector<graphs::MixedGraph> family = {fx::lambda_s(), fx::directed_star(2), fx::f4_cone(),
                                              fx::square_c4()};
    TheoremReport rep = verify_theorem(family, FieldKind::f2, 4);
    CHECK(rep.records.size() == 4);
    CHECK(rep.all_agree);
    CHECK(!rep.any_violation);
    CHECK(rep.records[0].witness.has_value());
    CHECK(!rep.records[1].witness.has_value());
    CHECK(!rep.records[2].witness.has_value());
    CHECK(rep.records[3].witness.has_value());
}

TEST_CASE("field sensitivity shows up in verification") {
    std::vector<graphs::MixedGraph> family = {fx::f4_cone()};
    TheoremReport f2 = verify_theorem(family, FieldKind::f2, 4);
    CHECK(f2.all_agree);
    CHECK(!f2.records[0].witness.has_value());
    TheoremReport f4 = verify_theorem(family, FieldKind::contains_f4, 4);
    CHECK(f4.all_agree);
    REQUIRE(f4.records[0].witness.has_value());
    CHECK(f4.records[0].witness->defect_degree == 3);
}

TEST_CASE("ERA verification is field-insensitive on the labelled paths") {
    std::vector<graphs::LabelledGraph> family = {fx::labelled_path(1, 0, 0), fx::labelled_path(1, 0, 1),
                                                 fx::labelled_path(0, 0, 0), fx::labelled_path(0, 1, 0)};
    TheoremReport f2 = verify_theorem(family, FieldKind::f2, 4);
    TheoremReport f4 = verify_theorem(family, FieldKind::contains_f4, 4);
    CHECK(f2.all_agree);
    CHECK(f4.all_agree);
    for (size_t i = 0; i < family.size(); ++i)
        CHECK(f2.records[i].witness.has_value() == f4.records[i].witness.has_value());
}

TEST_CASE("ERA oracle outcomes match over F2 and F4 on all labelled graphs with 3 vertices") {
    auto family = graphs::all_labelled_graphs(3);
    TheoremReport f2 = verify_theorem(family, FieldKind::f2, 4);
    TheoremReport f4 = verify_theorem(family, FieldKind::contains_f4, 4);
    REQUIRE(f2.records.size() == f4.records.size());
    for (size_t i = 0; i < f2.records.size(); ++i)
        CHECK(f2.records[i].witness.has_value() == f4.records[i].witness.has_value());
}

TEST_CASE("budget problems are recorded per graph without aborting the family") {
    std::vector<graphs::MixedGraph> family = {fx::lambda_s()};
    TheoremReport rep = verify_theorem(family, FieldKind::f2, 4, /*budget=*/10);
    CHECK(rep.records.size() == 1);
    CHECK(!rep.records[0].error.empty());
    CHECK(!rep.all_agree);
}
