#include <algorithm>
#include <set>

#include "doctest.h"
#include "graphlie/golden.hpp"
#include "graphlie/graphs.hpp"

using namespace graphlie;
using namespace graphlie::graphs;
namespace fx = graphlie::golden::fixtures;

TEST_CASE("construction validates its input") {
    CHECK_THROWS_AS(MixedGraph({"a", "a"}, {}, {}), error);
    CHECK_THROWS_AS(MixedGraph({"a", "b"}, {{"a", "a"}}, {}), error);
    CHECK_THROWS_AS(MixedGraph({"a", "b"}, {{"a", "b"}}, {{"a", "b"}}), error);
    CHECK_THROWS_AS(MixedGraph({"a", "b"}, {}, {{"a", "b"}, {"b", "a"}}), error);
    CHECK_THROWS_AS(MixedGraph({"a"}, {{"a", "c"}}, {}), error);
}

TEST_CASE("vertices are stored in lexicographic order") {
    MixedGraph g({"z", "a", "m"}, {}, {});
    CHECK(g.names() == std::vector<std::string>({"a", "m", "z"}));
    CHECK(g.index_of("m") == 1);
}

TEST_CASE("speciality") {
    CHECK(is_special(fx::lambda_s()));
    CHECK(is_special(MixedGraph({"v"}, {}, {})));
    // a terminus with a plain edge attached
    MixedGraph bad({"u", "v", "w"}, {{"v", "w"}}, {{"u", "v"}});
    CHECK(!is_special(bad));
    CHECK(!is_special(fx::oriented_triangle()));
    CHECK(is_special(fx::f4_cone()));
}

TEST_CASE("signatures mark termini") {
    MixedGraph ls = fx::lambda_s();
    Signature s = signature_of(ls);
    CHECK(s.theta == std::vector<uint8_t>({0, 1, 0}));  // x1, x2, x3

    MixedGraph simple({"a", "b"}, {{"a", "b"}}, {});
    CHECK(signature_of(simple).theta == std::vector<uint8_t>({0, 0}));

    MixedGraph f4 = fx::f4_cone();  // vertex order v, v1, v2
    CHECK(signature_of(f4).theta == std::vector<uint8_t>({0, 0, 1}));

    CHECK_THROWS_AS(signature_of(fx::oriented_triangle()), error);

    // isolated vertices default positive but can be overridden
    MixedGraph iso({"a", "b"}, {}, {});
    CHECK(signature_of(iso).theta == std::vector<uint8_t>({0, 0}));
    CHECK(signature_of(iso, {"a"}).theta == std::vector<uint8_t>({1, 0}));
    MixedGraph edge({"a", "b"}, {{"a", "b"}}, {});
    CHECK_THROWS_AS(signature_of(edge, {"a"}), error);
}

TEST_CASE("cones") {
    // over two negative isolated vertices: the directed star
    MixedGraph two({"y1", "y2"}, {}, {});
    Signature neg;
    neg.theta = {1, 1};
    MixedGraph sigma2 = cone(two, neg, "x");
    CHECK(graph_to_json(sigma2) == graph_to_json(fx::directed_star(2)));

    // over the empty graph: a single vertex
    MixedGraph empty({}, {}, {});
    Signature none;
    MixedGraph tip = cone(empty, none, "v");
    CHECK(tip.n() == 1);

    // over a plain edge with zero signature: the plain triangle
    MixedGraph e({"v1", "v2"}, {{"v1", "v2"}}, {});
    Signature zero;
    zero.theta = {0, 0};
    MixedGraph tri = cone(e, zero, "v3");
    CHECK(tri.plain_edges().size() == 3);
    CHECK(tri.directed_edges().empty());

    CHECK_THROWS_AS(cone(e, zero, "v1"), error);
}

TEST_CASE("mixed Droms recognition") {
    CHECK(!is_mixed_droms(fx::lambda_s()));
    CHECK(!is_mixed_droms(fx::square_c4()));
    CHECK(!is_mixed_droms(fx::path_p4()));
    CHECK(is_mixed_droms(fx::directed_star(2)));
    CHECK(is_mixed_droms(fx::f4_cone()));
    CHECK(!is_mixed_droms(fx::oriented_triangle()));  // not special
}

TEST_CASE("forbidden induced subgraph witnesses") {
    auto ls = find_induced_lambda_s(fx::lambda_s());
    REQUIRE(ls.has_value());
    CHECK(ls->size() == 3);
    CHECK(find_induced_c4(fx::square_c4()).has_value());
    CHECK(find_induced_p4(fx::path_p4()).has_value());
    CHECK(!find_induced_c4(fx::path_p4()).has_value());
    CHECK(!find_induced_p4(fx::square_c4()).has_value());
}

TEST_CASE("the two mixed Droms recognizers agree on all special graphs up to 6 vertices") {
    for (int n = 1; n <= 6; ++n) {
        long long mismatches = 0;
        for (const MixedGraph& g : all_special_mixed_graphs(n))
            if (is_mixed_droms(g) != is_mixed_droms_decomposition(g)) ++mismatches;
        CHECK(mismatches == 0);
    }
}

TEST_CASE("the decomposition recognizer rejects non-special graphs") {
    CHECK(!is_mixed_droms_decomposition(fx::oriented_triangle()));
    MixedGraph bad({"u", "v", "w"}, {{"v", "w"}}, {{"u", "v"}});
    CHECK(!is_mixed_droms_decomposition(bad));
}

TEST_CASE("labelled Droms recognition") {
    CHECK(!is_labelled_droms(fx::labelled_path(1, 0, 1)));
    CHECK(!is_labelled_droms(fx::labelled_path(1, 0, 0)));
    CHECK(is_labelled_droms(fx::labelled_path(0, 0, 0)));
    CHECK(is_labelled_droms(fx::labelled_path(0, 1, 0)));
    // a single labelled edge is fine: the forbidden patterns need 3 vertices
    LabelledGraph e({"a", "b"}, {{"a", "b"}}, {{"a", 1}, {"b", 0}});
    CHECK(is_labelled_droms(e));
    // theta == 0 on a Droms graph never contains a forbidden pattern
    LabelledGraph p3({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, {{"a", 0}, {"b", 0}, {"c", 0}});
    CHECK(is_labelled_droms(p3));
}

TEST_CASE("central condition") {
    CHECK(!central_condition(fx::labelled_path(1, 0, 1)));
    LabelledGraph dot({"a"}, {}, {{"a", 1}});
    CHECK(central_condition(dot));
    // triangle with a single filled vertex
    LabelledGraph tri({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}},
                      {{"a", 1}, {"b", 0}, {"c", 0}});
    CHECK(central_condition(tri));
    LabelledGraph c4(fx::square_c4().underlying(), {0, 0, 0, 0});
    CHECK_THROWS_AS(central_condition(c4), error);
}

TEST_CASE("labelled Droms equals the central condition on Droms graphs up to 5 vertices") {
    for (int n = 1; n <= 5; ++n)
        for (const LabelledGraph& g : all_labelled_graphs(n)) {
            if (!is_simple_droms(g.graph())) {
                CHECK(!is_labelled_droms(g));
                continue;
            }
            CHECK(is_labelled_droms(g) == central_condition(g));
        }
}

TEST_CASE("common origin per component") {
    CHECK(common_origin_per_component(fx::directed_star(4)));
    CHECK(!common_origin_per_component(fx::f4_cone()));
    CHECK(common_origin_per_component(fx::square_c4()));
    // two components, each with its own origin
    MixedGraph two({"a", "b", "c", "d"}, {}, {{"a", "b"}, {"c", "d"}});
    CHECK(common_origin_per_component(two));
}

TEST_CASE("clique polynomials") {
    MixedGraph k2({"a", "b"}, {{"a", "b"}}, {});
    CHECK(clique_polynomial(k2).coefficients == std::vector<long long>({1, 2, 1}));
    MixedGraph dot({"a"}, {}, {});
    CHECK(clique_polynomial(dot).coefficients == std::vector<long long>({1, 1}));
    MixedGraph p3({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, {});
    CHECK(clique_polynomial(p3).coefficients == std::vector<long long>({1, 3, 2}));
    CHECK(clique_number(p3) == 2);
    // directed edges still count in the underlying graph
    CHECK(clique_polynomial(fx::lambda_s()).coefficients == std::vector<long long>({1, 3, 2}));
}

TEST_CASE("negative clique counts") {
    CHECK(negative_clique_counts(fx::single_directed_edge()) == std::vector<long long>({0, 0, 1}));
    CHECK(negative_clique_counts(fx::six_vertex_kernel_graph()) == std::vector<long long>({0, 0, 5, 2}));
    MixedGraph simple({"a", "b"}, {{"a", "b"}}, {});
    CHECK(negative_clique_counts(simple) == std::vector<long long>({0}));
    CHECK_THROWS_AS(negative_clique_counts(fx::oriented_triangle()), error);
}

TEST_CASE("clique identity over all special graphs up to 4 vertices") {
    for (int n = 1; n <= 4; ++n)
        for (const MixedGraph& g : all_special_mixed_graphs(n)) {
            CliquePolynomial full = clique_polynomial(g);
            CliquePolynomial plain = clique_polynomial(g.simple_part());
            std::vector<long long> neg = negative_clique_counts(g);
            std::vector<long long> lhs = full.coefficients;
            std::vector<long long> rhs = plain.coefficients;
            rhs.resize(std::max(rhs.size(), neg.size()), 0);
            for (size_t i = 0; i < neg.size(); ++i) rhs[i] += neg[i];
            lhs.resize(std::max(lhs.size(), rhs.size()), 0);
            rhs.resize(lhs.size(), 0);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("cones are central and preserve speciality") {
    for (int n = 1; n <= 3; ++n)
        for (const MixedGraph& g : all_special_mixed_graphs(n)) {
            Signature s = signature_of(g);
            MixedGraph c = cone(g, s, "zz_tip");
            CHECK(is_special(c));
            int tip = c.index_of("zz_tip");
            auto centrals = central_vertices(c, c.full_mask());
            CHECK(std::find(centrals.begin(), centrals.end(), tip) != centrals.end());
        }
}

TEST_CASE("induced subgraphs and components") {
    MixedGraph g = fx::six_vertex_kernel_graph();
    // vertex order: c, d, v1, v2, w1, w2
    MixedGraph sub = induced_subgraph(g, 0b1101);  // c, v1, v2
    CHECK(sub.n() == 3);
    CHECK(sub.directed_edges().size() == 2);

    MixedGraph two({"a", "b", "c", "d"}, {{"a", "b"}}, {{"c", "d"}});
    auto comps = connected_components(two, two.full_mask());
    CHECK(comps.size() == 2);

    MixedGraph u = disjoint_union(MixedGraph({"a"}, {}, {}), MixedGraph({"b"}, {}, {}));
    CHECK(u.n() == 2);
    CHECK_THROWS_AS(disjoint_union(u, u), error);
}

TEST_CASE("generic induced-pattern search agrees with the dedicated finders") {
    MixedGraph p4 = fx::path_p4();
    CHECK(contains_induced(fx::square_c4(), MixedGraph({"1", "2"}, {{"1", "2"}}, {})));
    CHECK(contains_induced(fx::lambda_s(),
                           MixedGraph({"a", "b", "z"}, {}, {{"a", "z"}, {"b", "z"}})));
    CHECK(!contains_induced(p4, fx::square_c4()));
    CHECK(contains_induced(fx::six_vertex_kernel_graph(), fx::lambda_s()));
}

TEST_CASE("JSON parsing and emission round-trip") {
    MixedGraph g = fx::f4_cone();
    ParsedGraph p = parse_graph_json(graph_to_json(g));
    REQUIRE(p.mixed.has_value());
    CHECK(graph_to_json(*p.mixed) == graph_to_json(g));

    LabelledGraph lg = fx::labelled_path(1, 0, 0);
    ParsedGraph pl = parse_graph_json(graph_to_json(lg));
    REQUIRE(pl.labelled.has_value());
    CHECK(graph_to_json(*pl.labelled) == graph_to_json(lg));

    CHECK_THROWS_AS(parse_graph_json("{"), error);
    CHECK_THROWS_AS(parse_graph_json(R"({"vertices":["a"],"plain_edges":[["a"]]})"), error);
    CHECK_THROWS_AS(parse_graph_json(R"({"vertices":["a","b"],"labels":{"a":1}})"), error);
    CHECK_THROWS_AS(
        parse_graph_json(R"({"vertices":["a","b"],"directed_edges":[["a","b"]],"labels":{"a":1,"b":0}})"),
        error);
}

TEST_CASE("family enumeration counts") {
    CHECK(all_special_mixed_graphs(1).size() == 1);
    CHECK(all_special_mixed_graphs(2).size() == 4);  // empty, plain edge, two directions
    CHECK(all_labelled_graphs(2).size() == 8);
    // every enumerated graph is special, and structures are pairwise distinct
    std::set<std::string> seen;
    for (const MixedGraph& g : all_special_mixed_graphs(3)) {
        CHECK(is_special(g));
        CHECK(seen.insert(graph_to_json(g)).second);
    }
}
