#include <catch2/catch_amalgamated.hpp>

#include "mga/graph.hpp"

using namespace mga;

TEST_CASE("parabolic_label", "[graph]") {
    CHECK(parabolic_label(1, -1) == LinearForm(Rational(1), Rational(0)));
    CHECK(parabolic_label(1, 2) == LinearForm(Rational(-1), Rational(3)));
    CHECK(parabolic_label(2, -3) == LinearForm(Rational(1), Rational(1)));
    CHECK_THROWS_AS(parabolic_label(2, 2), std::invalid_argument);
}

TEST_CASE("parabolic_label is symmetric", "[graph][property]") {
    for (int n = -10; n <= 10; ++n)
        for (int n2 = -10; n2 <= 10; ++n2) {
            if (n == 0 || n2 == 0 || n == n2) continue;
            CHECK(parabolic_label(n, n2) == parabolic_label(n2, n));
        }
}

TEST_CASE("bruhat_leq", "[graph]") {
    CHECK(bruhat_leq(1, -1));
    CHECK(bruhat_leq(-1, 2));
    CHECK_FALSE(bruhat_leq(-2, 2));
    CHECK(bruhat_leq(3, 3));
    CHECK(bruhat_leq(2, -2));
    CHECK_FALSE(bruhat_leq(-1, 1));
}

TEST_CASE("build_parabolic", "[graph]") {
    MomentGraph g1 = build_parabolic(1);
    REQUIRE(g1.vertices.size() == 2);
    REQUIRE(g1.edges.size() == 1);
    CHECK(g1.edges[0].src == VertexId::of_index(1));
    CHECK(g1.edges[0].dst == VertexId::of_index(-1));
    CHECK(g1.edges[0].label == LinearForm(Rational(1), Rational(0)));

    MomentGraph g2 = build_parabolic(2);
    CHECK(g2.vertices.size() == 4);
    CHECK(g2.edges.size() == 6);  // K4
    bool found = false;
    for (const auto& e : g2.edges)
        if (e.src.n == 2 && e.dst.n == -2) {
            found = true;
            CHECK(e.label == LinearForm(Rational(1), Rational(0)));
        }
    CHECK(found);

    CHECK_THROWS_AS(build_parabolic(0), std::invalid_argument);
}

TEST_CASE("build_stable", "[graph]") {
    MomentGraph g = build_stable(2);
    CHECK(g.vertices.size() == 4);
    REQUIRE(g.edges.size() == 4);  // complete bipartite between columns
    for (const auto& e : g.edges) CHECK((e.src.n > 0) != (e.dst.n > 0));

    MomentGraph g3 = build_stable(3);
    bool found = false;
    for (const auto& e : g3.edges)
        if ((e.src.n == 2 && e.dst.n == -3) || (e.src.n == -3 && e.dst.n == 2)) {
            found = true;
            CHECK(e.label == LinearForm(Rational(1), Rational(1)));
        }
    CHECK(found);
    CHECK_FALSE(g3.has_edge(VertexId::of_index(1), VertexId::of_index(2)));
}

TEST_CASE("stable edges are the opposite-column parabolic edges",
          "[graph][property]") {
    for (int N = 1; N <= 8; ++N) {
        MomentGraph st = build_stable(N);
        MomentGraph pa = build_parabolic(N);
        CHECK(st.edges.size() == static_cast<std::size_t>(N) * N);
        for (const auto& e : st.edges) {
            CHECK((e.src.n > 0) != (e.dst.n > 0));
            bool in_parabolic = false;
            for (const auto& pe : pa.edges)
                if (pe.src == e.src && pe.dst == e.dst && pe.label == e.label)
                    in_parabolic = true;
            CHECK(in_parabolic);
        }
    }
}

TEST_CASE("edges respect the order and carry nonzero labels",
          "[graph][property]") {
    for (const MomentGraph& g :
         {build_parabolic(5), build_stable(5), build_regular(4)}) {
        for (const auto& e : g.edges) {
            CHECK(order_leq(g, e.src, e.dst));
            CHECK_FALSE(e.src == e.dst);
            CHECK((e.label.a != 0 || e.label.b != 0));
        }
    }
}

TEST_CASE("build_regular", "[graph]") {
    MomentGraph g1 = build_regular(1);
    REQUIRE(g1.vertices.size() == 3);  // e, s0, s1
    REQUIRE(g1.edges.size() == 2);
    for (const auto& e : g1.edges) {
        CHECK(e.src == VertexId::of_word(""));
        if (e.dst == VertexId::of_word("0"))
            CHECK(e.label == LinearForm(Rational(-1), Rational(1)));
        else {
            CHECK(e.dst == VertexId::of_word("1"));
            CHECK(e.label == LinearForm(Rational(1), Rational(0)));
        }
    }

    MomentGraph g2 = build_regular(2);
    CHECK(g2.vertices.size() == 5);  // 2L+1
    bool found = false;
    for (const auto& e : g2.edges)
        if (e.src == VertexId::of_word("1") && e.dst == VertexId::of_word("01")) {
            found = true;
            CHECK(e.label == LinearForm(Rational(-1), Rational(1)));
        }
    CHECK(found);

    CHECK(build_regular(6).vertices.size() == 13);
    CHECK_THROWS_AS(build_regular(-1), std::invalid_argument);
}

TEST_CASE("every regular vertex covers both next-length vertices",
          "[graph][property]") {
    const int L = 5;
    MomentGraph g = build_regular(L);
    for (const auto& x : g.vertices) {
        if (static_cast<int>(x.word.size()) >= L) continue;
        int covers = 0;
        for (const auto& e : g.edges)
            if (e.src == x && e.dst.word.size() == x.word.size() + 1) ++covers;
        CHECK(covers == 2);
    }
}

TEST_CASE("export_dot", "[graph]") {
    std::string dot = export_dot(build_parabolic(1));
    CHECK(dot.find("\"1a\" -> \"-1a\" [label=\"a\"]") != std::string::npos);
    CHECK(dot == export_dot(build_parabolic(1)));  // deterministic

    std::string trivial = export_dot(build_regular(0));
    CHECK(trivial.find("->") == std::string::npos);
    CHECK(trivial.find("\"e\"") != std::string::npos);
}

TEST_CASE("vertex names parse back", "[graph]") {
    for (const MomentGraph& g : {build_stable(3), build_regular(3)})
        for (const auto& v : g.vertices) CHECK(VertexId::parse(v.name()) == v);
    CHECK_THROWS_AS(VertexId::parse("0"), std::invalid_argument);
}
