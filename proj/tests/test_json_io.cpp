#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "mga/json_io.hpp"

using namespace mga;
using mga_test::random_poly;

TEST_CASE("poly JSON golden", "[json]") {
    Poly2 p = Poly2::alpha() * Poly2::alpha() +
              Rational(3) * Poly2::alpha() * Poly2::c() -
              Rational(1, 2) * Poly2::c();
    json j = poly_to_json(p);
    CHECK(j.dump() ==
          R"({"terms":[{"a":2,"c":0,"coeff":"1"},{"a":1,"c":1,"coeff":"3"},)"
          R"({"a":0,"c":1,"coeff":"-1/2"}]})");
    CHECK(poly_from_json(j) == p);

    CHECK(poly_to_json(Poly2()).dump() == R"({"terms":[]})");
}

TEST_CASE("poly JSON round-trip", "[json][property]") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        Poly2 p = random_poly(rng);
        CHECK(poly_from_json(poly_to_json(p)) == p);
        // canonical: serializing twice gives the same bytes
        CHECK(poly_to_json(p).dump() ==
              poly_to_json(poly_from_json(poly_to_json(p))).dump());
    }
}

TEST_CASE("finpoly JSON", "[json]") {
    FinPoly p = FinPoly::monomial(2, Rational(5, 3)) + FinPoly(1L);
    json j = finpoly_to_json(p);
    CHECK(j.dump() == R"({"coeffs":{"0":"1","2":"5/3"}})");
    CHECK(finpoly_from_json(j) == p);
}

TEST_CASE("graph JSON round-trip and validation", "[json]") {
    for (const MomentGraph& g :
         {build_stable(3), build_parabolic(2), build_regular(3)}) {
        MomentGraph back = graph_from_json(graph_to_json(g));
        CHECK(back.kind == g.kind);
        CHECK(back.param == g.param);
        CHECK(back.vertices == g.vertices);
        CHECK(graph_to_json(back) == graph_to_json(g));
    }

    // tampered encodings are rejected, never silently accepted
    json j = graph_to_json(build_stable(2));
    j["edges"][0]["label"]["a"] = 7;
    CHECK_THROWS_AS(graph_from_json(j), std::invalid_argument);

    j = graph_to_json(build_stable(2));
    j["kind"] = "mystery";
    CHECK_THROWS_AS(graph_from_json(j), std::invalid_argument);
}

TEST_CASE("section JSON round-trip", "[json]") {
    Section v2 = make_v(2, 4);
    Section back = section_from_json(section_to_json(v2));
    CHECK(back == v2);
    CHECK(back.verify().ok);

    json j = section_to_json(v2);
    j["entries"].erase("1");
    CHECK_THROWS_AS(section_from_json(j), std::invalid_argument);

    j = section_to_json(v2);
    j["entries"]["9"] = poly_to_json(Poly2());
    CHECK_THROWS_AS(section_from_json(j), std::invalid_argument);
}

TEST_CASE("row family JSON round-trip", "[json]") {
    RowFamily fam = make_v_bar(2, 5);
    RowFamily back = rowfamily_from_json(rowfamily_to_json(fam));
    CHECK(back.rows == fam.rows);

    // deserialization re-checks the Z^fin membership of every row
    json j = rowfamily_to_json(fam);
    j["rows"][0]["z1"] = finpoly_to_json(FinPoly(1L));
    CHECK_THROWS_AS(rowfamily_from_json(j), std::invalid_argument);
}

TEST_CASE("report serializations carry the verdict", "[json]") {
    json rep = congruence_report_to_json(check_congruences(make_u_bar(1, 4), 4));
    CHECK(rep.at("pass").get<bool>());
    CHECK(rep.at("relations").size() == 5);
    CHECK(rep.at("relations")[0].contains("witness"));

    Section s = make_u(1, 2);
    s.entries[VertexId::of_index(2)] += Poly2::c();
    json verdict = verdict_to_json(s.verify());
    CHECK_FALSE(verdict.at("ok").get<bool>());
    CHECK_FALSE(verdict.at("violations").empty());

    json dec = decomposition_to_json(decompose(make_v(1, 3)));
    CHECK(dec.at("coefficients").contains("v1"));
}
