#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "mga/sections.hpp"
#include "mga/stable_basis.hpp"

using namespace mga;
using mga_test::random_poly;

namespace {

std::shared_ptr<const MomentGraph> stable(int N) {
    return std::make_shared<const MomentGraph>(build_stable(N));
}

}  // namespace

TEST_CASE("is_section on the stable graph", "[sections]") {
    auto g = stable(3);
    EntryMap ones;
    for (const auto& v : g->vertices) ones[v] = Poly2(1L);
    CHECK(is_section(*g, ones).ok);

    auto g1 = stable(1);
    EntryMap e;
    e[VertexId::of_index(1)] = Poly2::alpha();
    e[VertexId::of_index(-1)] = Poly2();
    CHECK(is_section(*g1, e).ok);

    e[VertexId::of_index(1)] = Poly2::c();
    SectionVerdict v = is_section(*g1, e);
    REQUIRE_FALSE(v.ok);
    REQUIRE(v.violations.size() == 1);
    CHECK(v.violations[0].edge.src.n == 1);
    CHECK(v.violations[0].edge.dst.n == -1);
    CHECK(v.violations[0].remainder == Poly2::c());
}

TEST_CASE("is_section rejects partial entry maps", "[sections]") {
    auto g = stable(2);
    EntryMap partial;
    partial[VertexId::of_index(1)] = Poly2(1L);
    CHECK_THROWS_AS(is_section(*g, partial), std::invalid_argument);
}

TEST_CASE("structure algebra arithmetic", "[sections]") {
    auto g = stable(3);
    Section u0 = make_u(0, g);
    Section u1 = make_u(1, g);

    Section doubled = section_add(u0, u0);
    for (const auto& v : g->vertices)
        CHECK(doubled.at(v) == Rational(2) * u0.at(v));

    CHECK(section_mul(u0, u1) == u1);  // u0 is the identity

    Section sa = scalar_mul(Poly2::alpha(), u0);
    for (const auto& v : g->vertices) CHECK(sa.at(v) == Poly2::alpha());
    CHECK(sa.verify().ok);

    CHECK_THROWS_AS(section_add(u0, make_u(0, stable(4))),
                    std::invalid_argument);
}

TEST_CASE("arithmetic stays inside the structure algebra",
          "[sections][property]") {
    std::mt19937 rng(23);
    auto g = stable(5);
    for (int trial = 0; trial < 25; ++trial) {
        Section s = scalar_mul(random_poly(rng, 2), make_u(trial % 4, g));
        Section t = scalar_mul(random_poly(rng, 2), make_v(1 + trial % 3, g));
        Section vg = vertex_generator(g, g->vertices[trial % g->vertices.size()]);
        CHECK(section_add(s, t).verify().ok);
        CHECK(section_mul(s, t).verify().ok);
        CHECK(section_add(section_mul(s, vg), t).verify().ok);
    }
}

TEST_CASE("vertex_generator", "[sections]") {
    auto g1 = stable(1);
    Section s = vertex_generator(g1, VertexId::of_index(1));
    CHECK(s.at(1) == Poly2::alpha());
    CHECK(s.at(-1).is_zero());
    CHECK(s.verify().ok);

    auto g2 = stable(2);
    Section t = vertex_generator(g2, VertexId::of_index(2));
    // incident labels: -a+c (edge with -1) and a (edge with -2)
    Poly2 expect = (-Poly2::alpha() + Poly2::c()) * Poly2::alpha();
    CHECK(t.at(2) == expect);
    CHECK(t.verify().ok);

    CHECK_THROWS_AS(vertex_generator(g2, VertexId::of_index(5)),
                    std::invalid_argument);
}

TEST_CASE("corrupting one entry only violates incident edges",
          "[sections][property]") {
    auto g = stable(4);
    Section s = make_u(1, g);
    VertexId target = VertexId::of_index(2);
    s.entries[target] += Poly2::c();
    SectionVerdict v = s.verify();
    REQUIRE_FALSE(v.ok);
    CHECK_FALSE(v.violations.empty());
    for (const auto& viol : v.violations)
        CHECK((viol.edge.src == target || viol.edge.dst == target));
}

TEST_CASE("restrict", "[sections]") {
    Section u1 = make_u(1, stable(5));
    Section r = restrict_section(u1, stable(3));
    CHECK(r.entries.size() == 6);
    CHECK(r == make_u(1, stable(3)));

    CHECK(restrict_section(u1, u1.graph) == u1);

    Section u2 = make_u(2, stable(5));
    Section z = restrict_section(u2, stable(2));
    for (const auto& [v, p] : z.entries) CHECK(p.is_zero());

    // composition N -> M -> K equals N -> K
    Section via = restrict_section(restrict_section(u1, stable(4)), stable(2));
    CHECK(via == restrict_section(u1, stable(2)));

    CHECK_THROWS_AS(restrict_section(r, stable(5)), std::invalid_argument);
}
