#pragma once

#include <json.hpp>

#include "mga/c_zero.hpp"
#include "mga/graph.hpp"
#include "mga/sections.hpp"
#include "mga/stable_basis.hpp"

namespace mga {

using json = nlohmann::ordered_json;

// {"terms":[{"a":i,"c":j,"coeff":"num/den"}]}, (a,c) lexicographically
// descending; canonical and bit-exact.
inline json poly_to_json(const Poly2& p) {
    json terms = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        terms.push_back({{"a", it->first.first},
                         {"c", it->first.second},
                         {"coeff", rational_to_string(it->second)}});
    return json{{"terms", std::move(terms)}};
}

inline Poly2 poly_from_json(const json& j) {
    Poly2 p;
    for (const auto& t : j.at("terms"))
        p += Poly2::monomial(t.at("a").get<int>(), t.at("c").get<int>(),
                             rational_from_string(t.at("coeff").get<std::string>()));
    return p;
}

// {"coeffs":{"<deg>":"<rat>"}}
inline json finpoly_to_json(const FinPoly& p) {
    json coeffs = json::object();
    for (const auto& [d, q] : p.coeffs())
        coeffs[std::to_string(d)] = rational_to_string(q);
    return json{{"coeffs", std::move(coeffs)}};
}

inline FinPoly finpoly_from_json(const json& j) {
    FinPoly p;
    for (const auto& [k, v] : j.at("coeffs").items())
        p += FinPoly::monomial(std::stoi(k),
                               rational_from_string(v.get<std::string>()));
    return p;
}

inline std::string graph_kind_name(MomentGraph::Kind k) {
    switch (k) {
        case MomentGraph::Kind::parabolic: return "parabolic";
        case MomentGraph::Kind::stable: return "stable";
        case MomentGraph::Kind::regular: return "regular";
    }
    throw std::logic_error("unreachable");
}

inline json graph_to_json(const MomentGraph& g) {
    json vertices = json::array();
    for (const auto& v : g.vertices) vertices.push_back(v.name());
    json edges = json::array();
    for (const auto& e : g.edges) {
        if (e.label.a.get_den() != 1 || e.label.b.get_den() != 1)
            throw std::logic_error("graph label with non-integer entries");
        edges.push_back(
            {{"src", e.src.name()},
             {"dst", e.dst.name()},
             {"label",
              {{"a", static_cast<long>(e.label.a.get_num().get_si())},
               {"b", static_cast<long>(e.label.b.get_num().get_si())}}}});
    }
    return json{{"kind", graph_kind_name(g.kind)},
                {"param", g.param},
                {"vertices", std::move(vertices)},
                {"edges", std::move(edges)}};
}

inline MomentGraph graph_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    int param = j.at("param").get<int>();
    // rebuild through the constructors and check the encoding matches,
    // so deserialized graphs always satisfy the invariants
    MomentGraph g;
    if (kind == "parabolic")
        g = build_parabolic(param);
    else if (kind == "stable")
        g = build_stable(param);
    else if (kind == "regular")
        g = build_regular(param);
    else
        throw std::invalid_argument("unknown graph kind: " + kind);
    json round = graph_to_json(g);
    if (round.at("vertices") != j.at("vertices") ||
        round.at("edges") != j.at("edges"))
        throw std::invalid_argument(
            "graph JSON does not match the canonical " + kind + "(" +
            std::to_string(param) + ") encoding");
    return g;
}

// {"graph":<graph>, "entries":{"<vertex>":<poly>}}
inline json section_to_json(const Section& s) {
    json entries = json::object();
    for (const auto& v : s.graph->vertices)
        entries[v.name()] = poly_to_json(s.entries.at(v));
    return json{{"graph", graph_to_json(*s.graph)},
                {"entries", std::move(entries)}};
}

inline Section section_from_json(const json& j) {
    Section s;
    s.graph = std::make_shared<const MomentGraph>(graph_from_json(j.at("graph")));
    for (const auto& [name, pj] : j.at("entries").items()) {
        VertexId v = VertexId::parse(name);
        if (!s.graph->has_vertex(v))
            throw std::invalid_argument("entry for unknown vertex: " + name);
        s.entries[v] = poly_from_json(pj);
    }
    for (const auto& v : s.graph->vertices)
        if (!s.entries.count(v))
            throw std::invalid_argument("missing entry for vertex " + v.name());
    return s;
}

// {"coefficients":{"u0":<poly>,...},"residual":<section>}
inline json decomposition_to_json(const Decomposition& d) {
    json coeffs = json::object();
    for (const auto& [id, p] : d.coefficients) coeffs[id.name()] = poly_to_json(p);
    return json{{"coefficients", std::move(coeffs)},
                {"residual", section_to_json(d.residual)}};
}

// {"rows":[{"z1":<finpoly>,"z2":<finpoly>}, ...]}
inline json rowfamily_to_json(const RowFamily& fam) {
    json rows = json::array();
    for (const auto& r : fam.rows)
        rows.push_back({{"z1", finpoly_to_json(r.z1)},
                        {"z2", finpoly_to_json(r.z2)}});
    return json{{"rows", std::move(rows)}};
}

inline RowFamily rowfamily_from_json(const json& j) {
    RowFamily fam;
    for (const auto& r : j.at("rows"))
        fam.rows.emplace_back(finpoly_from_json(r.at("z1")),
                              finpoly_from_json(r.at("z2")));
    return fam;
}

inline json congruence_report_to_json(const CongruenceReport& rep) {
    json items = json::array();
    for (const auto& it : rep.items) {
        json e{{"m", it.m}, {"pass", it.verdict.member}};
        if (it.verdict.member) {
            e["witness"] = {{"z1", finpoly_to_json(it.verdict.z1)},
                            {"z2", finpoly_to_json(it.verdict.z2)}};
        } else {
            e["reason"] = it.verdict.reason;
            e["combination"] = {{"z1", finpoly_to_json(it.combo1)},
                                {"z2", finpoly_to_json(it.combo2)}};
        }
        items.push_back(std::move(e));
    }
    return json{{"pass", rep.all_pass()}, {"relations", std::move(items)}};
}

inline json verdict_to_json(const SectionVerdict& v) {
    json out{{"ok", v.ok}};
    json viols = json::array();
    for (const auto& viol : v.violations)
        viols.push_back({{"src", viol.edge.src.name()},
                         {"dst", viol.edge.dst.name()},
                         {"label", viol.edge.label.to_string()},
                         {"remainder", poly_to_json(viol.remainder)}});
    out["violations"] = std::move(viols);
    return out;
}

}  // namespace mga
