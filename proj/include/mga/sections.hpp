#pragma once

#include <map>
#include <memory>
#include <stdexcept>

#include "mga/graph.hpp"
#include "mga/poly.hpp"

namespace mga {

using EntryMap = std::map<VertexId, Poly2>;

struct Violation {
    Edge edge;
    Poly2 remainder;  // witness from divrem_linear, a polynomial in c
};

struct SectionVerdict {
    bool ok = true;
    std::vector<Violation> violations;
};

// Checks the defining congruences z_x - z_y = l(E)s edge by edge.
// The entry map must be total on the graph's vertices.
inline SectionVerdict is_section(const MomentGraph& g, const EntryMap& entries) {
    for (const auto& v : g.vertices)
        if (!entries.count(v))
            throw std::invalid_argument("is_section: missing entry for vertex " +
                                        v.name());
    if (entries.size() != g.vertices.size())
        throw std::invalid_argument("is_section: entries for unknown vertices");
    SectionVerdict verdict;
    for (const auto& e : g.edges) {
        Poly2 diff = entries.at(e.src) - entries.at(e.dst);
        DivRemResult dr = divrem_linear(diff, e.label);
        if (!dr.remainder.is_zero()) {
            verdict.ok = false;
            verdict.violations.push_back({e, dr.remainder});
        }
    }
    return verdict;
}

// A vertex-indexed family of polynomials satisfying the edge congruences.
struct Section {
    std::shared_ptr<const MomentGraph> graph;
    EntryMap entries;

    const Poly2& at(const VertexId& v) const { return entries.at(v); }
    const Poly2& at(int n) const { return entries.at(VertexId::of_index(n)); }

    SectionVerdict verify() const { return is_section(*graph, entries); }

    friend bool operator==(const Section& a, const Section& b) {
        return a.entries == b.entries;
    }
};

inline Section zero_section(std::shared_ptr<const MomentGraph> g) {
    Section s;
    s.graph = std::move(g);
    for (const auto& v : s.graph->vertices) s.entries[v] = Poly2();
    return s;
}

namespace detail {

inline void require_same_graph(const Section& s, const Section& t) {
    if (s.graph->kind != t.graph->kind || s.graph->param != t.graph->param)
        throw std::invalid_argument("sections over different graphs");
}

}  // namespace detail

inline Section section_add(const Section& s, const Section& t) {
    detail::require_same_graph(s, t);
    Section r = s;
    for (auto& [v, p] : r.entries) p += t.entries.at(v);
    return r;
}

inline Section section_sub(const Section& s, const Section& t) {
    detail::require_same_graph(s, t);
    Section r = s;
    for (auto& [v, p] : r.entries) p -= t.entries.at(v);
    return r;
}

inline Section section_mul(const Section& s, const Section& t) {
    detail::require_same_graph(s, t);
    Section r = s;
    for (auto& [v, p] : r.entries) p *= t.entries.at(v);
    return r;
}

// Diagonal action of S.
inline Section scalar_mul(const Poly2& p, const Section& s) {
    Section r = s;
    for (auto& [v, q] : r.entries) q = p * q;
    return r;
}

// Minimal section supported on one vertex: the entry is the product of
// the labels of all edges incident to that vertex.
inline Section vertex_generator(std::shared_ptr<const MomentGraph> g,
                                const VertexId& x) {
    if (!g->has_vertex(x))
        throw std::invalid_argument("vertex_generator: unknown vertex " +
                                    x.name());
    Section s = zero_section(g);
    Poly2 entry(Rational(1));
    for (const auto& f : g->incident_labels(x)) entry *= f.to_poly();
    s.entries[x] = entry;
    return s;
}

// Restriction morphism to a subgraph (vertex subset, edge subset with
// matching labels).
inline Section restrict_section(const Section& s,
                                std::shared_ptr<const MomentGraph> subgraph) {
    for (const auto& v : subgraph->vertices)
        if (!s.graph->has_vertex(v))
            throw std::invalid_argument("restrict: not a subgraph (vertex " +
                                        v.name() + ")");
    for (const auto& e : subgraph->edges) {
        bool found = false;
        for (const auto& pe : s.graph->edges)
            if (pe.src == e.src && pe.dst == e.dst && pe.label == e.label) {
                found = true;
                break;
            }
        if (!found)
            throw std::invalid_argument("restrict: not a subgraph (edge " +
                                        e.src.name() + " -> " + e.dst.name() +
                                        ")");
    }
    Section r;
    r.graph = std::move(subgraph);
    for (const auto& v : r.graph->vertices) r.entries[v] = s.entries.at(v);
    return r;
}

}  // namespace mga
