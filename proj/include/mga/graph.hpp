#pragma once

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "mga/poly.hpp"

namespace mga {

// Vertex of a moment graph. The parabolic and stable graphs index their
// vertices by a nonzero integer n (the lattice point n*alpha); the regular
// graph uses reduced words over the simple reflections s0, s1, stored as
// strings of '0'/'1' characters (the empty word is the identity).
struct VertexId {
    enum class Kind { index, word };

    Kind kind = Kind::index;
    int n = 0;
    std::string word;

    static VertexId of_index(int n) {
        if (n == 0) throw std::invalid_argument("vertex index 0 is excluded");
        VertexId v;
        v.kind = Kind::index;
        v.n = n;
        return v;
    }
    static VertexId of_word(std::string w) {
        for (std::size_t i = 1; i < w.size(); ++i)
            if (w[i] == w[i - 1])
                throw std::invalid_argument("word is not reduced: " + w);
        VertexId v;
        v.kind = Kind::word;
        v.word = std::move(w);
        return v;
    }

    // "1", "-2", ... and "e", "s0", "s0s1", ...
    std::string name() const {
        if (kind == Kind::index) return std::to_string(n);
        if (word.empty()) return "e";
        std::string out;
        for (char ch : word) {
            out += 's';
            out += ch;
        }
        return out;
    }

    static VertexId parse(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("empty vertex name");
        if (s == "e") return of_word("");
        if (s[0] == 's') {
            std::string w;
            for (std::size_t i = 0; i < s.size(); i += 2) {
                if (s[i] != 's' || i + 1 >= s.size() ||
                    (s[i + 1] != '0' && s[i + 1] != '1'))
                    throw std::invalid_argument("bad vertex name: " + s);
                w += s[i + 1];
            }
            return of_word(w);
        }
        return of_index(std::stoi(s));
    }

    // Canonical display order: 1,-1,2,-2,... for index vertices,
    // (length, word) for words.
    friend bool operator<(const VertexId& x, const VertexId& y) {
        if (x.kind != y.kind) return x.kind < y.kind;
        if (x.kind == Kind::index)
            return std::tuple(std::abs(x.n), x.n < 0) <
                   std::tuple(std::abs(y.n), y.n < 0);
        return std::tuple(x.word.size(), x.word) <
               std::tuple(y.word.size(), y.word);
    }
    friend bool operator==(const VertexId& x, const VertexId& y) {
        return x.kind == y.kind && x.n == y.n && x.word == y.word;
    }
    friend bool operator!=(const VertexId& x, const VertexId& y) {
        return !(x == y);
    }
};

struct Edge {
    VertexId src;
    VertexId dst;
    LinearForm label;
};

struct MomentGraph {
    enum class Kind { parabolic, stable, regular };

    Kind kind = Kind::stable;
    int param = 0;  // truncation N (parabolic/stable) or L (regular)
    std::vector<VertexId> vertices;  // in canonical order
    std::vector<Edge> edges;         // sorted by (src, dst)

    bool has_vertex(const VertexId& v) const {
        return std::binary_search(vertices.begin(), vertices.end(), v);
    }
    bool has_edge(const VertexId& x, const VertexId& y) const {
        for (const auto& e : edges)
            if ((e.src == x && e.dst == y) || (e.src == y && e.dst == x))
                return true;
        return false;
    }
    std::vector<LinearForm> incident_labels(const VertexId& v) const {
        std::vector<LinearForm> labels;
        for (const auto& e : edges)
            if (e.src == v || e.dst == v) labels.push_back(e.label);
        return labels;
    }
};

// Label of the parabolic edge between n*alpha and n'*alpha:
// -alpha+(n+n')c if n+n' > 0, alpha-(n+n')c otherwise.
inline LinearForm parabolic_label(int n, int n2) {
    if (n == 0 || n2 == 0) throw std::invalid_argument("vertex index 0");
    if (n == n2) throw std::invalid_argument("parabolic_label: equal vertices");
    long s = static_cast<long>(n) + n2;
    if (s > 0) return LinearForm(Rational(-1), Rational(s));
    return LinearForm(Rational(1), Rational(-s));
}

// The Bruhat order on the vertices n*alpha:
// n < n'  iff  |n| < |n'|  xor  n' = -n < 0.
inline bool bruhat_leq(int n, int n2) {
    if (n == n2) return true;
    bool smaller = std::abs(n) < std::abs(n2);
    bool negated = (n2 == -n) && (n2 < 0);
    return smaller != negated;
}

namespace detail {

inline void sort_edges(std::vector<Edge>& edges) {
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        if (a.src != b.src) return a.src < b.src;
        return a.dst < b.dst;
    });
}

inline std::vector<VertexId> index_window(int N) {
    std::vector<VertexId> vs;
    for (int k = 1; k <= N; ++k) {
        vs.push_back(VertexId::of_index(k));
        vs.push_back(VertexId::of_index(-k));
    }
    return vs;
}

}  // namespace detail

// Complete graph on the vertices n*alpha, 1 <= |n| <= N, directed by the
// Bruhat order and labeled by parabolic_label.
inline MomentGraph build_parabolic(int N) {
    if (N < 1) throw std::invalid_argument("build_parabolic: N < 1");
    MomentGraph g;
    g.kind = MomentGraph::Kind::parabolic;
    g.param = N;
    g.vertices = detail::index_window(N);
    for (const auto& x : g.vertices)
        for (const auto& y : g.vertices) {
            if (x.n == y.n) continue;
            if (bruhat_leq(x.n, y.n))
                g.edges.push_back({x, y, parabolic_label(x.n, y.n)});
        }
    detail::sort_edges(g.edges);
    return g;
}

// The stable subgraph: only the parabolic edges joining a positive-index
// vertex to a negative-index vertex survive.
inline MomentGraph build_stable(int N) {
    if (N < 1) throw std::invalid_argument("build_stable: N < 1");
    MomentGraph g = build_parabolic(N);
    g.kind = MomentGraph::Kind::stable;
    std::erase_if(g.edges, [](const Edge& e) {
        return (e.src.n > 0) == (e.dst.n > 0);
    });
    return g;
}

namespace detail {

// Word multiplication in the infinite dihedral group: concatenate and
// cancel equal adjacent letters at the junction.
inline std::string word_mul(const std::string& lhs, const std::string& rhs) {
    std::string out = lhs;
    for (char ch : rhs) {
        if (!out.empty() && out.back() == ch)
            out.pop_back();
        else
            out += ch;
    }
    return out;
}

// Reflections are exactly the odd-length reduced words; a reflection word
// starting with '0' is s_{-alpha+n*delta} with n = (len+1)/2, one starting
// with '1' is s_{alpha+n*delta} with n = (len-1)/2. The label is the
// coroot: (+-alpha + n*delta)^vee = +-alpha + n*c.
inline LinearForm reflection_label(const std::string& t) {
    long len = static_cast<long>(t.size());
    if (len % 2 == 0) throw std::logic_error("not a reflection word");
    if (t[0] == '0') return LinearForm(Rational(-1), Rational((len + 1) / 2));
    return LinearForm(Rational(1), Rational((len - 1) / 2));
}

}  // namespace detail

// Reduced words of length <= L in the infinite dihedral group, with an
// edge x -> y whenever y = s_beta * x for a positive real root beta and
// l(x) < l(y), labeled by beta^vee.
inline MomentGraph build_regular(int L) {
    if (L < 0) throw std::invalid_argument("build_regular: L < 0");
    MomentGraph g;
    g.kind = MomentGraph::Kind::regular;
    g.param = L;
    g.vertices.push_back(VertexId::of_word(""));
    for (int len = 1; len <= L; ++len) {
        for (char first : {'0', '1'}) {
            std::string w;
            for (int i = 0; i < len; ++i)
                w += (i % 2 == 0) ? first : (first == '0' ? '1' : '0');
            g.vertices.push_back(VertexId::of_word(w));
        }
    }
    std::sort(g.vertices.begin(), g.vertices.end());
    for (const auto& x : g.vertices)
        for (const auto& y : g.vertices) {
            if (x.word.size() >= y.word.size()) continue;
            // t = y * x^{-1}; an edge exists iff t is a reflection,
            // i.e. iff it has odd length
            std::string xinv(x.word.rbegin(), x.word.rend());
            std::string t = detail::word_mul(y.word, xinv);
            if (t.size() % 2 == 1)
                g.edges.push_back({x, y, detail::reflection_label(t)});
        }
    detail::sort_edges(g.edges);
    return g;
}

// The order relation of a built graph.
inline bool order_leq(const MomentGraph& g, const VertexId& x,
                      const VertexId& y) {
    if (g.kind == MomentGraph::Kind::regular)
        return x == y || x.word.size() < y.word.size();
    return bruhat_leq(x.n, y.n);
}

// Deterministic DOT rendering; byte-identical across runs.
inline std::string export_dot(const MomentGraph& g) {
    std::string out = "digraph moment_graph {\n";
    for (const auto& v : g.vertices) {
        out += "  \"";
        out += (v.kind == VertexId::Kind::index) ? v.name() + "a" : v.name();
        out += "\";\n";
    }
    for (const auto& e : g.edges) {
        auto nm = [](const VertexId& v) {
            return (v.kind == VertexId::Kind::index) ? v.name() + "a"
                                                     : v.name();
        };
        out += "  \"" + nm(e.src) + "\" -> \"" + nm(e.dst) + "\" [label=\"" +
               e.label.to_string() + "\"];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace mga
