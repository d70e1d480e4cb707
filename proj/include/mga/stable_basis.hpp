#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>

#include "mga/sections.hpp"

namespace mga {

// k_{i,n} = C(n+i, n), with k_{0,n} = 1.
inline Rational coeff_k(int i, int n) {
    if (i < 0 || n < 0) throw std::invalid_argument("coeff_k: negative argument");
    return binomial(n + i, n);
}

// a_{i,n} = C(n+i-1, n)(n-1),  b_{i,n} = C(n+i-1, n)(i-(i-1)n)/i.
inline std::pair<Rational, Rational> coeff_ab(int i, int n) {
    if (i < 1 || n < 1)
        throw std::invalid_argument("coeff_ab: arguments must be >= 1");
    Rational bin = binomial(n + i - 1, n);
    Rational a = bin * Rational(n - 1);
    Rational b = bin * Rational(static_cast<long>(i) -
                                static_cast<long>(i - 1) * n) /
                 Rational(i);
    return {a, b};
}

namespace detail {

// prod_{l=lo}^{hi} (sign*alpha + l*c); empty when hi < lo.
inline Poly2 linear_product(int sign, int lo, int hi) {
    Poly2 p(Rational(1));
    for (int l = lo; l <= hi; ++l)
        p *= LinearForm(Rational(sign), Rational(l)).to_poly();
    return p;
}

inline std::shared_ptr<const MomentGraph> stable_graph(int N) {
    return std::make_shared<const MomentGraph>(build_stable(N));
}

inline void require_stable(const MomentGraph& g, const char* who) {
    if (g.kind != MomentGraph::Kind::stable)
        throw std::invalid_argument(std::string(who) +
                                    ": expects a stable graph");
}

}  // namespace detail

// The section u_n on the truncated stable graph.
inline Section make_u(int n, std::shared_ptr<const MomentGraph> g) {
    detail::require_stable(*g, "make_u");
    int N = g->param;
    if (n < 0) throw std::invalid_argument("make_u: n < 0");
    if (N < n + 1) throw std::invalid_argument("make_u: window too small");
    Section s;
    s.graph = std::move(g);
    for (const auto& v : s.graph->vertices) {
        int j = v.n;
        Poly2 entry;
        if (std::abs(j) > n) {
            if (j > 0) {
                int i = j - n - 1;
                entry = coeff_k(i, n) * detail::linear_product(-1, i + 1, i + n);
            } else {
                int i = -j - n - 1;
                entry = coeff_k(i, n) * detail::linear_product(1, i + 1, i + n);
            }
        }
        s.entries[v] = entry;
    }
    return s;
}

inline Section make_u(int n, int N) { return make_u(n, detail::stable_graph(N)); }

// The section v_n on the truncated stable graph.
inline Section make_v(int n, std::shared_ptr<const MomentGraph> g) {
    detail::require_stable(*g, "make_v");
    int N = g->param;
    if (n < 1) throw std::invalid_argument("make_v: n < 1");
    if (N < n) throw std::invalid_argument("make_v: window too small");
    Section s;
    s.graph = std::move(g);
    for (const auto& v : s.graph->vertices) {
        int j = v.n;
        Poly2 entry;
        if (j == -n) {
            entry = detail::linear_product(1, 0, n - 1);
        } else if (j >= n + 1) {
            int i = j - n;
            auto [a, b] = coeff_ab(i, n);
            Poly2 head = Poly2::monomial(1, 0, a) +
                         Poly2::monomial(0, 1, Rational(i) * b);
            entry = head * detail::linear_product(-1, i + 1, i + n - 1);
        } else if (j <= -n - 1) {
            int i = -j - n;
            auto [a, b] = coeff_ab(i, n);
            (void)a;
            entry = b * detail::linear_product(1, i, i + n - 1);
        }
        s.entries[v] = entry;
    }
    return s;
}

inline Section make_v(int n, int N) { return make_v(n, detail::stable_graph(N)); }

struct BasisId {
    char kind;  // 'u' or 'v'
    int index;

    std::string name() const { return kind + std::to_string(index); }
    friend bool operator<(const BasisId& a, const BasisId& b) {
        if (a.index != b.index) return a.index < b.index;
        return a.kind < b.kind;
    }
    friend bool operator==(const BasisId& a, const BasisId& b) {
        return a.kind == b.kind && a.index == b.index;
    }
};

struct Decomposition {
    std::map<BasisId, Poly2> coefficients;
    Section residual;
};

namespace detail {

inline Poly2 exact_div_product(Poly2 p, int sign, int lo, int hi) {
    for (int l = lo; l <= hi; ++l)
        p = exact_div(p, LinearForm(Rational(sign), Rational(l)));
    return p;
}

// One homogeneous degree of the elimination from the basis proof:
// clear zero rows from the bottom, peel off x*u_n + y*v_{n+1} (or the
// scalar multiple of u_n when the degree equals the zero-row count).
inline void decompose_homogeneous(Section& w, int m,
                                  std::map<BasisId, Poly2>& coeffs) {
    const int N = w.graph->param;
    while (true) {
        int n = 0;
        while (n < N && w.at(n + 1).is_zero() && w.at(-(n + 1)).is_zero()) ++n;
        if (n >= N) return;  // fully cleared
        const Poly2& f = w.at(n + 1);
        const Poly2& g = w.at(-(n + 1));
        if (m < n)
            throw std::domain_error(
                "decompose: row of degree below its forced divisibility "
                "degree; input is not a section");
        if (m == n) {
            Poly2 x = exact_div_product(f, -1, 1, n);
            if (!x.is_constant())
                throw std::domain_error(
                    "decompose: scalar step produced a non-constant");
            Rational sc = x.constant_value();
            if (g != sc * linear_product(1, 1, n))
                throw std::domain_error(
                    "decompose: left/right scalar mismatch; input corrupt");
            coeffs[{'u', n}] += Poly2(sc);
            w = section_sub(w, scalar_mul(Poly2(sc), make_u(n, w.graph)));
            continue;
        }
        // m > n
        Poly2 x = exact_div_product(f, -1, 1, n);
        Poly2 y = exact_div(exact_div_product(g, 1, 1, n) - x,
                            LinearForm(Rational(1), Rational(0)));
        coeffs[{'u', n}] += x;
        coeffs[{'v', n + 1}] += y;
        Section step = section_add(scalar_mul(x, make_u(n, w.graph)),
                                   scalar_mul(y, make_v(n + 1, w.graph)));
        w = section_sub(w, step);
    }
}

}  // namespace detail

// Expresses a section over a truncated stable graph in the u_n / v_n
// family, degree by homogeneous degree. Exact reconstruction:
// sum coeff(b) * b + residual = input.
inline Decomposition decompose(const Section& s) {
    detail::require_stable(*s.graph, "decompose");
    SectionVerdict verdict = s.verify();
    if (!verdict.ok) {
        const auto& viol = verdict.violations.front();
        throw std::domain_error(
            "decompose: input fails the section condition on edge " +
            viol.edge.src.name() + " -> " + viol.edge.dst.name() +
            " (remainder " + viol.remainder.to_string() + ")");
    }
    // split into homogeneous layers
    std::map<int, Section> layers;
    for (const auto& [v, p] : s.entries)
        for (const auto& [d, comp] : homogeneous_components(p)) {
            auto it = layers.find(d);
            if (it == layers.end())
                it = layers.emplace(d, zero_section(s.graph)).first;
            it->second.entries[v] = comp;
        }
    Decomposition out;
    out.residual = zero_section(s.graph);
    for (auto& [d, layer] : layers)
        detail::decompose_homogeneous(layer, d, out.coefficients);
    for (auto it = out.coefficients.begin(); it != out.coefficients.end();)
        it = it->second.is_zero() ? out.coefficients.erase(it) : std::next(it);
    return out;
}

}  // namespace mga
