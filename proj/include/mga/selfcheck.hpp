#pragma once

#include <chrono>
#include <functional>
#include <ostream>
#include <random>

#include "mga/c_zero.hpp"
#include "mga/stable_basis.hpp"

namespace mga::selfcheck {

struct Options {
    bool quick = false;
    std::uint64_t seed = 0x6d6f6d656e74ull;  // fixed default for reproducibility
};

namespace detail {

inline Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    Rational r(num(rng), den(rng));
    r.canonicalize();  // mpq_class(n, d) does not reduce to lowest terms
    return r;
}

inline Poly2 random_poly(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> nterms(0, 4);
    Poly2 p;
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        int d = deg(rng);
        std::uniform_int_distribution<int> split(0, d);
        int a = split(rng);
        p += Poly2::monomial(a, d - a, random_rational(rng));
    }
    return p;
}

inline FinPoly random_finpoly(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> nterms(0, 3);
    FinPoly p;
    int t = nterms(rng);
    for (int i = 0; i < t; ++i)
        p += FinPoly::monomial(deg(rng), random_rational(rng));
    return p;
}

inline RowFamily scale_rows(const FinPoly& s, const RowFamily& fam) {
    RowFamily out;
    for (const auto& r : fam.rows) out.rows.push_back(s * r);
    return out;
}

inline RowFamily add_rows(const RowFamily& a, const RowFamily& b) {
    RowFamily out;
    for (std::size_t j = 0; j < a.rows.size(); ++j)
        out.rows.push_back(a.rows[j] + b.rows[j]);
    return out;
}

// Random element of the span of u_n-bar, v_n-bar with polynomial
// coefficients; satisfies the congruences by the main theorem.
inline RowFamily random_span_family(std::mt19937_64& rng, int n_limit, int J) {
    RowFamily fam;
    fam.rows.assign(J + 1, FinPair());
    for (int n = 0; n <= n_limit; ++n) {
        fam = add_rows(fam,
                       scale_rows(random_finpoly(rng, 2), make_u_bar(n, J)));
        if (n >= 1)
            fam = add_rows(fam,
                           scale_rows(random_finpoly(rng, 2), make_v_bar(n, J)));
    }
    return fam;
}

}  // namespace detail

struct Criterion {
    std::string name;
    std::function<bool()> run;
};

inline bool run(const Options& opt, std::ostream& out) {
    const int sect_n = opt.quick ? 6 : 12;
    const int sect_N = opt.quick ? 12 : 25;
    const int recon_n = opt.quick ? 4 : 8;
    const int roundtrip_count = opt.quick ? 30 : 200;
    const int ident_max = opt.quick ? 10 : 30;
    const int fwd_J = 10;
    const int fwd_rand = opt.quick ? 20 : 100;
    const int closure_count = opt.quick ? 20 : 100;

    std::vector<Criterion> criteria;

    criteria.push_back({"sectionhood u_n/v_n on stable window", [&] {
        auto g = std::make_shared<const MomentGraph>(build_stable(sect_N));
        for (int n = 0; n <= sect_n; ++n) {
            if (!make_u(n, g).verify().ok) return false;
            if (n >= 1 && !make_v(n, g).verify().ok) return false;
        }
        return true;
    }});

    criteria.push_back({"same-column edges break sectionhood", [&] {
        for (int n = 0; n <= recon_n; ++n) {
            int N = n + 2;
            MomentGraph g = build_stable(N);
            // u_0 is constant and never violated; the edge (1,2) is
            // instead refuted by u_1
            Section u = make_u(std::max(n, 1),
                               std::make_shared<const MomentGraph>(g));
            g.edges.push_back({VertexId::of_index(n + 1),
                               VertexId::of_index(n + 2),
                               parabolic_label(n + 1, n + 2)});
            if (is_section(g, u.entries).ok) return false;
        }
        return true;
    }});

    criteria.push_back({"basis round-trip on random combinations", [&] {
        std::mt19937_64 rng(opt.seed);
        auto g = std::make_shared<const MomentGraph>(build_stable(12));
        for (int trial = 0; trial < roundtrip_count; ++trial) {
            std::map<BasisId, Poly2> expected;
            Section w = zero_section(g);
            for (int n = 0; n <= 5; ++n) {
                Poly2 p = detail::random_poly(rng, 3);
                if (!p.is_zero()) {
                    expected[{'u', n}] += p;
                    w = section_add(w, scalar_mul(p, make_u(n, g)));
                }
                if (n >= 1) {
                    Poly2 q = detail::random_poly(rng, 3);
                    if (!q.is_zero()) {
                        expected[{'v', n}] += q;
                        w = section_add(w, scalar_mul(q, make_v(n, g)));
                    }
                }
            }
            for (auto it = expected.begin(); it != expected.end();)
                it = it->second.is_zero() ? expected.erase(it) : std::next(it);
            Decomposition dec = decompose(w);
            if (dec.coefficients != expected) return false;
            for (const auto& [v, p] : dec.residual.entries)
                if (!p.is_zero()) return false;
        }
        return true;
    }});

    criteria.push_back({"scalar binomial identities", [&] {
        return !identity_suite(ident_max, ident_max).has_value();
    }});

    criteria.push_back({"congruence forward inclusion", [&] {
        std::mt19937_64 rng(opt.seed + 1);
        for (int n = 0; n <= fwd_J; ++n) {
            for (int k = 0; k <= 4; ++k) {
                FinPoly ak = FinPoly::monomial(k, Rational(1));
                RowFamily ub = detail::scale_rows(ak, make_u_bar(n, fwd_J));
                if (!check_congruences(ub, fwd_J).all_pass()) return false;
                if (n >= 1) {
                    RowFamily vb =
                        detail::scale_rows(ak, make_v_bar(n, fwd_J));
                    if (!check_congruences(vb, fwd_J).all_pass()) return false;
                }
            }
        }
        for (int trial = 0; trial < fwd_rand; ++trial) {
            RowFamily fam = detail::random_span_family(rng, fwd_J, fwd_J);
            if (!check_congruences(fam, fwd_J).all_pass()) return false;
        }
        return true;
    }});

    criteria.push_back({"oracle equivalence at truncation", [&] {
        for (int J = 0; J <= 6; ++J)
            for (int d = 0; d <= J; ++d) {
                OracleComparison cmp = oracle_compare(J, d);
                if (!cmp.forward_ok || !cmp.equal) return false;
            }
        // golden case (J,d) = (1,1): dimension 3, spanned by
        // (1,1,1,1), (0,0,-1,1), (0,1,0,1) in (x0,y0,x1,y1)
        OracleSpace space = oracle_solution_space(1, 1);
        if (space.dimension != 3) return false;
        RatMatrix golden = {{Rational(1), Rational(1), Rational(1), Rational(1)},
                            {Rational(0), Rational(0), Rational(-1), Rational(1)},
                            {Rational(0), Rational(1), Rational(0), Rational(1)}};
        for (const auto& v : golden)
            for (const auto& row : space.constraints) {
                Rational dot(0);
                for (std::size_t i = 0; i < 4; ++i) dot += row[i] * v[i];
                if (dot != 0) return false;
            }
        RatMatrix joint = golden;
        for (const auto& v : space.basis) joint.push_back(v);
        return mga::detail::rank(golden) == 3 && mga::detail::rank(joint) == 3;
    }});

    criteria.push_back({"multiplicative closure of the congruences", [&] {
        std::mt19937_64 rng(opt.seed + 2);
        const int J = 8;
        for (int trial = 0; trial < closure_count; ++trial) {
            RowFamily f = detail::random_span_family(rng, J, J);
            RowFamily g = detail::random_span_family(rng, J, J);
            if (!closure_check(f, g, J)) return false;
        }
        return true;
    }});

    criteria.push_back({"graph combinatorics grid", [&] {
        for (int n = -10; n <= 10; ++n)
            for (int n2 = -10; n2 <= 10; ++n2) {
                if (n == 0 || n2 == 0) continue;
                bool smaller = std::abs(n) < std::abs(n2);
                bool negated = (n2 == -n) && (n2 < 0);
                bool expect = (n == n2) || (smaller != negated);
                if (bruhat_leq(n, n2) != expect) return false;
                if (n != n2) {
                    LinearForm lbl = parabolic_label(n, n2);
                    long s = static_cast<long>(n) + n2;
                    LinearForm expect_lbl =
                        s > 0 ? LinearForm(Rational(-1), Rational(s))
                              : LinearForm(Rational(1), Rational(-s));
                    if (!(lbl == expect_lbl)) return false;
                    if (!(lbl == parabolic_label(n2, n))) return false;
                }
            }
        for (int N = 1; N <= 10; ++N) {
            MomentGraph g = build_stable(N);
            if (g.edges.size() != static_cast<std::size_t>(N) * N) return false;
            for (const auto& e : g.edges)
                if ((e.src.n > 0) == (e.dst.n > 0)) return false;
        }
        return true;
    }});

    bool all_ok = true;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            out << "[EXCEPTION] " << c.name << ": " << e.what() << "\n";
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        out << (ok ? "[PASS] " : "[FAIL] ") << c.name << " (" << ms << " ms)\n";
        all_ok = all_ok && ok;
    }
    return all_ok;
}

}  // namespace mga::selfcheck
