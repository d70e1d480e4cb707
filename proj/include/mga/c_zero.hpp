#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mga/stable_basis.hpp"

namespace mga {

// Element of Z^fin: a pair of univariate polynomials with alpha | z1 - z2.
struct FinPair {
    FinPoly z1;
    FinPoly z2;

    FinPair() = default;
    FinPair(FinPoly a, FinPoly b) : z1(std::move(a)), z2(std::move(b)) {
        if (z1.coeff(0) != z2.coeff(0))
            throw std::invalid_argument(
                "FinPair: alpha does not divide z1 - z2");
    }

    friend FinPair operator+(const FinPair& a, const FinPair& b) {
        return FinPair(a.z1 + b.z1, a.z2 + b.z2);
    }
    friend FinPair operator-(const FinPair& a, const FinPair& b) {
        return FinPair(a.z1 - b.z1, a.z2 - b.z2);
    }
    friend FinPair operator*(const Rational& s, const FinPair& p) {
        return FinPair(s * p.z1, s * p.z2);
    }
    // componentwise ring structure of Z^fin
    friend FinPair operator*(const FinPair& a, const FinPair& b) {
        return FinPair(a.z1 * b.z1, a.z2 * b.z2);
    }
    // diagonal S^fin-action
    friend FinPair operator*(const FinPoly& s, const FinPair& p) {
        return FinPair(s * p.z1, s * p.z2);
    }
    friend bool operator==(const FinPair& a, const FinPair& b) {
        return a.z1 == b.z1 && a.z2 == b.z2;
    }
};

// Rows a_0, a_1, ... with a_j = (w_{(j+1)a}, w_{(-j-1)a}) after c -> 0.
struct RowFamily {
    std::vector<FinPair> rows;

    int max_row() const { return static_cast<int>(rows.size()) - 1; }
};

inline RowFamily specialize_section(const Section& s) {
    if (s.graph->kind != MomentGraph::Kind::stable)
        throw std::invalid_argument("specialize_section: expects stable graph");
    SectionVerdict verdict = s.verify();
    if (!verdict.ok)
        throw std::domain_error("specialize_section: input is not a section");
    RowFamily fam;
    for (int j = 0; j < s.graph->param; ++j)
        fam.rows.emplace_back(specialize_c0(s.at(j + 1)),
                              specialize_c0(s.at(-(j + 1))));
    return fam;
}

namespace detail {

inline Rational neg_one_pow(int n) { return n % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace detail

// Closed form for the specialized basis element u_n-bar on rows 0..J:
// row j = k_{j-n,n} * ((-alpha)^n, alpha^n) for j >= n, zero below.
// Cross-checked against the specialization route.
inline RowFamily make_u_bar(int n, int J) {
    if (n < 0 || J < n)
        throw std::invalid_argument("make_u_bar: need J >= n >= 0");
    RowFamily fam;
    for (int j = 0; j <= J; ++j) {
        if (j < n) {
            fam.rows.emplace_back(FinPoly(), FinPoly());
        } else {
            Rational k = coeff_k(j - n, n);
            fam.rows.emplace_back(
                FinPoly::monomial(n, k * detail::neg_one_pow(n)),
                FinPoly::monomial(n, k));
        }
    }
    RowFamily via_section = specialize_section(make_u(n, J + 1));
    if (!(fam.rows == via_section.rows))
        throw std::logic_error("make_u_bar: closed form disagrees with "
                               "specialization route");
    return fam;
}

// Row j of v_n-bar: zero below row n-1, (0, alpha^n) at row n-1,
// (-a_{i,n}(-alpha)^n, b_{i,n} alpha^n) with i = j-n+1 above.
inline RowFamily make_v_bar(int n, int J) {
    if (n < 1 || J < n - 1)
        throw std::invalid_argument("make_v_bar: need n >= 1, J >= n-1");
    RowFamily fam;
    for (int j = 0; j <= J; ++j) {
        if (j < n - 1) {
            fam.rows.emplace_back(FinPoly(), FinPoly());
        } else if (j == n - 1) {
            fam.rows.emplace_back(FinPoly(), FinPoly::monomial(n, Rational(1)));
        } else {
            auto [a, b] = coeff_ab(j - n + 1, n);
            fam.rows.emplace_back(
                FinPoly::monomial(n, -a * detail::neg_one_pow(n)),
                FinPoly::monomial(n, b));
        }
    }
    RowFamily via_section = specialize_section(make_v(n, J + 1));
    if (!(fam.rows == via_section.rows))
        throw std::logic_error("make_v_bar: closed form disagrees with "
                               "specialization route");
    return fam;
}

struct IdealVerdict {
    bool member = false;
    // on success: p = (z1, z2) * ((-alpha)^m, alpha^m) with (z1,z2) in Z^fin
    FinPoly z1;
    FinPoly z2;
    std::string reason;  // on failure
};

// Membership in the ideal ((-alpha)^m, alpha^m) * Z^fin.
inline IdealVerdict ideal_member(int m, const FinPoly& p1, const FinPoly& p2) {
    if (m < 0) throw std::invalid_argument("ideal_member: m < 0");
    IdealVerdict v;
    if (!p1.divisible_by_alpha_pow(m)) {
        v.reason = "alpha^" + std::to_string(m) +
                   " does not divide the first component " + p1.to_string();
        return v;
    }
    if (!p2.divisible_by_alpha_pow(m)) {
        v.reason = "alpha^" + std::to_string(m) +
                   " does not divide the second component " + p2.to_string();
        return v;
    }
    FinPoly z1 = detail::neg_one_pow(m) * p1.div_alpha_pow(m);
    FinPoly z2 = p2.div_alpha_pow(m);
    if (z1.coeff(0) != z2.coeff(0)) {
        v.reason = "witness pair is not in Z^fin: alpha does not divide " +
                   (z1 - z2).to_string();
        return v;
    }
    v.member = true;
    v.z1 = std::move(z1);
    v.z2 = std::move(z2);
    return v;
}

struct CongruenceReport {
    struct Item {
        int m;
        IdealVerdict verdict;
        FinPoly combo1, combo2;  // the alternating binomial combination
    };
    std::vector<Item> items;  // ordered by m

    bool all_pass() const {
        for (const auto& it : items)
            if (!it.verdict.member) return false;
        return true;
    }
};

// The higher-order congruence relations:
// sum_{j=0}^{m} (-1)^j C(m,j) a_j in ((-alpha)^m, alpha^m) Z^fin, m <= m_max.
inline CongruenceReport check_congruences(const RowFamily& fam, int m_max) {
    if (m_max > fam.max_row())
        throw std::invalid_argument(
            "check_congruences: m_max exceeds available rows");
    CongruenceReport report;
    for (int m = 0; m <= m_max; ++m) {
        FinPoly c1, c2;
        for (int j = 0; j <= m; ++j) {
            Rational w = detail::neg_one_pow(j) * binomial(m, j);
            c1 += w * fam.rows[j].z1;
            c2 += w * fam.rows[j].z2;
        }
        report.items.push_back({m, ideal_member(m, c1, c2), c1, c2});
    }
    return report;
}

// Rowwise product of two congruence-satisfying families still satisfies
// the congruences (the structure algebra is closed under multiplication).
inline bool closure_check(const RowFamily& f, const RowFamily& g, int m_max) {
    int J = std::min(f.max_row(), g.max_row());
    if (m_max > J)
        throw std::invalid_argument("closure_check: m_max exceeds rows");
    if (!check_congruences(f, m_max).all_pass() ||
        !check_congruences(g, m_max).all_pass())
        throw std::invalid_argument(
            "closure_check: an input family fails the congruences");
    RowFamily prod;
    for (int j = 0; j <= J; ++j) prod.rows.push_back(f.rows[j] * g.rows[j]);
    return check_congruences(prod, m_max).all_pass();
}

struct IdentityFailure {
    std::string which;
    int n, k;
};

// The scalar identities behind the main divisibility theorem, checked
// exactly on the full (n, k) grid.
inline std::optional<IdentityFailure> identity_suite(int n_max, int k_max) {
    for (int k = 1; k <= k_max; ++k) {
        // sum(.) = sum_l (-1)^l C(k,l) l/(l+1) = -1/(k+1)
        Rational dot(0);
        for (int l = 0; l <= k; ++l)
            dot += detail::neg_one_pow(l) * binomial(k, l) * Rational(l) /
                   Rational(l + 1);
        if (dot != Rational(-1) / Rational(k + 1))
            return IdentityFailure{"dot", 0, k};
        // sum(..) = sum_{l=1}^{k+1} (-1)^l C(k+1,l) l = 0
        Rational dotdot(0);
        for (int l = 1; l <= k + 1; ++l)
            dotdot += detail::neg_one_pow(l) * binomial(k + 1, l) * Rational(l);
        if (dotdot != 0) return IdentityFailure{"dotdot", 0, k};
        // sum(...) = sum_{l=1}^{k+1} (-1)^l C(k+1,l) = -1
        Rational dotdotdot(0);
        for (int l = 1; l <= k + 1; ++l)
            dotdotdot += detail::neg_one_pow(l) * binomial(k + 1, l);
        if (dotdotdot != Rational(-1))
            return IdentityFailure{"dotdotdot", 0, k};

        for (int n = 0; n <= n_max; ++n) {
            // sum_{j=n}^{n+k} (-1)^j C(n+k,j) C(j,n) = 0
            Rational s(0);
            for (int j = n; j <= n + k; ++j)
                s += detail::neg_one_pow(j) * binomial(n + k, j) * binomial(j, n);
            if (s != 0) return IdentityFailure{"bnmzero", n, k};

            if (n >= 1) {
                // sum_{j=n}^{n+k} (-1)^j C(n+k,j) a_{j-n+1,n} = 0
                Rational sa(0), sb(0);
                for (int j = n; j <= n + k; ++j) {
                    auto [a, b] = coeff_ab(j - n + 1, n);
                    Rational w = detail::neg_one_pow(j) * binomial(n + k, j);
                    sa += w * a;
                    sb += w * b;
                }
                if (sa != 0) return IdentityFailure{"bnmzeroo", n, k};
                // (-1)^{n-1} C(n+k,n-1) + sum (-1)^j C(n+k,j) b_{j-n+1,n} = 0
                Rational lhs =
                    detail::neg_one_pow(n - 1) * binomial(n + k, n - 1) + sb;
                if (lhs != 0) return IdentityFailure{"bnmzerooo", n, k};
            }
        }
    }
    return std::nullopt;
}

// ---- brute-force oracle -------------------------------------------------

using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

namespace detail {

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<int> rref(RatMatrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t sel = r;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        Rational inv = Rational(1) / m[r][col];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][col] == 0) continue;
            Rational factor = m[i][col];
            for (std::size_t j2 = 0; j2 < cols; ++j2)
                m[i][j2] -= factor * m[r][j2];
        }
        pivots.push_back(static_cast<int>(col));
        ++r;
    }
    return pivots;
}

inline int rank(RatMatrix m) {
    return static_cast<int>(rref(m).size());
}

// Basis of the nullspace of m (columns = unknowns).
inline RatMatrix nullspace(RatMatrix m, std::size_t cols) {
    for (auto& row : m)
        if (row.size() != cols) throw std::logic_error("ragged matrix");
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    RatMatrix basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVector v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace detail

struct OracleSpace {
    int dimension = 0;
    RatMatrix basis;       // nullspace vectors, coordinates x0,y0,x1,y1,...
    RatMatrix constraints; // the linear conditions (same coordinates)
};

namespace detail {

// Linear conditions on (x_j, y_j), j = 0..J, for the homogeneous-degree-d
// row family a_j = (x_j alpha^d, y_j alpha^d) to satisfy every congruence
// relation m <= J. Coordinates interleaved: x0, y0, x1, y1, ...
inline RatMatrix congruence_constraints(int J, int d) {
    std::size_t cols = 2 * static_cast<std::size_t>(J) + 2;
    RatMatrix rows;
    auto xcol = [](int j) { return 2 * static_cast<std::size_t>(j); };
    auto ycol = [](int j) { return 2 * static_cast<std::size_t>(j) + 1; };
    if (d == 0) {
        // Z^fin membership of each row: constant components agree
        for (int j = 0; j <= J; ++j) {
            RatVector row(cols, Rational(0));
            row[xcol(j)] = 1;
            row[ycol(j)] = -1;
            rows.push_back(std::move(row));
        }
    }
    for (int m = 0; m <= J; ++m) {
        if (m < d) continue;  // alpha^m | alpha^d and alpha | z1-z2 hold
        if (m == d) {
            // (-1)^m X_m = Y_m for the witness pair to lie in Z^fin
            RatVector row(cols, Rational(0));
            for (int j = 0; j <= m; ++j) {
                Rational w = neg_one_pow(j) * binomial(m, j);
                row[xcol(j)] += neg_one_pow(m) * w;
                row[ycol(j)] -= w;
            }
            rows.push_back(std::move(row));
        } else {
            // m > d: alpha^m divides a degree-d polynomial only if it is 0
            RatVector rx(cols, Rational(0)), ry(cols, Rational(0));
            for (int j = 0; j <= m; ++j) {
                Rational w = neg_one_pow(j) * binomial(m, j);
                rx[xcol(j)] = w;
                ry[ycol(j)] = w;
            }
            rows.push_back(std::move(rx));
            rows.push_back(std::move(ry));
        }
    }
    return rows;
}

}  // namespace detail

// Solves the degree-d congruence relations on rows 0..J by exact
// elimination over the rationals.
inline OracleSpace oracle_solution_space(int J, int d) {
    if (J < 0 || d < 0)
        throw std::invalid_argument("oracle_solution_space: bad arguments");
    OracleSpace space;
    space.constraints = detail::congruence_constraints(J, d);
    std::size_t cols = 2 * static_cast<std::size_t>(J) + 2;
    space.basis = detail::nullspace(space.constraints, cols);
    space.dimension = static_cast<int>(space.basis.size());
    return space;
}

// The degree-d coefficient vectors of alpha^{d-n} u_n-bar and
// alpha^{d-n} v_n-bar on rows 0..J, in (x0,y0,x1,y1,...) coordinates.
inline RatMatrix basis_slices(int J, int d) {
    RatMatrix slices;
    for (int n = 0; n <= std::min(d, J); ++n) {
        RowFamily ub = make_u_bar(n, J);
        RatVector v;
        for (const auto& row : ub.rows) {
            v.push_back(row.z1.coeff(n));
            v.push_back(row.z2.coeff(n));
        }
        slices.push_back(std::move(v));
    }
    for (int n = 1; n <= std::min(d, J + 1); ++n) {
        RowFamily vb = make_v_bar(n, J);
        RatVector v;
        bool nonzero = false;
        for (const auto& row : vb.rows) {
            v.push_back(row.z1.coeff(n));
            v.push_back(row.z2.coeff(n));
            nonzero = nonzero || !row.z1.is_zero() || !row.z2.is_zero();
        }
        if (nonzero) slices.push_back(std::move(v));
    }
    return slices;
}

struct OracleComparison {
    bool forward_ok = false;  // every basis slice satisfies the relations
    bool equal = false;       // span of slices == solution space
    int oracle_dim = 0;
    int span_dim = 0;
};

// Both inclusions of the main theorem at truncation (J, d).
inline OracleComparison oracle_compare(int J, int d) {
    OracleComparison cmp;
    OracleSpace space = oracle_solution_space(J, d);
    cmp.oracle_dim = space.dimension;
    RatMatrix slices = basis_slices(J, d);

    cmp.forward_ok = true;
    for (const auto& s : slices)
        for (const auto& row : space.constraints) {
            Rational dot(0);
            for (std::size_t i = 0; i < row.size(); ++i) dot += row[i] * s[i];
            if (dot != 0) cmp.forward_ok = false;
        }

    cmp.span_dim = detail::rank(slices);
    // mutual containment: slices lie in the nullspace (forward_ok) and the
    // joint span has the nullspace's rank
    RatMatrix joint = slices;
    for (const auto& v : space.basis) joint.push_back(v);
    cmp.equal = cmp.forward_ok && cmp.span_dim == cmp.oracle_dim &&
                detail::rank(joint) == cmp.oracle_dim;
    return cmp;
}

}  // namespace mga
