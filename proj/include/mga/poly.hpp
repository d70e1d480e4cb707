#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mga/rational.hpp"

namespace mga {

// Sparse bivariate polynomial in the generators alpha and c over the
// rationals. Exponent pairs are (alpha-exponent, c-exponent); zero
// coefficients are never stored, so the zero polynomial is the empty map.
class Poly2 {
public:
    using Exp = std::pair<int, int>;
    using TermMap = std::map<Exp, Rational>;

    Poly2() = default;
    explicit Poly2(const Rational& constant) {
        if (constant != 0) terms_[{0, 0}] = constant;
    }
    explicit Poly2(long constant) : Poly2(Rational(constant)) {}

    static Poly2 monomial(int alpha_exp, int c_exp, const Rational& coeff) {
        if (alpha_exp < 0 || c_exp < 0)
            throw std::invalid_argument("negative exponent");
        Poly2 p;
        if (coeff != 0) p.terms_[{alpha_exp, c_exp}] = coeff;
        return p;
    }
    static Poly2 alpha() { return monomial(1, 0, Rational(1)); }
    static Poly2 c() { return monomial(0, 1, Rational(1)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == Exp{0, 0});
    }
    Rational constant_value() const {
        if (!is_constant()) throw std::logic_error("not a constant polynomial");
        return terms_.empty() ? Rational(0) : terms_.begin()->second;
    }

    // Natural total degree max(i+j); -1 for the zero polynomial.
    int total_degree() const {
        int d = -1;
        for (const auto& [e, _] : terms_) d = std::max(d, e.first + e.second);
        return d;
    }
    int alpha_degree() const {
        int d = -1;
        for (const auto& [e, _] : terms_) d = std::max(d, e.first);
        return d;
    }

    Rational coeff(int alpha_exp, int c_exp) const {
        auto it = terms_.find({alpha_exp, c_exp});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Poly2& operator+=(const Poly2& o) {
        for (const auto& [e, q] : o.terms_) add_term(e, q);
        return *this;
    }
    Poly2& operator-=(const Poly2& o) {
        for (const auto& [e, q] : o.terms_) add_term(e, -q);
        return *this;
    }
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    Poly2 operator-() const {
        Poly2 r;
        for (const auto& [e, q] : terms_) r.terms_[e] = -q;
        return r;
    }

    friend Poly2 operator*(const Poly2& a, const Poly2& b) {
        Poly2 r;
        for (const auto& [ea, qa] : a.terms_)
            for (const auto& [eb, qb] : b.terms_)
                r.add_term({ea.first + eb.first, ea.second + eb.second},
                           qa * qb);
        return r;
    }
    Poly2& operator*=(const Poly2& o) { return *this = *this * o; }

    friend Poly2 operator*(const Rational& s, const Poly2& p) {
        Poly2 r;
        if (s == 0) return r;
        for (const auto& [e, q] : p.terms_) r.terms_[e] = s * q;
        return r;
    }
    friend Poly2 operator*(const Poly2& p, const Rational& s) { return s * p; }

    friend bool operator==(const Poly2& a, const Poly2& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly2& a, const Poly2& b) {
        return !(a == b);
    }

    // "a^2+3*a*c+2*c^2"; generators render as "a" and "c".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        // highest alpha-degree first
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, q] = *it;
            Rational aq = abs(q);
            if (out.empty())
                out += (q < 0 ? "-" : "");
            else
                out += (q < 0 ? "-" : "+");
            bool has_gen = e.first > 0 || e.second > 0;
            if (aq != 1 || !has_gen) out += rational_to_string(aq);
            if (e.first > 0) {
                if (aq != 1) out += "*";
                out += "a";
                if (e.first > 1) out += "^" + std::to_string(e.first);
            }
            if (e.second > 0) {
                if (aq != 1 || e.first > 0) out += "*";
                out += "c";
                if (e.second > 1) out += "^" + std::to_string(e.second);
            }
        }
        return out;
    }

private:
    void add_term(const Exp& e, const Rational& q) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (q != 0) terms_[e] = q;
        } else {
            it->second += q;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

// Nonzero linear form a*alpha + b*c.
struct LinearForm {
    Rational a;
    Rational b;

    LinearForm(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {
        if (a == 0 && b == 0) throw std::invalid_argument("zero linear form");
    }

    Poly2 to_poly() const {
        return Poly2::monomial(1, 0, a) + Poly2::monomial(0, 1, b);
    }

    bool proportional_to(const LinearForm& o) const {
        return a * o.b - b * o.a == 0;
    }

    friend bool operator==(const LinearForm& x, const LinearForm& y) {
        return x.a == y.a && x.b == y.b;
    }

    // Paper-style rendering: "a", "-a+3c", "a+c".
    std::string to_string() const {
        std::string out;
        if (a != 0) {
            if (a == -1)
                out += "-";
            else if (a != 1)
                out += rational_to_string(a);
            out += "a";
        }
        if (b != 0) {
            if (b > 0 && !out.empty()) out += "+";
            if (b == -1)
                out += "-";
            else if (b != 1)
                out += rational_to_string(b);
            out += "c";
        }
        return out;
    }
};

struct DivRemResult {
    Poly2 quotient;
    Poly2 remainder;  // a polynomial in c alone
};

// Division with remainder by a linear form with a != 0, treating alpha as
// the main variable. p = quotient*f + remainder with the remainder free of
// alpha, so f | p iff the remainder vanishes.
inline DivRemResult divrem_linear(const Poly2& p, const LinearForm& f) {
    if (f.a == 0)
        throw std::invalid_argument(
            "divrem_linear: unsupported pure-c divisor");
    Poly2 quotient;
    Poly2 rest = p;
    Poly2 fp = f.to_poly();
    while (rest.alpha_degree() >= 1) {
        // leading term in lexicographic (alpha-degree, c-degree) order
        const auto& lead = *rest.terms().rbegin();
        Poly2 t = Poly2::monomial(lead.first.first - 1, lead.first.second,
                                  lead.second / f.a);
        quotient += t;
        rest -= t * fp;
    }
    return {quotient, rest};
}

// Exact division; throws if the form does not divide p.
inline Poly2 exact_div(const Poly2& p, const LinearForm& f) {
    DivRemResult dr = divrem_linear(p, f);
    if (!dr.remainder.is_zero())
        throw std::domain_error("exact_div: nonzero remainder " +
                                dr.remainder.to_string());
    return dr.quotient;
}

// True iff every form divides p. For pairwise non-proportional linear
// forms this is equivalent to divisibility by their product.
inline bool divides_product(const Poly2& p,
                            const std::vector<LinearForm>& forms) {
    for (std::size_t i = 0; i < forms.size(); ++i)
        for (std::size_t j = i + 1; j < forms.size(); ++j)
            if (forms[i].proportional_to(forms[j]))
                throw std::invalid_argument(
                    "divides_product: proportional forms");
    for (const auto& f : forms) {
        if (f.a != 0) {
            if (!divrem_linear(p, f).remainder.is_zero()) return false;
        } else {
            // b*c with b != 0: divisible iff no term is free of c
            for (const auto& [e, _] : p.terms())
                if (e.second == 0) return false;
        }
    }
    return true;
}

// Splits p into its homogeneous pieces, keyed by natural total degree.
inline std::map<int, Poly2> homogeneous_components(const Poly2& p) {
    std::map<int, Poly2> comps;
    for (const auto& [e, q] : p.terms())
        comps[e.first + e.second] += Poly2::monomial(e.first, e.second, q);
    return comps;
}

// Univariate polynomial in alpha over the rationals, the image of S
// under c -> 0. Sparse map from degree to nonzero coefficient.
class FinPoly {
public:
    using CoeffMap = std::map<int, Rational>;

    FinPoly() = default;
    explicit FinPoly(const Rational& constant) {
        if (constant != 0) coeffs_[0] = constant;
    }
    explicit FinPoly(long constant) : FinPoly(Rational(constant)) {}

    static FinPoly monomial(int deg, const Rational& coeff) {
        if (deg < 0) throw std::invalid_argument("negative degree");
        FinPoly p;
        if (coeff != 0) p.coeffs_[deg] = coeff;
        return p;
    }
    static FinPoly alpha() { return monomial(1, Rational(1)); }

    const CoeffMap& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
    int order() const {  // smallest degree with nonzero coefficient
        return coeffs_.empty() ? -1 : coeffs_.begin()->first;
    }
    Rational coeff(int deg) const {
        auto it = coeffs_.find(deg);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    FinPoly& operator+=(const FinPoly& o) {
        for (const auto& [d, q] : o.coeffs_) add_term(d, q);
        return *this;
    }
    FinPoly& operator-=(const FinPoly& o) {
        for (const auto& [d, q] : o.coeffs_) add_term(d, -q);
        return *this;
    }
    friend FinPoly operator+(FinPoly a, const FinPoly& b) { return a += b; }
    friend FinPoly operator-(FinPoly a, const FinPoly& b) { return a -= b; }
    FinPoly operator-() const {
        FinPoly r;
        for (const auto& [d, q] : coeffs_) r.coeffs_[d] = -q;
        return r;
    }
    friend FinPoly operator*(const FinPoly& a, const FinPoly& b) {
        FinPoly r;
        for (const auto& [da, qa] : a.coeffs_)
            for (const auto& [db, qb] : b.coeffs_) r.add_term(da + db, qa * qb);
        return r;
    }
    friend FinPoly operator*(const Rational& s, const FinPoly& p) {
        FinPoly r;
        if (s == 0) return r;
        for (const auto& [d, q] : p.coeffs_) r.coeffs_[d] = s * q;
        return r;
    }
    friend FinPoly operator*(const FinPoly& p, const Rational& s) {
        return s * p;
    }
    friend bool operator==(const FinPoly& a, const FinPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const FinPoly& a, const FinPoly& b) {
        return !(a == b);
    }

    bool divisible_by_alpha_pow(int m) const {
        return coeffs_.empty() || order() >= m;
    }
    FinPoly div_alpha_pow(int m) const {
        if (!divisible_by_alpha_pow(m))
            throw std::domain_error("not divisible by alpha^" +
                                    std::to_string(m));
        FinPoly r;
        for (const auto& [d, q] : coeffs_) r.coeffs_[d - m] = q;
        return r;
    }

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            const auto& [d, q] = *it;
            Rational aq = abs(q);
            if (out.empty())
                out += (q < 0 ? "-" : "");
            else
                out += (q < 0 ? "-" : "+");
            if (aq != 1 || d == 0) out += rational_to_string(aq);
            if (d > 0) {
                if (aq != 1) out += "*";
                out += "a";
                if (d > 1) out += "^" + std::to_string(d);
            }
        }
        return out;
    }

private:
    void add_term(int d, const Rational& q) {
        auto it = coeffs_.find(d);
        if (it == coeffs_.end()) {
            if (q != 0) coeffs_[d] = q;
        } else {
            it->second += q;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    CoeffMap coeffs_;
};

// The c -> 0 specialization S -> S^fin.
inline FinPoly specialize_c0(const Poly2& p) {
    FinPoly r;
    for (const auto& [e, q] : p.terms())
        if (e.second == 0) r += FinPoly::monomial(e.first, q);
    return r;
}

}  // namespace mga
