#pragma once

#include <random>

#include "mga/poly.hpp"

namespace mga_test {

inline mga::Rational random_rational(std::mt19937& rng, bool nonzero = false) {
    std::uniform_int_distribution<int> num(-8, 8);
    std::uniform_int_distribution<int> den(1, 4);
    mga::Rational r(num(rng), den(rng));
    r.canonicalize();
    while (nonzero && r == 0) {
        r = mga::Rational(num(rng), den(rng));
        r.canonicalize();
    }
    return r;
}

inline mga::Poly2 random_poly(std::mt19937& rng, int max_degree = 4,
                              int max_terms = 5) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> nterms(0, max_terms);
    mga::Poly2 p;
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        int d = deg(rng);
        std::uniform_int_distribution<int> split(0, d);
        int a = split(rng);
        p += mga::Poly2::monomial(a, d - a, random_rational(rng));
    }
    return p;
}

// Linear form with a != 0.
inline mga::LinearForm random_form(std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-5, 5);
    mga::Rational a = random_rational(rng, /*nonzero=*/true);
    return mga::LinearForm(a, mga::Rational(coef(rng)));
}

}  // namespace mga_test
