#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mga {

// Exact rational arithmetic. mpq_class keeps values canonical
// (lowest terms, positive denominator), which the rest of the
// library relies on for equality tests.
using Rational = mpq_class;

inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational: '" + s + "'");
    r.canonicalize();
    return r;
}

// "3", "-5/7"; the "/1" of integers is omitted.
inline std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

// C(n, k) as an exact rational, 0 for k < 0 or k > n.
inline Rational binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    mpz_class z;
    mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return Rational(z);
}

}  // namespace mga
