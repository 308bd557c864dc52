#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace beamplan {

// Exact rational scalar. GMP keeps results of arithmetic canonical
// (denominator > 0, gcd(num, den) = 1) as long as the operands are
// canonical, so every Rational in this library is built either from
// integers or through ratio(), which canonicalizes explicitly.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational ratio(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("ratio: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational ratio(long num, long den) { return ratio(Integer(num), Integer(den)); }

inline Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

inline Integer int_pow(long base, unsigned long exp) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), std::abs(base), exp);
    if (base < 0 && exp % 2 == 1) p = -p;
    return p;
}

// "p/q" (or plain "p") with q > 0 after canonicalization.
inline std::string to_fraction_string(const Rational& r) {
    return r.get_str();
}

inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: '" + s + "'");
    r.canonicalize();
    return r;
}

inline bool is_canonical(const Rational& r) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return r.get_den() > 0 && g == 1;
}

}  // namespace beamplan
