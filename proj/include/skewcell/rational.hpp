#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace skewcell {

// All arithmetic in this project is exact.  Rational coefficients are GMP
// rationals; there is no floating point anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

// Canonical text form "p/q"; integers render without the "/q" part.
inline std::string rat_str(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rational rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational q(s);
    q.canonicalize();
    return q;
}

inline Integer int_pow(long base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), Integer(base).get_mpz_t(), e);
    return r;
}

inline Rational rat_pow(const Rational& base, unsigned long e) {
    Rational r = 1;
    for (unsigned long i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace skewcell
