#ifndef MODULI_RATIONAL_HPP
#define MODULI_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace moduli {

// Exact rationals are GMP's canonical mpq: gcd(num, den) = 1, den >= 1.
// GMP preserves canonical form under arithmetic; the constructors below
// canonicalize explicitly, which mpq_class(num, den) does not do on its own.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational ratio(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational ratio(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat_pow(const Rational& base, long e) {
    Rational acc = 1;
    Rational b = base;
    long n = e;
    if (n < 0) {
        b = 1 / b;
        n = -n;
    }
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

// "-3", "5/2".  Throws std::invalid_argument on garbage.
inline Rational rat_parse(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rational& q) { return q.get_str(); }

inline int sign(const Rational& q) { return sgn(q); }

} // namespace moduli

#endif
