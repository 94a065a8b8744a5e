#ifndef MODULI_CYCLOTOMIC_HPP
#define MODULI_CYCLOTOMIC_HPP

#include <vector>
#include <string>

#include "moduli/rational.hpp"
#include "moduli/errors.hpp"

namespace moduli {

/*
 * Elements of Q(zeta_m), stored on the power basis 1, z, ..., z^(phi(m)-1)
 * of Q[z]/Phi_m(z), where z stands for the primitive root e^(2*pi*i/m).
 * The coefficient vector always has length exactly phi(m); every operation
 * reduces modulo Phi_m before returning.  m = 1 is plain Q on the basis {1}.
 *
 * Conductors never mix implicitly: arithmetic and comparison between
 * different conductors throw ConductorMismatch, and callers lift explicitly
 * with lift().  A Galois element k (unit mod m) acts by z |-> z^k.
 */

long gcd_long(long a, long b);
long euler_phi(long m);

// Phi_m as a monic integer polynomial, ascending coefficients, degree phi(m).
// Cached per conductor; safe for concurrent lookup.
const std::vector<Rational>& cyclotomic_polynomial(long m);

// z^t reduced mod Phi_m, for 0 <= t < m.  Cached alongside Phi_m.
const std::vector<std::vector<Rational>>& zeta_power_table(long m);

class Cyclo {
public:
    Cyclo() : m_(1), c_(1, Rational(0)) {}
    Cyclo(long m, std::vector<Rational> coeffs);

    static Cyclo zero(long m);
    static Cyclo one(long m);
    static Cyclo from_rational(long m, const Rational& q);
    static Cyclo zeta(long m, long t = 1);   // zeta_m^t, any integer t
    static Cyclo imag_unit(long m);          // zeta_m^(m/4); requires 4 | m

    long conductor() const { return m_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;         // requires is_rational()

    Cyclo operator-() const;
    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo operator/(const Cyclo& o) const;   // throws Error on division by zero
    Cyclo inverse() const;
    Cyclo pow(long e) const;

    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    Cyclo scaled(const Rational& q) const;

    // Galois action z |-> z^k; requires gcd(k, m) = 1.
    Cyclo galois(long k) const;

    // Embed into Q(zeta_m2) via zeta_m |-> zeta_m2^(m2/m); requires m | m2.
    Cyclo lift(long m2) const;

    // Rendering: polynomial in z, descending powers, no zero terms,
    // e.g. "1/2*z^2 - 3", "-z + 1", "0".
    std::string str() const;

private:
    long m_;
    std::vector<Rational> c_;
    void check_same(const Cyclo& o) const;
};

struct GaloisElement {
    long m = 1;
    long k = 1;   // unit mod m; k = 1 is the identity

    bool is_identity() const { return k == 1 || m == 1; }
    GaloisElement compose(const GaloisElement& o) const;   // this after o
    GaloisElement inverse() const;
    bool operator==(const GaloisElement& o) const { return m == o.m && k == o.k; }
};

GaloisElement galois_element(long m, long k);

// All of Gal(Q(zeta_m)/Q) as exponents sorted ascending; length phi(m).
std::vector<GaloisElement> galois_group(long m);

// True iff every element of subgroup fixes a.  Throws Error if subgroup is
// empty or not closed under composition.
bool fixed_field_test(const Cyclo& a, const std::vector<GaloisElement>& subgroup);

} // namespace moduli

#endif
