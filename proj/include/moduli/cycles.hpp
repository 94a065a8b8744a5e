#ifndef MODULI_CYCLES_HPP
#define MODULI_CYCLES_HPP

#include <string>
#include <vector>

#include "moduli/criterion.hpp"
#include "moduli/forms.hpp"

namespace moduli {

// n-fold self-composition of an endomorphism of P^1.  Degree grows as d^n;
// max_degree caps the blowup before each composition step.
Map iterate(const Map& phi, long n, long max_degree = 100000);

/*
 * The binary form X1*F0 - X0*F1 for F = phi^n, whose projective roots
 * with multiplicity are the points of period dividing n.  Stored with
 * leading coefficient 1; degree is d^n + 1, the n-th cycle degree on P^1.
 */
struct FixedPointForm {
    long n;
    long d;              // degree of the source map
    Form form;
    std::string source;  // rendering of the source map

    Integer point_count() const { return degree_Dn(d, 1, n); }
    bool rational() const;  // every coefficient fixed by the full Galois group
    std::string report() const;
};

FixedPointForm fixed_point_form(const Map& phi, long n, long max_degree = 100000);

// degree of the period-n form == 1 + d^n, checked through the integer side.
bool degree_consistency(const Map& phi, long n);

// A projective rational root of a binary form: [p : q] rendered as the
// value p/q, or the point at infinity [1 : 0].
struct RationalRoot {
    Rational value;
    bool at_infinity = false;
    int multiplicity = 0;
};

// Exhaustive search over candidates [p : q] with gcd(p, q) = 1, q >= 1,
// |p| <= height, q <= height, plus infinity.  Multiplicity by repeated
// exact division.  Finite roots ascending, infinity last.
std::vector<RationalRoot> rational_roots(const Form& binary_form, long height);

}

#endif
