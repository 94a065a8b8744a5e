#ifndef MODULI_POLY_HPP
#define MODULI_POLY_HPP

#include <memory>
#include <vector>
#include <string>

#include "moduli/cyclotomic.hpp"
#include "moduli/mono.hpp"

namespace moduli {

/*
 * Sparse multivariate polynomials over Q(zeta_m) for the solver.  A ring
 * fixes the variable list, the term order, and the coefficient conductor;
 * polynomials keep their terms sorted descending in the ring order, so the
 * leading term is terms().front().
 */

enum class TermOrder { GrLex, Lex, Block };

struct PolyRing {
    std::vector<std::string> vars;
    TermOrder order = TermOrder::GrLex;
    size_t block_split = 0;     // meaningful for Block: size of the leading block
    long m = 1;

    size_t nvars() const { return vars.size(); }
    int cmp(const Expo& a, const Expo& b) const;
    bool same(const PolyRing& o) const;
    int var_index(const std::string& name) const;   // -1 if absent
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> vars, TermOrder order, long m,
                  size_t block_split = 0);

struct Term {
    Expo mono;
    Cyclo coeff;
    bool operator==(const Term& o) const { return mono == o.mono && coeff == o.coeff; }
};

class Poly {
public:
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly constant(RingPtr ring, const Cyclo& c);
    static Poly variable(RingPtr ring, size_t index);
    // sorts, merges duplicates, drops zeros
    static Poly from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    const Term& leading() const;
    const Expo& leading_mono() const { return leading().mono; }
    const Cyclo& leading_coeff() const { return leading().coeff; }
    int degree() const;    // total degree, -1 for zero

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const Cyclo& c) const;
    Poly mul_term(const Expo& mono, const Cyclo& coeff) const;
    Poly pow(int e) const;
    Poly monic() const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // variable := rational constant; same ring, exponent folded away
    Poly substitute_rational(size_t var, const Rational& value) const;
    int degree_in(size_t var) const;

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Term> t_;
    void check_ring(const Poly& o) const;
};

class Form;

// Embed a homogeneous form into a polynomial ring, sending form variable j
// to ring variable var_offset + j.  Conductors must agree.
Poly poly_from_form(const RingPtr& ring, const Form& f, size_t var_offset = 0);

} // namespace moduli

#endif
