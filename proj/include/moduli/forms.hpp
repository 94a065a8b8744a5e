#ifndef MODULI_FORMS_HPP
#define MODULI_FORMS_HPP

#include <map>
#include <vector>
#include <string>

#include "moduli/cyclotomic.hpp"
#include "moduli/mono.hpp"

namespace moduli {

struct SolverBudget;   // groebner.hpp

/*
 * Sparse homogeneous forms in X0..XN over Q(zeta_m), and (N+1)-tuples of
 * them as self-maps of P^N.  A HomogeneousMap is stored canonically: the
 * globally first nonzero coefficient (coordinate-major, terms in descending
 * graded lex within each coordinate) is scaled to 1, so structural equality
 * is projective equality.
 */

class Form {
public:
    Form(int n, int d, long m);   // zero form of degree d in X0..Xn

    int dim() const { return n_; }
    int degree() const { return d_; }
    long conductor() const { return m_; }

    void add_term(const Expo& mono, const Cyclo& coeff);
    Cyclo coeff(const Expo& mono) const;
    const std::map<Expo, Cyclo, GrlexDescending>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    Form operator+(const Form& o) const;
    Form operator-(const Form& o) const;
    Form operator*(const Form& o) const;      // degrees add
    Form operator-() const;
    Form scaled(const Cyclo& c) const;
    bool operator==(const Form& o) const;
    bool operator!=(const Form& o) const { return !(*this == o); }

    Form pow(int e) const;

    // F(args): substitute X_i := args[i]; all args share a degree e and a
    // variable count, and the result is homogeneous of degree d*e.
    Form substitute(const std::vector<Form>& args) const;

    // F(M x) for a square matrix of scalars acting on column vectors.
    Form substitute_linear(const std::vector<std::vector<Cyclo>>& mat) const;

    Form galois(long k) const;
    Cyclo eval(const std::vector<Cyclo>& point) const;

    // First nonzero coefficient in descending graded lex; form must be nonzero.
    const Cyclo& leading_coeff() const;

    std::string str() const;

private:
    int n_;
    int d_;
    long m_;
    std::map<Expo, Cyclo, GrlexDescending> terms_;
    void check_compatible(const Form& o) const;
};

Form monomial_form(int n, long m, const Expo& mono, const Cyclo& coeff);

class Map {
public:
    // Throws if coords disagree in degree/dimension/conductor, if d = 0, or
    // if every coordinate is zero.  Canonicalizes.
    explicit Map(std::vector<Form> coords);

    int dim() const { return n_; }
    int degree() const { return d_; }
    long conductor() const { return m_; }
    const std::vector<Form>& coords() const { return coords_; }

    bool operator==(const Map& o) const;   // projective equality
    bool operator!=(const Map& o) const { return !(*this == o); }

    bool defined_over_rationals() const;   // all canonical coefficients in Q

    std::string str() const;

private:
    int n_;
    int d_;
    long m_;
    std::vector<Form> coords_;
};

inline bool proj_equal(const Map& a, const Map& b) { return a == b; }

Map galois_map(long k, const Map& phi);
Map galois_map(const GaloisElement& s, const Map& phi);

// phi after psi; degree multiplies.
Map compose_map(const Map& outer, const Map& inner);

// Common vanishing locus test: true iff the coordinate ideal contains a pure
// power of every variable (base locus empty over the algebraic closure).
bool is_morphism(const Map& phi, const SolverBudget& budget);
bool is_morphism(const Map& phi);

// Sylvester resultant of the two coordinates of a P^1 map; independent
// cross-check for is_morphism in dimension one (nonzero iff morphism).
Cyclo p1_resultant(const Map& phi);

} // namespace moduli

#endif
