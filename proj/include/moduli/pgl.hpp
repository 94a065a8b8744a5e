#ifndef MODULI_PGL_HPP
#define MODULI_PGL_HPP

#include <vector>
#include <string>

#include "moduli/cyclotomic.hpp"
#include "moduli/forms.hpp"

namespace moduli {

/*
 * Matrices act on column vectors: f sends the point X to f*X, and the
 * conjugate of phi by f is  phi^f (X) = adj(f) * phi(f*X), canonicalized.
 * Using the adjugate instead of the inverse keeps entries in the base ring
 * and differs from f^(-1) by the projectively invisible scalar det(f).
 *
 * CMatrix is a concrete GL lift: entries as given, no normalization.  The
 * descent routines care about the lift itself (f and zeta*f are different
 * cocycle data), so CMatrix is the type they take.  ProjMatrix fixes the
 * scale: first nonzero entry in row-major order is 1, and det != 0 is
 * enforced at construction.
 */

class CMatrix {
public:
    CMatrix() : n_(0) {}
    CMatrix(int n, std::vector<Cyclo> entries);          // (n+1)^2 entries row-major
    static CMatrix identity(int n, long m);

    int dim() const { return n_; }
    long conductor() const { return m_; }
    const Cyclo& at(int r, int c) const { return e_[r * (n_ + 1) + c]; }
    Cyclo& at(int r, int c) { return e_[r * (n_ + 1) + c]; }

    CMatrix operator*(const CMatrix& o) const;
    CMatrix operator+(const CMatrix& o) const;
    CMatrix operator-(const CMatrix& o) const;
    CMatrix scaled(const Cyclo& c) const;
    bool operator==(const CMatrix& o) const;
    bool operator!=(const CMatrix& o) const { return !(*this == o); }

    Cyclo det() const;
    CMatrix adjugate() const;
    CMatrix inverse() const;                 // literal inverse; throws SingularMatrix
    CMatrix galois(long k) const;
    CMatrix transpose() const;

    bool is_zero() const;
    // a*I for scalar a; returns whether, and the scalar through out.
    bool is_scalar(Cyclo* scalar_out = nullptr) const;
    bool proportional_to(const CMatrix& o) const;

    std::vector<std::vector<Cyclo>> rows() const;
    std::string str() const;

private:
    int n_ = 0;
    long m_ = 1;
    std::vector<Cyclo> e_;
    void check_same(const CMatrix& o) const;
};

class ProjMatrix {
public:
    explicit ProjMatrix(const CMatrix& lift);   // throws SingularMatrix if det = 0

    int dim() const { return rep_.dim(); }
    long conductor() const { return rep_.conductor(); }
    const CMatrix& rep() const { return rep_; }

    ProjMatrix operator*(const ProjMatrix& o) const;
    ProjMatrix inverse() const;               // adjugate, canonicalized
    ProjMatrix galois(long k) const;
    bool operator==(const ProjMatrix& o) const { return rep_ == o.rep_; }
    bool operator!=(const ProjMatrix& o) const { return !(*this == o); }

    std::string str() const { return rep_.str(); }

private:
    CMatrix rep_;
};

ProjMatrix pm_identity(int n, long m);

// adj(f) * phi(f*X), canonicalized.  The CMatrix overload accepts any
// invertible lift; the result is lift-independent.
Map conjugate(const Map& phi, const CMatrix& f);
Map conjugate(const Map& phi, const ProjMatrix& f);

ProjMatrix galois_matrix(const GaloisElement& s, const ProjMatrix& f);

bool is_stabilizer_element(const Map& phi, const ProjMatrix& f);
bool in_conjugating_set(const Map& phi, const Map& psi, const ProjMatrix& f);

} // namespace moduli

#endif
