#ifndef MODULI_QLINALG_HPP
#define MODULI_QLINALG_HPP

#include <vector>

#include "moduli/rational.hpp"

namespace moduli {

// Dense exact linear algebra over Q, enough for the semilinear descent
// systems: reduced row echelon form and kernel bases.
struct QMatrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<Rational> a;  // row-major

    QMatrix() = default;
    QMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

    Rational& at(size_t r, size_t c) { return a[r * cols + c]; }
    const Rational& at(size_t r, size_t c) const { return a[r * cols + c]; }
};

// Gauss-Jordan in place; returns the pivot columns in ascending order.
std::vector<size_t> rref(QMatrix& mat);

size_t rank(QMatrix mat);

// Basis of {x : mat x = 0}.  One vector per free column, that free
// coordinate set to 1, in ascending column order.
std::vector<std::vector<Rational>> nullspace(const QMatrix& mat);

}

#endif
