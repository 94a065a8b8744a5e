#include "moduli/qlinalg.hpp"

#include <algorithm>

namespace moduli {

std::vector<size_t> rref(QMatrix& mat) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < mat.cols && row < mat.rows; ++col) {
        size_t p = row;
        while (p < mat.rows && mat.at(p, col) == 0) ++p;
        if (p == mat.rows) continue;
        if (p != row)
            for (size_t c = 0; c < mat.cols; ++c)
                std::swap(mat.at(p, c), mat.at(row, c));
        const Rational inv = 1 / mat.at(row, col);
        for (size_t c = col; c < mat.cols; ++c) mat.at(row, c) *= inv;
        for (size_t r = 0; r < mat.rows; ++r) {
            if (r == row || mat.at(r, col) == 0) continue;
            const Rational factor = mat.at(r, col);
            for (size_t c = col; c < mat.cols; ++c)
                mat.at(r, c) -= factor * mat.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t rank(QMatrix mat) { return rref(mat).size(); }

std::vector<std::vector<Rational>> nullspace(const QMatrix& mat) {
    QMatrix work = mat;
    const std::vector<size_t> pivots = rref(work);
    std::vector<bool> is_pivot(mat.cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (size_t free = 0; free < mat.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(mat.cols);
        v[free] = 1;
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -work.at(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

}
