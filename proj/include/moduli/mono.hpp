#ifndef MODULI_MONO_HPP
#define MODULI_MONO_HPP

#include <vector>
#include <string>

namespace moduli {

// Exponent vectors, shared by homogeneous forms (variables X0..XN) and the
// polynomial solver (arbitrary variable lists).  Comparators return the
// sign of a - b in the named order.  Graded lex is the one global order for
// forms: total degree first, then lex with the earlier variable larger.
using Expo = std::vector<int>;

inline int total_degree(const Expo& a) {
    int d = 0;
    for (int e : a) d += e;
    return d;
}

inline int cmp_lex(const Expo& a, const Expo& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
}

inline int cmp_grlex(const Expo& a, const Expo& b) {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db ? 1 : -1;
    return cmp_lex(a, b);
}

// Product order for elimination: graded lex on the first `split` variables,
// ties broken by graded lex on the rest.  Any monomial touching the first
// block beats every monomial free of it.
inline int cmp_block(const Expo& a, const Expo& b, size_t split) {
    int da = 0, db = 0;
    for (size_t i = 0; i < split; ++i) { da += a[i]; db += b[i]; }
    if (da != db) return da > db ? 1 : -1;
    for (size_t i = 0; i < split; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    Expo ta(a.begin() + split, a.end());
    Expo tb(b.begin() + split, b.end());
    return cmp_grlex(ta, tb);
}

inline bool expo_divides(const Expo& a, const Expo& b) {   // a | b
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Expo expo_mul(const Expo& a, const Expo& b) {
    Expo r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline Expo expo_div(const Expo& a, const Expo& b) {   // a / b, assumes b | a
    Expo r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline Expo expo_lcm(const Expo& a, const Expo& b) {
    Expo r = a;
    for (size_t i = 0; i < r.size(); ++i)
        if (b[i] > r[i]) r[i] = b[i];
    return r;
}

inline bool expo_coprime(const Expo& a, const Expo& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

// Comparator for std::map so iteration runs in descending graded lex.
struct GrlexDescending {
    bool operator()(const Expo& a, const Expo& b) const { return cmp_grlex(a, b) > 0; }
};

} // namespace moduli

#endif
