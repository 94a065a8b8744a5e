#include <doctest.h>

#include <random>

#include "moduli/pgl.hpp"
#include "moduli/corpus.hpp"
#include "moduli/errors.hpp"

using namespace moduli;

namespace {

// random invertible matrices: permutation support with unit scalars, the
// shape every corpus conjugator has
CMatrix random_monomial_matrix(std::mt19937_64& rng, int n, long m) {
    std::vector<int> perm(n + 1);
    for (int i = 0; i <= n; ++i) perm[i] = i;
    for (int i = n; i > 0; --i) {
        std::uniform_int_distribution<int> pick(0, i);
        std::swap(perm[i], perm[pick(rng)]);
    }
    std::uniform_int_distribution<long> zexp(0, m - 1);
    std::uniform_int_distribution<long> num(1, 5);
    std::vector<Cyclo> e(static_cast<size_t>(n + 1) * (n + 1), Cyclo::zero(m));
    for (int i = 0; i <= n; ++i)
        e[i * (n + 1) + perm[i]] = Cyclo::zeta(m, zexp(rng)).scaled(ratio(num(rng)));
    return CMatrix(n, std::move(e));
}

} // namespace

TEST_CASE("adjugate inverse and determinant basics") {
    const long m = 12;
    const CMatrix f = quartic_conj_lift(m);
    const Cyclo z6 = Cyclo::zeta(m, 2);
    // det(z6 * swap) = -z6^3 = 1
    CHECK(f.det() == Cyclo::one(m));
    CHECK(f * f.inverse() == CMatrix::identity(2, m));
    CHECK(f.adjugate() * f == CMatrix::identity(2, m).scaled(f.det()));
    (void)z6;

    const ProjMatrix s = swap_matrix(m);
    CHECK(s * s == pm_identity(2, m));
    CHECK(s.inverse() == s);
}

TEST_CASE("projective matrices canonicalize their scale") {
    const long m = 12;
    // zeta_6 * swap and swap are the same projective point
    CHECK(ProjMatrix(quartic_conj_lift(m)) == swap_matrix(m));
    const CMatrix j = inversion_lift(4);
    // [[0,-1],[1,0]] canonicalizes to [[0,1],[-1,0]]
    const ProjMatrix pj(j);
    CHECK(pj.rep().at(0, 1) == Cyclo::one(4));
    CHECK(pj.rep().at(1, 0) == -Cyclo::one(4));
    CHECK_THROWS_AS(ProjMatrix(CMatrix(1, {Cyclo::one(4), Cyclo::one(4),
                                           Cyclo::one(4), Cyclo::one(4)})),
                    SingularMatrix);
}

TEST_CASE("conjugating the quartic map by the swap gives its galois image") {
    const long m = 12;
    const Map phi = quartic_map(m);
    const Map target = galois_map(11, phi);
    CHECK(conjugate(phi, swap_matrix(m)) == target);
    // the scaled lift gives the same projective result
    CHECK(conjugate(phi, quartic_conj_lift(m)) == target);
    // and the identity fixes the map
    CHECK(conjugate(phi, pm_identity(2, m)) == phi);
}

TEST_CASE("conjugating the cubic map by its eighth-root lift") {
    const long m = 8;
    const Map phi = cubic_map(m);
    CHECK(conjugate(phi, cubic_conj_lift(m)) == galois_map(m - 1, phi));
}

TEST_CASE("order-two stabilizer element of the cubic map") {
    const long m = 8;
    const Map phi = cubic_map(m);
    const ProjMatrix g2 = cubic_stab_element(m);
    CHECK(is_stabilizer_element(phi, g2));
    CHECK(g2 * g2 == pm_identity(2, m));
    // the swap is NOT a stabilizer element of the quartic map
    CHECK_FALSE(is_stabilizer_element(quartic_map(12), swap_matrix(12)));
}

TEST_CASE("odd power maps conjugated by inversion") {
    for (int d : {3, 5, 7}) {
        const Map alpha = odd_power_map(d, 4);
        CHECK(conjugate(alpha, inversion_lift(4)) == galois_map(3, alpha));
    }
    // even degree breaks the identity
    const Map alpha2 = odd_power_map(2, 4);
    CHECK_FALSE(conjugate(alpha2, inversion_lift(4)) == galois_map(3, alpha2));
}

TEST_CASE("twist pair is conjugate over the larger field") {
    const long m = 20;
    const Map phi = twist_phi(m);
    const Map psi = twist_psi(m);
    const ProjMatrix f(twist_conjugator(m));
    CHECK(in_conjugating_set(phi, psi, f));
    CHECK_FALSE(in_conjugating_set(phi, phi, f));
}

TEST_CASE("conjugation is a right action") {
    std::mt19937_64 rng(0xC0FFEE ^ 11);
    const long m = 12;
    const Map phi = quartic_map(m);
    for (int iter = 0; iter < 100; ++iter) {
        const CMatrix f = random_monomial_matrix(rng, 2, m);
        const CMatrix g = random_monomial_matrix(rng, 2, m);
        CHECK(conjugate(phi, f * g) == conjugate(conjugate(phi, f), g));
    }
}

TEST_CASE("conjugation commutes with the galois action") {
    std::mt19937_64 rng(0xC0FFEE ^ 13);
    const long m = 12;
    const Map phi = quartic_map(m);
    const auto group = galois_group(m);
    for (int iter = 0; iter < 100; ++iter) {
        const CMatrix f = random_monomial_matrix(rng, 2, m);
        const GaloisElement s = group[iter % group.size()];
        CHECK(galois_map(s, conjugate(phi, f)) ==
              conjugate(galois_map(s, phi), f.galois(s.k)));
    }
}

TEST_CASE("conjugation is insensitive to scaling the matrix") {
    std::mt19937_64 rng(0xC0FFEE ^ 15);
    const long m = 12;
    const Map phi = quartic_map(m);
    std::uniform_int_distribution<long> zexp(0, m - 1);
    std::uniform_int_distribution<long> num(1, 7);
    for (int iter = 0; iter < 100; ++iter) {
        const CMatrix f = random_monomial_matrix(rng, 2, m);
        const Cyclo unit = Cyclo::zeta(m, zexp(rng)).scaled(ratio(num(rng)));
        CHECK(conjugate(phi, f) == conjugate(phi, f.scaled(unit)));
    }
}

TEST_CASE("matrix rendering is deterministic") {
    CHECK(swap_matrix(12).str() == "[[0, 1, 0], [1, 0, 0], [0, 0, 1]]");
    CHECK(inversion_lift(4).str() == "[[0, -1], [1, 0]]");
}
