#include <doctest.h>

#include <moduli/corpus.hpp>
#include <moduli/cycles.hpp>
#include <moduli/errors.hpp>
#include <moduli/groebner.hpp>
#include <moduli/pgl.hpp>

#include <random>

using namespace moduli;

namespace {

Form canon(const Form& f) { return f.scaled(f.leading_coeff().inverse()); }

Map squaring_map() {
    Form f0(1, 2, 1), f1(1, 2, 1);
    f0.add_term({2, 0}, Cyclo::one(1));
    f1.add_term({0, 2}, Cyclo::one(1));
    return Map({f0, f1});
}

}  // namespace

TEST_CASE("iteration of self-maps of the line") {
    const Map sq = squaring_map();
    CHECK(iterate(sq, 1) == sq);
    const Map sq2 = iterate(sq, 2);
    CHECK(sq2.degree() == 4);
    Form g0(1, 4, 1), g1(1, 4, 1);
    g0.add_term({4, 0}, Cyclo::one(1));
    g1.add_term({0, 4}, Cyclo::one(1));
    CHECK(sq2 == Map({g0, g1}));

    const Map a3 = odd_power_map(3);
    CHECK(iterate(a3, 2).degree() == 9);
    CHECK(iterate(a3, 3).degree() == 27);
    CHECK_THROWS_AS(iterate(a3, 5, 100), ResourceLimit);
    CHECK_THROWS_AS(iterate(a3, 0), Error);
}

TEST_CASE("fixed point form of the squaring map") {
    const auto f = fixed_point_form(squaring_map(), 1);
    CHECK(f.n == 1);
    CHECK(f.d == 2);
    CHECK(f.form.degree() == 3);
    CHECK(f.point_count() == 3);
    CHECK(f.rational());

    Form expected(1, 3, 1);
    expected.add_term({2, 1}, Cyclo::one(1));
    expected.add_term({1, 2}, -Cyclo::one(1));
    CHECK(f.form == expected);

    // fixed points of z^2 are 0, 1 and infinity
    const auto roots = rational_roots(f.form, 5);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].value == 0);
    CHECK(roots[0].multiplicity == 1);
    CHECK(!roots[0].at_infinity);
    CHECK(roots[1].value == 1);
    CHECK(roots[1].multiplicity == 1);
    CHECK(roots[2].at_infinity);
    CHECK(roots[2].multiplicity == 1);

    CHECK(f.report() ==
          "period form: n = 1, d = 2, degree = 3, D_n = 3, rational coefficients = "
          "yes\n"
          "map: [X0^2, X1^2]\n"
          "form: X0^2*X1 - X0*X1^2\n");
}

TEST_CASE("fixed point form of the odd cubic map") {
    // expanding X1*i*(X0-X1)^3 - X0*(X0+X1)^3 by hand and scaling the
    // X0^4 coefficient to 1 gives
    //   X0^4 + (3-i) X0^3 X1 + (3+3i) X0^2 X1^2 + (1-3i) X0 X1^3 + i X1^4
    const long m = 4;
    const Cyclo i = Cyclo::imag_unit(m), one = Cyclo::one(m);
    Form expected(1, 4, m);
    expected.add_term({4, 0}, one);
    expected.add_term({3, 1}, Cyclo::from_rational(m, 3) - i);
    expected.add_term({2, 2}, Cyclo::from_rational(m, 3) + i.scaled(3));
    expected.add_term({1, 3}, one - i.scaled(3));
    expected.add_term({0, 4}, i);

    const auto f = fixed_point_form(odd_power_map(3), 1);
    CHECK(f.form == expected);
    CHECK(f.form.degree() == 4);
    CHECK(f.point_count() == 4);
    CHECK(!f.rational());

    // the rationality bit agrees with the Galois-fixed-field test
    // coefficient by coefficient
    const auto group = galois_group(m);
    for (const auto& [mono, coeff] : f.form.terms())
        CHECK(fixed_field_test(coeff, group) == coeff.is_rational());
}

TEST_CASE("fixed point forms of the twisted quadratic pair") {
    // psi has the fully rational fixed locus {0, -1, infinity}
    const auto fpsi = fixed_point_form(twist_psi(), 1);
    Form epsi(1, 3, 20);
    epsi.add_term({2, 1}, Cyclo::one(20));
    epsi.add_term({1, 2}, Cyclo::one(20));
    CHECK(fpsi.form == epsi);
    CHECK(fpsi.rational());
    const auto rpsi = rational_roots(fpsi.form, 5);
    REQUIRE(rpsi.size() == 3);
    CHECK(rpsi[0].value == -1);
    CHECK(rpsi[1].value == 0);
    CHECK(rpsi[2].at_infinity);

    // phi splits off only the point at infinity over Q
    const auto fphi = fixed_point_form(twist_phi(), 1);
    Form ephi(1, 3, 20);
    ephi.add_term({2, 1}, Cyclo::one(20));
    ephi.add_term({0, 3}, Cyclo::from_rational(20, 5));
    CHECK(fphi.form == ephi);
    CHECK(fphi.rational());
    const auto rphi = rational_roots(fphi.form, 20);
    REQUIRE(rphi.size() == 1);
    CHECK(rphi[0].at_infinity);
    CHECK(rphi[0].multiplicity == 1);
}

TEST_CASE("form degree matches the cycle degree") {
    for (long n = 1; n <= 3; ++n) CHECK(degree_consistency(squaring_map(), n));
    for (long n = 1; n <= 2; ++n) CHECK(degree_consistency(odd_power_map(3), n));
    for (long n = 1; n <= 2; ++n) CHECK(degree_consistency(twist_phi(), n));
}

TEST_CASE("degenerate maps have no fixed point form") {
    Form f0(1, 1, 1), f1(1, 1, 1);
    f0.add_term({1, 0}, Cyclo::one(1));
    f1.add_term({0, 1}, Cyclo::one(1));
    CHECK_THROWS_AS(fixed_point_form(Map({f0, f1}), 1), Error);

    // z -> z as a degree-2 rational map: [X0*X1, X1^2]
    Form g0(1, 2, 1), g1(1, 2, 1);
    g0.add_term({1, 1}, Cyclo::one(1));
    g1.add_term({0, 2}, Cyclo::one(1));
    CHECK_THROWS_AS(fixed_point_form(Map({g0, g1}), 1), Error);
}

TEST_CASE("first period form divides the higher ones") {
    struct Case {
        Map phi;
        long m;
    };
    const std::vector<Case> corpus = {{squaring_map(), 1},
                                      {odd_power_map(3), 4},
                                      {twist_phi(), 20},
                                      {twist_psi(), 20}};
    for (const auto& [phi, m] : corpus) {
        const auto ring = make_ring({"X0", "X1"}, TermOrder::GrLex, m);
        const Poly base = poly_from_form(ring, fixed_point_form(phi, 1).form);
        for (long n = 2; n <= 3; ++n) {
            const Poly higher = poly_from_form(ring, fixed_point_form(phi, n).form);
            CHECK(normal_form(higher, {base}).is_zero());
        }
    }

    // second iterate of z^2: the extra factor carries the 2-cycle of the
    // primitive cube roots of unity, so only 0, 1, infinity are rational
    const auto f2 = fixed_point_form(squaring_map(), 2);
    CHECK(f2.form.degree() == 5);
    const auto roots = rational_roots(f2.form, 5);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].value == 0);
    CHECK(roots[1].value == 1);
    CHECK(roots[2].at_infinity);
}

namespace {

Map random_p1_map(std::mt19937_64& rng, long m, int d) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> imag(0, 3);
    for (;;) {
        Form f0(1, d, m), f1(1, d, m);
        for (int k = 0; k <= d; ++k) {
            Cyclo a = Cyclo::from_rational(m, coeff(rng));
            Cyclo b = Cyclo::from_rational(m, coeff(rng));
            if (imag(rng) == 0) a = a + Cyclo::imag_unit(m).scaled(coeff(rng));
            if (imag(rng) == 0) b = b + Cyclo::imag_unit(m).scaled(coeff(rng));
            f0.add_term({d - k, k}, a);
            f1.add_term({d - k, k}, b);
        }
        if (f0.is_zero() && f1.is_zero()) continue;
        const Map phi({f0, f1});
        // skip maps whose fixed point form vanishes
        const Form probe =
            monomial_form(1, m, {0, 1}, Cyclo::one(m)) * phi.coords()[0] -
            monomial_form(1, m, {1, 0}, Cyclo::one(m)) * phi.coords()[1];
        if (probe.is_zero()) continue;
        return phi;
    }
}

CMatrix random_invertible_2x2(std::mt19937_64& rng, long m) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> imag(0, 4);
    for (;;) {
        CMatrix f = CMatrix::identity(1, m);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                Cyclo v = Cyclo::from_rational(m, coeff(rng));
                if (imag(rng) == 0) v = v + Cyclo::imag_unit(m).scaled(coeff(rng));
                f.at(r, c) = v;
            }
        if (!f.det().is_zero()) return f;
    }
}

}  // namespace

TEST_CASE("conjugation moves the period form by linear substitution") {
    // the fixed points of the conjugate are the preimages of the fixed
    // points, so the two forms agree after substituting f and rescaling
    std::mt19937_64 rng(0xC0FFEE ^ 0x61);
    const long m = 4;
    int done = 0;
    for (int t = 0; t < 220; ++t) {
        const Map phi = random_p1_map(rng, m, 2);
        const CMatrix f = random_invertible_2x2(rng, m);
        const long n = 1 + (t % 2);
        Map conj(phi);
        try {
            conj = conjugate(phi, f);
        } catch (const Error&) {
            continue;
        }
        FixedPointForm lhs{0, 0, Form(1, 1, m), ""};
        FixedPointForm rhs{0, 0, Form(1, 1, m), ""};
        try {
            lhs = fixed_point_form(conj, n);
            rhs = fixed_point_form(phi, n);
        } catch (const Error&) {
            continue;  // an iterate may degenerate to the identity
        }
        CHECK(lhs.form == canon(rhs.form.substitute_linear(f.rows())));
        ++done;
    }
    CHECK(done >= 200);
}

TEST_CASE("Galois commutes with the period form construction") {
    std::mt19937_64 rng(0xC0FFEE ^ 0x62);
    const long m = 4;
    int done = 0;
    for (int t = 0; t < 220; ++t) {
        const Map phi = random_p1_map(rng, m, 2);
        const long k = (t % 2) ? 3 : 1;
        const long n = 1 + (t % 2);
        try {
            const Form lhs = fixed_point_form(galois_map(k, phi), n).form;
            const Form rhs = canon(fixed_point_form(phi, n).form.galois(k));
            CHECK(lhs == rhs);
            ++done;
        } catch (const Error&) {
            continue;
        }
    }
    CHECK(done >= 200);
}

TEST_CASE("cocycle data moves the period form as it moves the map") {
    // conjugating the odd cubic by the inversion matrix realizes complex
    // conjugation, and the period form sees the same relation
    const Map a3 = odd_power_map(3);
    const CMatrix j = inversion_lift();
    REQUIRE(conjugate(a3, j) == galois_map(3, a3));
    const Form form = fixed_point_form(a3, 1).form;
    CHECK(canon(form.galois(3)) == canon(form.substitute_linear(j.rows())));

    // the twisted pair: psi = phi^g forces form_psi = form_phi(g X)
    const Form fphi = fixed_point_form(twist_phi(), 1).form;
    const Form fpsi = fixed_point_form(twist_psi(), 1).form;
    CHECK(fpsi == canon(fphi.substitute_linear(twist_conjugator().rows())));
}
