#include <doctest.h>

#include <random>

#include "moduli/forms.hpp"
#include "moduli/corpus.hpp"
#include "moduli/errors.hpp"

using namespace moduli;

namespace {

Form linear_form(int n, long m, std::vector<Cyclo> coeffs) {
    Form f(n, 1, m);
    for (size_t j = 0; j < coeffs.size(); ++j) {
        Expo e(n + 1, 0);
        e[j] = 1;
        f.add_term(e, coeffs[j]);
    }
    return f;
}

} // namespace

TEST_CASE("binomial expansion against hand-computed coefficients") {
    // (X0 - i*X2)^4 = X0^4 - 4i X0^3 X2 - 6 X0^2 X2^2 + 4i X0 X2^3 + X2^4
    const long m = 4;
    const Cyclo i = Cyclo::imag_unit(m);
    const Cyclo one = Cyclo::one(m);
    const Form f = linear_form(2, m, {one, Cyclo::zero(m), -i}).pow(4);
    CHECK(f.degree() == 4);
    CHECK(f.terms().size() == 5);
    CHECK(f.coeff({4, 0, 0}) == one);
    CHECK(f.coeff({3, 0, 1}) == -i.scaled(ratio(4)));
    CHECK(f.coeff({2, 0, 2}) == Cyclo::from_rational(m, ratio(-6)));
    CHECK(f.coeff({1, 0, 3}) == i.scaled(ratio(4)));
    CHECK(f.coeff({0, 0, 4}) == one);
    CHECK(f.coeff({2, 1, 1}).is_zero());
}

TEST_CASE("graded lex ordering drives term iteration and rendering") {
    const long m = 4;
    Form f(2, 2, m);
    f.add_term({0, 0, 2}, Cyclo::one(m));
    f.add_term({1, 1, 0}, Cyclo::from_rational(m, ratio(-3)));
    f.add_term({2, 0, 0}, Cyclo::from_rational(m, ratio(1, 2)));
    CHECK(f.str() == "1/2*X0^2 - 3*X0*X1 + X2^2");
    const Form g = f.scaled(Cyclo::imag_unit(m));
    CHECK(g.str() == "(1/2*z)*X0^2 + (-3*z)*X0*X1 + (z)*X2^2");
}

TEST_CASE("substitution composes multiplicatively in degree") {
    const long m = 4;
    const Cyclo one = Cyclo::one(m);
    Form f(1, 2, m);
    f.add_term({2, 0}, one);
    f.add_term({0, 2}, one);
    // f(X0^2, X1^2) = X0^4 + X1^4
    Form x2 = monomial_form(1, m, {2, 0}, one);
    Form y2 = monomial_form(1, m, {0, 2}, one);
    const Form g = f.substitute({x2, y2});
    CHECK(g.degree() == 4);
    CHECK(g.coeff({4, 0}) == one);
    CHECK(g.coeff({0, 4}) == one);
    CHECK(g.terms().size() == 2);
}

TEST_CASE("map canonicalization scales the globally first coefficient to 1") {
    const long m = 12;
    const Map phi = quartic_map(m);
    // coordinate 0 leads with X0^4; canonical coefficient is exactly 1
    CHECK(phi.coords()[0].leading_coeff() == Cyclo::one(m));

    // scaling every coordinate by a unit does not change the map
    const Cyclo unit = Cyclo::zeta(m, 7).scaled(ratio(-3, 5));
    std::vector<Form> scaled;
    for (const Form& f : phi.coords()) scaled.push_back(f.scaled(unit));
    CHECK(Map(scaled) == phi);
}

TEST_CASE("proj_equal is an equivalence insensitive to random unit scaling") {
    std::mt19937_64 rng(0xC0FFEE ^ 7);
    const long m = 12;
    const Map phi = quartic_map(m);
    std::uniform_int_distribution<long> zexp(0, 11);
    std::uniform_int_distribution<long> num(1, 9);
    std::uniform_int_distribution<long> den(1, 9);
    int cases = 0;
    for (int iter = 0; iter < 200; ++iter) {
        Cyclo unit = Cyclo::zeta(m, zexp(rng)).scaled(ratio(num(rng), den(rng)));
        std::vector<Form> scaled;
        for (const Form& f : phi.coords()) scaled.push_back(f.scaled(unit));
        const Map reconstructed = Map(scaled);
        CHECK(reconstructed == phi);
        CHECK(phi == reconstructed);
        ++cases;
    }
    CHECK(cases == 200);
    CHECK_FALSE(phi == galois_map(11, phi));
}

TEST_CASE("galois image of the quartic map") {
    const long m = 12;
    const Map phi = quartic_map(m);
    const Map bar = galois_map(11, phi);
    // [(X0 + i X2)^4, (X1 - i X2)^4, X2^4]
    const Cyclo i = Cyclo::imag_unit(m);
    const Cyclo one = Cyclo::one(m);
    const Map expected({linear_form(2, m, {one, Cyclo::zero(m), i}).pow(4),
                        linear_form(2, m, {Cyclo::zero(m), one, -i}).pow(4),
                        monomial_form(2, m, {0, 0, 4}, one)});
    CHECK(bar == expected);
    // galois acts through the group law
    CHECK(galois_map(11, bar) == phi);
    CHECK(galois_map(galois_element(m, 5), galois_map(galois_element(m, 5), phi)) == phi);
}

TEST_CASE("composition degree and a squared P^1 example") {
    const long m = 4;
    const Map alpha = odd_power_map(3, m);
    const Map alpha2 = compose_map(alpha, alpha);
    CHECK(alpha2.degree() == 9);
    CHECK(alpha2.dim() == 1);
    const Map alpha3 = compose_map(alpha2, alpha);
    CHECK(alpha3.degree() == 27);
}

TEST_CASE("map constructor rejects malformed input") {
    const long m = 4;
    const Cyclo one = Cyclo::one(m);
    Form z2 = monomial_form(2, m, {0, 0, 2}, one);
    Form zero2(2, 2, m);
    CHECK_THROWS_AS(Map({zero2, zero2, zero2}), Error);
    Form deg3 = monomial_form(2, m, {3, 0, 0}, one);
    CHECK_THROWS_AS(Map({z2, z2, deg3}), DimensionMismatch);
    CHECK_THROWS_AS(Form(2, 2, m).add_term({1, 0, 0}, one), Error);
}

TEST_CASE("sylvester resultant on P^1 pairs") {
    const long m = 20;
    // canonical coordinates are [X0^2 + 5/2 X1^2, 1/2 X0X1]; hand value 5/8
    CHECK(p1_resultant(twist_phi(m)) == Cyclo::from_rational(m, ratio(5, 8)));
    // power map [X0^2, X1^2] has resultant 1
    const Cyclo one = Cyclo::one(4);
    const Map sq({monomial_form(1, 4, {2, 0}, one), monomial_form(1, 4, {0, 2}, one)});
    CHECK(p1_resultant(sq) == Cyclo::one(4));
    // shared factor forces resultant zero
    Form f(1, 2, 4);
    f.add_term({2, 0}, one);
    f.add_term({1, 1}, one);   // X0(X0 + X1)
    Form g(1, 2, 4);
    g.add_term({1, 1}, one);
    g.add_term({0, 2}, one);   // X1(X0 + X1)
    CHECK(p1_resultant(Map({f, g})).is_zero());
}

TEST_CASE("defined_over_rationals looks at canonical coefficients") {
    const long m = 12;
    CHECK_FALSE(quartic_map(m).defined_over_rationals());
    // i * (rational map) canonicalizes back to rational coefficients
    const Cyclo i = Cyclo::imag_unit(m);
    const Cyclo one = Cyclo::one(m);
    Form top(1, 2, m), bot(1, 2, m);
    top.add_term({2, 0}, i);
    top.add_term({0, 2}, i.scaled(ratio(5)));
    bot.add_term({1, 1}, i);
    const Map q({top, bot});
    CHECK(q.defined_over_rationals());
    (void)one;
}
