#include "moduli/corpus.hpp"

namespace moduli {

namespace {

Form linear(int n, long m, std::vector<Cyclo> coeffs) {
    Form f(n, 1, m);
    for (size_t j = 0; j < coeffs.size(); ++j) {
        Expo e(n + 1, 0);
        e[j] = 1;
        f.add_term(e, coeffs[j]);
    }
    return f;
}

} // namespace

Map quartic_map(long m) {
    const Cyclo i = Cyclo::imag_unit(m);
    const Cyclo one = Cyclo::one(m);
    const Cyclo zero = Cyclo::zero(m);
    Form x_minus_iz = linear(2, m, {one, zero, -i});
    Form y_plus_iz = linear(2, m, {zero, one, i});
    Expo z4{0, 0, 4};
    return Map({x_minus_iz.pow(4), y_plus_iz.pow(4), monomial_form(2, m, z4, one)});
}

ProjMatrix swap_matrix(long m) {
    const Cyclo one = Cyclo::one(m);
    const Cyclo zero = Cyclo::zero(m);
    return ProjMatrix(CMatrix(2, {zero, one, zero,
                                  one, zero, zero,
                                  zero, zero, one}));
}

CMatrix quartic_conj_lift(long m) {
    if (m % 6 != 0) throw Error("quartic_conj_lift needs 6 | m");
    const Cyclo z6 = Cyclo::zeta(m, m / 6);
    const Cyclo zero = Cyclo::zero(m);
    return CMatrix(2, {zero, z6, zero,
                       z6, zero, zero,
                       zero, zero, z6});
}

Map cubic_map(long m) {
    const Cyclo i = Cyclo::imag_unit(m);
    const Cyclo one = Cyclo::one(m);
    const Cyclo zero = Cyclo::zero(m);
    Form x_minus_y = linear(2, m, {one, -one, zero});
    Form x_plus_y = linear(2, m, {one, one, zero});
    Expo z3{0, 0, 3};
    return Map({x_minus_y.pow(3).scaled(i), x_plus_y.pow(3), monomial_form(2, m, z3, one)});
}

CMatrix cubic_conj_lift(long m) {
    if (m % 8 != 0) throw Error("cubic_conj_lift needs 8 | m");
    const Cyclo z8 = Cyclo::zeta(m, m / 8);
    const Cyclo zero = Cyclo::zero(m);
    return CMatrix(2, {zero, -z8, zero,
                       z8, zero, zero,
                       zero, zero, -(z8 * z8)});
}

ProjMatrix cubic_stab_element(long m) {
    const Cyclo one = Cyclo::one(m);
    const Cyclo zero = Cyclo::zero(m);
    return ProjMatrix(CMatrix(2, {-one, zero, zero,
                                  zero, -one, zero,
                                  zero, zero, one}));
}

Map odd_power_map(int d, long m) {
    const Cyclo i = Cyclo::imag_unit(m);
    const Cyclo one = Cyclo::one(m);
    Form x_minus_y = linear(1, m, {one, -one});
    Form x_plus_y = linear(1, m, {one, one});
    return Map({x_minus_y.pow(d).scaled(i), x_plus_y.pow(d)});
}

CMatrix inversion_lift(long m) {
    const Cyclo one = Cyclo::one(m);
    const Cyclo zero = Cyclo::zero(m);
    return CMatrix(1, {zero, -one,
                       one, zero});
}

Map twist_phi(long m) {
    // 2x + 5/x as [2*X0^2 + 5*X1^2, X0*X1]
    const Cyclo two = Cyclo::from_rational(m, ratio(2));
    const Cyclo five = Cyclo::from_rational(m, ratio(5));
    const Cyclo one = Cyclo::one(m);
    Form top(1, 2, m);
    top.add_term({2, 0}, two);
    top.add_term({0, 2}, five);
    Form bottom(1, 2, m);
    bottom.add_term({1, 1}, one);
    return Map({top, bottom});
}

Map twist_psi(long m) {
    const Cyclo one = Cyclo::one(m);
    const Cyclo three = Cyclo::from_rational(m, ratio(3));
    Form top(1, 2, m);
    top.add_term({2, 0}, one);
    top.add_term({1, 1}, -three);
    Form bottom(1, 2, m);
    bottom.add_term({1, 1}, three);
    bottom.add_term({0, 2}, -one);
    return Map({top, bottom});
}

Cyclo i_sqrt5(long m) {
    if (m % 20 != 0) throw Error("i_sqrt5 needs 20 | m");
    const long step = m / 5;
    const Cyclo sqrt5 = Cyclo::zeta(m, step) - Cyclo::zeta(m, 2 * step) -
                        Cyclo::zeta(m, 3 * step) + Cyclo::zeta(m, 4 * step);
    return Cyclo::imag_unit(m) * sqrt5;
}

CMatrix twist_conjugator(long m) {
    const Cyclo is5 = i_sqrt5(m);
    const Cyclo one = Cyclo::one(m);
    return CMatrix(1, {is5, -is5,
                       one, one});
}

CMatrix candidate_descent_lift(long m) {
    const Cyclo i = Cyclo::imag_unit(m);
    const Cyclo one = Cyclo::one(m);
    const Cyclo zero = Cyclo::zero(m);
    return CMatrix(2, {one, -i, zero,
                       i, -one, zero,
                       zero, zero, one - i});
}

} // namespace moduli
