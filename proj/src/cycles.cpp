#include "moduli/cycles.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "moduli/errors.hpp"

namespace moduli {

Map iterate(const Map& phi, long n, long max_degree) {
    if (phi.dim() != 1) throw DimensionMismatch("iterate: map must act on P^1");
    if (n < 1) throw Error("iterate: iterate count must be positive");
    Map result = phi;
    for (long k = 1; k < n; ++k) {
        const long next = static_cast<long>(result.degree()) * phi.degree();
        if (next > max_degree)
            throw ResourceLimit("iterate: degree " + std::to_string(next) +
                                " exceeds budget " + std::to_string(max_degree));
        result = compose_map(phi, result);
    }
    return result;
}

FixedPointForm fixed_point_form(const Map& phi, long n, long max_degree) {
    const Map it = iterate(phi, n, max_degree);
    const long m = phi.conductor();
    const Form x0 = monomial_form(1, m, {1, 0}, Cyclo::one(m));
    const Form x1 = monomial_form(1, m, {0, 1}, Cyclo::one(m));
    Form f = x1 * it.coords()[0] - x0 * it.coords()[1];
    if (f.is_zero())
        throw Error("fixed_point_form: form vanishes identically (the iterate acts as "
                    "the identity on P^1)");
    f = f.scaled(f.leading_coeff().inverse());
    return FixedPointForm{n, phi.degree(), std::move(f), phi.str()};
}

bool FixedPointForm::rational() const {
    for (const auto& [mono, coeff] : form.terms())
        if (!coeff.is_rational()) return false;
    return true;
}

std::string FixedPointForm::report() const {
    std::ostringstream os;
    os << "period form: n = " << n << ", d = " << d << ", degree = " << form.degree()
       << ", D_n = " << point_count().get_str() << ", rational coefficients = "
       << (rational() ? "yes" : "no") << "\n";
    os << "map: " << source << "\n";
    os << "form: " << form.str() << "\n";
    return os.str();
}

bool degree_consistency(const Map& phi, long n) {
    const FixedPointForm f = fixed_point_form(phi, n);
    return Integer(f.form.degree()) == degree_Dn(phi.degree(), 1, n);
}

namespace {

// Synthetic division of c (descending coefficients) by (z - z0); empty on a
// nonzero remainder.
std::optional<std::vector<Cyclo>> divide_linear(const std::vector<Cyclo>& c,
                                                const Cyclo& z0) {
    std::vector<Cyclo> b(c.size(), Cyclo::zero(z0.conductor()));
    b[0] = c[0];
    for (size_t k = 1; k < c.size(); ++k) b[k] = c[k] + z0 * b[k - 1];
    if (!b.back().is_zero()) return std::nullopt;
    b.pop_back();
    return b;
}

}  // namespace

std::vector<RationalRoot> rational_roots(const Form& binary_form, long height) {
    if (binary_form.dim() != 1)
        throw DimensionMismatch("rational_roots: form must be binary");
    if (binary_form.is_zero()) throw Error("rational_roots: zero form");
    if (height < 1) throw Error("rational_roots: height must be positive");
    const long m = binary_form.conductor();
    const int deg = binary_form.degree();

    // c[k] = coefficient of X0^(deg-k) X1^k; f(z, 1) has descending
    // coefficients c[0..deg]
    std::vector<Cyclo> c;
    c.reserve(deg + 1);
    for (int k = 0; k <= deg; ++k) c.push_back(binary_form.coeff({deg - k, k}));

    std::vector<Rational> candidates;
    for (long q = 1; q <= height; ++q)
        for (long p = -height; p <= height; ++p) {
            if (std::gcd(std::abs(p), q) != 1) continue;
            candidates.push_back(ratio(p, q));
        }
    std::sort(candidates.begin(), candidates.end(),
              [](const Rational& a, const Rational& b) { return cmp(a, b) < 0; });

    std::vector<RationalRoot> out;
    for (const Rational& z : candidates) {
        const Cyclo z0 = Cyclo::from_rational(m, z);
        int mult = 0;
        std::vector<Cyclo> cur = c;
        while (cur.size() > 1) {
            auto next = divide_linear(cur, z0);
            if (!next) break;
            ++mult;
            cur = std::move(*next);
        }
        if (mult > 0) out.push_back({z, false, mult});
    }

    // f is divisible by X1^e exactly when c[0..e-1] vanish; [1 : 0] is a
    // root of multiplicity e
    int inf_mult = 0;
    while (inf_mult <= deg && c[inf_mult].is_zero()) ++inf_mult;
    if (inf_mult > 0) out.push_back({Rational(0), true, inf_mult});
    return out;
}

}
