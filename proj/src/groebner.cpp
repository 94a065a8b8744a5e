#include "moduli/groebner.hpp"

#include <algorithm>
#include <chrono>

#include "moduli/errors.hpp"
#include "moduli/forms.hpp"

namespace moduli {

Poly normal_form(const Poly& p, const std::vector<Poly>& divisors) {
    Poly rest = p;
    Poly remainder(p.ring());
    while (!rest.is_zero()) {
        bool reduced = false;
        for (const Poly& g : divisors) {
            if (g.is_zero()) continue;
            if (expo_divides(g.leading_mono(), rest.leading_mono())) {
                const Expo q = expo_div(rest.leading_mono(), g.leading_mono());
                const Cyclo c = rest.leading_coeff() / g.leading_coeff();
                rest = rest - g.mul_term(q, c);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            // move the irreducible leading term to the remainder
            remainder = remainder + Poly::from_terms(p.ring(), {rest.leading()});
            rest = rest - Poly::from_terms(p.ring(), {rest.leading()});
        }
    }
    return remainder;
}

namespace {

Poly s_polynomial(const Poly& f, const Poly& g) {
    const Expo lcm = expo_lcm(f.leading_mono(), g.leading_mono());
    const Poly a = f.mul_term(expo_div(lcm, f.leading_mono()),
                              f.leading_coeff().inverse());
    const Poly b = g.mul_term(expo_div(lcm, g.leading_mono()),
                              g.leading_coeff().inverse());
    return a - b;
}

struct Pair {
    size_t i, j;
    Expo lcm;
};

// Inter-reduce a Groebner basis into the reduced basis: monic, no leading
// term divides another, every element fully reduced by the rest.
std::vector<Poly> reduce_basis(std::vector<Poly> basis) {
    std::vector<bool> dead(basis.size(), false);
    for (size_t i = 0; i < basis.size(); ++i) {
        if (dead[i]) continue;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j || dead[j]) continue;
            if (expo_divides(basis[j].leading_mono(), basis[i].leading_mono())) {
                // prefer keeping j; equal leading monomials keep the earlier
                if (basis[j].leading_mono() == basis[i].leading_mono() && j > i) continue;
                dead[i] = true;
                break;
            }
        }
    }
    std::vector<Poly> kept;
    for (size_t i = 0; i < basis.size(); ++i)
        if (!dead[i]) kept.push_back(basis[i].monic());
    std::vector<Poly> reduced;
    reduced.reserve(kept.size());
    for (size_t i = 0; i < kept.size(); ++i) {
        std::vector<Poly> others;
        others.reserve(kept.size() - 1);
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        Poly r = normal_form(kept[i], others);
        if (!r.is_zero()) reduced.push_back(r.monic());
    }
    if (reduced.size() > 1) {
        const RingPtr ring = reduced.front().ring();
        std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
            return ring->cmp(a.leading_mono(), b.leading_mono()) > 0;
        });
    }
    return reduced;
}

} // namespace

std::vector<Poly> buchberger(const std::vector<Poly>& gens, const SolverBudget& budget,
                             GroebnerStats* stats) {
    const auto start = std::chrono::steady_clock::now();
    GroebnerStats local;
    std::vector<Poly> basis;
    for (const Poly& g : gens)
        if (!g.is_zero()) basis.push_back(g.monic());
    if (basis.empty()) {
        if (stats) *stats = local;
        return basis;
    }
    const RingPtr ring = basis.front().ring();
    for (const Poly& g : basis) local.max_degree_seen = std::max(local.max_degree_seen, g.degree());

    std::vector<Pair> pairs;
    auto push_pairs = [&](size_t upto) {
        for (size_t i = 0; i < upto; ++i)
            pairs.push_back({i, upto, expo_lcm(basis[i].leading_mono(),
                                               basis[upto].leading_mono())});
    };
    for (size_t j = 1; j < basis.size(); ++j) push_pairs(j);

    while (!pairs.empty()) {
        if (++local.pairs_processed > budget.max_pairs)
            throw ResourceLimit("solver budget exceeded: more than " +
                                std::to_string(budget.max_pairs) + " S-pairs");
        if ((local.pairs_processed & 0xF) == 0) {
            const auto now = std::chrono::steady_clock::now();
            const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now - start);
            if (ms.count() > budget.timeout_ms)
                throw ResourceLimit("solver budget exceeded: timeout after " +
                                    std::to_string(budget.timeout_ms) + " ms");
        }
        // normal selection: smallest lcm in the ring order; ties by index
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k) {
            const int c = ring->cmp(pairs[k].lcm, pairs[best].lcm);
            if (c < 0 || (c == 0 && (pairs[k].i < pairs[best].i ||
                                     (pairs[k].i == pairs[best].i && pairs[k].j < pairs[best].j))))
                best = k;
        }
        const Pair pr = pairs[best];
        pairs.erase(pairs.begin() + best);
        // first criterion: coprime leading terms reduce to zero
        if (expo_coprime(basis[pr.i].leading_mono(), basis[pr.j].leading_mono()))
            continue;
        const Poly s = s_polynomial(basis[pr.i], basis[pr.j]);
        const Poly r = normal_form(s, basis);
        if (r.is_zero()) continue;
        if (r.degree() > budget.max_degree)
            throw ResourceLimit("solver budget exceeded: degree " +
                                std::to_string(r.degree()) + " above cap " +
                                std::to_string(budget.max_degree));
        local.max_degree_seen = std::max(local.max_degree_seen, r.degree());
        basis.push_back(r.monic());
        push_pairs(basis.size() - 1);
    }

    std::vector<Poly> reduced = reduce_basis(std::move(basis));
    local.basis_size = reduced.size();
    if (stats) *stats = local;
    return reduced;
}

bool contains_one(const std::vector<Poly>& reduced_basis) {
    for (const Poly& g : reduced_basis)
        if (!g.is_zero() && total_degree(g.leading_mono()) == 0) return true;
    return false;
}

std::vector<std::optional<int>> pure_power_leading_exponents(const std::vector<Poly>& basis) {
    if (basis.empty()) return {};
    const size_t n = basis.front().ring()->nvars();
    std::vector<std::optional<int>> out(n);
    for (const Poly& g : basis) {
        if (g.is_zero()) continue;
        const Expo& lm = g.leading_mono();
        int var = -1;
        bool pure = true;
        for (size_t i = 0; i < n; ++i) {
            if (lm[i] == 0) continue;
            if (var >= 0) { pure = false; break; }
            var = static_cast<int>(i);
        }
        if (!pure || var < 0) continue;
        if (!out[var] || *out[var] > lm[var]) out[var] = lm[var];
    }
    return out;
}

PolyIdeal eliminate_block(const std::vector<Poly>& block_basis, size_t drop) {
    if (block_basis.empty()) throw Error("eliminate_block: empty basis");
    const RingPtr src = block_basis.front().ring();
    if (src->order != TermOrder::Block || src->block_split != drop)
        throw Error("eliminate_block: basis ring must be block-ordered with the dropped "
                    "variables leading");
    std::vector<std::string> kept(src->vars.begin() + drop, src->vars.end());
    RingPtr dst = make_ring(std::move(kept), TermOrder::GrLex, src->m);
    PolyIdeal out{dst, {}};
    for (const Poly& g : block_basis) {
        bool free = true;
        for (const Term& t : g.terms())
            for (size_t i = 0; i < drop && free; ++i)
                if (t.mono[i] > 0) free = false;
        if (!free) continue;
        std::vector<Term> terms;
        terms.reserve(g.terms().size());
        for (const Term& t : g.terms())
            terms.push_back({Expo(t.mono.begin() + drop, t.mono.end()), t.coeff});
        out.gens.push_back(Poly::from_terms(dst, std::move(terms)));
    }
    return out;
}

std::vector<Poly> intersect_ideals(const RingPtr& ring, const std::vector<Poly>& a,
                                   const std::vector<Poly>& b, const SolverBudget& budget) {
    std::vector<std::string> vars;
    vars.reserve(ring->nvars() + 1);
    vars.push_back("@u");
    for (const std::string& v : ring->vars) vars.push_back(v);
    RingPtr big = make_ring(std::move(vars), TermOrder::Block, ring->m, 1);
    auto embed = [&](const Poly& p) {
        std::vector<Term> terms;
        terms.reserve(p.terms().size());
        for (const Term& t : p.terms()) {
            Expo e(big->nvars(), 0);
            std::copy(t.mono.begin(), t.mono.end(), e.begin() + 1);
            terms.push_back({std::move(e), t.coeff});
        }
        return Poly::from_terms(big, std::move(terms));
    };
    const Poly u = Poly::variable(big, 0);
    const Poly one_minus_u = Poly::constant(big, Cyclo::one(big->m)) - u;
    std::vector<Poly> gens;
    for (const Poly& p : a) gens.push_back(u * embed(p));
    for (const Poly& p : b) gens.push_back(one_minus_u * embed(p));
    const std::vector<Poly> basis = buchberger(gens, budget);
    if (basis.empty()) return {};
    PolyIdeal cut = eliminate_block(basis, 1);
    // rewrite in the caller's ring (same variables, caller's order)
    std::vector<Poly> out;
    out.reserve(cut.gens.size());
    for (const Poly& p : cut.gens) {
        std::vector<Term> terms(p.terms().begin(), p.terms().end());
        out.push_back(Poly::from_terms(ring, std::move(terms)));
    }
    return out;
}

// Defined here so the forms module stays below the solver in the build: the
// morphism test is a Groebner question about the coordinate ideal.
bool is_morphism(const Map& phi, const SolverBudget& budget) {
    std::vector<std::string> vars;
    for (int i = 0; i <= phi.dim(); ++i) vars.push_back("X" + std::to_string(i));
    RingPtr ring = make_ring(std::move(vars), TermOrder::GrLex, phi.conductor());
    std::vector<Poly> gens;
    for (const Form& f : phi.coords()) {
        std::vector<Term> terms;
        for (const auto& [mono, c] : f.terms()) terms.push_back({mono, c});
        gens.push_back(Poly::from_terms(ring, std::move(terms)));
    }
    const std::vector<Poly> basis = buchberger(gens, budget);
    const auto pure = pure_power_leading_exponents(basis);
    for (const auto& e : pure)
        if (!e) return false;
    return true;
}

bool is_morphism(const Map& phi) { return is_morphism(phi, SolverBudget{}); }

} // namespace moduli
