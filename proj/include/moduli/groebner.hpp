#ifndef MODULI_GROEBNER_HPP
#define MODULI_GROEBNER_HPP

#include <optional>

#include "moduli/poly.hpp"

namespace moduli {

/*
 * Buchberger with the coprimality criterion and normal pair selection
 * (smallest lcm first).  Budgets are hard walls: exceeding one throws
 * ResourceLimit, which is an abandoned computation, never an answer.  The
 * returned basis is the reduced Groebner basis, which is unique for the
 * ideal and order, so shuffling the input generators cannot change it.
 */

struct SolverBudget {
    long max_pairs = 50000;     // S-pairs examined
    int max_degree = 60;        // total degree of any new basis element
    long timeout_ms = 120000;   // wall clock
};

struct GroebnerStats {
    long pairs_processed = 0;
    int max_degree_seen = 0;
    size_t basis_size = 0;
};

// Full reduction: no term of the result is divisible by any leading term of
// the (nonzero) divisors.  Deterministic: divisors are scanned in order.
Poly normal_form(const Poly& p, const std::vector<Poly>& divisors);

std::vector<Poly> buchberger(const std::vector<Poly>& gens, const SolverBudget& budget,
                             GroebnerStats* stats = nullptr);

bool contains_one(const std::vector<Poly>& reduced_basis);

// For each ring variable, the least e such that var^e is a leading term of
// the basis; nullopt where none exists.  Meaningful on a Groebner basis.
std::vector<std::optional<int>> pure_power_leading_exponents(const std::vector<Poly>& basis);

// Keep the generators free of the first `drop` variables of the block ring
// and rewrite them in a fresh graded-lex ring on the remaining variables.
// Input must be a Groebner basis under the block order with the dropped
// variables in the leading block.
struct PolyIdeal {
    RingPtr ring;
    std::vector<Poly> gens;
};
PolyIdeal eliminate_block(const std::vector<Poly>& block_basis, size_t drop);

// Ideal intersection via the auxiliary-variable construction:
// I cap J = (u*I + (1-u)*J) cap k[vars].  Both inputs live in `ring`.
std::vector<Poly> intersect_ideals(const RingPtr& ring, const std::vector<Poly>& a,
                                   const std::vector<Poly>& b, const SolverBudget& budget);

} // namespace moduli

#endif
