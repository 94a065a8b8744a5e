#ifndef MODULI_CORPUS_HPP
#define MODULI_CORPUS_HPP

#include "moduli/forms.hpp"
#include "moduli/pgl.hpp"

namespace moduli {

/*
 * The worked examples bundled with the tool: two plane families whose
 * moduli behavior the audit replays, the odd-degree P^1 family with its
 * order-two conjugator, and a quadratic twist pair on P^1.  Conductors are
 * the smallest ones the claims about each object need; a few builders take
 * the conductor as a parameter because different claims about the same map
 * want different ambient fields.
 */

// [(X0 - i*X2)^4, (X1 + i*X2)^4, X2^4]; needs 4 | m.
Map quartic_map(long m = 12);

// coordinate swap [[0,1,0],[1,0,0],[0,0,1]]
ProjMatrix swap_matrix(long m = 12);

// zeta_6 * swap, the classic lift witnessing the quartic map's conjugation
// into its conjugate image; needs 6 | m.
CMatrix quartic_conj_lift(long m = 12);

// [i*(X0 - X1)^3, (X0 + X1)^3, X2^3]; needs 4 | m.
Map cubic_map(long m = 8);

// [[0, -z8, 0], [z8, 0, 0], [0, 0, -z8^2]]; needs 8 | m.
CMatrix cubic_conj_lift(long m = 8);

// diag(-1, -1, 1), the order-two stabilizer element of the cubic map
ProjMatrix cubic_stab_element(long m = 8);

// [i*(X0 - X1)^d, (X0 + X1)^d] on P^1; the interesting case is odd d.
Map odd_power_map(int d, long m = 4);

// [[0, -1], [1, 0]], i.e. x -> -1/x
CMatrix inversion_lift(long m = 4);

// the twist pair phi(x) = 2x + 5/x and psi(x) = (x^2 - 3x)/(3x - 1)
Map twist_phi(long m = 20);
Map twist_psi(long m = 20);

// [[i*sqrt5, -i*sqrt5], [1, 1]] conjugating phi onto psi; needs 20 | m.
CMatrix twist_conjugator(long m = 20);

// i*sqrt(5) via the quadratic Gauss sum at conductor 5, lifted; needs 20 | m.
Cyclo i_sqrt5(long m = 20);

// candidate descent matrix [[1,-i,0],[i,-1,0],[0,0,1-i]] for the quartic map
CMatrix candidate_descent_lift(long m = 12);

} // namespace moduli

#endif
