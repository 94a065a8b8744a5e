#ifndef MODULI_STABILIZER_HPP
#define MODULI_STABILIZER_HPP

#include <optional>
#include <string>
#include <vector>

#include "moduli/forms.hpp"
#include "moduli/groebner.hpp"
#include "moduli/pgl.hpp"

namespace moduli {

/*
 * Search space for stabilizer computations: an (N+1)x(N+1) matrix whose
 * cells are either named unknowns or pinned constants.  Every statement
 * a certification makes is relative to this family; the structural
 * reductions that justify an ansatz stay on paper.
 */
class MatrixAnsatz {
public:
    MatrixAnsatz(int n, long m);  // all cells pinned to 0

    int dim() const { return n_; }
    long conductor() const { return m_; }

    // unknown names must be distinct, nonempty and not "lam" or "t"
    void set_unknown(int r, int c, const std::string& name);
    void set_constant(int r, int c, const Cyclo& value);

    bool is_unknown(int r, int c) const;
    const std::string& name_at(int r, int c) const;      // unknown cells
    const Cyclo& constant_at(int r, int c) const;        // constant cells

    // row-major order of appearance
    std::vector<std::string> unknown_names() const;

    // Scale the matrix so every pinned constant matches; the returned
    // lift has exactly the ansatz constants.  Empty when no scaling fits.
    // When no nonzero constant pins the scale the lift is taken as given.
    std::optional<CMatrix> fit(const ProjMatrix& f) const;

private:
    struct Cell {
        bool unknown = false;
        std::string name;
        Cyclo value;
    };
    int n_;
    long m_;
    std::vector<Cell> cells_;
    Cell& cell(int r, int c);
    const Cell& cell(int r, int c) const;
};

/*
 * The equation phi(A X) = lam * A phi(X) over the ansatz unknowns, with
 * lam a genuine unknown and invertibility imposed through the auxiliary
 * relation t * lam * det(A) = 1.  Solutions biject with invertible
 * in-family matrices conjugating phi to itself.
 */
PolyIdeal stabilizer_system(const Map& phi, const MatrixAnsatz& ansatz);

enum class StabStatus { OnlyClaimed, ExtraSolutionsPossible, Inconsistent, ResourceLimit };

struct StabilizerVerdict {
    StabStatus status = StabStatus::Inconsistent;
    std::vector<Poly> basis;           // reduced basis of the system, when computed
    std::vector<ProjMatrix> claimed;   // echoed in canonical form
    GroebnerStats stats;
    std::string detail;

    std::string report() const;
};

/*
 * Certify that the claimed matrices are stabilizer elements and that the
 * system has no further solutions inside the ansatz: each claimed element
 * is verified directly, the set is checked for closure under product and
 * inverse, and the vanishing ideal of the claimed parameter points is
 * reduced against the system basis.  Containment of the ideal is a
 * sufficient condition, so failure reports ExtraSolutionsPossible rather
 * than asserting extra solutions exist.
 */
StabilizerVerdict certify_group(const Map& phi, const MatrixAnsatz& ansatz,
                                const std::vector<ProjMatrix>& claimed,
                                const SolverBudget& budget = {});

}

#endif
