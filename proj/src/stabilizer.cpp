#include "moduli/stabilizer.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "moduli/errors.hpp"
#include "moduli/poly.hpp"

namespace moduli {

MatrixAnsatz::MatrixAnsatz(int n, long m) : n_(n), m_(m) {
    if (n < 1) throw DimensionMismatch("MatrixAnsatz: dimension must be at least 1");
    Cell blank;
    blank.value = Cyclo::zero(m);
    cells_.assign(static_cast<size_t>(n + 1) * (n + 1), blank);
}

MatrixAnsatz::Cell& MatrixAnsatz::cell(int r, int c) {
    return cells_[static_cast<size_t>(r) * (n_ + 1) + c];
}

const MatrixAnsatz::Cell& MatrixAnsatz::cell(int r, int c) const {
    return cells_[static_cast<size_t>(r) * (n_ + 1) + c];
}

void MatrixAnsatz::set_unknown(int r, int c, const std::string& name) {
    if (name.empty() || name == "lam" || name == "t")
        throw Error("MatrixAnsatz: unknown name '" + name + "' is reserved");
    for (const Cell& other : cells_)
        if (other.unknown && other.name == name)
            throw Error("MatrixAnsatz: duplicate unknown name '" + name + "'");
    Cell& target = cell(r, c);
    target.unknown = true;
    target.name = name;
    target.value = Cyclo::zero(m_);
}

void MatrixAnsatz::set_constant(int r, int c, const Cyclo& value) {
    if (value.conductor() != m_)
        throw ConductorMismatch("MatrixAnsatz: constant conductor mismatch");
    Cell& target = cell(r, c);
    target.unknown = false;
    target.name.clear();
    target.value = value;
}

bool MatrixAnsatz::is_unknown(int r, int c) const { return cell(r, c).unknown; }

const std::string& MatrixAnsatz::name_at(int r, int c) const {
    if (!cell(r, c).unknown) throw Error("MatrixAnsatz: cell is not an unknown");
    return cell(r, c).name;
}

const Cyclo& MatrixAnsatz::constant_at(int r, int c) const {
    if (cell(r, c).unknown) throw Error("MatrixAnsatz: cell is not a constant");
    return cell(r, c).value;
}

std::vector<std::string> MatrixAnsatz::unknown_names() const {
    std::vector<std::string> names;
    for (const Cell& c : cells_)
        if (c.unknown) names.push_back(c.name);
    return names;
}

std::optional<CMatrix> MatrixAnsatz::fit(const ProjMatrix& f) const {
    if (f.dim() != n_) return std::nullopt;
    if (f.conductor() != m_)
        throw ConductorMismatch("MatrixAnsatz::fit: conductor mismatch");
    const CMatrix& rep = f.rep();
    Cyclo scale = Cyclo::one(m_);
    bool pinned = false;
    for (int r = 0; r <= n_ && !pinned; ++r)
        for (int c = 0; c <= n_ && !pinned; ++c) {
            const Cell& target = cell(r, c);
            if (target.unknown || target.value.is_zero()) continue;
            if (rep.at(r, c).is_zero()) return std::nullopt;
            scale = target.value / rep.at(r, c);
            pinned = true;
        }
    CMatrix fitted = rep.scaled(scale);
    for (int r = 0; r <= n_; ++r)
        for (int c = 0; c <= n_; ++c) {
            const Cell& target = cell(r, c);
            if (!target.unknown && fitted.at(r, c) != target.value) return std::nullopt;
        }
    return fitted;
}

namespace {

Poly symbolic_det(const RingPtr& ring, const std::vector<std::vector<Poly>>& m) {
    const size_t k = m.size();
    if (k == 1) return m[0][0];
    Poly acc = Poly::constant(ring, Cyclo::zero(ring->m));
    for (size_t j = 0; j < k; ++j) {
        std::vector<std::vector<Poly>> minor;
        for (size_t r = 1; r < k; ++r) {
            std::vector<Poly> row;
            for (size_t c = 0; c < k; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        const Poly term = m[0][j] * symbolic_det(ring, minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

PolyIdeal stabilizer_system(const Map& phi, const MatrixAnsatz& ansatz) {
    if (phi.dim() != ansatz.dim())
        throw DimensionMismatch("stabilizer_system: map and ansatz dimensions differ");
    if (phi.conductor() != ansatz.conductor())
        throw ConductorMismatch("stabilizer_system: conductor mismatch");
    const int n = phi.dim();
    const long m = phi.conductor();
    const std::vector<std::string> unknowns = ansatz.unknown_names();
    const size_t u = unknowns.size();

    std::vector<std::string> sys_vars = unknowns;
    sys_vars.push_back("lam");
    sys_vars.push_back("t");
    const RingPtr sys_ring = make_ring(sys_vars, TermOrder::GrLex, m);

    std::vector<std::string> big_vars = sys_vars;
    for (int r = 0; r <= n; ++r) big_vars.push_back("@" + std::to_string(r));
    const RingPtr big = make_ring(big_vars, TermOrder::GrLex, m);
    const size_t xbase = u + 2;

    // the ansatz matrix over the big ring, and its rows applied to X
    auto name_index = [&](const std::string& name) {
        for (size_t k = 0; k < u; ++k)
            if (unknowns[k] == name) return k;
        throw Error("stabilizer_system: unknown name lookup failed");
    };
    std::vector<std::vector<Poly>> amat;
    std::vector<Poly> rows_applied;
    for (int r = 0; r <= n; ++r) {
        std::vector<Poly> row;
        Poly applied = Poly::constant(big, Cyclo::zero(m));
        for (int c = 0; c <= n; ++c) {
            Poly entry = ansatz.is_unknown(r, c)
                             ? Poly::variable(big, name_index(ansatz.name_at(r, c)))
                             : Poly::constant(big, ansatz.constant_at(r, c));
            applied = applied + entry * Poly::variable(big, xbase + c);
            row.push_back(std::move(entry));
        }
        amat.push_back(std::move(row));
        rows_applied.push_back(std::move(applied));
    }

    const Poly lam = Poly::variable(big, u);
    std::vector<Poly> equations;
    for (int i = 0; i <= n; ++i) {
        // phi_i(A X)
        Poly lhs = Poly::constant(big, Cyclo::zero(m));
        for (const auto& [mono, coeff] : phi.coords()[i].terms()) {
            Poly term = Poly::constant(big, coeff);
            for (int r = 0; r <= n; ++r)
                if (mono[r] > 0) term = term * rows_applied[r].pow(mono[r]);
            lhs = lhs + term;
        }
        // lam * (A phi(X))_i
        Poly rhs = Poly::constant(big, Cyclo::zero(m));
        for (int j = 0; j <= n; ++j)
            rhs = rhs + amat[i][j] * poly_from_form(big, phi.coords()[j], xbase);
        equations.push_back(lhs - lam * rhs);
    }

    // collect coefficients of the X monomials; each is a generator over
    // the parameter ring
    std::vector<Poly> gens;
    for (const Poly& eq : equations) {
        std::map<Expo, std::vector<Term>, GrlexDescending> groups;
        for (const Term& t : eq.terms()) {
            Expo xpart(t.mono.begin() + xbase, t.mono.end());
            Expo param(t.mono.begin(), t.mono.begin() + xbase);
            groups[xpart].push_back({std::move(param), t.coeff});
        }
        for (auto& [xpart, terms] : groups) {
            Poly g = Poly::from_terms(sys_ring, std::move(terms));
            if (!g.is_zero()) gens.push_back(std::move(g));
        }
    }

    // invertibility via t * lam * det(A) = 1
    std::vector<std::vector<Poly>> amat_sys;
    for (int r = 0; r <= n; ++r) {
        std::vector<Poly> row;
        for (int c = 0; c <= n; ++c)
            row.push_back(ansatz.is_unknown(r, c)
                              ? Poly::variable(sys_ring, name_index(ansatz.name_at(r, c)))
                              : Poly::constant(sys_ring, ansatz.constant_at(r, c)));
        amat_sys.push_back(std::move(row));
    }
    const Poly det = symbolic_det(sys_ring, amat_sys);
    const Poly one = Poly::constant(sys_ring, Cyclo::one(m));
    gens.push_back(Poly::variable(sys_ring, u + 1) * Poly::variable(sys_ring, u) * det -
                   one);

    return PolyIdeal{sys_ring, std::move(gens)};
}

namespace {

std::string status_name(StabStatus s) {
    switch (s) {
        case StabStatus::OnlyClaimed: return "OnlyClaimed";
        case StabStatus::ExtraSolutionsPossible: return "ExtraSolutionsPossible";
        case StabStatus::Inconsistent: return "Inconsistent";
        case StabStatus::ResourceLimit: return "ResourceLimit";
    }
    return "?";
}

}  // namespace

std::string StabilizerVerdict::report() const {
    std::ostringstream os;
    os << "stabilizer certification\n";
    os << "status: " << status_name(status) << "\n";
    os << "claimed elements:\n";
    for (const ProjMatrix& f : claimed) os << "  " << f.str() << "\n";
    os << "basis size: " << basis.size() << "\n";
    os << "pairs processed: " << stats.pairs_processed
       << ", max degree seen: " << stats.max_degree_seen << "\n";
    if (!detail.empty()) os << "note: " << detail << "\n";
    return os.str();
}

StabilizerVerdict certify_group(const Map& phi, const MatrixAnsatz& ansatz,
                                const std::vector<ProjMatrix>& claimed,
                                const SolverBudget& budget) {
    StabilizerVerdict verdict;
    verdict.claimed = claimed;

    if (claimed.empty()) {
        verdict.status = StabStatus::Inconsistent;
        verdict.detail = "claimed set is empty";
        return verdict;
    }
    for (const ProjMatrix& f : claimed)
        if (!is_stabilizer_element(phi, f)) {
            verdict.status = StabStatus::Inconsistent;
            verdict.detail = "claimed element " + f.str() + " does not stabilize the map";
            return verdict;
        }
    auto member = [&](const ProjMatrix& x) {
        for (const ProjMatrix& c : claimed)
            if (c == x) return true;
        return false;
    };
    for (const ProjMatrix& a : claimed) {
        if (!member(a.inverse())) {
            verdict.status = StabStatus::Inconsistent;
            verdict.detail = "claimed set is not closed under inverse at " + a.str();
            return verdict;
        }
        for (const ProjMatrix& b : claimed)
            if (!member(a * b)) {
                verdict.status = StabStatus::Inconsistent;
                verdict.detail = "claimed set is not closed under the product " +
                                 a.str() + " * " + b.str();
                return verdict;
            }
    }

    const PolyIdeal sys = stabilizer_system(phi, ansatz);
    try {
        verdict.basis = buchberger(sys.gens, budget, &verdict.stats);
    } catch (const ResourceLimit& e) {
        verdict.status = StabStatus::ResourceLimit;
        verdict.detail = e.what();
        return verdict;
    }

    // vanishing ideal of the claimed parameter points
    const std::vector<std::string> unknowns = ansatz.unknown_names();
    const size_t u = unknowns.size();
    const int n = phi.dim();
    std::vector<Poly> claimed_ideal;
    bool have_point = false;
    std::string notes;
    try {
        for (const ProjMatrix& f : claimed) {
            const auto fitted = ansatz.fit(f);
            if (!fitted) {
                notes += (notes.empty() ? "" : "; ");
                notes += "claimed element " + f.str() + " lies outside the ansatz family";
                continue;
            }
            const CMatrix& a = *fitted;
            // lam from the conjugation relation phi(A X) = lam * A phi(X)
            Cyclo lam = Cyclo::one(phi.conductor());
            bool found = false;
            std::vector<Form> rhs_forms;
            for (int i = 0; i <= n; ++i) {
                Form rhs(n, phi.degree(), phi.conductor());
                for (int j = 0; j <= n; ++j) rhs = rhs + phi.coords()[j].scaled(a.at(i, j));
                rhs_forms.push_back(rhs);
                if (!found && !rhs.is_zero()) {
                    const Form lhs = phi.coords()[i].substitute_linear(a.rows());
                    lam = lhs.leading_coeff() / rhs.leading_coeff();
                    found = true;
                }
            }
            for (int i = 0; i <= n; ++i)
                if (phi.coords()[i].substitute_linear(a.rows()) != rhs_forms[i].scaled(lam)) {
                    verdict.status = StabStatus::Inconsistent;
                    verdict.detail = "conjugation scalar is not consistent for " + f.str();
                    return verdict;
                }
            const Cyclo tval = (lam * a.det()).inverse();

            std::vector<Poly> point;
            size_t next = 0;
            for (int r = 0; r <= n; ++r)
                for (int c = 0; c <= n; ++c)
                    if (ansatz.is_unknown(r, c)) {
                        point.push_back(Poly::variable(sys.ring, next) -
                                        Poly::constant(sys.ring, a.at(r, c)));
                        ++next;
                    }
            point.push_back(Poly::variable(sys.ring, u) -
                            Poly::constant(sys.ring, lam));
            point.push_back(Poly::variable(sys.ring, u + 1) -
                            Poly::constant(sys.ring, tval));
            if (!have_point) {
                claimed_ideal = std::move(point);
                have_point = true;
            } else {
                claimed_ideal = intersect_ideals(sys.ring, claimed_ideal, point, budget);
            }
        }
    } catch (const ResourceLimit& e) {
        verdict.status = StabStatus::ResourceLimit;
        verdict.detail = e.what();
        return verdict;
    }
    if (!have_point)
        claimed_ideal = {Poly::constant(sys.ring, Cyclo::one(phi.conductor()))};

    bool contained = true;
    for (const Poly& g : claimed_ideal)
        if (!normal_form(g, verdict.basis).is_zero()) {
            contained = false;
            break;
        }
    verdict.status =
        contained ? StabStatus::OnlyClaimed : StabStatus::ExtraSolutionsPossible;
    verdict.detail = notes;
    return verdict;
}

}
