#include "moduli/pgl.hpp"

#include <sstream>

#include "moduli/errors.hpp"

namespace moduli {

CMatrix::CMatrix(int n, std::vector<Cyclo> entries) : n_(n), e_(std::move(entries)) {
    if (n < 1) throw DimensionMismatch("matrix dimension must be at least 1");
    const size_t want = static_cast<size_t>(n + 1) * (n + 1);
    if (e_.size() != want) throw DimensionMismatch("matrix entry count mismatch");
    m_ = e_[0].conductor();
    for (const Cyclo& c : e_)
        if (c.conductor() != m_) throw ConductorMismatch("matrix entries mix conductors");
}

CMatrix CMatrix::identity(int n, long m) {
    std::vector<Cyclo> e(static_cast<size_t>(n + 1) * (n + 1), Cyclo::zero(m));
    for (int i = 0; i <= n; ++i) e[i * (n + 1) + i] = Cyclo::one(m);
    return CMatrix(n, std::move(e));
}

void CMatrix::check_same(const CMatrix& o) const {
    if (n_ != o.n_) throw DimensionMismatch("matrix dimension mismatch");
    if (m_ != o.m_) throw ConductorMismatch("matrix conductor mismatch");
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
    check_same(o);
    const int s = n_ + 1;
    std::vector<Cyclo> out(static_cast<size_t>(s) * s, Cyclo::zero(m_));
    for (int i = 0; i < s; ++i)
        for (int k = 0; k < s; ++k) {
            const Cyclo& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < s; ++j) {
                const Cyclo& b = o.at(k, j);
                if (b.is_zero()) continue;
                out[i * s + j] += a * b;
            }
        }
    return CMatrix(n_, std::move(out));
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
    check_same(o);
    CMatrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
    check_same(o);
    CMatrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

CMatrix CMatrix::scaled(const Cyclo& c) const {
    CMatrix r = *this;
    for (Cyclo& q : r.e_) q *= c;
    return r;
}

bool CMatrix::operator==(const CMatrix& o) const {
    check_same(o);
    return e_ == o.e_;
}

Cyclo CMatrix::det() const {
    const int s = n_ + 1;
    if (s == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    if (s == 3)
        return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
               at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
               at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    // cofactor expansion along the first row; desk-scale dimensions only
    Cyclo acc = Cyclo::zero(m_);
    for (int j = 0; j < s; ++j) {
        if (at(0, j).is_zero()) continue;
        std::vector<Cyclo> sub;
        sub.reserve(static_cast<size_t>(s - 1) * (s - 1));
        for (int r = 1; r < s; ++r)
            for (int c = 0; c < s; ++c)
                if (c != j) sub.push_back(at(r, c));
        const Cyclo minor = CMatrix(n_ - 1, std::move(sub)).det();
        const Cyclo term = at(0, j) * minor;
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

CMatrix CMatrix::adjugate() const {
    const int s = n_ + 1;
    std::vector<Cyclo> out(static_cast<size_t>(s) * s, Cyclo::zero(m_));
    if (s == 2) {
        out[0] = at(1, 1);
        out[1] = -at(0, 1);
        out[2] = -at(1, 0);
        out[3] = at(0, 0);
        return CMatrix(n_, std::move(out));
    }
    for (int r = 0; r < s; ++r)
        for (int c = 0; c < s; ++c) {
            std::vector<Cyclo> sub;
            sub.reserve(static_cast<size_t>(s - 1) * (s - 1));
            for (int rr = 0; rr < s; ++rr) {
                if (rr == r) continue;
                for (int cc = 0; cc < s; ++cc)
                    if (cc != c) sub.push_back(at(rr, cc));
            }
            Cyclo minor = CMatrix(n_ - 1, std::move(sub)).det();
            if ((r + c) % 2 != 0) minor = -minor;
            out[c * s + r] = minor;   // transpose of cofactors
        }
    return CMatrix(n_, std::move(out));
}

CMatrix CMatrix::inverse() const {
    const Cyclo d = det();
    if (d.is_zero()) throw SingularMatrix("matrix is singular");
    return adjugate().scaled(d.inverse());
}

CMatrix CMatrix::galois(long k) const {
    CMatrix r = *this;
    for (Cyclo& c : r.e_) c = c.galois(k);
    return r;
}

CMatrix CMatrix::transpose() const {
    CMatrix r = *this;
    for (int i = 0; i <= n_; ++i)
        for (int j = 0; j <= n_; ++j) r.at(i, j) = at(j, i);
    return r;
}

bool CMatrix::is_zero() const {
    for (const Cyclo& c : e_)
        if (!c.is_zero()) return false;
    return true;
}

bool CMatrix::is_scalar(Cyclo* scalar_out) const {
    const Cyclo& a = at(0, 0);
    for (int i = 0; i <= n_; ++i)
        for (int j = 0; j <= n_; ++j) {
            if (i == j) {
                if (at(i, j) != a) return false;
            } else if (!at(i, j).is_zero()) {
                return false;
            }
        }
    if (scalar_out) *scalar_out = a;
    return true;
}

bool CMatrix::proportional_to(const CMatrix& o) const {
    check_same(o);
    // find first nonzero entry of this; scale must map it onto o consistently
    for (size_t i = 0; i < e_.size(); ++i) {
        if (e_[i].is_zero()) {
            if (!o.e_[i].is_zero()) return false;
            continue;
        }
        if (o.e_[i].is_zero()) return false;
        const Cyclo ratio = o.e_[i] / e_[i];
        for (size_t j = 0; j < e_.size(); ++j)
            if (!(e_[j] * ratio == o.e_[j])) return false;
        return true;
    }
    return o.is_zero();
}

std::vector<std::vector<Cyclo>> CMatrix::rows() const {
    std::vector<std::vector<Cyclo>> out;
    out.reserve(n_ + 1);
    for (int r = 0; r <= n_; ++r) {
        std::vector<Cyclo> row;
        row.reserve(n_ + 1);
        for (int c = 0; c <= n_; ++c) row.push_back(at(r, c));
        out.push_back(std::move(row));
    }
    return out;
}

std::string CMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int r = 0; r <= n_; ++r) {
        if (r) os << ", ";
        os << "[";
        for (int c = 0; c <= n_; ++c) {
            if (c) os << ", ";
            os << at(r, c).str();
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

ProjMatrix::ProjMatrix(const CMatrix& lift) : rep_(lift) {
    if (rep_.det().is_zero())
        throw SingularMatrix("projective matrix must be invertible: " + lift.str());
    for (int r = 0; r <= rep_.dim(); ++r)
        for (int c = 0; c <= rep_.dim(); ++c) {
            const Cyclo& e = rep_.at(r, c);
            if (!e.is_zero()) {
                if (!(e == Cyclo::one(rep_.conductor())))
                    rep_ = rep_.scaled(e.inverse());
                return;
            }
        }
}

ProjMatrix ProjMatrix::operator*(const ProjMatrix& o) const {
    return ProjMatrix(rep_ * o.rep_);
}

ProjMatrix ProjMatrix::inverse() const { return ProjMatrix(rep_.adjugate()); }

ProjMatrix ProjMatrix::galois(long k) const { return ProjMatrix(rep_.galois(k)); }

ProjMatrix pm_identity(int n, long m) { return ProjMatrix(CMatrix::identity(n, m)); }

Map conjugate(const Map& phi, const CMatrix& f) {
    if (phi.dim() != f.dim())
        throw DimensionMismatch("conjugating matrix dimension differs from map dimension");
    if (phi.conductor() != f.conductor())
        throw ConductorMismatch("conjugating matrix conductor differs from map conductor");
    if (f.det().is_zero()) throw SingularMatrix("conjugating matrix is singular");
    const auto rows = f.rows();
    std::vector<Form> moved;
    moved.reserve(phi.coords().size());
    for (const Form& coord : phi.coords()) moved.push_back(coord.substitute_linear(rows));
    const CMatrix adj = f.adjugate();
    const int s = phi.dim() + 1;
    std::vector<Form> out;
    out.reserve(s);
    for (int i = 0; i < s; ++i) {
        Form acc(phi.dim(), phi.degree(), phi.conductor());
        for (int j = 0; j < s; ++j) {
            if (adj.at(i, j).is_zero()) continue;
            acc = acc + moved[j].scaled(adj.at(i, j));
        }
        out.push_back(std::move(acc));
    }
    return Map(std::move(out));
}

Map conjugate(const Map& phi, const ProjMatrix& f) { return conjugate(phi, f.rep()); }

ProjMatrix galois_matrix(const GaloisElement& s, const ProjMatrix& f) {
    if (s.m != f.conductor())
        throw ConductorMismatch("galois element conductor differs from matrix conductor");
    return f.galois(s.k);
}

bool is_stabilizer_element(const Map& phi, const ProjMatrix& f) {
    return conjugate(phi, f) == phi;
}

bool in_conjugating_set(const Map& phi, const Map& psi, const ProjMatrix& f) {
    return conjugate(phi, f) == psi;
}

} // namespace moduli
