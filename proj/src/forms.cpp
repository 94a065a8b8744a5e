#include "moduli/forms.hpp"

#include <sstream>

#include "moduli/errors.hpp"

namespace moduli {

Form::Form(int n, int d, long m) : n_(n), d_(d), m_(m) {
    if (n < 1) throw DimensionMismatch("projective dimension must be at least 1");
    if (d < 0) throw Error("form degree must be nonnegative");
}

void Form::check_compatible(const Form& o) const {
    if (n_ != o.n_) throw DimensionMismatch("form dimension mismatch");
    if (m_ != o.m_) throw ConductorMismatch("form conductor mismatch");
}

void Form::add_term(const Expo& mono, const Cyclo& coeff) {
    if (static_cast<int>(mono.size()) != n_ + 1)
        throw DimensionMismatch("monomial has wrong variable count");
    if (total_degree(mono) != d_)
        throw Error("monomial degree does not match form degree");
    if (coeff.conductor() != m_) throw ConductorMismatch("coefficient conductor mismatch");
    if (coeff.is_zero()) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Cyclo Form::coeff(const Expo& mono) const {
    auto it = terms_.find(mono);
    if (it != terms_.end()) return it->second;
    return Cyclo::zero(m_);
}

Form Form::operator+(const Form& o) const {
    check_compatible(o);
    if (d_ != o.d_) throw Error("adding forms of different degrees");
    Form r = *this;
    for (const auto& [mono, c] : o.terms_) r.add_term(mono, c);
    return r;
}

Form Form::operator-(const Form& o) const { return *this + (-o); }

Form Form::operator-() const {
    Form r = *this;
    for (auto& [mono, c] : r.terms_) c = -c;
    return r;
}

Form Form::scaled(const Cyclo& c) const {
    if (c.conductor() != m_) throw ConductorMismatch("scalar conductor mismatch");
    Form r(n_, d_, m_);
    if (c.is_zero()) return r;
    r.terms_ = terms_;
    for (auto& [mono, q] : r.terms_) q *= c;
    return r;
}

Form Form::operator*(const Form& o) const {
    check_compatible(o);
    Form r(n_, d_ + o.d_, m_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.add_term(expo_mul(ma, mb), ca * cb);
    return r;
}

bool Form::operator==(const Form& o) const {
    check_compatible(o);
    return d_ == o.d_ && terms_ == o.terms_;
}

Form Form::pow(int e) const {
    if (e < 0) throw Error("negative form power");
    Form acc = monomial_form(n_, m_, Expo(n_ + 1, 0), Cyclo::one(m_));
    Form base = *this;
    int n = e;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        if (n >>= 1) base = base * base;
    }
    return acc;
}

Form Form::substitute(const std::vector<Form>& args) const {
    if (static_cast<int>(args.size()) != n_ + 1)
        throw DimensionMismatch("substitute: need one form per variable");
    const int an = args[0].dim();
    const int ad = args[0].degree();
    for (const Form& a : args) {
        if (a.dim() != an || a.degree() != ad)
            throw DimensionMismatch("substitute: arguments disagree in shape");
        if (a.conductor() != m_) throw ConductorMismatch("substitute: conductor mismatch");
    }
    Form result(an, d_ * ad, m_);
    for (const auto& [mono, c] : terms_) {
        Form prod = monomial_form(an, m_, Expo(an + 1, 0), c);
        for (int i = 0; i <= n_; ++i)
            if (mono[i] > 0) prod = prod * args[i].pow(mono[i]);
        result = result + prod;
    }
    return result;
}

Form Form::substitute_linear(const std::vector<std::vector<Cyclo>>& mat) const {
    if (static_cast<int>(mat.size()) != n_ + 1)
        throw DimensionMismatch("substitute_linear: matrix size mismatch");
    std::vector<Form> rows;
    rows.reserve(n_ + 1);
    for (int i = 0; i <= n_; ++i) {
        if (static_cast<int>(mat[i].size()) != n_ + 1)
            throw DimensionMismatch("substitute_linear: matrix size mismatch");
        Form row(n_, 1, m_);
        for (int j = 0; j <= n_; ++j) {
            Expo e(n_ + 1, 0);
            e[j] = 1;
            row.add_term(e, mat[i][j]);
        }
        rows.push_back(std::move(row));
    }
    return substitute(rows);
}

Form Form::galois(long k) const {
    Form r(n_, d_, m_);
    for (const auto& [mono, c] : terms_) r.add_term(mono, c.galois(k));
    return r;
}

Cyclo Form::eval(const std::vector<Cyclo>& point) const {
    if (static_cast<int>(point.size()) != n_ + 1)
        throw DimensionMismatch("eval: point has wrong length");
    Cyclo acc = Cyclo::zero(m_);
    for (const auto& [mono, c] : terms_) {
        Cyclo term = c;
        for (int i = 0; i <= n_; ++i)
            if (mono[i] > 0) term *= point[i].pow(mono[i]);
        acc += term;
    }
    return acc;
}

const Cyclo& Form::leading_coeff() const {
    if (terms_.empty()) throw Error("leading coefficient of the zero form");
    return terms_.begin()->second;
}

namespace {

std::string mono_str(const Expo& mono) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < mono.size(); ++i) {
        if (mono[i] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << "X" << i;
        if (mono[i] > 1) os << "^" << mono[i];
    }
    return os.str();
}

} // namespace

std::string Form::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        const std::string ms = mono_str(mono);
        if (c.is_rational()) {
            const Rational q = c.rational_value();
            const bool neg = sgn(q) < 0;
            const Rational mag = neg ? Rational(-q) : q;
            os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
            if (ms.empty())
                os << mag.get_str();
            else if (mag == 1)
                os << ms;
            else
                os << mag.get_str() << "*" << ms;
        } else {
            if (!first) os << " + ";
            os << "(" << c.str() << ")";
            if (!ms.empty()) os << "*" << ms;
        }
        first = false;
    }
    return os.str();
}

Form monomial_form(int n, long m, const Expo& mono, const Cyclo& coeff) {
    Form f(n, total_degree(mono), m);
    f.add_term(mono, coeff);
    return f;
}

Map::Map(std::vector<Form> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2) throw DimensionMismatch("a map needs at least two coordinates");
    n_ = coords_[0].dim();
    d_ = coords_[0].degree();
    m_ = coords_[0].conductor();
    if (static_cast<int>(coords_.size()) != n_ + 1)
        throw DimensionMismatch("coordinate count does not match dimension");
    if (d_ < 1) throw Error("map degree must be at least 1");
    for (const Form& f : coords_) {
        if (f.dim() != n_ || f.degree() != d_)
            throw DimensionMismatch("map coordinates disagree in shape");
        if (f.conductor() != m_)
            throw ConductorMismatch("map coordinates disagree in conductor");
    }
    // canonical scale: globally first nonzero coefficient becomes 1
    const Cyclo* lead = nullptr;
    for (const Form& f : coords_) {
        if (!f.is_zero()) {
            lead = &f.leading_coeff();
            break;
        }
    }
    if (lead == nullptr) throw Error("map with all coordinates zero");
    if (!(*lead == Cyclo::one(m_))) {
        const Cyclo inv = lead->inverse();
        for (Form& f : coords_) f = f.scaled(inv);
    }
}

bool Map::operator==(const Map& o) const {
    if (n_ != o.n_ || d_ != o.d_) return false;
    if (m_ != o.m_)
        throw ConductorMismatch("comparing maps at different conductors");
    return coords_ == o.coords_;
}

bool Map::defined_over_rationals() const {
    for (const Form& f : coords_)
        for (const auto& [mono, c] : f.terms())
            if (!c.is_rational()) return false;
    return true;
}

std::string Map::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ", ";
        os << coords_[i].str();
    }
    os << "]";
    return os.str();
}

Map galois_map(long k, const Map& phi) {
    std::vector<Form> coords;
    coords.reserve(phi.coords().size());
    for (const Form& f : phi.coords()) coords.push_back(f.galois(k));
    return Map(std::move(coords));
}

Map galois_map(const GaloisElement& s, const Map& phi) {
    if (s.m != phi.conductor())
        throw ConductorMismatch("galois element conductor differs from map conductor");
    return galois_map(s.k, phi);
}

Map compose_map(const Map& outer, const Map& inner) {
    if (outer.dim() != inner.dim())
        throw DimensionMismatch("composing maps of different dimensions");
    if (outer.conductor() != inner.conductor())
        throw ConductorMismatch("composing maps at different conductors");
    std::vector<Form> coords;
    coords.reserve(outer.coords().size());
    for (const Form& f : outer.coords()) coords.push_back(f.substitute(inner.coords()));
    return Map(std::move(coords));
}

Cyclo p1_resultant(const Map& phi) {
    if (phi.dim() != 1) throw DimensionMismatch("p1_resultant needs a P^1 map");
    const int d = phi.degree();
    const long m = phi.conductor();
    // univariate coefficient lists: F = sum f_i X0^(d-i) X1^i
    auto coeffs = [&](const Form& f) {
        std::vector<Cyclo> c(d + 1, Cyclo::zero(m));
        for (const auto& [mono, q] : f.terms()) c[mono[1]] = q;
        return c;
    };
    const std::vector<Cyclo> F = coeffs(phi.coords()[0]);
    const std::vector<Cyclo> G = coeffs(phi.coords()[1]);
    // Sylvester matrix, 2d x 2d
    const int n = 2 * d;
    std::vector<std::vector<Cyclo>> S(n, std::vector<Cyclo>(n, Cyclo::zero(m)));
    for (int r = 0; r < d; ++r) {
        for (int j = 0; j <= d; ++j) {
            S[r][r + j] = F[j];
            S[d + r][r + j] = G[j];
        }
    }
    // determinant by exact Gaussian elimination with division tracking
    Cyclo det = Cyclo::one(m);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!S[r][col].is_zero()) { pivot = r; break; }
        if (pivot < 0) return Cyclo::zero(m);
        if (pivot != col) {
            std::swap(S[pivot], S[col]);
            det = -det;
        }
        det *= S[col][col];
        const Cyclo inv = S[col][col].inverse();
        for (int r = col + 1; r < n; ++r) {
            if (S[r][col].is_zero()) continue;
            const Cyclo factor = S[r][col] * inv;
            for (int j = col; j < n; ++j) S[r][j] -= factor * S[col][j];
        }
    }
    return det;
}

} // namespace moduli
