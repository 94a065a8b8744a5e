#include "moduli/poly.hpp"

#include <algorithm>
#include <sstream>

#include "moduli/errors.hpp"
#include "moduli/forms.hpp"

namespace moduli {

int PolyRing::cmp(const Expo& a, const Expo& b) const {
    switch (order) {
        case TermOrder::GrLex: return cmp_grlex(a, b);
        case TermOrder::Lex: return cmp_lex(a, b);
        case TermOrder::Block: return cmp_block(a, b, block_split);
    }
    return 0;
}

bool PolyRing::same(const PolyRing& o) const {
    return vars == o.vars && order == o.order && m == o.m &&
           (order != TermOrder::Block || block_split == o.block_split);
}

int PolyRing::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

RingPtr make_ring(std::vector<std::string> vars, TermOrder order, long m,
                  size_t block_split) {
    auto ring = std::make_shared<PolyRing>();
    ring->vars = std::move(vars);
    ring->order = order;
    ring->m = m;
    ring->block_split = block_split;
    if (order == TermOrder::Block && (block_split == 0 || block_split >= ring->vars.size()))
        throw Error("block order needs a proper split");
    return ring;
}

void Poly::check_ring(const Poly& o) const {
    if (ring_.get() == o.ring_.get()) return;
    if (!ring_->same(*o.ring_)) throw Error("polynomial ring mismatch");
}

Poly Poly::constant(RingPtr ring, const Cyclo& c) {
    Poly p(std::move(ring));
    if (c.conductor() != p.ring_->m) throw ConductorMismatch("constant conductor mismatch");
    if (!c.is_zero()) p.t_.push_back({Expo(p.ring_->nvars(), 0), c});
    return p;
}

Poly Poly::variable(RingPtr ring, size_t index) {
    Poly p(std::move(ring));
    if (index >= p.ring_->nvars()) throw Error("variable index out of range");
    Expo e(p.ring_->nvars(), 0);
    e[index] = 1;
    p.t_.push_back({std::move(e), Cyclo::one(p.ring_->m)});
    return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
    Poly p(ring);
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return ring->cmp(a.mono, b.mono) > 0;
    });
    for (Term& t : terms) {
        if (t.coeff.conductor() != ring->m)
            throw ConductorMismatch("term conductor mismatch");
        if (t.mono.size() != ring->nvars())
            throw DimensionMismatch("term arity mismatch");
        if (!p.t_.empty() && p.t_.back().mono == t.mono) {
            p.t_.back().coeff += t.coeff;
            if (p.t_.back().coeff.is_zero()) p.t_.pop_back();
        } else if (!t.coeff.is_zero()) {
            p.t_.push_back(std::move(t));
        }
    }
    return p;
}

const Term& Poly::leading() const {
    if (t_.empty()) throw Error("leading term of zero polynomial");
    return t_.front();
}

int Poly::degree() const {
    int d = -1;
    for (const Term& t : t_) d = std::max(d, total_degree(t.mono));
    return d;
}

Poly Poly::operator+(const Poly& o) const {
    check_ring(o);
    Poly r(ring_);
    r.t_.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() || j < o.t_.size()) {
        if (i == t_.size()) {
            r.t_.push_back(o.t_[j++]);
        } else if (j == o.t_.size()) {
            r.t_.push_back(t_[i++]);
        } else {
            const int c = ring_->cmp(t_[i].mono, o.t_[j].mono);
            if (c > 0) {
                r.t_.push_back(t_[i++]);
            } else if (c < 0) {
                r.t_.push_back(o.t_[j++]);
            } else {
                Cyclo sum = t_[i].coeff + o.t_[j].coeff;
                if (!sum.is_zero()) r.t_.push_back({t_[i].mono, std::move(sum)});
                ++i;
                ++j;
            }
        }
    }
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (Term& t : r.t_) t.coeff = -t.coeff;
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::mul_term(const Expo& mono, const Cyclo& coeff) const {
    Poly r(ring_);
    if (coeff.is_zero()) return r;
    r.t_.reserve(t_.size());
    for (const Term& t : t_) {
        Cyclo c = t.coeff * coeff;
        if (!c.is_zero()) r.t_.push_back({expo_mul(t.mono, mono), std::move(c)});
    }
    // multiplying by a monomial preserves the ordering of surviving terms,
    // but cancellations can leave gaps; order is unchanged for a monomial
    // order, so no resort is needed.
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_ring(o);
    Poly acc(ring_);
    for (const Term& t : o.t_) acc = acc + mul_term(t.mono, t.coeff);
    return acc;
}

Poly Poly::scaled(const Cyclo& c) const {
    Expo unit(ring_->nvars(), 0);
    return mul_term(unit, c);
}

Poly Poly::pow(int e) const {
    if (e < 0) throw Error("negative polynomial power");
    Poly acc = Poly::constant(ring_, Cyclo::one(ring_->m));
    Poly base = *this;
    int n = e;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        if (n >>= 1) base = base * base;
    }
    return acc;
}

Poly Poly::monic() const {
    if (t_.empty()) return *this;
    return scaled(leading_coeff().inverse());
}

bool Poly::operator==(const Poly& o) const {
    check_ring(o);
    return t_ == o.t_;
}

Poly Poly::substitute_rational(size_t var, const Rational& value) const {
    if (var >= ring_->nvars()) throw Error("variable index out of range");
    std::vector<Term> out;
    out.reserve(t_.size());
    for (const Term& t : t_) {
        Term nt = t;
        if (nt.mono[var] > 0) {
            nt.coeff = nt.coeff.scaled(rat_pow(value, nt.mono[var]));
            nt.mono[var] = 0;
        }
        out.push_back(std::move(nt));
    }
    return from_terms(ring_, std::move(out));
}

int Poly::degree_in(size_t var) const {
    int d = 0;
    for (const Term& t : t_) d = std::max(d, t.mono[var]);
    return d;
}

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : t_) {
        std::ostringstream mono;
        bool empty = true;
        for (size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0) continue;
            if (!empty) mono << "*";
            empty = false;
            mono << ring_->vars[i];
            if (t.mono[i] > 1) mono << "^" << t.mono[i];
        }
        const std::string ms = mono.str();
        if (t.coeff.is_rational()) {
            const Rational q = t.coeff.rational_value();
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
            os << "(" << t.coeff.str() << ")";
            if (!ms.empty()) os << "*" << ms;
        }
        first = false;
    }
    return os.str();
}

Poly poly_from_form(const RingPtr& ring, const Form& f, size_t var_offset) {
    if (ring->m != f.conductor())
        throw ConductorMismatch("poly_from_form: ring and form conductors differ");
    if (var_offset + f.dim() + 1 > ring->vars.size())
        throw DimensionMismatch("poly_from_form: form variables exceed the ring");
    std::vector<Term> terms;
    for (const auto& [mono, coeff] : f.terms()) {
        Expo e(ring->vars.size(), 0);
        for (size_t j = 0; j < mono.size(); ++j) e[var_offset + j] = mono[j];
        terms.push_back({std::move(e), coeff});
    }
    return Poly::from_terms(ring, std::move(terms));
}

} // namespace moduli
