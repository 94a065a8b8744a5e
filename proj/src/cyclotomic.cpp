#include "moduli/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace moduli {

long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long euler_phi(long m) {
    if (m <= 0) throw Error("conductor must be positive");
    long result = m;
    long n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Quotient of monic-divisor polynomial division, used only where the
// division is exact (x^m - 1 by a product of cyclotomics).
std::vector<Rational> divexact(const std::vector<Rational>& num,
                               const std::vector<Rational>& den) {
    std::vector<Rational> rem = num;
    const size_t dn = den.size() - 1;   // den monic of this degree
    if (rem.size() - 1 < dn) throw Error("divexact: degree underflow");
    std::vector<Rational> quot(rem.size() - dn, Rational(0));
    for (size_t i = rem.size(); i-- > dn;) {
        Rational c = rem[i];
        if (c == 0) continue;
        quot[i - dn] = c;
        for (size_t j = 0; j <= dn; ++j)
            rem[i - dn + j] -= c * den[j];
    }
    for (const Rational& c : rem)
        if (c != 0) throw Error("divexact: nonzero remainder");
    return quot;
}

std::vector<Rational> compute_cyclotomic(long m);

std::mutex cyclo_cache_mutex;
std::map<long, std::vector<Rational>>& cyclo_cache() {
    static std::map<long, std::vector<Rational>> cache;
    return cache;
}

const std::vector<Rational>& cyclotomic_cached(long m) {
    {
        std::lock_guard<std::mutex> lock(cyclo_cache_mutex);
        auto it = cyclo_cache().find(m);
        if (it != cyclo_cache().end()) return it->second;
    }
    std::vector<Rational> phi = compute_cyclotomic(m);
    std::lock_guard<std::mutex> lock(cyclo_cache_mutex);
    return cyclo_cache().emplace(m, std::move(phi)).first->second;
}

// Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d.  Recursion bottoms out at
// Phi_1 = x - 1; the cache keeps the recursion shallow in practice.
std::vector<Rational> compute_cyclotomic(long m) {
    if (m == 1) return {Rational(-1), Rational(1)};
    std::vector<Rational> num(m + 1, Rational(0));
    num[0] = -1;
    num[m] = 1;
    std::vector<Rational> acc = num;
    for (long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        acc = divexact(acc, cyclotomic_cached(d));
    }
    if (static_cast<long>(acc.size()) != euler_phi(m) + 1)
        throw Error("cyclotomic polynomial degree mismatch");
    return acc;
}

std::mutex power_cache_mutex;
std::map<long, std::vector<std::vector<Rational>>>& power_cache() {
    static std::map<long, std::vector<std::vector<Rational>>> cache;
    return cache;
}

} // namespace

const std::vector<Rational>& cyclotomic_polynomial(long m) {
    if (m <= 0) throw Error("conductor must be positive");
    return cyclotomic_cached(m);
}

const std::vector<std::vector<Rational>>& zeta_power_table(long m) {
    if (m <= 0) throw Error("conductor must be positive");
    {
        std::lock_guard<std::mutex> lock(power_cache_mutex);
        auto it = power_cache().find(m);
        if (it != power_cache().end()) return it->second;
    }
    const std::vector<Rational>& phi = cyclotomic_polynomial(m);
    const long deg = static_cast<long>(phi.size()) - 1;
    std::vector<std::vector<Rational>> table;
    table.reserve(m);
    std::vector<Rational> cur(deg, Rational(0));
    cur[0] = 1;
    for (long t = 0; t < m; ++t) {
        table.push_back(cur);
        // multiply by z, reduce by monic Phi_m
        Rational top = cur[deg - 1];
        for (long i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (long i = 0; i < deg; ++i) cur[i] -= top * phi[i];
    }
    std::lock_guard<std::mutex> lock(power_cache_mutex);
    return power_cache().emplace(m, std::move(table)).first->second;
}

Cyclo::Cyclo(long m, std::vector<Rational> coeffs) : m_(m), c_(std::move(coeffs)) {
    const long deg = euler_phi(m);
    if (c_.size() > static_cast<size_t>(deg)) {
        // reduce high powers via the power table
        std::vector<Rational> reduced(deg, Rational(0));
        const auto& pow = zeta_power_table(m);
        for (size_t j = 0; j < c_.size(); ++j) {
            if (c_[j] == 0) continue;
            const auto& zj = pow[j % m];
            for (long i = 0; i < deg; ++i) reduced[i] += c_[j] * zj[i];
        }
        c_ = std::move(reduced);
    } else {
        c_.resize(deg, Rational(0));
    }
}

Cyclo Cyclo::zero(long m) { return Cyclo(m, {}); }

Cyclo Cyclo::one(long m) { return from_rational(m, Rational(1)); }

Cyclo Cyclo::from_rational(long m, const Rational& q) {
    std::vector<Rational> c(euler_phi(m), Rational(0));
    c[0] = q;
    return Cyclo(m, std::move(c));
}

Cyclo Cyclo::zeta(long m, long t) {
    t %= m;
    if (t < 0) t += m;
    return Cyclo(m, zeta_power_table(m)[t]);
}

Cyclo Cyclo::imag_unit(long m) {
    if (m % 4 != 0)
        throw Error("imaginary unit needs 4 | conductor, got m=" + std::to_string(m));
    return zeta(m, m / 4);
}

bool Cyclo::is_zero() const {
    for (const Rational& q : c_)
        if (q != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational Cyclo::rational_value() const {
    if (!is_rational()) throw Error("value is not rational: " + str());
    return c_[0];
}

void Cyclo::check_same(const Cyclo& o) const {
    if (m_ != o.m_)
        throw ConductorMismatch("conductor mismatch: " + std::to_string(m_) +
                                " vs " + std::to_string(o.m_));
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (Rational& q : r.c_) q = -q;
    return r;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    check_same(o);
    Cyclo r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
    check_same(o);
    Cyclo r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
    check_same(o);
    const size_t n = c_.size();
    std::vector<Rational> conv(2 * n - 1, Rational(0));
    for (size_t i = 0; i < n; ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) {
            if (o.c_[j] == 0) continue;
            conv[i + j] += c_[i] * o.c_[j];
        }
    }
    // reduce by monic Phi_m
    const auto& phi = cyclotomic_polynomial(m_);
    for (size_t i = conv.size(); i-- > n;) {
        Rational c = conv[i];
        if (c == 0) continue;
        conv[i] = 0;
        for (size_t j = 0; j < n; ++j)
            conv[i - n + j] -= c * phi[j];
    }
    conv.resize(n);
    return Cyclo(m_, std::move(conv));
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw Error("division by zero in Q(zeta_" + std::to_string(m_) + ")");
    // extended Euclid in Q[x] against Phi_m; gcd is 1 since Phi_m is irreducible
    std::vector<Rational> r0 = cyclotomic_polynomial(m_);
    std::vector<Rational> r1 = c_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};
    auto deg = [](const std::vector<Rational>& p) {
        return static_cast<long>(p.size()) - 1;
    };
    while (deg(r1) > 0) {
        // r0 = q*r1 + r2
        std::vector<Rational> rem = r0;
        std::vector<Rational> quot(std::max<long>(deg(r0) - deg(r1) + 1, 0), Rational(0));
        const Rational lead = r1.back();
        for (long i = deg(rem); i >= deg(r1); --i) {
            Rational c = rem[i] / lead;
            if (c == 0) continue;
            quot[i - deg(r1)] = c;
            for (long j = 0; j <= deg(r1); ++j)
                rem[i - deg(r1) + j] -= c * r1[j];
        }
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        // s2 = s0 - q*s1
        std::vector<Rational> s2 = s0;
        s2.resize(std::max(s0.size(), quot.size() + s1.size()), Rational(0));
        for (size_t i = 0; i < quot.size(); ++i) {
            if (quot[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j)
                s2[i + j] -= quot[i] * s1[j];
        }
        while (!s2.empty() && s2.back() == 0) s2.pop_back();
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
        if (r1.empty()) throw Error("inverse: unexpected zero remainder");
    }
    // r1 is a nonzero constant c; inverse = s1 / c
    const Rational c = r1[0];
    for (Rational& q : s1) q /= c;
    return Cyclo(m_, std::move(s1));
}

Cyclo Cyclo::operator/(const Cyclo& o) const {
    check_same(o);
    return *this * o.inverse();
}

Cyclo Cyclo::pow(long e) const {
    Cyclo base = e < 0 ? inverse() : *this;
    long n = e < 0 ? -e : e;
    Cyclo acc = Cyclo::one(m_);
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

bool Cyclo::operator==(const Cyclo& o) const {
    check_same(o);
    return c_ == o.c_;
}

Cyclo Cyclo::scaled(const Rational& q) const {
    Cyclo r = *this;
    for (Rational& c : r.c_) c *= q;
    return r;
}

Cyclo Cyclo::galois(long k) const {
    k %= m_;
    if (k < 0) k += m_;
    if (m_ == 1) return *this;
    if (gcd_long(k, m_) != 1)
        throw Error("galois exponent " + std::to_string(k) +
                    " is not a unit mod " + std::to_string(m_));
    const auto& pow = zeta_power_table(m_);
    std::vector<Rational> out(c_.size(), Rational(0));
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        const auto& img = pow[(static_cast<long>(j) * k) % m_];
        for (size_t i = 0; i < out.size(); ++i) out[i] += c_[j] * img[i];
    }
    return Cyclo(m_, std::move(out));
}

Cyclo Cyclo::lift(long m2) const {
    if (m2 % m_ != 0)
        throw ConductorMismatch("cannot lift conductor " + std::to_string(m_) +
                                " into " + std::to_string(m2));
    if (m2 == m_) return *this;
    const long step = m2 / m_;
    const auto& pow = zeta_power_table(m2);
    std::vector<Rational> out(euler_phi(m2), Rational(0));
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        const auto& img = pow[(static_cast<long>(j) * step) % m2];
        for (size_t i = 0; i < out.size(); ++i) out[i] += c_[j] * img[i];
    }
    return Cyclo(m2, std::move(out));
}

std::string Cyclo::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const Rational& q = c_[i];
        if (q == 0) continue;
        const bool neg = sgn(q) < 0;
        Rational mag = neg ? Rational(-q) : q;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        const bool unit = (mag == 1);
        if (i == 0) {
            os << mag.get_str();
        } else {
            if (!unit) os << mag.get_str() << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

GaloisElement galois_element(long m, long k) {
    if (m <= 0) throw Error("conductor must be positive");
    k %= m;
    if (k < 0) k += m;
    if (m == 1) return GaloisElement{1, 1};
    if (gcd_long(k, m) != 1)
        throw Error("galois exponent " + std::to_string(k) +
                    " is not a unit mod " + std::to_string(m));
    return GaloisElement{m, k};
}

GaloisElement GaloisElement::compose(const GaloisElement& o) const {
    if (m != o.m) throw ConductorMismatch("composing galois elements of different conductors");
    if (m == 1) return GaloisElement{1, 1};
    return GaloisElement{m, (k * o.k) % m};
}

GaloisElement GaloisElement::inverse() const {
    if (m == 1) return GaloisElement{1, 1};
    // order of (Z/m)* divides phi(m); k^(phi(m)-1) inverts k
    long e = euler_phi(m) - 1;
    long acc = 1, base = k % m;
    while (e > 0) {
        if (e & 1) acc = (acc * base) % m;
        base = (base * base) % m;
        e >>= 1;
    }
    return GaloisElement{m, acc};
}

std::vector<GaloisElement> galois_group(long m) {
    if (m <= 0) throw Error("conductor must be positive");
    if (m == 1) return {GaloisElement{1, 1}};
    std::vector<GaloisElement> g;
    for (long k = 1; k < m; ++k)
        if (gcd_long(k, m) == 1) g.push_back(GaloisElement{m, k});
    return g;
}

bool fixed_field_test(const Cyclo& a, const std::vector<GaloisElement>& subgroup) {
    if (subgroup.empty()) throw Error("fixed_field_test: empty subgroup");
    for (const GaloisElement& s : subgroup) {
        if (s.m != a.conductor())
            throw ConductorMismatch("subgroup conductor differs from element conductor");
        for (const GaloisElement& t : subgroup) {
            const GaloisElement st = s.compose(t);
            bool found = false;
            for (const GaloisElement& u : subgroup)
                if (u == st) { found = true; break; }
            if (!found)
                throw Error("fixed_field_test: set is not closed under composition");
        }
    }
    for (const GaloisElement& s : subgroup)
        if (a.galois(s.k) != a) return false;
    return true;
}

} // namespace moduli
