#include <moduli/criterion.hpp>

#include <moduli/cyclotomic.hpp>
#include <moduli/errors.hpp>

#include <algorithm>
#include <sstream>

namespace moduli {

namespace {

std::vector<std::pair<long, int>> prime_power_factors(long n) {
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.push_back({p, e});
        }
    if (n > 1) out.push_back({n, 1});
    return out;
}

}  // namespace

Integer degree_Dn(long d, long N, long n) {
    if (d < 2) throw Error("degree_Dn: degree must be at least 2");
    if (N < 1) throw Error("degree_Dn: ambient dimension must be at least 1");
    if (n < 1) throw Error("degree_Dn: iterate must be at least 1");
    Integer step;
    mpz_ui_pow_ui(step.get_mpz_t(), static_cast<unsigned long>(d),
                  static_cast<unsigned long>(n));
    Integer sum = 1;
    Integer power = 1;
    for (long i = 1; i <= N; ++i) {
        power *= step;
        sum += power;
    }
    return sum;
}

CriterionCertificate criterion_check(long d, long N) {
    if (d < 2) throw Error("criterion_check: degree must be at least 2");
    if (N < 1) throw Error("criterion_check: ambient dimension must be at least 1");
    CriterionCertificate cert;
    cert.d = d;
    cert.N = N;
    const long modulus = N + 1;
    cert.window = euler_phi(modulus);
    for (const auto& [p, e] : prime_power_factors(modulus)) {
        Integer pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(e));
        cert.prime_powers.push_back(pe);
    }
    for (long n = 1; n <= cert.window; ++n) {
        CriterionRow row;
        row.n = n;
        row.Dn = degree_Dn(d, N, n);
        row.gcd_value = gcd(row.Dn, Integer(modulus));
        for (const Integer& pe : cert.prime_powers) row.residues.push_back(row.Dn % pe);
        cert.rows.push_back(row);
        if (row.gcd_value == 1) {
            cert.pass = true;
            cert.witness = n;
            break;
        }
    }
    return cert;
}

std::string CriterionCertificate::str() const {
    std::ostringstream os;
    const long modulus = N + 1;
    os << "gcd criterion: d = " << d << ", N = " << N << ", modulus N+1 = " << modulus;
    const auto factors = prime_power_factors(modulus);
    if (!(factors.size() == 1 && factors[0].second == 1)) {
        os << " = ";
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) os << " * ";
            os << factors[i].first;
            if (factors[i].second > 1) os << "^" << factors[i].second;
        }
    }
    os << "\n";
    os << "window: n in [1, " << window << "]   (totient of " << modulus << " is "
       << window << ")\n";

    std::vector<std::string> headers = {"n", "D_n",
                                        "gcd(D_n, " + std::to_string(modulus) + ")"};
    for (const Integer& pe : prime_powers) headers.push_back("mod " + pe.get_str());
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : rows) {
        std::vector<std::string> line = {std::to_string(row.n), row.Dn.get_str(),
                                         row.gcd_value.get_str()};
        for (const Integer& r : row.residues) line.push_back(r.get_str());
        cells.push_back(std::move(line));
    }
    std::vector<size_t> width(headers.size());
    for (size_t c = 0; c < headers.size(); ++c) {
        width[c] = headers[c].size();
        for (const auto& line : cells) width[c] = std::max(width[c], line[c].size());
    }
    auto emit = [&](const std::vector<std::string>& line) {
        os << "  ";
        for (size_t c = 0; c < line.size(); ++c) {
            os << line[c];
            if (c + 1 < line.size()) os << std::string(width[c] - line[c].size() + 2, ' ');
        }
        os << "\n";
    };
    emit(headers);
    for (const auto& line : cells) emit(line);

    if (pass)
        os << "verdict: Pass; witness n = " << witness << " with gcd("
           << rows.back().Dn.get_str() << ", " << modulus << ") = 1\n";
    else
        os << "verdict: Fail; criterion inconclusive (no window iterate has gcd(D_n, "
           << modulus << ") = 1)\n";
    return os.str();
}

}
