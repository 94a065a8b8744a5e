#pragma once

#include <moduli/rational.hpp>

#include <string>
#include <vector>

namespace moduli {

// Degree of the period-n zero-cycle of a degree-d endomorphism of P^N:
// the exact integer 1 + d^n + d^{2n} + ... + d^{Nn}.  Requires d >= 2,
// N >= 1, n >= 1.
Integer degree_Dn(long d, long N, long n);

// One examined iterate: D_n, gcd(D_n, N+1), and D_n mod each prime power
// divisor of N+1 in ascending prime order.
struct CriterionRow {
    long n = 0;
    Integer Dn;
    Integer gcd_value;
    std::vector<Integer> residues;
};

// Outcome of the coprimality test gcd(D_n, N+1) = 1 over the window
// n in [1, phi(N+1)].  Pass carries the least witness n and the rows
// examined up to it; Fail carries the complete residue table for the
// window.  Fail decides nothing: the test is a sufficient condition
// only, so a Fail report reads "criterion inconclusive".
struct CriterionCertificate {
    long d = 0;
    long N = 0;
    long window = 0;
    bool pass = false;
    long witness = 0;
    std::vector<Integer> prime_powers;
    std::vector<CriterionRow> rows;

    std::string str() const;
};

CriterionCertificate criterion_check(long d, long N);

}
