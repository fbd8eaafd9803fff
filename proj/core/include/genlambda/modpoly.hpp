#ifndef GENLAMBDA_MODPOLY_HPP
#define GENLAMBDA_MODPOLY_HPP

#include <vector>

#include "genlambda/lambda.hpp"

namespace genlambda {

// Representatives of SL2(Z)/Gamma(N){+-E2}: deterministic enumeration of
// SL2(Z/N) modulo +-1, lifted to SL2(Z). |reps| = N^3/2 * prod(1-p^-2)
// for N > 2, and 6 for N = 2.
struct CosetReps {
    int level;
    std::vector<SL2Mat> reps;
};
CosetReps coset_reps(int n);
long coset_index(int n);  // the expected |reps|

// j = E4^3/Delta in the nome qt = q^N: coefficients for qt^{-1}..qt^{pt-1}
// (so out[i] is the coefficient of qt^{i-1}), computed exactly over Z.
std::vector<Integer> j_qtilde_coeffs(long pt);

// the same expansion re-indexed to level N (exponents multiples of N,
// order -N, constant term 744), truncated to exactly q^prec
QSeries j_series_level(int n, long prec);

// Greedy reduction of an SL2(Z)-invariant series to a polynomial in j:
// repeatedly subtract c j^m against the most negative exponent, then the
// constant. poly[m] is the coefficient of j^m.
struct JReduction {
    std::vector<CycNum> poly;
    bool remainder_zero = false;   // what remains is identically 0 at precision
    long verified_trailing = 0;    // known-zero exponents beyond the constant
    bool enough_trailing = false;  // verified_trailing >= requested minimum
    bool remainder_ok() const { return remainder_zero && enough_trailing; }
};
JReduction express_in_j(const QSeries& f, long min_trailing);

struct PsiChecks {
    bool monic = false;
    bool support_ok = false;      // every X-coefficient series has exponents = 0 mod N
    bool remainders_ok = false;   // every j-reduction left an identically zero tail
    bool integral = false;        // every table entry lies in Z[zeta]
    long prec = 0;                // q-precision of the verified run
    long verified_trailing = 0;   // minimum across coefficients
    int retries = 0;              // precision doublings performed
    std::string offending;        // first failing entry, if any
    bool pass() const { return monic && support_ok && remainders_ok && integral; }
};

// Psi_k(X) = prod_A (X - C_N Lambda_k o A): monic of degree |reps|, with
// coefficient table c[i][d] for X^i j^d over Z[zeta].
struct PsiPoly {
    int level = 0;
    long k = 0;
    long degree = 0;
    long jdegree = 0;
    std::vector<std::vector<CycNum>> c;  // c[i][d], i = 0..degree, d = 0..jdegree
    PsiChecks checks;

    const CycNum& coeff(long xpow, long jpow) const {
        return c[static_cast<std::size_t>(xpow)][static_cast<std::size_t>(jpow)];
    }
};

// Adaptive-precision construction. prec = 0 lets the policy pick
// N*(jdegree bound + 8) from the exact coset orders; insufficient runs
// double the precision and retry. Per-coset series run on `jobs` threads;
// the product tree is deterministic.
PsiPoly psi_poly(int n, long k, long prec = 0, int jobs = 1);
// same construction over a caller-supplied set of representatives (any
// full system of coset representatives yields the identical polynomial)
PsiPoly psi_from_reps(int n, long k, const std::vector<SL2Mat>& reps, long prec = 0, int jobs = 1);

// substitute an exact j value; returns the X-coefficients
std::vector<CycNum> psi_specialize(const PsiPoly& psi, const CycNum& j_val);

}  // namespace genlambda

#endif
