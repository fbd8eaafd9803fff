#ifndef GENLAMBDA_LAMBDA_HPP
#define GENLAMBDA_LAMBDA_HPP

#include <optional>
#include <utility>

#include "genlambda/eisenstein.hpp"

namespace genlambda {

// A basis {Q1, Q2} of Z/NZ + Z/NZ, held as the rows of a matrix B whose
// determinant must be a unit mod N.
struct BasisPair {
    int level;
    long r1, s1;  // Q1
    long r2, s2;  // Q2

    BasisPair(int level_, long r1_, long s1_, long r2_, long s2_);
    long det_mod() const;  // det B mod N, in [0, N)
    IndexPair q1() const { return IndexPair(level, r1, s1); }
    IndexPair q2() const { return IndexPair(level, r2, s2); }
    IndexPair q1_plus_q2() const { return IndexPair(level, r1 + r2, s1 + s2); }
    std::string str() const;
};

// C_2 = 2^4; for N = p^l: p^2 if p in {2,3}, p if p > 3; 1 otherwise.
long c_constant(int n);

// Lambda_k = (E(1,0) - E(1,k)) / (E(0,k) - E(1,k)), truncated to exactly
// q^prec. Order 1 for every N.
QSeries lambda_k_series(int n, long k, long prec);

// Lambda_k o A as the E-ratio with indices (a,b), (ck,dk), (a+ck,b+dk);
// a Laurent series, possibly of negative order.
QSeries lambda_composed(int n, long k, const SL2Mat& A, long prec);

// Lambda(tau; Q1, Q2) computed directly from the basis; the
// decomposition through Prop-style (k, A) is kept as an independently
// tested path, not the main one.
QSeries lambda_basis(const BasisPair& bp, long prec);

// k = det B mod N (least positive), A an SL2(Z) lift of diag(1,k^-1)B.
// The defining property B = diag(1,k) A mod N is re-checked on every call.
std::pair<long, SL2Mat> decompose_basis(const BasisPair& bp);

// both sides of Lambda_k o A = (Lambda_1 o A_k)^{sigma_k}
std::pair<QSeries, QSeries> lambda_galois_pair(int n, long k, const SL2Mat& A, long prec);

struct IntegralityReport {
    int level = 0;
    long k = 0;
    SL2Mat matrix;
    long prec = 0;
    bool zeta_factor_integral = false;  // (1 - zeta^k)^3 * Lambda_k o A
    bool c_factor_integral = false;     // C_N * Lambda_k o A
    // first offending exponent when a check fails
    std::optional<long> offending_exponent;
    std::string offending_value;
    bool pass() const { return zeta_factor_integral && c_factor_integral; }
};

// Integrality certificates at level N > 2. For N = 2 only the C_2
// scaling applies; use the dedicated branch below.
IntegralityReport integrality_certificate(int n, long k, const SL2Mat& A, long prec);
// N = 2 branch: checks C_2 * Lambda_1 o A only
IntegralityReport integrality_certificate_level2(const SL2Mat& A, long prec);

// Lambda*_{k,l} = (E(0,k) - E(0,k+l)) / (E(0,l) - E(0,k+l));
// requires 0 < k != l < N/2 and GCD(k+l, N) = 1. Order 0.
QSeries lambda_star_series(int n, long k, long ell, long prec);

struct Remark34Report {
    long prec = 0;
    bool f_vanishes = false;          // F = 0 mod q^prec
    long f_vanishes_to = 0;
    bool q2_coefficient_zero = false;
    bool det_is_one = false;
    bool m_outside_gamma6 = false;
    bool lambda1_fixed = false;       // Lambda_1 o M = Lambda_1 mod q^prec
    bool pass() const {
        return f_vanishes && q2_coefficient_zero && det_is_one && m_outside_gamma6 &&
               lambda1_fixed;
    }
};

// The N = 6 exceptional check around M = [[3,11],[1,4]].
Remark34Report remark34_check(long prec);

}  // namespace genlambda

#endif
