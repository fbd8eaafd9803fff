#include "genlambda/lambda.hpp"

#include <stdexcept>

#include "genlambda/util.hpp"

namespace genlambda {

BasisPair::BasisPair(int level_, long r1_, long s1_, long r2_, long s2_)
    : level(level_), r1(r1_), s1(s1_), r2(r2_), s2(s2_) {
    if (level < 2) throw std::invalid_argument("BasisPair: level must be >= 2");
    long d = det_mod();
    if (std::gcd(d, static_cast<long>(level)) != 1)
        throw std::invalid_argument("BasisPair: rows do not form a basis (det = " +
                                    std::to_string(d) + " mod " + std::to_string(level) + ")");
}

long BasisPair::det_mod() const { return mod_pos(r1 * s2 - s1 * r2, level); }

std::string BasisPair::str() const {
    return "Q1=(" + std::to_string(r1) + "," + std::to_string(s1) + ") Q2=(" +
           std::to_string(r2) + "," + std::to_string(s2) + ") @" + std::to_string(level);
}

long c_constant(int n) {
    if (n < 2) throw std::invalid_argument("c_constant: N must be >= 2");
    if (n == 2) return 16;
    int p = 0;
    if (is_prime_power(n, &p)) return p <= 3 ? static_cast<long>(p) * p : p;
    return 1;
}

namespace {

// Working margin for the series division: the denominator order is at
// most N/2, and the quotient loses that much precision, so inputs are
// computed at prec + N + 2 and the result truncated back to exactly prec.
QSeries lambda_ratio(const IndexPair& pa, const IndexPair& pb, const IndexPair& pc, long prec) {
    const long margin = pa.level + 2;
    QSeries num = e_diff_series(pa, pc, prec + margin);
    QSeries den = e_diff_series(pb, pc, prec + margin);
    QSeries q = num / den;
    if (q.precision() < prec)
        throw std::logic_error("lambda ratio: internal precision shortfall");
    return q.truncated(prec);
}

}  // namespace

QSeries lambda_k_series(int n, long k, long prec) {
    if (std::gcd(mod_pos(k, n), static_cast<long>(n)) != 1)
        throw std::invalid_argument("lambda_k_series: k not coprime to N");
    if (prec < 2) throw std::invalid_argument("lambda_k_series: precision must be >= 2");
    return lambda_ratio(IndexPair(n, 1, 0), IndexPair(n, 0, k), IndexPair(n, 1, k), prec);
}

QSeries lambda_composed(int n, long k, const SL2Mat& A, long prec) {
    if (std::gcd(mod_pos(k, n), static_cast<long>(n)) != 1)
        throw std::invalid_argument("lambda_composed: k not coprime to N");
    if (prec < 2) throw std::invalid_argument("lambda_composed: precision must be >= 2");
    return lambda_ratio(IndexPair(n, A.a, A.b),
                        IndexPair(n, A.c * k, A.d * k),
                        IndexPair(n, A.a + A.c * k, A.b + A.d * k), prec);
}

QSeries lambda_basis(const BasisPair& bp, long prec) {
    // For a valid basis Q2 != +-(Q1+Q2) and Q1 != +-(Q1+Q2) mod N, else one
    // generator would lie in the span of the other; e_diff_series re-checks.
    return lambda_ratio(bp.q1(), bp.q2(), bp.q1_plus_q2(), prec);
}

std::pair<long, SL2Mat> decompose_basis(const BasisPair& bp) {
    const long n = bp.level;
    long k = bp.det_mod();  // already a unit mod N, least positive residue
    long kinv = inv_mod(k, n);
    SL2Mat A = sl2_lift(bp.r1, bp.s1, mod_pos(kinv * bp.r2, n), mod_pos(kinv * bp.s2, n), n);
    // defining property: B = diag(1, k) A mod N
    if (mod_pos(A.a - bp.r1, n) != 0 || mod_pos(A.b - bp.s1, n) != 0 ||
        mod_pos(k * A.c - bp.r2, n) != 0 || mod_pos(k * A.d - bp.s2, n) != 0)
        throw std::logic_error("decompose_basis: decomposition check failed for " + bp.str());
    return {k, A};
}

std::pair<QSeries, QSeries> lambda_galois_pair(int n, long k, const SL2Mat& A, long prec) {
    if (std::gcd(mod_pos(k, n), static_cast<long>(n)) != 1)
        throw std::invalid_argument("lambda_galois_pair: k not coprime to N");
    long kinv = inv_mod(mod_pos(k, n), n);
    SL2Mat ak = sl2_lift(A.a, mod_pos(A.b * kinv, n), mod_pos(A.c * k, n), A.d, n);
    QSeries lhs = lambda_composed(n, k, A, prec);
    QSeries rhs = lambda_composed(n, 1, ak, prec).galois(k);
    return {lhs, rhs};
}

namespace {

IntegralityReport check_scalings(int n, long k, const SL2Mat& A, long prec,
                                 const QSeries& series, bool with_zeta_factor) {
    IntegralityReport rep;
    rep.level = n;
    rep.k = k;
    rep.matrix = A;
    rep.prec = prec;

    auto first_bad = [](const QSeries& s) -> std::optional<std::pair<long, CycNum>> {
        for (long e = s.order(); e < s.precision(); ++e) {
            CycNum c = s.coeff(e);
            if (!c.is_integral()) return std::pair<long, CycNum>(e, c);
        }
        return std::nullopt;
    };

    if (with_zeta_factor) {
        CycNum zf = CycNum::one(n) - CycNum::zeta_pow(n, k);
        QSeries scaled = series.scaled(zf * zf * zf);
        auto bad = first_bad(scaled);
        rep.zeta_factor_integral = !bad.has_value();
        if (bad) {
            rep.offending_exponent = bad->first;
            rep.offending_value = bad->second.str();
        }
    } else {
        rep.zeta_factor_integral = true;
    }

    QSeries cs = series.scaled(Rational(c_constant(n)));
    auto bad = first_bad(cs);
    rep.c_factor_integral = !bad.has_value();
    if (bad && !rep.offending_exponent) {
        rep.offending_exponent = bad->first;
        rep.offending_value = bad->second.str();
    }
    return rep;
}

}  // namespace

IntegralityReport integrality_certificate(int n, long k, const SL2Mat& A, long prec) {
    if (n <= 2)
        throw std::invalid_argument("integrality_certificate: stated for N > 2; "
                                    "use the level-2 branch for N = 2");
    QSeries s = lambda_composed(n, k, A, prec);
    return check_scalings(n, k, A, prec, s, true);
}

IntegralityReport integrality_certificate_level2(const SL2Mat& A, long prec) {
    QSeries s = lambda_composed(2, 1, A, prec);
    return check_scalings(2, 1, A, prec, s, false);
}

QSeries lambda_star_series(int n, long k, long ell, long prec) {
    if (!(0 < k && k != ell && 0 < ell && 2 * k < n && 2 * ell < n))
        throw std::invalid_argument("lambda_star_series: need 0 < k != ell < N/2");
    if (std::gcd(mod_pos(k + ell, n), static_cast<long>(n)) != 1)
        throw std::invalid_argument("lambda_star_series: GCD(k + ell, N) != 1");
    // wp is even, so k + 2 ell = 0 mod N makes the denominator vanish
    // identically (and 2k + ell = 0 the numerator); both are rejected, as
    // in the stronger GCD(k(k + 2 ell), N) = 1 hypothesis
    if (mod_pos(k + 2 * ell, n) == 0)
        throw std::invalid_argument("lambda_star_series: wp(ell/N) = wp((k+ell)/N) identically, "
                                    "k + 2 ell = 0 mod N");
    if (mod_pos(2 * k + ell, n) == 0)
        throw std::invalid_argument("lambda_star_series: wp(k/N) = wp((k+ell)/N) identically, "
                                    "2k + ell = 0 mod N");
    return lambda_ratio(IndexPair(n, 0, k), IndexPair(n, 0, ell), IndexPair(n, 0, k + ell), prec);
}

Remark34Report remark34_check(long prec) {
    if (prec < 3) throw std::invalid_argument("remark34_check: precision must be >= 3");
    const int n = 6;
    Remark34Report rep;
    rep.prec = prec;

    QSeries f = e_diff_series(IndexPair(n, 3, 1), IndexPair(n, 2, 3), prec) *
                    e_diff_series(IndexPair(n, 0, 1), IndexPair(n, 1, 1), prec) -
                e_diff_series(IndexPair(n, 1, 4), IndexPair(n, 2, 3), prec) *
                    e_diff_series(IndexPair(n, 1, 0), IndexPair(n, 1, 1), prec);
    rep.f_vanishes = f.is_zero();
    rep.f_vanishes_to = rep.f_vanishes ? f.precision() : f.order();
    rep.q2_coefficient_zero = f.coeff(2).is_zero();

    SL2Mat m(3, 11, 1, 4);
    rep.det_is_one = (m.det() == 1);
    rep.m_outside_gamma6 = !m.in_gamma(6);
    QSeries lhs = lambda_composed(n, 1, m, prec);
    QSeries rhs = lambda_k_series(n, 1, prec);
    rep.lambda1_fixed = lhs.congruent_to(rhs, prec);
    return rep;
}

}  // namespace genlambda
