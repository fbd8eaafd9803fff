#include "genlambda/modpoly.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <stdexcept>

#include "genlambda/util.hpp"

namespace genlambda {

long coset_index(int n) {
    long count = static_cast<long>(n) * n * n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            count = count / (static_cast<long>(p) * p) * (static_cast<long>(p) * p - 1);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) count = count / (static_cast<long>(m) * m) * (static_cast<long>(m) * m - 1);
    return n > 2 ? count / 2 : count;
}

CosetReps coset_reps(int n) {
    if (n < 2) throw std::invalid_argument("coset_reps: N must be >= 2");
    using Tup = std::array<long, 4>;
    std::set<Tup> classes;
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            for (long c = 0; c < n; ++c)
                for (long d = 0; d < n; ++d) {
                    if (mod_pos(a * d - b * c - 1, n) != 0) continue;
                    Tup t{a, b, c, d};
                    Tup neg{mod_pos(-a, n), mod_pos(-b, n), mod_pos(-c, n), mod_pos(-d, n)};
                    classes.insert(std::min(t, neg));
                }
    CosetReps out;
    out.level = n;
    out.reps.reserve(classes.size());
    for (const Tup& t : classes) out.reps.push_back(sl2_lift(t[0], t[1], t[2], t[3], n));
    if (static_cast<long>(out.reps.size()) != coset_index(n))
        throw std::logic_error("coset_reps: enumeration count " + std::to_string(out.reps.size()) +
                               " does not match index " + std::to_string(coset_index(n)));
    return out;
}

// ---------------------------------------------------------------------
// j-expansion over Z

namespace {

using ZSeries = std::vector<Integer>;  // exponents 0..len-1

ZSeries zmul(const ZSeries& a, const ZSeries& b, std::size_t len) {
    ZSeries out(len, Integer(0));
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i] == 0) continue;
        std::size_t jmax = std::min(b.size(), len - i);
        for (std::size_t j = 0; j < jmax; ++j)
            if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
    return out;
}

// inverse of a series with constant term 1
ZSeries zinv(const ZSeries& a, std::size_t len) {
    ZSeries out(len, Integer(0));
    out[0] = 1;
    for (std::size_t i = 1; i < len; ++i) {
        Integer acc(0);
        std::size_t jmax = std::min(i, a.size() - 1);
        for (std::size_t j = 1; j <= jmax; ++j)
            if (a[j] != 0) acc += a[j] * out[i - j];
        out[i] = -acc;
    }
    return out;
}

Integer sigma3(long n) {
    Integer acc(0);
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        long e = n / d;
        acc += Integer(d) * d * d;
        if (e != d) acc += Integer(e) * e * e;
    }
    return acc;
}

// prod_{n>=1} (1 - x^n) via Euler's pentagonal expansion
ZSeries eta_quotientless(std::size_t len) {
    ZSeries out(len, Integer(0));
    out[0] = 1;
    for (long k = 1;; ++k) {
        long g1 = k * (3 * k - 1) / 2;
        long g2 = k * (3 * k + 1) / 2;
        if (g1 >= static_cast<long>(len) && g2 >= static_cast<long>(len)) break;
        Integer sign = (k % 2 == 0) ? 1 : -1;
        if (g1 < static_cast<long>(len)) out[static_cast<std::size_t>(g1)] += sign;
        if (g2 < static_cast<long>(len)) out[static_cast<std::size_t>(g2)] += sign;
    }
    return out;
}

}  // namespace

std::vector<Integer> j_qtilde_coeffs(long pt) {
    if (pt < 2) throw std::invalid_argument("j_qtilde_coeffs: precision must be >= 2");
    const std::size_t len = static_cast<std::size_t>(pt) + 1;  // exponents 0..pt of x*j

    ZSeries e4(len, Integer(0));
    e4[0] = 1;
    for (std::size_t m = 1; m < len; ++m) e4[m] = 240 * sigma3(static_cast<long>(m));

    ZSeries eta = eta_quotientless(len);
    ZSeries p2 = zmul(eta, eta, len);
    ZSeries p4 = zmul(p2, p2, len);
    ZSeries p8 = zmul(p4, p4, len);
    ZSeries p16 = zmul(p8, p8, len);
    ZSeries eta24 = zmul(p16, p8, len);  // (1-x^n) product to the 24th

    ZSeries e43 = zmul(zmul(e4, e4, len), e4, len);
    // x*j = E4^3 / eta24; the unit has constant term 1, so the quotient
    // stays in Z
    ZSeries xj = zmul(e43, zinv(eta24, len), len);
    return xj;  // xj[i] = coefficient of qt^{i-1} in j
}

QSeries j_series_level(int n, long prec) {
    if (prec <= -n) throw std::invalid_argument("j_series_level: precision too small");
    long pt = (prec - 1) / n + 1;  // need qt exponents e with e*n < prec
    if (pt < 2) pt = 2;
    std::vector<Integer> xj = j_qtilde_coeffs(pt);

    long order = -static_cast<long>(n);
    std::vector<CycNum> c(static_cast<std::size_t>(prec - order), CycNum::zero(n));
    for (std::size_t i = 0; i < xj.size(); ++i) {
        long e = (static_cast<long>(i) - 1) * n;  // q-exponent
        if (e >= prec) break;
        c[static_cast<std::size_t>(e - order)] = CycNum::from_rational(n, Rational(xj[i]));
    }
    return QSeries(n, order, std::move(c), prec);
}

// ---------------------------------------------------------------------

JReduction express_in_j(const QSeries& f, long min_trailing) {
    const int n = f.level();
    JReduction out;
    if (!f.supported_on_multiples_of(n))
        throw std::invalid_argument("express_in_j: series has an exponent not divisible by N; "
                                    "input is not invariant under tau -> tau+1");

    long d = 0;
    if (!f.is_zero() && f.order() < 0) {
        if (mod_pos(f.order(), n) != 0)
            throw std::invalid_argument("express_in_j: pole order not divisible by N");
        d = -f.order() / n;
    }
    out.poly.assign(static_cast<std::size_t>(d) + 1, CycNum::zero(n));

    // j-powers at enough precision that every power still covers f's
    // window: each multiplication by j costs N of precision
    QSeries j = j_series_level(n, f.precision() + d * n);
    std::vector<QSeries> jpow;
    jpow.reserve(static_cast<std::size_t>(d) + 1);
    jpow.push_back(QSeries::monomial(CycNum::one(n), 0, f.precision() + d * n));
    for (long m = 1; m <= d; ++m) jpow.push_back(jpow.back() * j);

    QSeries g = f;
    while (!g.is_zero() && g.order() < 0) {
        long m = -g.order() / n;
        if (m * n != -g.order() || m > d)
            throw std::logic_error("express_in_j: reduction left an unexpected pole");
        CycNum c = g.leading();
        out.poly[static_cast<std::size_t>(m)] = c;
        g = g - jpow[static_cast<std::size_t>(m)].scaled(c);
    }
    if (!g.is_zero() && g.order() == 0) {
        out.poly[0] = g.coeff(0);
        g = g - QSeries::monomial(out.poly[0], 0, g.precision());
    }
    out.remainder_zero = g.is_zero();
    out.verified_trailing = g.precision() - 1;  // exponents 1..P-1 checked
    out.enough_trailing = out.verified_trailing >= min_trailing;
    return out;
}

// ---------------------------------------------------------------------

namespace {

// polynomial in X with series coefficients, low X-power first
using XPoly = std::vector<QSeries>;

// each output X-power is an independent convolution slot, so the loop
// parallelizes without changing the summation order within a slot
XPoly xpoly_mul(const XPoly& u, const XPoly& v, int jobs) {
    XPoly out(u.size() + v.size() - 1);
    parallel_for(out.size(), jobs, [&](std::size_t k) {
        QSeries acc;
        std::size_t ilo = k >= v.size() ? k - v.size() + 1 : 0;
        for (std::size_t i = ilo; i < u.size() && i <= k; ++i) {
            QSeries t = u[i] * v[k - i];
            if (acc.is_null()) acc = std::move(t);
            else acc = acc + t;
        }
        out[k] = std::move(acc);
    });
    return out;
}

XPoly product_tree(const std::vector<XPoly>& leaves, std::size_t lo, std::size_t hi, int jobs) {
    if (hi - lo == 1) return leaves[lo];
    std::size_t mid = lo + (hi - lo) / 2;
    return xpoly_mul(product_tree(leaves, lo, mid, jobs),
                     product_tree(leaves, mid, hi, jobs), jobs);
}

}  // namespace

PsiPoly psi_poly(int n, long k, long prec, int jobs) {
    return psi_from_reps(n, k, coset_reps(n).reps, prec, jobs);
}

PsiPoly psi_from_reps(int n, long k, const std::vector<SL2Mat>& rep_list, long prec, int jobs) {
    if (std::gcd(mod_pos(k, n), static_cast<long>(n)) != 1)
        throw std::invalid_argument("psi_poly: k not coprime to N");
    const long degree = static_cast<long>(rep_list.size());
    const Rational cn(c_constant(n));

    // Exact orders of the factors from the leading-coefficient table: the
    // order of Lambda_k o A is t_num - t_den with no cancellation, so the
    // pole bound (and with it the required precision) needs no series run.
    long maxneg = 0;
    for (const SL2Mat& a : rep_list) {
        IndexPair pa(n, a.a, a.b);
        IndexPair pb(n, a.c * k, a.d * k);
        IndexPair pc(n, a.a + a.c * k, a.b + a.d * k);
        long t_num = theta_leading(pa, pc).first;
        long t_den = theta_leading(pb, pc).first;
        maxneg = std::max(maxneg, t_den - t_num);
    }
    long jdeg_bound = (maxneg * degree + n - 1) / n;
    long p = prec > 0 ? prec : n * (jdeg_bound + 8);

    PsiPoly psi;
    psi.level = n;
    psi.k = k;
    psi.degree = degree;

    const int max_retries = 6;
    for (int attempt = 0;; ++attempt) {
        // factors X - C_N Lambda_k o A
        std::vector<XPoly> leaves(rep_list.size());
        parallel_for(rep_list.size(), jobs, [&](std::size_t i) {
            QSeries s = lambda_composed(n, k, rep_list[i], p).scaled(cn);
            XPoly leaf(2);
            leaf[0] = -s;
            leaf[1] = QSeries::monomial(CycNum::one(n), 0, p);
            leaves[i] = std::move(leaf);
        });

        XPoly coeffs = product_tree(leaves, 0, leaves.size(), jobs);

        bool support_ok = true;
        bool remainders_zero = true;
        bool enough = true;
        long min_trailing_seen = LONG_MAX;
        std::vector<JReduction> reductions(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (!coeffs[i].supported_on_multiples_of(n)) {
                support_ok = false;
                psi.checks.offending = "X^" + std::to_string(i) + " has off-lattice exponent";
                break;
            }
            reductions[i] = express_in_j(coeffs[i], 8L * n);
            remainders_zero = remainders_zero && reductions[i].remainder_zero;
            enough = enough && reductions[i].enough_trailing;
            min_trailing_seen = std::min(min_trailing_seen, reductions[i].verified_trailing);
        }

        if (support_ok && remainders_zero && !enough && attempt < max_retries) {
            p *= 2;
            continue;
        }

        psi.checks.prec = p;
        psi.checks.retries = attempt;
        psi.checks.support_ok = support_ok;
        psi.checks.remainders_ok = remainders_zero && enough;
        psi.checks.verified_trailing = min_trailing_seen == LONG_MAX ? 0 : min_trailing_seen;
        if (!support_ok)
            throw std::logic_error("psi_poly: " + psi.checks.offending);
        if (!remainders_zero)
            throw std::logic_error("psi_poly: a coefficient is not a polynomial in j at N=" +
                                   std::to_string(n) + " k=" + std::to_string(k) +
                                   "; this would falsify the construction");
        if (!enough)
            throw std::logic_error("psi_poly: could not verify trailing coefficients after " +
                                   std::to_string(max_retries) + " precision doublings");

        long jdeg = 0;
        for (const JReduction& red : reductions)
            jdeg = std::max(jdeg, static_cast<long>(red.poly.size()) - 1);
        psi.jdegree = jdeg;
        psi.c.assign(static_cast<std::size_t>(degree) + 1,
                     std::vector<CycNum>(static_cast<std::size_t>(jdeg) + 1, CycNum::zero(n)));
        for (std::size_t i = 0; i < reductions.size(); ++i)
            for (std::size_t dd = 0; dd < reductions[i].poly.size(); ++dd)
                psi.c[i][dd] = reductions[i].poly[dd];

        psi.checks.monic =
            psi.c[static_cast<std::size_t>(degree)][0].is_one() &&
            std::all_of(psi.c.back().begin() + 1, psi.c.back().end(),
                        [](const CycNum& x) { return x.is_zero(); });

        psi.checks.integral = true;
        for (std::size_t i = 0; i <= static_cast<std::size_t>(degree) && psi.checks.integral; ++i)
            for (std::size_t dd = 0; dd <= static_cast<std::size_t>(jdeg); ++dd)
                if (!psi.c[i][dd].is_integral()) {
                    psi.checks.integral = false;
                    psi.checks.offending = "X^" + std::to_string(i) + " j^" + std::to_string(dd) +
                                           " = " + psi.c[i][dd].str();
                    break;
                }
        return psi;
    }
}

std::vector<CycNum> psi_specialize(const PsiPoly& psi, const CycNum& j_val) {
    std::vector<CycNum> out;
    out.reserve(psi.c.size());
    for (const std::vector<CycNum>& row : psi.c) {
        // Horner in j
        CycNum acc = CycNum::zero(psi.level);
        for (std::size_t d = row.size(); d-- > 0;) acc = acc * j_val + row[d];
        out.push_back(std::move(acc));
    }
    return out;
}

}  // namespace genlambda
