#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <genlambda/eisenstein.hpp>
#include <genlambda/suites.hpp>
#include <genlambda/util.hpp>

using namespace genlambda;

namespace {

CycNum rat(int n, long num, long den = 1) {
    return CycNum::from_rational(n, make_rational(num, den));
}

}  // namespace

TEST_CASE("brace and mu") {
    auto bm = brace_mu(3, 5);
    CHECK(bm.brace == 2);
    CHECK(bm.mu == -1);
    bm = brace_mu(3, 6);  // x = N/2
    CHECK(bm.brace == 3);
    CHECK(bm.mu == 1);
    bm = brace_mu(7, 5);
    CHECK(bm.brace == 2);
    CHECK(bm.mu == 1);
    bm = brace_mu(0, 9);
    CHECK(bm.brace == 0);
    CHECK(bm.mu == 1);
    // x = mu(x){x} mod N over a sweep
    for (int n = 2; n <= 12; ++n)
        for (long x = -2 * n; x <= 2 * n; ++x) {
            auto b = brace_mu(x, n);
            CHECK(0 <= b.brace);
            CHECK(2 * b.brace <= n);
            CHECK(mod_pos(x - b.mu * b.brace, n) == 0);
            if (mod_pos(x, n) == 0 || 2 * mod_pos(x, n) == n) CHECK(b.mu == 1);
        }
}

TEST_CASE("index transform") {
    IndexPair p(7, 1, 0);
    IndexPair t = index_transform(p, SL2Mat(1, 1, 0, 1));
    CHECK(mod_pos(t.r, 7) == 1);
    CHECK(mod_pos(t.s, 7) == 1);
    t = index_transform(p, SL2Mat(0, -1, 1, 0));
    CHECK(mod_pos(t.r, 7) == 0);
    CHECK(mod_pos(t.s, 7) == 6);
    // (1,k) under [[a,b],[c,d]] gives (a+ck, b+dk)
    SL2Mat a(2, 1, 1, 1);
    long k = 3;
    t = index_transform(IndexPair(7, 1, k), a);
    CHECK(mod_pos(t.r - (a.a + a.c * k), 7) == 0);
    CHECK(mod_pos(t.s - (a.b + a.d * k), 7) == 0);

    CHECK_THROWS_AS(IndexPair(5, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(IndexPair(5, 5, 10), std::invalid_argument);
}

TEST_CASE("e_series frozen examples") {
    // N=2, (0,1): -1/4 + 0 q - 4 q^2 + O(q^3)
    QSeries e = e_series(IndexPair(2, 0, 1), 3);
    CHECK(e.coeff(0) == rat(2, -1, 4));
    CHECK(e.coeff(1).is_zero());
    CHECK(e.coeff(2) == rat(2, -4));

    // N=3, (1,0): q + 3q^2 + q^3 + O(q^4); the m=n=1 double-sum term
    // contributes q^2 - 2q^3
    e = e_series(IndexPair(3, 1, 0), 4);
    CHECK(e.coeff(0).is_zero());
    CHECK(e.coeff(1).is_one());
    CHECK(e.coeff(2) == rat(3, 3));
    CHECK(e.coeff(3) == rat(3, 1));

    // N=2, (1,0): 2q + O(q^2); the {r} = N/2 overlap where u^{-n} q^{mnN}
    // lands on the single-sum exponent
    e = e_series(IndexPair(2, 1, 0), 2);
    CHECK(e.coeff(0).is_zero());
    CHECK(e.coeff(1) == rat(2, 2));

    CHECK_THROWS_AS(e_series(IndexPair(2, 1, 0), 0), std::invalid_argument);
}

TEST_CASE("e_diff_series golden congruences") {
    // the two level-independent displays hold mod q^3 for N >= 4
    for (int n = 4; n <= 12; ++n) {
        CycNum z = CycNum::zeta_pow(n, 1);
        CycNum one = CycNum::one(n);
        CycNum theta = z * ((one - z) * (one - z)).inverse();

        QSeries d1 = e_diff_series(IndexPair(n, 0, 1), IndexPair(n, 1, 1), 3);
        CHECK(d1.coeff(0) == theta);
        CHECK(d1.coeff(1) == -z);
        CHECK(d1.coeff(2) == (z * z).scaled(Rational(-2)));

        QSeries d2 = e_diff_series(IndexPair(n, 1, 0), IndexPair(n, 1, 1), 3);
        CHECK(d2.coeff(0).is_zero());
        CHECK(d2.coeff(1) == one - z);
        CHECK(d2.coeff(2) == (one - z * z).scaled(Rational(2)));
    }

    // at N=3 the double sum contributes at q^2 (the u^{-1} q^N correction
    // of the congruence formulas): coefficients are -3 zeta^2 and 3(1-zeta^2)
    {
        const int n = 3;
        CycNum z = CycNum::zeta_pow(n, 1);
        CycNum one = CycNum::one(n);
        QSeries d1 = e_diff_series(IndexPair(n, 0, 1), IndexPair(n, 1, 1), 3);
        CHECK(d1.coeff(1) == -z);
        CHECK(d1.coeff(2) == (z * z).scaled(Rational(-3)));
        QSeries d2 = e_diff_series(IndexPair(n, 1, 0), IndexPair(n, 1, 1), 3);
        CHECK(d2.coeff(1) == one - z);
        CHECK(d2.coeff(2) == (one - z * z).scaled(Rational(3)));
    }

    // N=2: 4q + O(q^2), from the two frozen e_series examples
    QSeries d = e_diff_series(IndexPair(2, 1, 0), IndexPair(2, 1, 1), 2);
    CHECK(d.order() == 1);
    CHECK(d.coeff(1) == rat(2, 4));

    CHECK_THROWS_AS(e_diff_series(IndexPair(5, 1, 2), IndexPair(5, 4, 3), 4),
                    std::domain_error);  // p2 = -p1
    CHECK_THROWS_AS(e_diff_series(IndexPair(5, 1, 2), IndexPair(5, 6, 7), 4),
                    std::domain_error);  // p2 = p1 mod N
}

TEST_CASE("theta_leading examples") {
    for (int n : {3, 5, 8}) {
        CycNum z = CycNum::zeta_pow(n, 1);
        CycNum one = CycNum::one(n);
        auto [t1, th1] = theta_leading(IndexPair(n, 0, 1), IndexPair(n, 1, 1));
        CHECK(t1 == 0);
        CHECK(th1 == z * ((one - z) * (one - z)).inverse());
        auto [t2, th2] = theta_leading(IndexPair(n, 1, 0), IndexPair(n, 1, 1));
        CHECK(t2 == 1);
        CHECK(th2 == one - z);
    }
    // N=2 is the {r} = N/2 case: theta = -(w1-w2)(1-w1w2)/(w1w2) = 4
    auto [t, th] = theta_leading(IndexPair(2, 1, 0), IndexPair(2, 1, 1));
    CHECK(t == 1);
    CHECK(th == rat(2, 4));
    CHECK_THROWS_AS(theta_leading(IndexPair(4, 1, 1), IndexPair(4, 3, 3)), std::domain_error);
}

TEST_CASE("theta matches the full series over all pairs, small levels") {
    for (int n : {2, 3, 4, 5, 6, 7}) {
        for (long r1 = 0; r1 < n; ++r1)
            for (long s1 = 0; s1 < n; ++s1)
                for (long r2 = 0; r2 < n; ++r2)
                    for (long s2 = 0; s2 < n; ++s2) {
                        if ((r1 == 0 && s1 == 0) || (r2 == 0 && s2 == 0)) continue;
                        IndexPair p1(n, r1, s1), p2(n, r2, s2);
                        if (p1.same_class(p2)) continue;
                        auto [t, theta] = theta_leading(p1, p2);
                        QSeries diff = e_diff_series(p1, p2, t + 2);
                        CHECK(diff.order() == t);
                        CHECK(diff.coeff(t) == theta);
                    }
    }
}

TEST_CASE("periodicity and evenness of the raw expansion") {
    Rng rng(5);
    for (int n = 2; n <= 12; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            long r = rng.range(0, n - 1), s = rng.range(0, n - 1);
            if (r == 0 && s == 0) s = 1;
            long a = rng.range(-2, 2), b = rng.range(-2, 2);
            QSeries base = e_series_raw(IndexPair(n, r, s), 2 * n + 3);
            CHECK(base == e_series_raw(IndexPair(n, r + a * n, s + b * n), 2 * n + 3));
            CHECK(base == e_series_raw(IndexPair(n, -r, -s), 2 * n + 3));
        }
}

TEST_CASE("difference congruences verbatim, N up to 8") {
    for (int n = 2; n <= 8; ++n)
        for (long r1 = 0; r1 < n; ++r1)
            for (long s1 = 0; s1 < n; ++s1)
                for (long r2 = 0; r2 < n; ++r2)
                    for (long s2 = 0; s2 < n; ++s2) {
                        if ((r1 == 0 && s1 == 0) || (r2 == 0 && s2 == 0)) continue;
                        IndexPair p1(n, r1, s1), p2(n, r2, s2);
                        if (p1.same_class(p2)) continue;
                        QSeries diff = e_diff_series(p1, p2, n);
                        QSeries rhs = e_diff_congruence_rhs(p1, p2, n);
                        CHECK(diff.congruent_to(rhs, n));
                    }
}

TEST_CASE("galois equivariance samples") {
    for (int n : {5, 7, 12}) {
        for (long ell = 2; ell < n; ++ell) {
            if (std::gcd(ell, static_cast<long>(n)) != 1) continue;
            for (auto [r, s] : {std::pair<long, long>{1, 0}, {0, 1}, {2, 3}, {1, 1}}) {
                if (mod_pos(r, n) == 0 && mod_pos(s, n) == 0) continue;
                QSeries lhs = e_series(IndexPair(n, r, s), 40).galois(ell);
                QSeries rhs = e_series(IndexPair(n, r, s * ell), 40);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("level 2 trace identity") {
    const long p = 50;
    QSeries sum = e_series(IndexPair(2, 1, 0), p) + e_series(IndexPair(2, 0, 1), p) +
                  e_series(IndexPair(2, 1, 1), p);
    CHECK(sum == QSeries::monomial(rat(2, -1, 4), 0, p));
}

TEST_CASE("h tail is integral") {
    for (int n : {3, 5, 6}) {
        const long window = 4 * n;
        for (auto [pr, ps] : {std::pair<long, long>{1, 0}, {0, 1}, {1, 2}}) {
            IndexPair p1(n, pr, ps);
            IndexPair p2(n, 2, 1);
            if (p1.same_class(p2)) continue;
            auto [t, theta] = theta_leading(p1, p2);
            QSeries diff = e_diff_series(p1, p2, t + window + 2);
            QSeries normalized = diff.scaled(theta.inverse()).shifted(-t);
            CHECK(normalized.coeff(0).is_one());
            QSeries h = (normalized -
                         QSeries::monomial(CycNum::one(n), 0, normalized.precision()))
                            .shifted(-1);
            CHECK(h.truncated(window).is_integral());
        }
    }
}
