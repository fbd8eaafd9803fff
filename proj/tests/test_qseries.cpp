#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <genlambda/qseries.hpp>
#include <genlambda/util.hpp>

using namespace genlambda;

namespace {

QSeries from_rationals(int n, long order, std::vector<long> nums, long prec) {
    std::vector<CycNum> c;
    for (long v : nums) c.push_back(CycNum::from_rational(n, Rational(v)));
    while (static_cast<long>(c.size()) < prec - order) c.push_back(CycNum::zero(n));
    return QSeries(n, order, std::move(c), prec);
}

// coefficient at exponent e depends only on (salt, e): runs at different
// precisions see identical prefixes
QSeries deterministic_series(int n, long order, long prec, std::uint64_t salt) {
    int phi = euler_phi(n);
    std::vector<CycNum> c;
    for (long e = order; e < prec; ++e) {
        Rng rng(salt * 7919 + static_cast<std::uint64_t>(e + 1000));
        std::vector<Rational> row;
        for (int i = 0; i < phi; ++i)
            row.push_back(make_rational(rng.range(-5, 5), rng.range(1, 2)));
        c.push_back(CycNum::from_coeffs(n, std::move(row)));
    }
    return QSeries(n, order, std::move(c), prec);
}

QSeries random_series(Rng& rng, int n, long order, long prec) {
    int phi = euler_phi(n);
    std::vector<CycNum> c;
    for (long e = order; e < prec; ++e) {
        std::vector<Rational> row;
        for (int i = 0; i < phi; ++i)
            row.push_back(make_rational(rng.range(-5, 5), rng.range(1, 2)));
        c.push_back(CycNum::from_coeffs(n, std::move(row)));
    }
    return QSeries(n, order, std::move(c), prec);
}

}  // namespace

TEST_CASE("construction and canonical form") {
    QSeries s = from_rationals(3, 0, {0, 1, 2}, 3);  // q + 2q^2
    CHECK(s.order() == 1);
    CHECK(s.precision() == 3);
    CHECK(s.coeff(0).is_zero());
    CHECK(s.coeff(1) == CycNum::one(3));
    CHECK_THROWS_AS(s.coeff(3), std::out_of_range);

    QSeries z = QSeries::zero(3, 5);
    CHECK(z.is_zero());
    CHECK(z.precision() == 5);
    CHECK(z.order() == 5);
}

TEST_CASE("add examples") {
    // (q + q^2) + (-q) = q^2 with precision min
    QSeries a = from_rationals(3, 1, {1, 1}, 3);
    QSeries b = from_rationals(3, 1, {-1}, 2);
    QSeries sum = a + b;
    CHECK(sum.precision() == 2);
    CHECK(sum.is_zero());  // q^2 is beyond the common precision

    QSeries b2 = from_rationals(3, 1, {-1, 0}, 3);
    QSeries sum2 = a + b2;
    CHECK(sum2.order() == 2);
    CHECK(sum2.coeff(2) == CycNum::one(3));
}

TEST_CASE("mul examples") {
    // q^{-1} * q = 1
    QSeries qinv = from_rationals(4, -1, {1}, 0);
    QSeries q = from_rationals(4, 1, {1}, 2);
    QSeries prod = qinv * q;
    CHECK(prod.order() == 0);
    CHECK(prod.coeff(0).is_one());

    // (1 - q) * (1 + q + ... + q^{P-1}) = 1 mod q^P
    const long p = 12;
    QSeries one_minus_q = from_rationals(4, 0, {1, -1}, p);
    std::vector<long> ones(p, 1);
    QSeries geo = from_rationals(4, 0, ones, p);
    QSeries prod2 = one_minus_q * geo;
    CHECK(prod2.precision() == p);
    CHECK(prod2.order() == 0);
    CHECK(prod2.coeff(0).is_one());
    for (long e = 1; e < p; ++e) CHECK(prod2.coeff(e).is_zero());
}

TEST_CASE("div examples") {
    CHECK((from_rationals(5, 2, {1}, 3) / from_rationals(5, 1, {1}, 2)).order() == 1);

    // 1/(1-q) = geometric series
    const long p = 10;
    QSeries one = from_rationals(3, 0, {1}, p);
    QSeries den = from_rationals(3, 0, {1, -1}, p);
    QSeries geo = one / den;
    for (long e = 0; e < geo.precision(); ++e) CHECK(geo.coeff(e).is_one());

    Rng rng(7);
    for (int trial = 0; trial < 8; ++trial) {
        QSeries f = random_series(rng, 5, -2, 8);
        if (f.is_zero()) continue;
        QSeries q = f / f;
        CHECK(q.order() == 0);
        CHECK(q.coeff(0).is_one());
        for (long e = 1; e < q.precision(); ++e) CHECK(q.coeff(e).is_zero());
    }
    CHECK_THROWS_AS(one / QSeries::zero(3, 4), std::domain_error);
}

TEST_CASE("division precision propagation") {
    // div(f, g) precision = min(f.P - g.order, f.order + g.P - 2 g.order)
    Rng rng(11);
    QSeries f = random_series(rng, 3, 1, 9);
    QSeries g = random_series(rng, 3, -1, 5);
    QSeries q = f / g;
    CHECK(q.precision() == std::min(9L - (-1L), 1L + 5L - 2 * (-1L)));
    CHECK(q.order() >= f.order() - g.order());
}

TEST_CASE("mul div roundtrip") {
    Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        QSeries f = random_series(rng, 4, 0, 10);
        QSeries g = random_series(rng, 4, -1, 7);
        if (g.is_zero()) continue;
        QSeries back = (f / g) * g;
        long common = std::min(back.precision(), f.precision());
        CHECK(back.congruent_to(f.truncated(common), common));
    }
}

TEST_CASE("galois commutes with arithmetic") {
    Rng rng(17);
    for (int n : {5, 8, 12}) {
        for (long ell = 2; ell < n; ++ell) {
            if (std::gcd(ell, static_cast<long>(n)) != 1) continue;
            QSeries f = random_series(rng, n, -1, 6);
            QSeries g = random_series(rng, n, 0, 6);
            CHECK((f + g).galois(ell) == f.galois(ell) + g.galois(ell));
            CHECK((f * g).galois(ell) == f.galois(ell) * g.galois(ell));
            if (!g.is_zero()) CHECK((f / g).galois(ell) == f.galois(ell) / g.galois(ell));
            for (long m = 2; m < n; ++m) {
                if (std::gcd(m, static_cast<long>(n)) != 1) continue;
                CHECK(f.galois(ell).galois(m) == f.galois(ell * m % n));
            }
        }
    }
}

TEST_CASE("integrality and support") {
    QSeries s(5, -1,
              {CycNum::one(5), CycNum::zeta_pow(5, 1)}, 1);  // q^{-1} + zeta
    CHECK(s.is_integral());
    QSeries h = from_rationals(5, 1, {1}, 2).scaled(Rational(1, 2));
    CHECK_FALSE(h.is_integral());

    QSeries m = from_rationals(4, -4, {1, 0, 0, 0, 5}, 1);
    CHECK(m.supported_on_multiples_of(4));
    CHECK_FALSE(from_rationals(4, -4, {1, 0, 0, 1, 5}, 1).supported_on_multiples_of(4));
}

TEST_CASE("precision bookkeeping is conservative under recomputation") {
    // run a pipeline at two precisions; the higher run truncates to the lower
    auto pipeline = [](long p) {
        QSeries f = deterministic_series(3, 0, p, 1);
        QSeries g = deterministic_series(3, 1, p, 2);
        QSeries h = deterministic_series(3, -2, p, 3);
        return (f * g + h) / (f + QSeries::monomial(CycNum::one(3), 0, p));
    };
    QSeries low = pipeline(12);
    QSeries high = pipeline(24);
    CHECK(high.truncated(low.precision()) == low);
}

TEST_CASE("zero series remembers precision") {
    QSeries f = from_rationals(3, 0, {1, 2, 3}, 3);
    QSeries diff = f - f;
    CHECK(diff.is_zero());
    CHECK(diff.precision() == 3);
}
