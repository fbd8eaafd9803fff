#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <genlambda/cm.hpp>
#include <genlambda/suites.hpp>

#include <complex>

using namespace genlambda;

namespace {

constexpr mpfr_prec_t kPrec = 256;

HPComplex cpx(double re, double im) {
    char buf[64];
    snprintf(buf, sizeof buf, "%.17g", re);
    Real r(std::string(buf), kPrec);
    snprintf(buf, sizeof buf, "%.17g", im);
    Real i(std::string(buf), kPrec);
    return HPComplex(std::move(r), std::move(i));
}

std::complex<double> to_std(const HPComplex& z) {
    return {z.re.to_double(), z.im.to_double()};
}

// Independent oracle: wp(z; Z + Z tau)/(2 pi i)^2 - 1/12 by direct lattice
// summation. Terms are paired (omega, -omega) to make the truncated sum
// O(1/M^2) accurate; crude, slow, and entirely separate from the
// q-expansion path.
std::complex<double> e_lattice_oracle(std::complex<double> z, std::complex<double> tau,
                                      int box) {
    std::complex<double> acc = 1.0 / (z * z);
    for (int m = -box; m <= box; ++m)
        for (int n = -box; n <= box; ++n) {
            if (m == 0 && n == 0) continue;
            std::complex<double> w = static_cast<double>(m) + static_cast<double>(n) * tau;
            acc += 1.0 / ((z - w) * (z - w)) - 1.0 / (w * w);
        }
    std::complex<double> two_pi_i(0.0, 2.0 * M_PI);
    return acc / (two_pi_i * two_pi_i) - 1.0 / 12.0;
}

}  // namespace

TEST_CASE("fundamental reduce") {
    {
        auto [t, a] = fundamental_reduce(HPComplex(0, 1, kPrec));
        CHECK(a == SL2Mat::identity());
        CHECK((t - HPComplex(0, 1, kPrec)).abs_upper() < 1e-40);
    }
    {
        auto [t, a] = fundamental_reduce(cpx(5.0, 1.0));
        CHECK(a == SL2Mat(1, -5, 0, 1));
        CHECK((t - HPComplex(0, 1, kPrec)).abs_upper() < 1e-40);
    }
    {
        HPComplex tau = cpx(-0.5, 0.5);
        auto [t, a] = fundamental_reduce(tau);
        // in the domain, and t = A tau to full precision
        CHECK(t.im.to_double() >= 0.86);
        CHECK(std::abs(t.re.to_double()) <= 0.5 + 1e-12);
        HPComplex num = HPComplex(Real(a.a, kPrec), Real(0, kPrec)) * tau +
                        HPComplex(Real(a.b, kPrec), Real(0, kPrec));
        HPComplex den = HPComplex(Real(a.c, kPrec), Real(0, kPrec)) * tau +
                        HPComplex(Real(a.d, kPrec), Real(0, kPrec));
        CHECK((num / den - t).abs_upper() < 1e-40);
    }
    CHECK_THROWS_AS(fundamental_reduce(cpx(0.0, -1.0)), std::invalid_argument);
}

TEST_CASE("e_value matches the frozen series example") {
    // N=2, (0,1), tau = 10i: -1/4 - 4 e^{-20 pi} + tiny
    HPComplex v = e_value(IndexPair(2, 0, 1), cpx(0.0, 10.0), 40);
    double expect = -0.25 - 4.0 * std::exp(-20.0 * M_PI);
    CHECK(std::abs(v.re.to_double() - expect) < 1e-25);
    CHECK(std::abs(v.im.to_double()) < 1e-25);
    CHECK(v.err < 1e-38);
}

TEST_CASE("e_value against the lattice-sum oracle") {
    // N=3, (1,0), tau = i: wp(tau/3)/(2 pi i)^2 - 1/12
    std::complex<double> tau(0.0, 1.0);
    std::complex<double> oracle = e_lattice_oracle(tau / 3.0, tau, 900);
    HPComplex v = e_value(IndexPair(3, 1, 0), HPComplex(0, 1, kPrec), 40);
    CHECK(std::abs(to_std(v) - oracle) < 1e-6);

    // a second index and point
    std::complex<double> tau2(0.3, 1.2);
    std::complex<double> z2 = (2.0 * tau2 + 1.0) / 5.0;
    std::complex<double> oracle2 = e_lattice_oracle(z2, tau2, 900);
    HPComplex v2 = e_value(IndexPair(5, 2, 1), cpx(0.3, 1.2), 40);
    CHECK(std::abs(to_std(v2) - oracle2) < 1e-6);
}

TEST_CASE("e_value is q-periodic: tau and tau + N agree") {
    for (int n : {2, 5}) {
        HPComplex tau = cpx(0.2, 1.1);
        HPComplex shifted(tau.re + Real(n, kPrec), tau.im, tau.err);
        HPComplex a = e_value(IndexPair(n, 1, 2), tau, 40);
        HPComplex b = e_value(IndexPair(n, 1, 2), shifted, 40);
        CHECK((a - b).abs_upper() < 1e-35);
    }
}

TEST_CASE("e_value with fundamental-domain reduction agrees with direct sum") {
    // Im tau = 0.3 forces the weight-2 reduction path; compare against the
    // lattice oracle which needs no reduction
    std::complex<double> tau(0.1, 0.45);
    std::complex<double> oracle = e_lattice_oracle((tau + 1.0) / 4.0, tau, 900);
    HPComplex v = e_value(IndexPair(4, 1, 1), cpx(0.1, 0.45), 40);
    CHECK(std::abs(to_std(v) - oracle) < 2e-5);
}

TEST_CASE("lambda_value at theta = i, level 2") {
    HPComplex v = lambda_value(BasisPair(2, 1, 0, 0, 1), HPComplex(0, 1, kPrec), 50);
    CHECK((v - HPComplex(-1, 0, kPrec)).abs_upper() < 1e-30);
}

TEST_CASE("lambda series and value agree") {
    const int n = 3;
    HPComplex tau = cpx(0.0, 2.0);
    HPComplex direct = lambda_value(BasisPair(n, 1, 0, 0, 1), tau, 50);
    QSeries series = lambda_k_series(n, 1, 160);
    // evaluate the series at q = e^{2 pi i tau / N}
    Real two_pi = Real::pi(kPrec) * Real(2, kPrec);
    HPComplex arg((-tau.im) * two_pi / Real(n, kPrec), tau.re * two_pi / Real(n, kPrec));
    HPComplex q = cexp(arg);
    HPComplex acc = HPComplex::zero(kPrec);
    for (long e = series.precision(); e-- > series.order();) {
        acc = acc * q;
        CycNum ce = series.coeff(e);
        if (!ce.is_zero()) acc = acc + cyc_to_complex(ce, kPrec);
    }
    acc = acc * cpow(q, series.order());
    CHECK((acc - direct).abs_upper() < 1e-30);
}

TEST_CASE("gamma invariance of lambda_value") {
    const int n = 4;
    Rng rng(55);
    BasisPair bp(n, 1, 0, 0, 3);
    HPComplex tau = cpx(0.3, 1.4);
    HPComplex base = lambda_value(bp, tau, 45);
    for (int trial = 0; trial < 3; ++trial) {
        SL2Mat g = random_gamma_n(rng, n);
        HPComplex num = HPComplex(Real(g.a, kPrec), Real(0, kPrec)) * tau +
                        HPComplex(Real(g.b, kPrec), Real(0, kPrec));
        HPComplex den = HPComplex(Real(g.c, kPrec), Real(0, kPrec)) * tau +
                        HPComplex(Real(g.d, kPrec), Real(0, kPrec));
        HPComplex moved = lambda_value(bp, num / den, 45);
        CHECK((moved - base).abs_upper() < 1e-30);
    }
}

TEST_CASE("j classical values") {
    HPComplex j1 = j_value(HPComplex(0, 1, kPrec), 50);
    CHECK((j1 - HPComplex(1728, 0, kPrec)).abs_upper() < 1e-30);

    HPComplex rho(Real(Rational(1, 2), kPrec), Real(3, kPrec).sqrt() / Real(2, kPrec));
    rho.err = err_up(4.0 * rho.im.ulp_bound());
    CHECK(j_value(rho, 50).abs_upper() < 1e-30);

    HPComplex s2(Real(0, kPrec), Real(2, kPrec).sqrt());
    s2.err = err_up(4.0 * s2.im.ulp_bound());
    CHECK((j_value(s2, 50) - HPComplex(8000, 0, kPrec)).abs_upper() < 1e-30);
}

TEST_CASE("error bounds shrink and conclusions are stable when digits double") {
    IndexPair p(3, 1, 0);
    HPComplex tau = cpx(0.1, 1.3);
    HPComplex lo = e_value(p, tau, 30);
    HPComplex hi = e_value(p, tau, 60);
    CHECK(hi.err < lo.err);
    CHECK((lo - hi).abs_upper() < 2.0 * (lo.err + hi.err) + 1e-28);
}

TEST_CASE("truncation bound is honest: doubling the digits budget stays within err") {
    // e_value at digits d carries a tail bound; the d and 2d runs must
    // agree within the smaller budget
    for (auto [re, im] : {std::pair<double, double>{0.0, 0.9}, {0.25, 1.7}}) {
        HPComplex a = e_value(IndexPair(6, 1, 2), cpx(re, im), 25);
        HPComplex b = e_value(IndexPair(6, 1, 2), cpx(re, im), 50);
        CHECK((a - b).abs_upper() < a.err + 1e-24);
    }
}

TEST_CASE("weight-2 transformation law numerically") {
    Rng rng(60);
    for (int trial = 0; trial < 4; ++trial) {
        int n = 2 + static_cast<int>(rng.below(5));
        SL2Mat a = random_sl2(rng, 2);
        HPComplex tau = cpx(-0.3 + 0.1 * static_cast<double>(rng.below(7)),
                            0.9 + 0.15 * static_cast<double>(rng.below(8)));
        long r = rng.range(0, n - 1), s = rng.range(0, n - 1);
        if (r == 0 && s == 0) r = 1;
        IndexPair p(n, r, s);
        HPComplex ca(Real(a.c, kPrec), Real(0, kPrec));
        HPComplex da(Real(a.d, kPrec), Real(0, kPrec));
        HPComplex aa(Real(a.a, kPrec), Real(0, kPrec));
        HPComplex ba(Real(a.b, kPrec), Real(0, kPrec));
        HPComplex den = ca * tau + da;
        HPComplex atau = (aa * tau + ba) / den;
        // the exact law lives on the wp-value E + 1/12; the bare E display
        // shifts by (1 - (c tau + d)^{-2})/12
        HPComplex twelfth(Real(Rational(1, 12), kPrec), Real(0, kPrec));
        HPComplex lhs = (e_value(p, atau, 45) + twelfth) / (den * den);
        HPComplex rhs = e_value(index_transform(p, a), tau, 45) + twelfth;
        CHECK((lhs - rhs).abs_upper() < 1e-30);
    }
}

TEST_CASE("cm_certify") {
    {
        PsiPoly psi = psi_poly(2, 1);
        CMPoint theta;
        theta.tau = HPComplex(0, 1, kPrec);
        CMCertificate cert = cm_certify(psi, theta, 60);
        CHECK(cert.certified);
        CHECK(cert.residual < 1e-30);
        CHECK((cert.x - HPComplex(-16, 0, kPrec)).abs_upper() < 1e-30);
        CHECK((cert.j_theta - HPComplex(1728, 0, kPrec)).abs_upper() < 1e-30);
    }
    {
        PsiPoly psi = psi_poly(3, 1);
        CMPoint ti;
        ti.tau = HPComplex(0, 1, kPrec);
        CHECK(cm_certify(psi, ti, 60).certified);
        CMPoint rho = CMPoint::from_discriminant(-3, kPrec);
        CMCertificate cert = cm_certify(psi, rho, 60);
        CHECK(cert.certified);
        CHECK(cert.j_theta.abs_upper() < 1e-30);  // j = 0 branch
    }
}

TEST_CASE("discriminant constructor") {
    CMPoint p4 = CMPoint::from_discriminant(-4, kPrec);
    CHECK(std::abs(p4.tau.im.to_double() - 1.0) < 1e-15);
    CHECK(p4.tau.re.is_zero());
    CMPoint p3 = CMPoint::from_discriminant(-3, kPrec);
    CHECK(std::abs(p3.tau.re.to_double() - 0.5) < 1e-15);
    CHECK(std::abs(p3.tau.im.to_double() - std::sqrt(3.0) / 2) < 1e-15);
    CHECK_THROWS_AS(CMPoint::from_discriminant(-5, kPrec), std::invalid_argument);
    CHECK_THROWS_AS(CMPoint::from_discriminant(4, kPrec), std::invalid_argument);
}
