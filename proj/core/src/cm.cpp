#include "genlambda/cm.hpp"

#include <cmath>

#include "genlambda/util.hpp"

namespace genlambda {

namespace {

mpfr_prec_t working_prec(long digits) {
    // error bounds live in double exponent range; tail bounds saturate
    // (soundly) near 1e-320, so far beyond this the truncation search
    // reports PrecisionFailure instead of certifying
    if (digits < 1 || digits > 1000)
        throw std::invalid_argument("digits must be in [1, 1000]");
    return static_cast<mpfr_prec_t>(static_cast<double>(digits) * 3.3220) + 64;
}

// Sound tail bound for sum_{e >= T} mass(e) x^e with mass(e) <= c e^deg:
// e^deg x^{e/2} is decreasing for e >= -2 deg / ln x, so the tail is at
// most c T^deg x^T / (1 - sqrt(x)).
double series_tail_bound(double c, int deg, long t, double x) {
    if (!(x > 0.0 && x < 1.0)) throw PrecisionFailure("tail bound: |q| not below 1");
    double need = -2.0 * deg / std::log(x);
    if (static_cast<double>(t) < need) return HUGE_VAL;  // caller must enlarge T
    double xt = std::pow(x, static_cast<double>(t));
    if (xt == 0.0) xt = 1e-320;  // underflow clamp keeps the bound sound
    double td = std::pow(static_cast<double>(t), deg);
    return err_up(c * td * xt / (1.0 - std::sqrt(x)) * (1.0 + 1e-9));
}

long pick_truncation(double c, int deg, double x, double target) {
    for (long t = 16;; t *= 2) {
        if (series_tail_bound(c, deg, t, x) < target) {
            // refine downward in linear steps of t/8
            long lo = t / 2, hi = t;
            while (hi - lo > std::max<long>(8, t / 64)) {
                long mid = (lo + hi) / 2;
                if (series_tail_bound(c, deg, mid, x) < target) hi = mid;
                else lo = mid;
            }
            return hi;
        }
        if (t > (1L << 26)) throw PrecisionFailure("tail bound unreachable at this |q|");
    }
}

// q = exp(2 pi i tau / n)
HPComplex nome(const HPComplex& tau, int n, mpfr_prec_t prec) {
    Real two_pi = Real::pi(prec) * Real(2, prec);
    HPComplex it(-tau.im, tau.re, tau.err);  // i*tau
    HPComplex arg(it.re * two_pi / Real(n, prec), it.im * two_pi / Real(n, prec));
    arg.err = err_up(tau.err * 7.0 / n + 8.0 * (arg.re.ulp_bound() + arg.im.ulp_bound()));
    return cexp(arg);
}

// direct summation of the expansion at a point of the fundamental domain
HPComplex e_value_direct(const IndexPair& p, const HPComplex& tau, long digits,
                         mpfr_prec_t prec) {
    const int n = p.level;
    ReducedIndex red = reduce_index(p);
    const long rb = red.brace;
    const long w = red.omega_exponent;

    HPComplex q = nome(tau, n, prec);
    double q0 = q.abs_upper();
    if (q0 >= 0.995)
        throw PrecisionFailure("e_value: |q| too close to 1 even after reduction");
    double target = 0.5 * std::pow(10.0, -static_cast<double>(digits) - 2);
    long trunc = pick_truncation(3.0, 2, q0, target);

    HPComplex omega = root_of_unity(n, w, prec);
    HPComplex acc = HPComplex::zero(prec);

    if (rb == 0) {
        HPComplex one = HPComplex::one(prec);
        HPComplex d = one - omega;
        acc = acc + omega / (d * d);
    } else {
        HPComplex u = omega * cpow(q, rb);
        HPComplex upow = HPComplex::one(prec);
        for (long k = 1; k * rb < trunc; ++k) {
            upow = upow * u;
            acc = acc + upow.scaled(k);
        }
    }
    HPComplex womega = omega.conj();  // omega^{-1}; |omega| = 1
    for (long k = 1; k * (n - rb) < trunc; ++k) {
        HPComplex wk = cpow(omega, k);
        HPComplex wmk = cpow(womega, k);
        for (long m = 1; k * (m * n - rb) < trunc; ++m) {
            // n (u^k + u^{-k} - 2) q^{mkn} split by exponent
            long e_minus = k * (m * n - rb);
            long e_mid = m * k * n;
            long e_plus = k * (m * n + rb);
            acc = acc + (wmk * cpow(q, e_minus)).scaled(k);
            if (e_mid < trunc) acc = acc + cpow(q, e_mid).scaled(-2 * k);
            if (e_plus < trunc) acc = acc + (wk * cpow(q, e_plus)).scaled(k);
        }
    }
    acc.err = err_up(acc.err + series_tail_bound(3.0, 2, trunc, q0));
    return acc;
}

struct ReducedPoint {
    HPComplex tau;
    SL2Mat a;      // tau' = A tau
    bool reduced;
};

ReducedPoint reduce_if_low(const HPComplex& tau, mpfr_prec_t prec) {
    Real lim("0.8", prec);
    if (tau.im > lim) return {tau, SL2Mat::identity(), false};
    auto [t2, a] = fundamental_reduce(tau);
    return {t2, a, true};
}

}  // namespace

CMPoint CMPoint::from_discriminant(long d, mpfr_prec_t prec) {
    if (d >= 0) throw std::invalid_argument("CMPoint: discriminant must be negative");
    long ad = -d;
    long rem = mod_pos(d, 4);
    CMPoint p;
    p.disc = d;
    if (rem == 0) {
        Real y = (Real(ad, prec) / Real(4, prec)).sqrt();
        p.tau = HPComplex(Real(0, prec), y);
        p.tau.err = err_up(4.0 * y.ulp_bound());
    } else if (rem == 1) {
        Real y = Real(ad, prec).sqrt() / Real(2, prec);
        p.tau = HPComplex(Real(Rational(1, 2), prec), y);
        p.tau.err = err_up(4.0 * y.ulp_bound());
    } else {
        throw std::invalid_argument("CMPoint: discriminant must be 0 or 1 mod 4");
    }
    return p;
}

std::pair<HPComplex, SL2Mat> fundamental_reduce(const HPComplex& tau) {
    if (tau.im.sign() <= 0)
        throw std::invalid_argument("fundamental_reduce: Im tau must be positive");
    mpfr_prec_t prec = tau.prec();
    HPComplex t = tau;
    SL2Mat a;
    Real one(1, prec);
    Real margin(Rational(1, 1 << 20), prec);
    for (int iter = 0; iter < 10000; ++iter) {
        long nshift = t.re.round_to_long();
        if (nshift != 0) {
            t.re = t.re - Real(nshift, prec);
            a = SL2Mat(1, -nshift, 0, 1) * a;
        }
        Real norm2 = t.re * t.re + t.im * t.im;
        if (!(norm2 < one - margin)) return {t, a};
        // invert: tau -> -1/tau
        HPComplex inv = HPComplex(Real(-1, prec), Real(0, prec)) / t;
        t = inv;
        a = SL2Mat(0, -1, 1, 0) * a;
    }
    throw PrecisionFailure("fundamental_reduce: did not converge");
}

HPComplex e_value(const IndexPair& p, const HPComplex& tau, long digits) {
    mpfr_prec_t prec = working_prec(digits);
    ReducedPoint rp = reduce_if_low(tau, prec);
    if (!rp.reduced) return e_value_direct(p, rp.tau, digits, prec);
    // The weight-2 object is E + 1/12 (the wp-value): for tau' = A tau,
    // A = [[a,b],[c,d]],
    //   E(tau; p) + 1/12 = (-c tau' + a)^2 (E(tau'; p A^{-1}) + 1/12).
    // The bare transformation of E picks up the 1/12 shift; it cancels in
    // the differences every downstream ratio uses.
    IndexPair moved = index_transform(p, rp.a.inverse());
    HPComplex factor = HPComplex(Real(rp.a.a, prec), Real(0, prec)) -
                       rp.tau * HPComplex(Real(rp.a.c, prec), Real(0, prec));
    HPComplex twelfth(Real(Rational(1, 12), prec), Real(0, prec));
    twelfth.err = err_up(2.0 * twelfth.re.ulp_bound());
    return factor * factor * (e_value_direct(moved, rp.tau, digits, prec) + twelfth) - twelfth;
}

HPComplex lambda_value(const BasisPair& bp, const HPComplex& tau, long digits) {
    mpfr_prec_t prec = working_prec(digits);
    ReducedPoint rp = reduce_if_low(tau, prec);
    SL2Mat inv = rp.a.inverse();
    IndexPair q1 = index_transform(bp.q1(), inv);
    IndexPair q2 = index_transform(bp.q2(), inv);
    IndexPair q12 = index_transform(bp.q1_plus_q2(), inv);
    // the common weight-2 factors cancel in the weight-0 ratio
    HPComplex e12 = e_value_direct(q12, rp.tau, digits, prec);
    HPComplex num = e_value_direct(q1, rp.tau, digits, prec) - e12;
    HPComplex den = e_value_direct(q2, rp.tau, digits, prec) - e12;
    return num / den;
}

HPComplex j_value(const HPComplex& tau, long digits) {
    mpfr_prec_t prec = working_prec(digits);
    auto [t, a] = fundamental_reduce(tau);
    (void)a;  // j is weight 0
    HPComplex qt = nome(t, 1, prec);
    double x = qt.abs_upper();
    if (x >= 0.995) throw PrecisionFailure("j_value: |qt| too close to 1 after reduction");
    // j has a qt^{-1} pole; aim the partial sums a bit below the target
    double target = 0.5 * std::pow(10.0, -static_cast<double>(digits) - 4) * x;

    // E4 = 1 + 240 sum sigma3(m) qt^m; sigma3(m) <= m^4
    long t4 = pick_truncation(240.0, 4, x, target);
    HPComplex e4 = HPComplex::one(prec);
    HPComplex qpow = HPComplex::one(prec);
    std::vector<Integer> s3(static_cast<std::size_t>(t4), Integer(0));
    for (long m = 1; m < t4; ++m)
        for (long d2 = m; d2 < t4; d2 += m) s3[static_cast<std::size_t>(d2)] += Integer(m) * m * m;
    for (long m = 1; m < t4; ++m) {
        qpow = qpow * qt;
        HPComplex coef(Real(Rational(240 * s3[static_cast<std::size_t>(m)]), prec), Real(0, prec));
        coef.err = err_up(2.0 * coef.re.ulp_bound());
        e4 = e4 + coef * qpow;
    }
    e4.err = err_up(e4.err + series_tail_bound(240.0, 4, t4, x));

    // Delta = qt prod (1 - qt^m)^24; truncated product carries the factor
    // bound |prod_{m>T}(1-qt^m)^24 - 1| <= exp(24 x^{T+1}/(1-x)) - 1
    long tp = t4;
    HPComplex prod = HPComplex::one(prec);
    qpow = HPComplex::one(prec);
    for (long m = 1; m < tp; ++m) {
        qpow = qpow * qt;
        HPComplex f = HPComplex::one(prec) - qpow;
        HPComplex f2 = f * f;
        HPComplex f4 = f2 * f2;
        HPComplex f8 = f4 * f4;
        prod = prod * (f8 * f8 * f8);
    }
    double xtp = std::pow(x, static_cast<double>(tp));
    if (xtp == 0.0) xtp = 1e-320;
    double tail_arg = err_up(24.0 * xtp / (1.0 - x));
    double delta_rel = err_up((std::expm1(tail_arg)) * 1.0001);
    HPComplex delta = qt * prod;
    delta.err = err_up(delta.err + delta_rel * delta.abs_upper());

    return (e4 * e4 * e4) / delta;
}

namespace {

// log10 bound on the embedded magnitude |sum c_i zeta^i| <= sum |c_i|
double cyc_log10_bound(const CycNum& a) {
    double worst = -400.0;
    for (const Rational& r : a.coeffs()) {
        if (r == 0) continue;
        double v = 0.30103 * (static_cast<double>(mpz_sizeinbase(r.get_num().get_mpz_t(), 2)) -
                              static_cast<double>(mpz_sizeinbase(r.get_den().get_mpz_t(), 2)) + 1);
        worst = std::max(worst, v);
    }
    return worst + std::log10(static_cast<double>(a.coeffs().size()) + 1.0);
}

}  // namespace

CMCertificate cm_certify(const PsiPoly& psi, const CMPoint& theta, long digits) {
    const int n = psi.level;
    CMCertificate cert;
    cert.level = n;
    cert.k = psi.k;
    cert.digits = digits;
    cert.disc = theta.disc;
    cert.theta = theta.tau;

    BasisPair bp(n, 1, 0, 0, psi.k);
    cert.x = lambda_value(bp, theta.tau, digits).scaled(c_constant(n));
    cert.j_theta = j_value(theta.tau, digits);

    // The Horner sum cancels terms as large as max |c[i][d]| |j|^d |x|^i
    // down to ~0, so the evaluation runs at digits + magnitude headroom to
    // leave a certified budget of ~10^{-digits} absolute.
    double lx = std::log10(cert.x.abs_upper() + 2.0);
    double lj = std::log10(cert.j_theta.abs_upper() + 2.0);
    double magnitude = 0.0;
    for (std::size_t i = 0; i < psi.c.size(); ++i)
        for (std::size_t d = 0; d < psi.c[i].size(); ++d) {
            if (psi.c[i][d].is_zero()) continue;
            magnitude = std::max(magnitude, cyc_log10_bound(psi.c[i][d]) +
                                                static_cast<double>(d) * lj +
                                                static_cast<double>(i) * lx);
        }
    long eval_digits = digits + static_cast<long>(std::ceil(magnitude)) + 12;
    mpfr_prec_t prec = working_prec(eval_digits);
    HPComplex xe = lambda_value(bp, theta.tau, eval_digits).scaled(c_constant(n));
    HPComplex je = j_value(theta.tau, eval_digits);

    // specialize and evaluate: Horner in X over coefficients Horner'd in j
    HPComplex acc = HPComplex::zero(prec);
    for (std::size_t i = psi.c.size(); i-- > 0;) {
        HPComplex row = HPComplex::zero(prec);
        for (std::size_t d = psi.c[i].size(); d-- > 0;) {
            row = row * je;
            if (!psi.c[i][d].is_zero()) row = row + cyc_to_complex(psi.c[i][d], prec);
        }
        acc = acc * xe + row;
    }
    cert.residual = acc.abs_upper();
    cert.tolerance = std::pow(10.0, -static_cast<double>(digits) / 2.0);
    cert.certified = cert.residual < cert.tolerance;
    if (!theta.disc)
        cert.note = "explicit theta; maximal-order hypothesis not tracked";
    else if (n != 6)
        cert.note = "value expected to generate the ray class field mod N over K(j(theta)) "
                    "when Z[theta] is a maximal order";
    return cert;
}

}  // namespace genlambda
