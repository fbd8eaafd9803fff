#ifndef GENLAMBDA_NUMERIC_HPP
#define GENLAMBDA_NUMERIC_HPP

#include <mpfr.h>

#include <cmath>
#include <stdexcept>
#include <string>

#include "genlambda/cyclotomic.hpp"

namespace genlambda {

// Raised when a certified conclusion cannot be separated from zero at the
// requested precision; mapped to its own exit code by the CLI.
struct PrecisionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arbitrary-precision real on mpfr_t, with value semantics. Binary
// operations round to the larger operand precision.
class Real {
public:
    Real() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(long x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(const Rational& q, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }
    Real(const std::string& s, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw std::invalid_argument("Real: cannot parse '" + s + "'");
    }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    const mpfr_t& raw() const { return v_; }

    static Real pi(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    Real operator+(const Real& o) const { return binary(o, mpfr_add); }
    Real operator-(const Real& o) const { return binary(o, mpfr_sub); }
    Real operator*(const Real& o) const { return binary(o, mpfr_mul); }
    Real operator/(const Real& o) const { return binary(o, mpfr_div); }
    Real operator-() const {
        Real r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    Real sqrt() const { return unary(mpfr_sqrt); }
    Real exp() const { return unary(mpfr_exp); }
    Real sin() const { return unary(mpfr_sin); }
    Real cos() const { return unary(mpfr_cos); }
    Real abs() const { return unary(mpfr_abs); }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }
    int compare(const Real& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const Real& o) const { return compare(o) < 0; }
    bool operator>(const Real& o) const { return compare(o) > 0; }

    long round_to_long() const {
        Real r(prec());
        mpfr_round(r.v_, v_);
        if (!mpfr_fits_slong_p(r.v_, MPFR_RNDN))
            throw std::overflow_error("Real: rounded value does not fit a long");
        return mpfr_get_si(r.v_, MPFR_RNDN);
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // directed-rounding magnitude bounds for error accounting; the upward
    // one never returns 0 for a nonzero value
    double mag_upper() const {
        Real a = abs();
        double d = mpfr_get_d(a.v_, MPFR_RNDU);
        if (d == 0.0 && !mpfr_zero_p(a.v_)) return 5e-324;
        return d;
    }
    double mag_lower() const {
        Real a = abs();
        return mpfr_get_d(a.v_, MPFR_RNDD);
    }
    // bound on the rounding step of this value: |v| 2^{1-p}
    double ulp_bound() const {
        if (mpfr_zero_p(v_)) return 0.0;
        long e = mpfr_get_exp(v_);
        double u = std::ldexp(1.0, static_cast<int>(e - prec() + 1));
        return u > 0 ? u : 1e-300;
    }

    std::string str(int digits) const {
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Re", digits, v_);
        std::string s(buf);
        mpfr_free_str(buf);
        return s;
    }

private:
    mpfr_t v_;
    using BinOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    using UnOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
    Real binary(const Real& o, BinOp op) const {
        Real r(std::max(prec(), o.prec()));
        op(r.v_, v_, o.v_, MPFR_RNDN);
        return r;
    }
    Real unary(UnOp op) const {
        Real r(prec());
        op(r.v_, v_, MPFR_RNDN);
        return r;
    }
};

// error-bound arithmetic, always rounded pessimistically
inline double err_up(double x) {
    if (x < 0) throw std::logic_error("err_up: negative bound");
    return std::nextafter(x * (1.0 + 1e-13), HUGE_VAL);
}

// Complex number with a tracked radius bound: the true value lies within
// `err` of (re, im). "Zero at tolerance t" means |value| + err < t.
class HPComplex {
public:
    Real re, im;
    double err = 0.0;

    HPComplex() = default;
    HPComplex(Real r, Real i, double e = 0.0) : re(std::move(r)), im(std::move(i)), err(e) {}
    HPComplex(long r, long i, mpfr_prec_t prec) : re(r, prec), im(i, prec) {}

    static HPComplex zero(mpfr_prec_t prec) { return HPComplex(0, 0, prec); }
    static HPComplex one(mpfr_prec_t prec) { return HPComplex(1, 0, prec); }

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }

    // |value| <= this (true value, error included)
    double abs_upper() const {
        return err_up(std::hypot(re.mag_upper(), im.mag_upper()) + err);
    }
    // |value| >= this
    double abs_lower() const {
        double m = std::max(re.mag_lower(), im.mag_lower()) - err;
        return m > 0 ? m : 0.0;
    }

    HPComplex operator+(const HPComplex& o) const {
        HPComplex z(re + o.re, im + o.im);
        z.err = err_up(err + o.err + z.re.ulp_bound() + z.im.ulp_bound());
        return z;
    }
    HPComplex operator-(const HPComplex& o) const {
        HPComplex z(re - o.re, im - o.im);
        z.err = err_up(err + o.err + z.re.ulp_bound() + z.im.ulp_bound());
        return z;
    }
    HPComplex operator-() const { return HPComplex(-re, -im, err); }
    HPComplex conj() const { return HPComplex(re, -im, err); }

    HPComplex operator*(const HPComplex& o) const {
        HPComplex z(re * o.re - im * o.im, re * o.im + im * o.re);
        double ma = err_up(std::hypot(re.mag_upper(), im.mag_upper()));
        double mb = err_up(std::hypot(o.re.mag_upper(), o.im.mag_upper()));
        double rounding = err_up(8.0 * ma * mb * std::ldexp(1.0, static_cast<int>(1 - prec())));
        z.err = err_up(ma * o.err + mb * err + err * o.err + rounding);
        return z;
    }

    HPComplex operator/(const HPComplex& o) const {
        double lb = o.abs_lower();
        if (lb <= 0.0)
            throw PrecisionFailure("HPComplex: divisor indistinguishable from zero at current precision");
        Real den = o.re * o.re + o.im * o.im;
        HPComplex z((re * o.re + im * o.im) / den, (im * o.re - re * o.im) / den);
        double mz = err_up(std::hypot(z.re.mag_upper(), z.im.mag_upper()));
        double rounding = err_up(16.0 * (mz + 1.0) * std::ldexp(1.0, static_cast<int>(1 - prec())));
        z.err = err_up((err + mz * o.err) / lb + rounding);
        return z;
    }

    HPComplex scaled(long s) const {
        HPComplex z(re * Real(s, re.prec()), im * Real(s, im.prec()));
        double m = static_cast<double>(s < 0 ? -s : s);
        z.err = err_up(err * m + z.re.ulp_bound() + z.im.ulp_bound());
        return z;
    }

    std::string str(int digits) const {
        return re.str(digits) + (im.sign() < 0 ? " - " : " + ") + im.abs().str(digits) + "i";
    }
};

// e^z with first-order error propagation: |d e^z| = |e^z| |dz|
HPComplex cexp(const HPComplex& z);
// z^e by binary exponentiation, e >= 0
HPComplex cpow(const HPComplex& z, long e);
// exp(2 pi i e / n)
HPComplex root_of_unity(int n, long e, mpfr_prec_t prec);
// embedding of an exact cyclotomic number at zeta = exp(2 pi i / N)
HPComplex cyc_to_complex(const CycNum& a, mpfr_prec_t prec);

}  // namespace genlambda

#endif
