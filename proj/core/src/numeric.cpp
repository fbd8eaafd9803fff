#include "genlambda/numeric.hpp"

namespace genlambda {

HPComplex cexp(const HPComplex& z) {
    mpfr_prec_t p = z.prec();
    Real mag = z.re.exp();
    HPComplex out(mag * z.im.cos(), mag * z.im.sin());
    double mub = mag.mag_upper();
    // |e^{z+dz} - e^z| <= |e^z| (e^{|dz|} - 1) <= 2 |e^z| |dz| for |dz| <= 1/2
    double prop = z.err <= 0.5 ? err_up(2.0 * mub * z.err) : HUGE_VAL;
    double rounding = err_up(8.0 * (mub + 1.0) * std::ldexp(1.0, static_cast<int>(1 - p)));
    out.err = err_up(prop + rounding);
    return out;
}

HPComplex cpow(const HPComplex& z, long e) {
    if (e < 0) throw std::invalid_argument("cpow: negative exponent");
    HPComplex acc = HPComplex::one(z.prec());
    HPComplex base = z;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

HPComplex root_of_unity(int n, long e, mpfr_prec_t prec) {
    Real angle = (Real::pi(prec) * Real(2 * e, prec)) / Real(n, prec);
    HPComplex arg(Real(0, prec), angle);
    arg.err = err_up(8.0 * angle.ulp_bound());
    return cexp(arg);
}

HPComplex cyc_to_complex(const CycNum& a, mpfr_prec_t prec) {
    const int n = a.level();
    HPComplex zeta = root_of_unity(n, 1, prec);
    // Horner over the power basis
    HPComplex acc = HPComplex::zero(prec);
    const std::vector<Rational>& c = a.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * zeta;
        HPComplex term(Real(c[i], prec), Real(0, prec), 0.0);
        term.err = err_up(2.0 * term.re.ulp_bound());
        acc = acc + term;
    }
    return acc;
}

}  // namespace genlambda
