#ifndef GENLAMBDA_CM_HPP
#define GENLAMBDA_CM_HPP

#include <optional>

#include "genlambda/modpoly.hpp"
#include "genlambda/numeric.hpp"

namespace genlambda {

// A point of the upper half plane, usually imaginary quadratic. The
// discriminant is reporting metadata only; maximality of Z[theta] is
// surfaced, never enforced.
struct CMPoint {
    HPComplex tau;
    std::optional<long> disc;

    // standard maximal-order generator: sqrt(|D|/4) i for D = 0 mod 4,
    // (1 + sqrt(|D|) i)/2 for D = 1 mod 4
    static CMPoint from_discriminant(long d, mpfr_prec_t prec);
};

// Translate/invert loop into |Re| <= 1/2, |tau| >= 1; returns the matrix
// with tau' = A tau.
std::pair<HPComplex, SL2Mat> fundamental_reduce(const HPComplex& tau);

// E(tau; r, s) summed numerically with a geometric tail bound folded into
// err; reduces to the fundamental domain first when Im tau < 0.8, applying
// the weight-2 factor.
HPComplex e_value(const IndexPair& p, const HPComplex& tau, long digits);

// Lambda(tau; Q1, Q2): ratio of e-value differences (weight factors cancel)
HPComplex lambda_value(const BasisPair& bp, const HPComplex& tau, long digits);

// j(tau) via E4^3/Delta at qt = exp(2 pi i tau') after reduction
HPComplex j_value(const HPComplex& tau, long digits);

struct CMCertificate {
    int level = 0;
    long k = 0;
    long digits = 0;
    std::optional<long> disc;
    HPComplex theta;
    HPComplex x;         // C_N * Lambda_k(theta)
    HPComplex j_theta;
    double residual = 0.0;   // |Psi_k(x, j(theta))| upper bound, err included
    double tolerance = 0.0;  // 10^{-digits/2}
    bool certified = false;
    std::string note;
};

// Certifies C_N Lambda_k(theta) as a root of the specialized Psi_k.
CMCertificate cm_certify(const PsiPoly& psi, const CMPoint& theta, long digits);

}  // namespace genlambda

#endif
