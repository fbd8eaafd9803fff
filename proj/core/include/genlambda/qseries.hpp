#ifndef GENLAMBDA_QSERIES_HPP
#define GENLAMBDA_QSERIES_HPP

#include <vector>

#include "genlambda/cyclotomic.hpp"

namespace genlambda {

// Truncated Laurent series in q over Q(zeta_N). Coefficients cover the
// exponents order .. precision-1 densely; "precision P" means the series
// is known modulo q^P. Canonical form: the coefficient at `order` is
// nonzero, except for the zero series, which keeps empty coefficients and
// order == precision so that the precision formulas below apply uniformly.
// Operations never fabricate unknown coefficients: precision is propagated
// pessimistically (min for add/sub, min(fP+og, gP+of) for mul).
class QSeries {
public:
    QSeries() : level_(0), order_(0), prec_(0) {}

    static QSeries zero(int level, long prec);
    // coeffs for exponents order..order+len-1; canonicalized on entry
    QSeries(int level, long order, std::vector<CycNum> coeffs, long prec);
    static QSeries monomial(const CycNum& a, long exp, long prec);

    bool is_null() const { return level_ == 0; }
    int level() const { return level_; }
    long order() const { return order_; }
    long precision() const { return prec_; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<CycNum>& coeffs() const { return c_; }

    // coefficient at exponent e; requires e < precision
    CycNum coeff(long e) const;
    const CycNum& leading() const;  // requires nonzero

    QSeries operator+(const QSeries&) const;
    QSeries operator-(const QSeries&) const;
    QSeries operator*(const QSeries&) const;
    QSeries operator-() const;
    // Laurent quotient; g nonzero. precision
    // min(f.P - g.order, f.order + g.P - 2*g.order).
    QSeries operator/(const QSeries&) const;

    QSeries scaled(const CycNum&) const;
    QSeries scaled(const Rational&) const;
    QSeries shifted(long dexp) const;  // multiply by q^dexp
    QSeries truncated(long prec) const;
    QSeries galois(long ell) const;  // coefficient-wise

    bool is_integral() const;
    // true iff every known coefficient sits at an exponent divisible by m
    bool supported_on_multiples_of(long m) const;

    // coefficients agree for all exponents < mod_exp
    // (both precisions must reach mod_exp)
    bool congruent_to(const QSeries&, long mod_exp) const;
    // full structural equality: level, order, precision and coefficients
    bool operator==(const QSeries&) const;
    bool operator!=(const QSeries& o) const { return !(*this == o); }

    std::string str(long max_terms = 8) const;

private:
    int level_;
    long order_;
    long prec_;
    std::vector<CycNum> c_;  // exponent order_ + i
    void canonicalize();
    void check_compatible(const QSeries&) const;
};

}  // namespace genlambda

#endif
