#ifndef GENLAMBDA_CYCLOTOMIC_HPP
#define GENLAMBDA_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace genlambda {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Dense integer polynomial, low degree first, no trailing zeros.
// Serves as the reduction modulus Phi_N and as scratch for resultants.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);

    static IntPoly x_power_minus_one(int n);  // x^n - 1

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Integer& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<Integer>& coeffs() const { return c_; }

    IntPoly operator*(const IntPoly&) const;
    // exact division; throws if the remainder is nonzero
    IntPoly divide_exact(const IntPoly&) const;

    bool operator==(const IntPoly&) const = default;
    std::string str() const;

private:
    std::vector<Integer> c_;
    void trim();
};

// Phi_N, by exact division of x^N - 1 by the product of Phi_d over
// proper divisors d of N. Memoized.
const IntPoly& cyclotomic_poly(int n);

int euler_phi(int n);
bool is_prime_power(int n, int* prime = nullptr);

// Per-level immutable context: Phi_N, reduction rows for x^{phi..2phi-2},
// and the power basis image of every zeta^e. Instances are cached for the
// lifetime of the process, so CycNum can hold a plain pointer.
class CycField {
public:
    static const CycField& get(int level);

    int level() const { return level_; }
    int degree() const { return phi_; }
    const IntPoly& modulus() const { return modulus_; }
    // power basis coordinates of zeta^e (e taken mod N); integer entries
    const std::vector<Integer>& zeta_row(long e) const;

private:
    explicit CycField(int level);
    int level_;
    int phi_;
    IntPoly modulus_;
    std::vector<std::vector<Integer>> reduction_rows_;  // x^{phi+j} mod Phi_N
    std::vector<std::vector<Integer>> zeta_rows_;       // zeta^e, e = 0..N-1
    friend class CycNum;
};

// An element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi(N)-1}
// reduced modulo Phi_N. Canonical: equal iff levels and coefficient vectors
// are equal. Immutable value type; mixing levels throws.
class CycNum {
public:
    CycNum() : field_(nullptr) {}  // null element; any arithmetic on it throws

    static CycNum zero(int level);
    static CycNum one(int level);
    static CycNum from_rational(int level, const Rational& r);
    static CycNum from_coeffs(int level, std::vector<Rational> coeffs);
    static CycNum zeta_pow(int level, long e);
    // folds a raw schoolbook product of length 2 phi - 1 modulo Phi_N;
    // the hot path for series multiplication, which accumulates products
    // in raw rows and reduces once per output coefficient
    static CycNum from_unreduced(int level, const std::vector<Rational>& prod);
    // acc (length 2 phi - 1) += a * b, schoolbook, no reduction
    static void accumulate_product(std::vector<Rational>& acc, const CycNum& a, const CycNum& b);

    bool is_null() const { return field_ == nullptr; }
    int level() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    // true iff every power basis coefficient is an integer.  Z[zeta_N] is
    // the full ring of integers of Q(zeta_N), so this is equivalent to
    // algebraic integrality.
    bool is_integral() const;

    CycNum operator+(const CycNum&) const;
    CycNum operator-(const CycNum&) const;
    CycNum operator*(const CycNum&) const;
    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o) { *this = *this + o; return *this; }
    CycNum& operator-=(const CycNum& o) { *this = *this - o; return *this; }
    CycNum& operator*=(const CycNum& o) { *this = *this * o; return *this; }

    CycNum scaled(const Rational&) const;
    CycNum inverse() const;  // throws on zero
    CycNum operator/(const CycNum& o) const { return *this * o.inverse(); }

    // image under zeta -> zeta^ell; requires GCD(ell, N) = 1
    CycNum galois(long ell) const;

    // field norm to Q, as the resultant of the representative polynomial
    // with Phi_N; normalized so that norm(c) = c^phi(N) for rational c.
    Rational norm() const;

    bool operator==(const CycNum&) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    std::string str() const;  // human-readable, e.g. "1 - 2/3*z^2"

private:
    CycNum(const CycField* field, std::vector<Rational> c) : field_(field), c_(std::move(c)) {}
    const CycField* field_;
    std::vector<Rational> c_;
    void check_same_level(const CycNum&) const;
    friend class QSeries;
};

// Lemma instance (1 - zeta^ell)/(1 - zeta^k): defined whenever
// GCD(k, N) divides ell and k != 0 mod N; the result must lie in Z[zeta]
// (checked; a failure would falsify the divisibility lemma).
CycNum unit_ratio(int level, long k, long ell);

// integral with norm +-1
bool is_unit(const CycNum& a);

}  // namespace genlambda

#endif
