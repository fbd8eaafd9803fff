#ifndef GENLAMBDA_SL2_HPP
#define GENLAMBDA_SL2_HPP

#include <array>
#include <string>

namespace genlambda {

struct SL2Mat {
    long a = 1, b = 0, c = 0, d = 1;

    SL2Mat() = default;
    SL2Mat(long a_, long b_, long c_, long d_);  // throws unless det == 1

    static SL2Mat identity() { return SL2Mat(); }

    long det() const { return a * d - b * c; }
    SL2Mat operator*(const SL2Mat& o) const;
    SL2Mat inverse() const { return SL2Mat(d, -b, -c, a); }
    SL2Mat negated() const;  // -A (still det 1)

    bool congruent_mod(const SL2Mat& o, long n) const;
    // A in Gamma(N): a-1, b, c, d-1 all divisible by N
    bool in_gamma(long n) const;
    // A in Gamma(N){+-E2}
    bool in_gamma_pm(long n) const;

    bool operator==(const SL2Mat&) const = default;
    std::string str() const;
};

// Lifts a matrix with integer entries and determinant congruent to 1 mod N
// to an exact element of SL2(Z) congruent to it mod N.
SL2Mat sl2_lift(long a, long b, long c, long d, long n);

}  // namespace genlambda

#endif
