#include "genlambda/sl2.hpp"

#include <numeric>
#include <stdexcept>

#include "genlambda/util.hpp"

namespace genlambda {

SL2Mat::SL2Mat(long a_, long b_, long c_, long d_) : a(a_), b(b_), c(c_), d(d_) {
    if (det() != 1)
        throw std::invalid_argument("SL2Mat: determinant must be 1, got " + std::to_string(det()));
}

SL2Mat SL2Mat::operator*(const SL2Mat& o) const {
    return SL2Mat(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d);
}

SL2Mat SL2Mat::negated() const {
    SL2Mat m;
    m.a = -a; m.b = -b; m.c = -c; m.d = -d;
    return m;
}

bool SL2Mat::congruent_mod(const SL2Mat& o, long n) const {
    return mod_pos(a - o.a, n) == 0 && mod_pos(b - o.b, n) == 0 &&
           mod_pos(c - o.c, n) == 0 && mod_pos(d - o.d, n) == 0;
}

bool SL2Mat::in_gamma(long n) const {
    return mod_pos(a - 1, n) == 0 && mod_pos(b, n) == 0 &&
           mod_pos(c, n) == 0 && mod_pos(d - 1, n) == 0;
}

bool SL2Mat::in_gamma_pm(long n) const {
    return in_gamma(n) || negated().in_gamma(n);
}

std::string SL2Mat::str() const {
    return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" +
           std::to_string(c) + "," + std::to_string(d) + "]]";
}

namespace {

// xgcd: returns g = gcd(a,b) and x,y with a*x + b*y = g
long xgcd(long a, long b, long& x, long& y) {
    long x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        long q = a / b;
        long t = a - q * b; a = b; b = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
        t = y0 - q * y1; y0 = y1; y1 = t;
    }
    if (a < 0) { a = -a; x0 = -x0; y0 = -y0; }
    x = x0; y = y0;
    return a;
}

}  // namespace

SL2Mat sl2_lift(long a, long b, long c, long d, long n) {
    if (n < 1) throw std::invalid_argument("sl2_lift: modulus must be positive");
    if (mod_pos(a * d - b * c - 1, n) != 0)
        throw std::invalid_argument("sl2_lift: determinant not 1 mod N");

    // bottom row first: find (c', d') = (c, d) mod N with gcd(c', d') = 1.
    // det = 1 mod N forces gcd(c, d, N) = 1, so for every prime p | c'
    // either p | N (then p cannot divide d' = d mod p, fixed under +N steps)
    // or p coprime to N (then d + tN sweeps all residues mod p); the scan
    // below terminates.
    long cp = mod_pos(c, n);
    long dp = mod_pos(d, n);
    if (cp == 0 && dp == 0) throw std::invalid_argument("sl2_lift: zero bottom row mod N");
    if (std::gcd(cp, dp) != 1) {
        if (cp == 0) cp = n;
        long t = 0;
        while (std::gcd(cp, dp + t * n) != 1) {
            ++t;
            if (t > 4 * n * n + 16)
                throw std::logic_error("sl2_lift: bottom row adjustment did not terminate");
        }
        dp += t * n;
    }

    // top row: any SL2 matrix over (c', d') has top row (x + m c', y + m d')
    // where x d' - y c' = 1; solve m so the row is congruent to (a, b).
    long x, y;
    xgcd(dp, -cp, x, y);  // x*d' + y*(-c') = 1
    // with u c' + v d' = 1, m = u (a - x) + v (b - y) matches both entries
    long u, v;
    xgcd(cp, dp, u, v);
    long m = mod_pos(u * (a - x) + v * (b - y), n);
    long ap = x + m * cp;
    long bp = y + m * dp;
    SL2Mat out(ap, bp, cp, dp);  // ctor verifies det == 1
    if (mod_pos(out.a - a, n) != 0 || mod_pos(out.b - b, n) != 0 ||
        mod_pos(out.c - c, n) != 0 || mod_pos(out.d - d, n) != 0)
        throw std::logic_error("sl2_lift: lift not congruent to input");
    return out;
}

}  // namespace genlambda
