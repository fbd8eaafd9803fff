#include "genlambda/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "genlambda/util.hpp"

namespace genlambda {

// ---------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::x_power_minus_one(int n) {
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1, Integer(0));
    c[0] = -1;
    c[static_cast<std::size_t>(n)] = 1;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Integer> out(c_.size() + o.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            out[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::divide_exact(const IntPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("IntPoly: division by zero");
    std::vector<Integer> rem = c_;
    int dd = d.degree();
    int dn = degree();
    if (dn < dd) {
        if (!is_zero()) throw std::domain_error("IntPoly: inexact division");
        return IntPoly();
    }
    std::vector<Integer> quot(static_cast<std::size_t>(dn - dd) + 1, Integer(0));
    for (int i = dn; i >= dd; --i) {
        Integer& lead = rem[static_cast<std::size_t>(i)];
        if (lead == 0) continue;
        Integer q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), lead.get_mpz_t(), d.c_.back().get_mpz_t());
        if (r != 0) throw std::domain_error("IntPoly: inexact division");
        quot[static_cast<std::size_t>(i - dd)] = q;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(i - dd + j)] -= q * d.c_[static_cast<std::size_t>(j)];
    }
    for (const Integer& x : rem)
        if (x != 0) throw std::domain_error("IntPoly: inexact division");
    return IntPoly(std::move(quot));
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Integer& a = c_[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        Integer mag = abs(a);
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i > 0) {
            if (mag != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------
// cyclotomic polynomials

const IntPoly& cyclotomic_poly(int n) {
    if (n < 2) throw std::invalid_argument("cyclotomic_poly: N must be >= 2");
    static std::map<int, IntPoly> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // product of Phi_d over proper divisors d, with Phi_1 = x - 1 inline
    std::function<IntPoly(int)> compute = [&](int m) -> IntPoly {
        if (m == 1) return IntPoly({Integer(-1), Integer(1)});
        auto hit = cache.find(m);
        if (hit != cache.end()) return hit->second;
        IntPoly prod({Integer(1)});
        for (int d = 1; d < m; ++d)
            if (m % d == 0) prod = prod * compute(d);
        IntPoly phi = IntPoly::x_power_minus_one(m).divide_exact(prod);
        cache.emplace(m, phi);
        return phi;
    };
    compute(n);
    return cache.at(n);
}

int euler_phi(int n) {
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

bool is_prime_power(int n, int* prime) {
    if (n < 2) return false;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            if (m != 1) return false;
            if (prime) *prime = p;
            return true;
        }
    }
    if (prime) *prime = m;  // n itself prime
    return true;
}

// ---------------------------------------------------------------------
// CycField

const CycField& CycField::get(int level) {
    if (level < 2) throw std::invalid_argument("CycField: level must be >= 2");
    static std::map<int, const CycField*> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(level);
    if (it == cache.end())
        it = cache.emplace(level, new CycField(level)).first;  // immortal
    return *it->second;
}

CycField::CycField(int level)
    : level_(level), phi_(euler_phi(level)), modulus_(cyclotomic_poly(level)) {
    // rows for x^{phi+j} mod Phi_N, j = 0..phi-2
    // row(0) = -(low part of Phi); row(j+1) = x*row(j) folded by row(0)
    std::vector<Integer> row(static_cast<std::size_t>(phi_));
    for (int i = 0; i < phi_; ++i) row[static_cast<std::size_t>(i)] = -modulus_[static_cast<std::size_t>(i)];
    reduction_rows_.push_back(row);
    for (int j = 1; j + 1 < phi_; ++j) {
        std::vector<Integer> next(static_cast<std::size_t>(phi_), Integer(0));
        const Integer top = row.back();
        for (int i = phi_ - 1; i > 0; --i) next[static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(i - 1)];
        if (top != 0)
            for (int i = 0; i < phi_; ++i)
                next[static_cast<std::size_t>(i)] += top * reduction_rows_[0][static_cast<std::size_t>(i)];
        reduction_rows_.push_back(next);
        row = std::move(next);
    }

    // zeta^e in the power basis, for e = 0..N-1
    zeta_rows_.assign(static_cast<std::size_t>(level_), std::vector<Integer>(static_cast<std::size_t>(phi_), Integer(0)));
    std::vector<Integer> cur(static_cast<std::size_t>(phi_), Integer(0));
    cur[0] = 1;
    zeta_rows_[0] = cur;
    for (int e = 1; e < level_; ++e) {
        // multiply by x and fold the overflow term
        Integer top = cur.back();
        for (int i = phi_ - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
        cur[0] = 0;
        if (top != 0)
            for (int i = 0; i < phi_; ++i)
                cur[static_cast<std::size_t>(i)] += top * reduction_rows_[0][static_cast<std::size_t>(i)];
        zeta_rows_[static_cast<std::size_t>(e)] = cur;
    }
}

const std::vector<Integer>& CycField::zeta_row(long e) const {
    return zeta_rows_[static_cast<std::size_t>(mod_pos(e, level_))];
}

// ---------------------------------------------------------------------
// CycNum

CycNum CycNum::zero(int level) {
    const CycField& f = CycField::get(level);
    return CycNum(&f, std::vector<Rational>(static_cast<std::size_t>(f.degree())));
}

CycNum CycNum::one(int level) { return from_rational(level, Rational(1)); }

CycNum CycNum::from_rational(int level, const Rational& r) {
    CycNum a = zero(level);
    a.c_[0] = r;
    return a;
}

CycNum CycNum::from_coeffs(int level, std::vector<Rational> coeffs) {
    const CycField& f = CycField::get(level);
    if (coeffs.size() != static_cast<std::size_t>(f.degree()))
        throw std::invalid_argument("CycNum: wrong number of coefficients for level");
    for (Rational& r : coeffs) r.canonicalize();
    return CycNum(&f, std::move(coeffs));
}

CycNum CycNum::zeta_pow(int level, long e) {
    const CycField& f = CycField::get(level);
    const std::vector<Integer>& row = f.zeta_row(e);
    std::vector<Rational> c(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) c[i] = Rational(row[i]);
    return CycNum(&f, std::move(c));
}

int CycNum::level() const {
    if (!field_) throw std::logic_error("CycNum: null element");
    return field_->level();
}

void CycNum::check_same_level(const CycNum& o) const {
    if (!field_ || !o.field_) throw std::logic_error("CycNum: null element");
    if (field_ != o.field_)
        throw std::invalid_argument("CycNum: mixing cyclotomic levels " +
                                    std::to_string(field_->level()) + " and " +
                                    std::to_string(o.field_->level()));
}

bool CycNum::is_zero() const {
    if (!field_) throw std::logic_error("CycNum: null element");
    for (const Rational& r : c_)
        if (r != 0) return false;
    return true;
}

bool CycNum::is_one() const {
    if (!field_) throw std::logic_error("CycNum: null element");
    if (c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    if (!field_) throw std::logic_error("CycNum: null element");
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool CycNum::is_integral() const {
    if (!field_) throw std::logic_error("CycNum: null element");
    for (const Rational& r : c_)
        if (r.get_den() != 1) return false;
    return true;
}

CycNum CycNum::operator+(const CycNum& o) const {
    check_same_level(o);
    std::vector<Rational> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] + o.c_[i];
    return CycNum(field_, std::move(out));
}

CycNum CycNum::operator-(const CycNum& o) const {
    check_same_level(o);
    std::vector<Rational> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] - o.c_[i];
    return CycNum(field_, std::move(out));
}

CycNum CycNum::operator-() const {
    if (!field_) throw std::logic_error("CycNum: null element");
    std::vector<Rational> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
    return CycNum(field_, std::move(out));
}

CycNum CycNum::operator*(const CycNum& o) const {
    check_same_level(o);
    std::vector<Rational> prod(2 * c_.size() - 1);
    accumulate_product(prod, *this, o);
    return from_unreduced(field_->level(), prod);
}

void CycNum::accumulate_product(std::vector<Rational>& acc, const CycNum& a, const CycNum& b) {
    a.check_same_level(b);
    const std::size_t phi = a.c_.size();
    for (std::size_t i = 0; i < phi; ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < phi; ++j) {
            if (b.c_[j] == 0) continue;
            acc[i + j] += a.c_[i] * b.c_[j];
        }
    }
}

CycNum CycNum::from_unreduced(int level, const std::vector<Rational>& prod) {
    const CycField& field = CycField::get(level);
    const std::size_t phi = static_cast<std::size_t>(field.degree());
    if (prod.size() != 2 * phi - 1)
        throw std::invalid_argument("CycNum::from_unreduced: wrong buffer length");
    std::vector<Rational> out(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(phi));
    for (std::size_t j = 0; j + 1 < phi; ++j) {
        const Rational& top = prod[phi + j];
        if (top == 0) continue;
        const std::vector<Integer>& row = field.reduction_rows_[j];
        for (std::size_t i = 0; i < phi; ++i)
            if (row[i] != 0) out[i] += top * row[i];
    }
    return CycNum(&field, std::move(out));
}

CycNum CycNum::scaled(const Rational& r) const {
    if (!field_) throw std::logic_error("CycNum: null element");
    std::vector<Rational> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * r;
    return CycNum(field_, std::move(out));
}

namespace {

// rational polynomial helpers for xgcd/resultant, low degree first
using QPoly = std::vector<Rational>;

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// f -= q * x^shift * g
void qsubmul(QPoly& f, const Rational& q, std::size_t shift, const QPoly& g) {
    for (std::size_t i = 0; i < g.size(); ++i) f[i + shift] -= q * g[i];
}

QPoly qrem(QPoly f, const QPoly& g) {
    qtrim(f);
    while (f.size() >= g.size() && !f.empty()) {
        Rational q = f.back() / g.back();
        qsubmul(f, q, f.size() - g.size(), g);
        f.pop_back();
        qtrim(f);
    }
    return f;
}

}  // namespace

namespace {

// quotient and remainder of f by g over Q, g nonzero
std::pair<QPoly, QPoly> qdivmod(QPoly f, const QPoly& g) {
    qtrim(f);
    if (f.size() < g.size()) return {QPoly{}, std::move(f)};
    QPoly quot(f.size() - g.size() + 1, Rational(0));
    while (f.size() >= g.size() && !f.empty()) {
        Rational q = f.back() / g.back();
        quot[f.size() - g.size()] = q;
        qsubmul(f, q, f.size() - g.size(), g);
        f.pop_back();
        qtrim(f);
    }
    return {std::move(quot), std::move(f)};
}

}  // namespace

CycNum CycNum::inverse() const {
    if (!field_) throw std::logic_error("CycNum: null element");
    if (is_zero()) throw std::domain_error("CycNum: inverse of zero");

    // extended gcd of the representative with Phi_N over Q;
    // only the cofactor of a is tracked: t * a = r (mod Phi).
    QPoly r0(field_->modulus().coeffs().size());
    for (std::size_t i = 0; i < r0.size(); ++i) r0[i] = Rational(field_->modulus()[i]);
    QPoly r1(c_.begin(), c_.end());
    qtrim(r1);
    QPoly t0;               // cofactor of a in r0 = Phi
    QPoly t1{Rational(1)};  // cofactor of a in r1 = a

    while (!r1.empty()) {
        auto [q, r] = qdivmod(std::move(r0), r1);
        // t = t0 - q*t1
        QPoly t = t0;
        t.resize(std::max(t.size(), q.empty() ? std::size_t{0} : q.size() + t1.size()), Rational(0));
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < t1.size(); ++j) t[i + j] -= q[i] * t1[j];
        }
        qtrim(t);
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    // r0 is the gcd; Phi_N irreducible and deg a < phi force it constant
    if (r0.size() != 1)
        throw std::logic_error("CycNum: representative shares a factor with Phi_N");
    Rational c = r0[0];
    std::vector<Rational> out(c_.size(), Rational(0));
    if (t0.size() > out.size())
        throw std::logic_error("CycNum: inverse cofactor degree out of range");
    for (std::size_t i = 0; i < t0.size(); ++i) out[i] = t0[i] / c;
    return CycNum(field_, std::move(out));
}

CycNum CycNum::galois(long ell) const {
    if (!field_) throw std::logic_error("CycNum: null element");
    const int n = field_->level();
    if (std::gcd(mod_pos(ell, n), static_cast<long>(n)) != 1)
        throw std::invalid_argument("CycNum::galois: exponent not coprime to level");
    std::vector<Rational> out(c_.size(), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const std::vector<Integer>& row = field_->zeta_row(static_cast<long>(i) * ell);
        for (std::size_t j = 0; j < out.size(); ++j)
            if (row[j] != 0) out[j] += c_[i] * row[j];
    }
    return CycNum(field_, std::move(out));
}

Rational CycNum::norm() const {
    if (!field_) throw std::logic_error("CycNum: null element");
    if (is_zero()) return Rational(0);

    // resultant(Phi_N, a) via the Euclidean algorithm:
    //   res(f, g) = lc(g)^(deg f - deg r) * (-1)^(deg f * deg g) * res(g, r)
    // with base case res(f, const c) = c^{deg f}. Phi monic makes this
    // exactly the product of a over the conjugates.
    QPoly f(field_->modulus().coeffs().size());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = Rational(field_->modulus()[i]);
    QPoly g(c_.begin(), c_.end());
    qtrim(g);

    Rational acc(1);
    while (g.size() > 1) {
        QPoly r = qrem(f, g);
        long df = static_cast<long>(f.size()) - 1;
        long dg = static_cast<long>(g.size()) - 1;
        long dr = static_cast<long>(r.size()) - 1;  // -1 when r == 0
        if (r.empty())
            throw std::logic_error("CycNum::norm: representative shares a factor with Phi_N");
        Rational lead = g.back();
        Rational pw(1);
        for (long i = 0; i < df - dr; ++i) pw *= lead;
        acc *= pw;
        if ((df * dg) % 2 != 0) acc = -acc;
        f = std::move(g);
        g = std::move(r);
    }
    // g constant
    Rational base = g[0];
    Rational pw(1);
    for (std::size_t i = 0; i + 1 < f.size(); ++i) pw *= base;
    return acc * pw;
}

bool CycNum::operator==(const CycNum& o) const {
    if (field_ == nullptr || o.field_ == nullptr) return field_ == o.field_;
    return field_ == o.field_ && c_ == o.c_;
}

std::string CycNum::str() const {
    if (!field_) return "<null>";
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational mag = c_[i] < 0 ? Rational(-c_[i]) : c_[i];
        if (!first) os << (c_[i] < 0 ? " - " : " + ");
        else if (c_[i] < 0) os << "-";
        if (i == 0) os << mag.get_str();
        else {
            if (mag != 1) os << mag.get_str() << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------

CycNum unit_ratio(int level, long k, long ell) {
    const long n = level;
    const long km = mod_pos(k, n);
    if (km == 0) throw std::invalid_argument("unit_ratio: k must be nonzero mod N");
    const long delta = std::gcd(km, n);
    if (mod_pos(ell, delta) != 0)
        throw std::invalid_argument("unit_ratio: GCD(k,N) does not divide ell");
    if (mod_pos(ell, n) == 0) return CycNum::zero(level);

    CycNum one = CycNum::one(level);
    CycNum num = one - CycNum::zeta_pow(level, ell);
    CycNum den = one - CycNum::zeta_pow(level, km);
    CycNum q = num * den.inverse();
    if (!q.is_integral())
        throw std::logic_error("unit_ratio: quotient not in Z[zeta]; divisibility lemma violated for N=" +
                               std::to_string(level) + " k=" + std::to_string(k) +
                               " ell=" + std::to_string(ell));
    return q;
}

bool is_unit(const CycNum& a) {
    if (!a.is_integral()) return false;
    Rational n = a.norm();
    return n == 1 || n == -1;
}

}  // namespace genlambda
