#include "genlambda/eisenstein.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "genlambda/util.hpp"

namespace genlambda {

IndexPair::IndexPair(int level_, long r_, long s_) : level(level_), r(r_), s(s_) {
    if (level < 2) throw std::invalid_argument("IndexPair: level must be >= 2");
    if (mod_pos(r, level) == 0 && mod_pos(s, level) == 0)
        throw std::invalid_argument("IndexPair: (r, s) = (0, 0) mod N is not allowed");
}

IndexPair IndexPair::normalized() const {
    return IndexPair(level, mod_pos(r, level), mod_pos(s, level));
}

IndexPair IndexPair::canonical() const {
    IndexPair p = normalized();
    IndexPair q(level, mod_pos(-r, level), mod_pos(-s, level));
    if (std::pair(q.r, q.s) < std::pair(p.r, p.s)) return q;
    return p;
}

bool IndexPair::same_class(const IndexPair& o) const {
    if (level != o.level) return false;
    IndexPair a = canonical(), b = o.canonical();
    return a.r == b.r && a.s == b.s;
}

bool IndexPair::negated_class(const IndexPair& o) const {
    return mod_pos(r + o.r, level) == 0 && mod_pos(s + o.s, level) == 0;
}

std::string IndexPair::str() const {
    IndexPair p = normalized();
    return "(" + std::to_string(p.r) + "," + std::to_string(p.s) + ")@" + std::to_string(level);
}

BraceMu brace_mu(long x, int n) {
    if (n < 2) throw std::invalid_argument("brace_mu: N must be >= 2");
    long xm = mod_pos(x, n);
    if (xm == 0) return {0, 1};
    if (2 * xm == n) return {xm, 1};
    if (2 * xm < n) return {xm, 1};
    return {n - xm, -1};
}

ReducedIndex reduce_index(const IndexPair& p) {
    BraceMu bm = brace_mu(p.r, p.level);
    return {bm.brace, bm.mu, mod_pos(bm.mu * p.s, p.level)};
}

IndexPair index_transform(const IndexPair& p, const SL2Mat& A) {
    return IndexPair(p.level, A.a * p.r + A.c * p.s, A.b * p.r + A.d * p.s);
}

namespace {

// accumulation buffer for one expansion: raw power basis rows per exponent
struct Accum {
    const CycField& field;
    std::vector<std::vector<Rational>> rows;  // [exponent][basis index]

    Accum(int level, long prec)
        : field(CycField::get(level)),
          rows(static_cast<std::size_t>(prec),
               std::vector<Rational>(static_cast<std::size_t>(CycField::get(level).degree()))) {}

    // += scale * zeta^zexp * q^exp
    void add(long exp, long scale, long zexp) {
        const std::vector<Integer>& zrow = field.zeta_row(zexp);
        std::vector<Rational>& row = rows[static_cast<std::size_t>(exp)];
        for (std::size_t i = 0; i < row.size(); ++i)
            if (zrow[i] != 0) row[i] += Rational(scale) * zrow[i];
    }

    void add_cyc(long exp, const CycNum& v) {
        const std::vector<Rational>& src = v.coeffs();
        std::vector<Rational>& row = rows[static_cast<std::size_t>(exp)];
        for (std::size_t i = 0; i < row.size(); ++i)
            if (src[i] != 0) row[i] += src[i];
    }

    QSeries finish(int level, long prec) {
        std::vector<CycNum> c;
        c.reserve(rows.size());
        for (std::vector<Rational>& row : rows)
            c.push_back(CycNum::from_coeffs(level, std::move(row)));
        return QSeries(level, 0, std::move(c), prec);
    }
};

QSeries e_series_impl(const IndexPair& pc, long prec) {
    const int n = pc.level;
    ReducedIndex red = reduce_index(pc);
    const long rb = red.brace;
    const long w = red.omega_exponent;  // omega = zeta^w

    Accum acc(n, prec);

    if (rb == 0) {
        // constant term omega/(1-omega)^2; omega != 1 since (r,s) != (0,0)
        CycNum omega = CycNum::zeta_pow(n, w);
        CycNum one = CycNum::one(n);
        CycNum dim = one - omega;
        acc.add_cyc(0, omega * (dim * dim).inverse());
    } else {
        // single sum: n u^n with u = omega q^{rb}
        for (long k = 1; k * rb < prec; ++k) acc.add(k * rb, k, w * k);
    }

    // double sum: n (u^n + u^{-n} - 2) q^{mnN}; every emitted exponent is
    // positive because rb <= N/2. Enumerated by exact exponent bound; the
    // u^{-n} q^{mnN} terms can land on low exponents and must be
    // accumulated, not skipped (the {r} = N/2 overlap).
    for (long k = 1; k * (n - rb) < prec; ++k) {
        for (long m = 1; k * (m * n - rb) < prec; ++m) {
            long e_minus = k * (m * n - rb);
            long e_mid = m * k * n;
            long e_plus = k * (m * n + rb);
            acc.add(e_minus, k, -w * k);
            if (e_mid < prec) acc.add(e_mid, -2 * k, 0);
            if (e_plus < prec) acc.add(e_plus, k, w * k);
        }
    }
    return acc.finish(n, prec);
}

}  // namespace

QSeries e_series_raw(const IndexPair& p, long prec) {
    if (prec < 1) throw std::invalid_argument("e_series: precision must be >= 1");
    return e_series_impl(p, prec);
}

QSeries e_series(const IndexPair& p, long prec) {
    if (prec < 1) throw std::invalid_argument("e_series: precision must be >= 1");
    IndexPair key = p.canonical();

    using Key = std::tuple<int, long, long, long>;
    static std::map<Key, QSeries> cache;
    static std::mutex mutex;
    Key k{key.level, key.r, key.s, prec};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
        // reuse a higher-precision entry for the same class if present
        auto up = cache.upper_bound(k);
        if (up != cache.end() && std::get<0>(up->first) == key.level &&
            std::get<1>(up->first) == key.r && std::get<2>(up->first) == key.s)
            return up->second.truncated(prec);
    }
    QSeries s = e_series_impl(key, prec);
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(k, std::move(s)).first->second;
}

QSeries e_diff_series(const IndexPair& p1, const IndexPair& p2, long prec) {
    if (p1.level != p2.level) throw std::invalid_argument("e_diff_series: level mismatch");
    if (p1.same_class(p2))
        throw std::domain_error("e_diff_series: degenerate difference, " + p2.str() +
                                " = +-" + p1.str() + " mod N");
    return e_series(p1, prec) - e_series(p2, prec);
}

std::pair<long, CycNum> theta_leading(const IndexPair& p1in, const IndexPair& p2in) {
    if (p1in.level != p2in.level) throw std::invalid_argument("theta_leading: level mismatch");
    if (p1in.same_class(p2in))
        throw std::domain_error("theta_leading: degenerate pair");
    const int n = p1in.level;

    IndexPair p1 = p1in, p2 = p2in;
    ReducedIndex r1 = reduce_index(p1), r2 = reduce_index(p2);
    bool swapped = false;
    if (r1.brace > r2.brace) {
        std::swap(p1, p2);
        std::swap(r1, r2);
        swapped = true;  // E(p2)-E(p1) = -(E(p1)-E(p2))
    }

    CycNum w1 = CycNum::zeta_pow(n, r1.omega_exponent);
    CycNum w2 = CycNum::zeta_pow(n, r2.omega_exponent);
    CycNum one = CycNum::one(n);

    long t = r1.brace;
    CycNum theta = CycNum::zero(n);
    if (r1.brace == r2.brace) {
        if (2 * r1.brace == n) {
            // -(w1 - w2)(1 - w1 w2)/(w1 w2)
            CycNum p = w1 * w2;
            theta = -((w1 - w2) * (one - p)) * p.inverse();
        } else if (r1.brace == 0) {
            CycNum d1 = one - w1, d2 = one - w2;
            theta = ((w1 - w2) * (one - w1 * w2)) * ((d1 * d1 * d2 * d2).inverse());
        } else {
            theta = w1 - w2;
        }
    } else {
        if (r1.brace == 0) {
            CycNum d1 = one - w1;
            theta = w1 * (d1 * d1).inverse();
        } else {
            theta = w1;
        }
    }
    if (swapped) theta = -theta;
    if (theta.is_zero())
        throw std::logic_error("theta_leading: vanishing leading coefficient for " + p1in.str() +
                               " vs " + p2in.str() + "; case table does not cover this input");
    return {t, theta};
}

}  // namespace genlambda
