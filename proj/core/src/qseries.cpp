#include "genlambda/qseries.hpp"

#include <sstream>
#include <stdexcept>

#include "genlambda/util.hpp"

namespace genlambda {

QSeries QSeries::zero(int level, long prec) {
    QSeries s;
    s.level_ = level;
    s.order_ = prec;
    s.prec_ = prec;
    CycField::get(level);  // validate level
    return s;
}

QSeries::QSeries(int level, long order, std::vector<CycNum> coeffs, long prec)
    : level_(level), order_(order), prec_(prec), c_(std::move(coeffs)) {
    CycField::get(level);
    if (order_ + static_cast<long>(c_.size()) != prec_)
        throw std::invalid_argument("QSeries: coefficient count must equal precision - order");
    for (const CycNum& a : c_)
        if (a.is_null() || a.level() != level_)
            throw std::invalid_argument("QSeries: coefficient level mismatch");
    canonicalize();
}

QSeries QSeries::monomial(const CycNum& a, long exp, long prec) {
    if (exp >= prec) throw std::invalid_argument("QSeries::monomial: exponent beyond precision");
    std::vector<CycNum> c(static_cast<std::size_t>(prec - exp), CycNum::zero(a.level()));
    c[0] = a;
    return QSeries(a.level(), exp, std::move(c), prec);
}

void QSeries::canonicalize() {
    std::size_t skip = 0;
    while (skip < c_.size() && c_[skip].is_zero()) ++skip;
    if (skip == c_.size()) {
        c_.clear();
        order_ = prec_;
    } else if (skip > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(skip));
        order_ += static_cast<long>(skip);
    }
}

void QSeries::check_compatible(const QSeries& o) const {
    if (is_null() || o.is_null()) throw std::logic_error("QSeries: null series");
    if (level_ != o.level_)
        throw std::invalid_argument("QSeries: mixing levels " + std::to_string(level_) +
                                    " and " + std::to_string(o.level_));
}

CycNum QSeries::coeff(long e) const {
    if (is_null()) throw std::logic_error("QSeries: null series");
    if (e >= prec_)
        throw std::out_of_range("QSeries::coeff: exponent " + std::to_string(e) +
                                " not known at precision " + std::to_string(prec_));
    if (e < order_) return CycNum::zero(level_);
    return c_[static_cast<std::size_t>(e - order_)];
}

const CycNum& QSeries::leading() const {
    if (c_.empty()) throw std::domain_error("QSeries::leading: zero series");
    return c_.front();
}

QSeries QSeries::operator+(const QSeries& o) const {
    check_compatible(o);
    long prec = std::min(prec_, o.prec_);
    long order = std::min(std::min(order_, o.order_), prec);
    std::vector<CycNum> out;
    out.reserve(static_cast<std::size_t>(prec - order));
    for (long e = order; e < prec; ++e) {
        CycNum v = CycNum::zero(level_);
        if (e >= order_ && e < order_ + static_cast<long>(c_.size()))
            v = v + c_[static_cast<std::size_t>(e - order_)];
        if (e >= o.order_ && e < o.order_ + static_cast<long>(o.c_.size()))
            v = v + o.c_[static_cast<std::size_t>(e - o.order_)];
        out.push_back(std::move(v));
    }
    return QSeries(level_, order, std::move(out), prec);
}

QSeries QSeries::operator-() const {
    if (is_null()) throw std::logic_error("QSeries: null series");
    std::vector<CycNum> out;
    out.reserve(c_.size());
    for (const CycNum& a : c_) out.push_back(-a);
    QSeries s;
    s.level_ = level_;
    s.order_ = order_;
    s.prec_ = prec_;
    s.c_ = std::move(out);
    return s;
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + (-o); }

QSeries QSeries::operator*(const QSeries& o) const {
    check_compatible(o);
    long prec = std::min(prec_ + o.order_, o.prec_ + order_);
    if (is_zero() || o.is_zero()) return zero(level_, prec);
    long order = order_ + o.order_;
    if (order >= prec) return zero(level_, prec);
    // raw schoolbook rows, one modular reduction per output coefficient
    const std::size_t phi = static_cast<std::size_t>(CycField::get(level_).degree());
    std::size_t len = static_cast<std::size_t>(prec - order);
    std::vector<std::vector<Rational>> acc(len, std::vector<Rational>(2 * phi - 1));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        long base = order_ + static_cast<long>(i) + o.order_;
        if (base >= prec) break;
        std::size_t jmax = std::min(o.c_.size(), static_cast<std::size_t>(prec - base));
        for (std::size_t j = 0; j < jmax; ++j) {
            if (o.c_[j].is_zero()) continue;
            CycNum::accumulate_product(acc[static_cast<std::size_t>(base - order) + j],
                                       c_[i], o.c_[j]);
        }
    }
    std::vector<CycNum> out;
    out.reserve(len);
    for (const std::vector<Rational>& row : acc)
        out.push_back(CycNum::from_unreduced(level_, row));
    return QSeries(level_, order, std::move(out), prec);
}

QSeries QSeries::operator/(const QSeries& g) const {
    check_compatible(g);
    if (g.is_zero()) throw std::domain_error("QSeries: division by zero series");
    long rorder = order_ - g.order_;
    long rprec = std::min(prec_ - g.order_, order_ + g.prec_ - 2 * g.order_);
    if (is_zero()) return zero(level_, rprec);
    if (rorder >= rprec) return zero(level_, rprec);

    // invert the unit part of g by the recursive coefficient formula
    const CycNum inv0 = g.c_[0].inverse();
    const std::size_t phi = static_cast<std::size_t>(CycField::get(level_).degree());
    std::size_t len = static_cast<std::size_t>(rprec - rorder);
    std::vector<CycNum> r(len, CycNum::zero(level_));
    std::vector<Rational> buf(2 * phi - 1);
    for (std::size_t i = 0; i < len; ++i) {
        // numerator coefficient at exponent order_ + i, minus the
        // convolution of g's tail with the quotient so far
        std::fill(buf.begin(), buf.end(), Rational(0));
        std::size_t jmax = std::min(i, g.c_.size() - 1);
        for (std::size_t j = 1; j <= jmax; ++j) {
            if (g.c_[j].is_zero() || r[i - j].is_zero()) continue;
            CycNum::accumulate_product(buf, g.c_[j], r[i - j]);
        }
        CycNum acc = (i < c_.size()) ? c_[i] : CycNum::zero(level_);
        acc -= CycNum::from_unreduced(level_, buf);
        r[i] = acc * inv0;
    }
    return QSeries(level_, rorder, std::move(r), rprec);
}

QSeries QSeries::scaled(const CycNum& a) const {
    if (is_null()) throw std::logic_error("QSeries: null series");
    if (a.level() != level_) throw std::invalid_argument("QSeries::scaled: level mismatch");
    std::vector<CycNum> out;
    out.reserve(c_.size());
    for (const CycNum& x : c_) out.push_back(x * a);
    return QSeries(level_, order_, std::move(out), prec_);
}

QSeries QSeries::scaled(const Rational& r) const {
    if (is_null()) throw std::logic_error("QSeries: null series");
    std::vector<CycNum> out;
    out.reserve(c_.size());
    for (const CycNum& x : c_) out.push_back(x.scaled(r));
    return QSeries(level_, order_, std::move(out), prec_);
}

QSeries QSeries::shifted(long dexp) const {
    if (is_null()) throw std::logic_error("QSeries: null series");
    QSeries s = *this;
    s.order_ += dexp;
    s.prec_ += dexp;
    return s;
}

QSeries QSeries::truncated(long prec) const {
    if (is_null()) throw std::logic_error("QSeries: null series");
    if (prec >= prec_) return *this;
    QSeries s;
    s.level_ = level_;
    s.prec_ = prec;
    if (order_ >= prec) {
        s.order_ = prec;
        return s;
    }
    s.order_ = order_;
    s.c_.assign(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(prec - order_));
    s.canonicalize();
    return s;
}

QSeries QSeries::galois(long ell) const {
    if (is_null()) throw std::logic_error("QSeries: null series");
    std::vector<CycNum> out;
    out.reserve(c_.size());
    for (const CycNum& x : c_) out.push_back(x.galois(ell));
    return QSeries(level_, order_, std::move(out), prec_);
}

bool QSeries::is_integral() const {
    for (const CycNum& x : c_)
        if (!x.is_integral()) return false;
    return true;
}

bool QSeries::supported_on_multiples_of(long m) const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (mod_pos(order_ + static_cast<long>(i), m) != 0) return false;
    }
    return true;
}

bool QSeries::congruent_to(const QSeries& o, long mod_exp) const {
    check_compatible(o);
    if (prec_ < mod_exp || o.prec_ < mod_exp)
        throw std::out_of_range("QSeries::congruent_to: precision below comparison modulus");
    for (long e = std::min(order_, o.order_); e < mod_exp; ++e)
        if (coeff(e) != o.coeff(e)) return false;
    return true;
}

bool QSeries::operator==(const QSeries& o) const {
    return level_ == o.level_ && order_ == o.order_ && prec_ == o.prec_ && c_ == o.c_;
}

std::string QSeries::str(long max_terms) const {
    if (is_null()) return "<null>";
    std::ostringstream os;
    long shown = 0;
    bool first = true;
    for (std::size_t i = 0; i < c_.size() && shown < max_terms; ++i) {
        if (c_[i].is_zero()) continue;
        long e = order_ + static_cast<long>(i);
        if (!first) os << " + ";
        os << "(" << c_[i].str() << ")";
        if (e != 0) os << "*q^" << e;
        first = false;
        ++shown;
    }
    if (first) os << "0";
    os << " + O(q^" << prec_ << ")";
    return os.str();
}

}  // namespace genlambda
