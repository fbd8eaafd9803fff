#include "genlambda/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <set>

namespace genlambda {

Json SuiteReport::to_json() const {
    Json out;
    out["suite"] = suite;
    if (level > 0) out["level"] = level;
    out["pass"] = pass;
    Json cs = Json::array();
    for (const CheckResult& c : checks) {
        Json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.details.is_null()) e["details"] = c.details;
        cs.push_back(e);
    }
    out["checks"] = cs;
    return out;
}

// ---------------------------------------------------------------------
// shared helpers

QSeries e_diff_congruence_rhs(const IndexPair& p1in, const IndexPair& p2in, long prec) {
    const int n = p1in.level;
    if (prec < n) prec = n;
    IndexPair p1 = p1in, p2 = p2in;
    ReducedIndex r1 = reduce_index(p1), r2 = reduce_index(p2);
    bool swapped = false;
    if (r1.brace > r2.brace) {
        std::swap(p1, p2);
        std::swap(r1, r2);
        swapped = true;
    }
    CycNum w1 = CycNum::zeta_pow(n, r1.omega_exponent);
    CycNum w2 = CycNum::zeta_pow(n, r2.omega_exponent);
    CycNum one = CycNum::one(n);

    std::vector<CycNum> acc(static_cast<std::size_t>(prec), CycNum::zero(n));
    auto add = [&](long e, const CycNum& v) {
        if (e < prec) acc[static_cast<std::size_t>(e)] += v;
    };

    if (r1.brace != 0) {
        // sum_{m=1}^{N-1} m (u1^m - u2^m) + u1^{-1} q^N - u2^{-1} q^N
        for (long m = 1; m < n; ++m) {
            add(m * r1.brace, CycNum::zeta_pow(n, m * r1.omega_exponent).scaled(Rational(m)));
            add(m * r2.brace, CycNum::zeta_pow(n, m * r2.omega_exponent).scaled(Rational(-m)));
        }
        add(n - r1.brace, CycNum::zeta_pow(n, -r1.omega_exponent));
        add(n - r2.brace, -CycNum::zeta_pow(n, -r2.omega_exponent));
    } else if (r2.brace != 0) {
        // w1/(1-w1)^2 - sum m u2^m - u2^{-1} q^N
        CycNum d = one - w1;
        add(0, w1 * (d * d).inverse());
        for (long m = 1; m < n; ++m)
            add(m * r2.brace, CycNum::zeta_pow(n, m * r2.omega_exponent).scaled(Rational(-m)));
        add(n - r2.brace, -CycNum::zeta_pow(n, -r2.omega_exponent));
    } else {
        CycNum d1 = one - w1, d2 = one - w2;
        add(0, ((w1 - w2) * (one - w1 * w2)) * (d1 * d1 * d2 * d2).inverse());
    }
    QSeries rhs(n, 0, std::move(acc), prec);
    return swapped ? -rhs : rhs;
}

SL2Mat random_sl2(Rng& rng, int entry_bound) {
    SL2Mat s(0, -1, 1, 0);
    SL2Mat m;
    int words = 2 + static_cast<int>(rng.below(4));
    for (int i = 0; i < words; ++i) {
        long e = rng.range(-entry_bound, entry_bound);
        m = m * SL2Mat(1, e, 0, 1) * s;
    }
    long e = rng.range(-entry_bound, entry_bound);
    return m * SL2Mat(1, e, 0, 1);
}

SL2Mat random_gamma_n(Rng& rng, int n) {
    SL2Mat m;
    int words = 1 + static_cast<int>(rng.below(3));
    for (int i = 0; i < words; ++i) {
        long e = rng.range(-2, 2) * n;
        if (rng.below(2) == 0) m = m * SL2Mat(1, e, 0, 1);
        else m = m * SL2Mat(1, 0, e, 1);
    }
    return m;
}

namespace {

// canonical nonzero index classes up to sign, sorted
std::vector<IndexPair> index_classes(int n) {
    std::set<std::pair<long, long>> seen;
    std::vector<IndexPair> out;
    for (long r = 0; r < n; ++r)
        for (long s = 0; s < n; ++s) {
            if (r == 0 && s == 0) continue;
            IndexPair c = IndexPair(n, r, s).canonical();
            if (seen.insert({c.r, c.s}).second) out.push_back(c);
        }
    return out;
}

std::vector<long> coprime_residues(int n) {
    std::vector<long> ks;
    for (long k = 1; k < n; ++k)
        if (std::gcd(k, static_cast<long>(n)) == 1) ks.push_back(k);
    return ks;
}

Json pair_detail(const IndexPair& p1, const IndexPair& p2) {
    Json d;
    d["p1"] = {p1.r, p1.s};
    d["p2"] = {p2.r, p2.s};
    return d;
}

}  // namespace

// ---------------------------------------------------------------------
// eisenstein suite

SuiteReport suite_eisenstein(int n, const SuiteConfig& cfg) {
    SuiteReport rep;
    rep.suite = "eisenstein";
    rep.level = n;
    Rng rng(cfg.seed ^ (0x1000 + static_cast<std::uint64_t>(n)));
    const long pshort = 2 * n + 4;

    {
        CheckResult c;
        c.name = "periodicity_evenness";
        c.pass = true;
        int samples = 20;
        for (int i = 0; i < samples && c.pass; ++i) {
            long r = rng.range(0, n - 1), s = rng.range(0, n - 1);
            if (r == 0 && s == 0) r = 1;
            long a = rng.range(-2, 2), b = rng.range(-2, 2);
            QSeries base = e_series_raw(IndexPair(n, r, s), pshort);
            QSeries shift = e_series_raw(IndexPair(n, r + a * n, s + b * n), pshort);
            QSeries even = e_series_raw(IndexPair(n, -r, -s), pshort);
            c.pass = (base == shift) && (base == even);
            if (!c.pass) c.details = Json{{"r", r}, {"s", s}, {"a", a}, {"b", b}};
        }
        if (c.pass) c.details = Json{{"samples", samples}, {"precision", pshort}};
        rep.add(std::move(c));
    }

    std::vector<IndexPair> classes = index_classes(n);

    {
        CheckResult c;
        c.name = "difference_congruences_mod_qN";
        long checked = 0;
        std::vector<Json> failures;
        for (std::size_t i = 0; i < classes.size(); ++i)
            for (std::size_t j = i + 1; j < classes.size(); ++j) {
                const IndexPair &p1 = classes[i], &p2 = classes[j];
                if (p1.same_class(p2)) continue;
                QSeries diff = e_diff_series(p1, p2, n);
                QSeries rhs = e_diff_congruence_rhs(p1, p2, n);
                ++checked;
                if (!diff.congruent_to(rhs, n)) failures.push_back(pair_detail(p1, p2));
            }
        c.pass = failures.empty();
        c.details = Json{{"pairs", checked}, {"modulus_exponent", n}};
        if (!failures.empty()) c.details["failures"] = failures;
        rep.add(std::move(c));
    }

    {
        CheckResult c;
        c.name = "leading_term_and_integral_tail";
        const long window = 4 * n;
        long checked = 0;
        std::vector<Json> failures;
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < classes.size(); ++i)
            for (std::size_t j = i + 1; j < classes.size(); ++j)
                if (!classes[i].same_class(classes[j])) pairs.push_back({i, j});
        std::vector<int> ok(pairs.size(), 1);
        parallel_for(pairs.size(), cfg.jobs, [&](std::size_t idx) {
            const IndexPair &p1 = classes[pairs[idx].first], &p2 = classes[pairs[idx].second];
            auto [t, theta] = theta_leading(p1, p2);
            QSeries diff = e_diff_series(p1, p2, t + window + 2);
            bool good = diff.order() == t && diff.coeff(t) == theta;
            if (good) {
                // h(q) with theta q^t (1 + q h): integral through q^window
                QSeries normalized = diff.scaled(theta.inverse()).shifted(-t);
                QSeries h = (normalized - QSeries::monomial(CycNum::one(n), 0,
                                                            normalized.precision()))
                                .shifted(-1);
                good = h.truncated(window).is_integral();
            }
            ok[idx] = good ? 1 : 0;
        });
        for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
            ++checked;
            if (!ok[idx])
                failures.push_back(
                    pair_detail(classes[pairs[idx].first], classes[pairs[idx].second]));
        }
        c.pass = failures.empty();
        c.details = Json{{"pairs", checked}, {"tail_window", window}};
        if (!failures.empty()) c.details["failures"] = failures;
        rep.add(std::move(c));
    }

    {
        CheckResult c;
        c.name = "galois_equivariance";
        const long p = std::max<long>(100, cfg.prec);
        long checked = 0;
        std::vector<Json> failures;
        for (const IndexPair& pr : classes)
            for (long ell : coprime_residues(n)) {
                QSeries lhs = e_series(pr, p).galois(ell);
                QSeries rhs = e_series(IndexPair(n, pr.r, pr.s * ell), p);
                ++checked;
                if (!(lhs == rhs)) {
                    Json d = pair_detail(pr, pr);
                    d["ell"] = ell;
                    failures.push_back(d);
                }
            }
        c.pass = failures.empty();
        c.details = Json{{"checked", checked}, {"precision", p}};
        if (!failures.empty()) c.details["failures"] = failures;
        rep.add(std::move(c));
    }

    if (n == 2) {
        CheckResult c;
        c.name = "two_division_trace";
        const long p = 64;
        QSeries sum = e_series(IndexPair(2, 1, 0), p) + e_series(IndexPair(2, 0, 1), p) +
                      e_series(IndexPair(2, 1, 1), p);
        QSeries expect = QSeries::monomial(CycNum::from_rational(2, Rational(-1, 4)), 0, p);
        c.pass = sum == expect;
        c.details = Json{{"precision", p}};
        rep.add(std::move(c));
    }
    return rep;
}

// ---------------------------------------------------------------------
// lambda suite

SuiteReport suite_lambda(int n, const SuiteConfig& cfg) {
    SuiteReport rep;
    rep.suite = "lambda";
    rep.level = n;
    Rng rng(cfg.seed ^ (0x2000 + static_cast<std::uint64_t>(n)));
    const long pwin = 4 * n + 8;
    std::vector<long> ks = coprime_residues(n);

    {
        CheckResult c;
        c.name = "gamma_invariance";
        c.pass = true;
        for (int i = 0; i < 10 && c.pass; ++i) {
            long k = ks[rng.below(ks.size())];
            SL2Mat a = random_sl2(rng, 3);
            SL2Mat g = random_gamma_n(rng, n);
            QSeries lhs = lambda_composed(n, k, a * g, pwin);
            QSeries rhs = lambda_composed(n, k, a, pwin);
            c.pass = lhs == rhs;
            if (!c.pass) c.details = Json{{"k", k}, {"A", a.str()}, {"gamma", g.str()}};
        }
        if (c.pass) c.details = Json{{"samples", 10}, {"precision", pwin}};
        rep.add(std::move(c));
    }

    {
        CheckResult c;
        c.name = "plus_minus_invariance";
        c.pass = true;
        for (int i = 0; i < 10 && c.pass; ++i) {
            long k = ks[rng.below(ks.size())];
            SL2Mat a = random_sl2(rng, 3);
            c.pass = lambda_composed(n, k, a, pwin) ==
                     lambda_composed(n, k, a.negated(), pwin);
            if (!c.pass) c.details = Json{{"k", k}, {"A", a.str()}};
        }
        if (c.pass) c.details = Json{{"samples", 10}};
        rep.add(std::move(c));
    }

    if (n != 2 && n != 6) {
        CheckResult c;
        c.name = "non_invariance_outside_gamma";
        c.pass = true;
        int found = 0;
        while (found < 20) {
            SL2Mat a = random_sl2(rng, 3);
            if (a.in_gamma_pm(n)) continue;
            ++found;
            QSeries lhs = lambda_composed(n, 1, a, pwin);
            QSeries rhs = lambda_k_series(n, 1, pwin);
            if (lhs.congruent_to(rhs, 4 * n)) {
                c.pass = false;
                c.details = Json{{"A", a.str()}, {"window", 4 * n}};
                break;
            }
        }
        if (c.pass) c.details = Json{{"samples", 20}, {"window", 4 * n}};
        rep.add(std::move(c));
    }

    {
        CheckResult c;
        c.name = "basis_decomposition_roundtrip";
        c.pass = true;
        int done = 0;
        while (done < 50 && c.pass) {
            long r1 = rng.range(0, n - 1), s1 = rng.range(0, n - 1);
            long r2 = rng.range(0, n - 1), s2 = rng.range(0, n - 1);
            long det = mod_pos(r1 * s2 - s1 * r2, n);
            if (std::gcd(det, static_cast<long>(n)) != 1) continue;
            ++done;
            BasisPair bp(n, r1, s1, r2, s2);
            auto [k, a] = decompose_basis(bp);
            QSeries direct = lambda_basis(bp, pwin);
            QSeries via = lambda_composed(n, k, a, pwin);
            c.pass = direct == via;
            if (!c.pass) c.details = Json{{"basis", bp.str()}, {"k", k}, {"A", a.str()}};
        }
        if (c.pass) c.details = Json{{"samples", 50}};
        rep.add(std::move(c));
    }

    if (n > 2) {
        CheckResult c;
        c.name = "galois_conjugation_identity";
        c.pass = true;
        const long p = std::max<long>(100, cfg.prec);
        for (int i = 0; i < 20 && c.pass; ++i) {
            long k = ks[rng.below(ks.size())];
            SL2Mat a = random_sl2(rng, 3);
            auto [lhs, rhs] = lambda_galois_pair(n, k, a, p);
            c.pass = lhs.congruent_to(rhs, p);
            if (!c.pass) c.details = Json{{"k", k}, {"A", a.str()}};
        }
        if (c.pass) c.details = Json{{"samples", 20}, {"precision", p}};
        rep.add(std::move(c));
    }

    if (n >= 5) {
        CheckResult c;
        c.name = "lambda_star_checks";
        c.pass = true;
        long checked = 0;
        for (long k = 1; 2 * k < n && c.pass; ++k)
            for (long ell = 1; 2 * ell < n && c.pass; ++ell) {
                if (k == ell) continue;
                if (std::gcd(k + ell, static_cast<long>(n)) != 1) continue;
                if (mod_pos(k + 2 * ell, n) == 0 || mod_pos(2 * k + ell, n) == 0) continue;
                ++checked;
                QSeries star = lambda_star_series(n, k, ell, pwin);
                // constant term against the theta ratio ({r}=0 case)
                auto [tn, thn] = theta_leading(IndexPair(n, 0, k), IndexPair(n, 0, k + ell));
                auto [td, thd] = theta_leading(IndexPair(n, 0, ell), IndexPair(n, 0, k + ell));
                c.pass = star.order() == 0 && tn == 0 && td == 0 &&
                         star.coeff(0) == thn * thd.inverse();
                if (!c.pass) {
                    c.details = Json{{"k", k}, {"ell", ell}, {"what", "constant_term"}};
                    break;
                }
                // Galois action scales the s-indices
                for (long m : coprime_residues(n)) {
                    QSeries lhs = star.galois(m);
                    QSeries rhs = e_diff_series(IndexPair(n, 0, k * m), IndexPair(n, 0, (k + ell) * m), pwin + n + 2) /
                                  e_diff_series(IndexPair(n, 0, ell * m), IndexPair(n, 0, (k + ell) * m), pwin + n + 2);
                    if (!lhs.congruent_to(rhs, pwin)) {
                        c.pass = false;
                        c.details = Json{{"k", k}, {"ell", ell}, {"m", m}, {"what", "galois_scaling"}};
                        break;
                    }
                }
            }
        if (c.pass) c.details = Json{{"pairs", checked}};
        rep.add(std::move(c));
    }

    if (n == 2) {
        CheckResult c;
        c.name = "classical_lambda_j_relation";
        const long p = cfg.prec_for(2);
        QSeries lam = lambda_k_series(2, 1, p + 6);
        QSeries one = QSeries::monomial(CycNum::one(2), 0, p + 6);
        QSeries w = one - lam + lam * lam;
        QSeries lhs = (w * w * w).scaled(Rational(256));
        QSeries jm = j_series_level(2, p + 6);
        QSeries rhs = jm * lam * lam * (one - lam) * (one - lam);
        c.pass = (lhs - rhs).truncated(p).is_zero();
        c.details = Json{{"precision", p}};
        rep.add(std::move(c));
    }
    return rep;
}

// ---------------------------------------------------------------------
// integrality suite

SuiteReport suite_integrality(int n, const SuiteConfig& cfg) {
    SuiteReport rep;
    rep.suite = "integrality";
    rep.level = n;
    const long p = cfg.prec > 0 ? cfg.prec : 100;

    CosetReps reps = coset_reps(n);
    std::vector<long> ks = n == 2 ? std::vector<long>{1} : coprime_residues(n);

    std::vector<std::pair<long, std::size_t>> work;
    for (long k : ks)
        for (std::size_t i = 0; i < reps.reps.size(); ++i) work.push_back({k, i});

    std::vector<IntegralityReport> results(work.size());
    parallel_for(work.size(), cfg.jobs, [&](std::size_t idx) {
        auto [k, i] = work[idx];
        results[idx] = n == 2 ? integrality_certificate_level2(reps.reps[i], p)
                              : integrality_certificate(n, k, reps.reps[i], p);
    });

    CheckResult c;
    c.name = "integrality_sweep";
    std::vector<Json> failures;
    for (const IntegralityReport& r : results)
        if (!r.pass()) failures.push_back(integrality_to_json(r));
    c.pass = failures.empty();
    c.details = Json{{"k_values", ks.size()},
                     {"cosets", reps.reps.size()},
                     {"certificates", work.size()},
                     {"precision", p},
                     {"c_constant", c_constant(n)}};
    if (!failures.empty()) c.details["failures"] = failures;
    rep.add(std::move(c));
    return rep;
}

// ---------------------------------------------------------------------
// psi suite

namespace {

// dense integer polynomial product, low power first
std::vector<Integer> ipoly_mul(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    std::vector<Integer> out(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace

SuiteReport suite_psi(int n, const SuiteConfig& cfg) {
    SuiteReport rep;
    rep.suite = "psi";
    rep.level = n;
    for (long k : (n == 2 ? std::vector<long>{1} : coprime_residues(n))) {
        PsiPoly psi = psi_poly(n, k, cfg.prec, cfg.jobs);
        CheckResult c;
        c.name = "psi_construction_k" + std::to_string(k);
        c.pass = psi.checks.pass() && psi.degree == coset_index(n);
        c.details = Json{{"degree", psi.degree},
                         {"jdegree", psi.jdegree},
                         {"precision", psi.checks.prec},
                         {"verified_trailing", psi.checks.verified_trailing},
                         {"monic", psi.checks.monic},
                         {"integral", psi.checks.integral}};
        if (!psi.checks.offending.empty()) c.details["offending"] = psi.checks.offending;
        rep.add(std::move(c));
        if (!cfg.outdir.empty()) {
            std::filesystem::create_directories(cfg.outdir);
            write_json_file(cfg.outdir + "/psi_" + std::to_string(n) + "_" + std::to_string(k) +
                                ".json",
                            psi_to_json(psi));
        }

        if (n == 2) {
            // classical sextic under X = 16 lambda:
            // (X^2 - 16X + 256)^3 - j X^2 (X - 16)^2
            CheckResult cs;
            cs.name = "classical_sextic_match";
            std::vector<Integer> base{Integer(256), Integer(-16), Integer(1)};
            std::vector<Integer> j0 = ipoly_mul(ipoly_mul(base, base), base);
            std::vector<Integer> xpart{Integer(0), Integer(0), Integer(1)};  // X^2
            std::vector<Integer> shift{Integer(-16), Integer(1)};
            std::vector<Integer> j1 = ipoly_mul(xpart, ipoly_mul(shift, shift));
            cs.pass = psi.jdegree == 1 && psi.degree == 6;
            for (long i = 0; i <= 6 && cs.pass; ++i) {
                Integer e0 = i < static_cast<long>(j0.size()) ? j0[static_cast<std::size_t>(i)] : Integer(0);
                Integer e1 = i < static_cast<long>(j1.size()) ? -j1[static_cast<std::size_t>(i)] : Integer(0);
                cs.pass = psi.coeff(i, 0) == CycNum::from_rational(2, Rational(e0)) &&
                          psi.coeff(i, 1) == CycNum::from_rational(2, Rational(e1));
                if (!cs.pass) cs.details = Json{{"x_power", i}};
            }
            rep.add(std::move(cs));
        }
    }
    return rep;
}

// ---------------------------------------------------------------------

SuiteReport suite_remark34(const SuiteConfig& cfg) {
    SuiteReport rep;
    rep.suite = "remark34";
    rep.level = 6;
    const long p = cfg.prec > 0 ? cfg.prec : 200;
    Remark34Report r = remark34_check(p);
    CheckResult c;
    c.name = "remark34";
    c.pass = r.pass();
    c.details = remark34_to_json(r);
    rep.add(std::move(c));
    return rep;
}

// ---------------------------------------------------------------------
// cm suite

namespace {

// evaluate a truncated series at tau numerically (no tail bound; the
// caller owns the truncation-error budget)
HPComplex eval_series_at(const QSeries& s, const HPComplex& tau, long digits) {
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 3.33) + 64;
    Real two_pi = Real::pi(prec) * Real(2, prec);
    HPComplex arg((-tau.im) * two_pi / Real(s.level(), prec),
                  tau.re * two_pi / Real(s.level(), prec));
    arg.err = err_up(tau.err * 7.0 + 8.0 * (arg.re.ulp_bound() + arg.im.ulp_bound()));
    HPComplex q = cexp(arg);
    HPComplex qinv = HPComplex::one(prec) / q;
    HPComplex acc = HPComplex::zero(prec);
    for (long e = s.order(); e < s.precision(); ++e) {
        CycNum c = s.coeff(e);
        if (c.is_zero()) continue;
        HPComplex qe = e >= 0 ? cpow(q, e) : cpow(qinv, -e);
        acc = acc + cyc_to_complex(c, prec) * qe;
    }
    return acc;
}

bool close_to(const HPComplex& z, const HPComplex& w, double tol) {
    return (z - w).abs_upper() < tol;
}

HPComplex complex_point(double re, double im, mpfr_prec_t prec) {
    char buf[64];
    snprintf(buf, sizeof buf, "%.17g", re);
    Real r(std::string(buf), prec);
    snprintf(buf, sizeof buf, "%.17g", im);
    Real i(std::string(buf), prec);
    return HPComplex(std::move(r), std::move(i));
}

}  // namespace

SuiteReport suite_cm(const SuiteConfig& cfg) {
    SuiteReport rep;
    rep.suite = "cm";
    Rng rng(cfg.seed ^ 0x6000);
    const long digits = std::max<long>(60, cfg.digits);
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 3.33) + 64;
    const double tol30 = 1e-30;

    {
        CheckResult c;
        c.name = "j_classical_values";
        HPComplex i_pt(0, 1, prec);
        HPComplex rho(Real(Rational(1, 2), prec), Real(3, prec).sqrt() / Real(2, prec));
        rho.err = err_up(4.0 * rho.im.ulp_bound());
        HPComplex sq2(Real(0, prec), Real(2, prec).sqrt());
        sq2.err = err_up(4.0 * sq2.im.ulp_bound());
        HPComplex j1 = j_value(i_pt, digits);
        HPComplex j2 = j_value(rho, digits);
        HPComplex j3 = j_value(sq2, digits);
        c.pass = close_to(j1, HPComplex(1728, 0, prec), tol30) &&
                 j2.abs_upper() < tol30 &&
                 close_to(j3, HPComplex(8000, 0, prec), tol30);
        c.details = Json{{"j_i", j1.str(35)}, {"j_rho", j2.str(35)}, {"j_sqrt_m2", j3.str(35)}};
        rep.add(std::move(c));
    }

    {
        CheckResult c;
        c.name = "cm_certificates";
        c.pass = true;
        struct Case { int n; long k; bool rho_point; };
        std::vector<Case> cases{{2, 1, false}, {3, 1, false}, {3, 1, true},
                                {4, 1, false}, {5, 1, false}, {5, 2, false}};
        Json results = Json::array();
        std::map<std::pair<int, long>, PsiPoly> psis;
        for (const Case& cse : cases) {
            auto key = std::make_pair(cse.n, cse.k);
            if (!psis.count(key)) psis.emplace(key, psi_poly(cse.n, cse.k, 0, cfg.jobs));
            CMPoint theta;
            if (cse.rho_point) theta = CMPoint::from_discriminant(-3, prec);
            else theta.tau = HPComplex(0, 1, prec);
            CMCertificate cert = cm_certify(psis.at(key), theta, digits);
            bool ok = cert.certified;
            if (cse.n == 2)
                ok = ok && close_to(cert.x, HPComplex(-16, 0, prec), tol30);
            c.pass = c.pass && ok;
            Json r = cm_certificate_to_json(cert);
            r["ok"] = ok;
            results.push_back(r);
        }
        c.details = Json{{"digits", digits}, {"results", results}};
        rep.add(std::move(c));
    }

    {
        CheckResult c;
        c.name = "series_value_coherence";
        c.pass = true;
        for (int trial = 0; trial < 10 && c.pass; ++trial) {
            int n = 2 + static_cast<int>(rng.below(7));
            double im = 1.0 + 0.1 * static_cast<double>(rng.below(11));
            double re = -0.45 + 0.09 * static_cast<double>(rng.below(11));
            HPComplex tau = complex_point(re, im, prec);
            long r = rng.range(0, n - 1), s = rng.range(0, n - 1);
            if (r == 0 && s == 0) r = 1;
            IndexPair p(n, r, s);
            long sprec = static_cast<long>((40.0 * std::log(10.0)) / (2 * M_PI * im / n)) + 24;
            HPComplex via_series = eval_series_at(e_series(p, sprec), tau, digits);
            HPComplex direct = e_value(p, tau, digits);
            c.pass = close_to(via_series, direct, tol30);
            if (!c.pass)
                c.details = Json{{"level", n}, {"pair", {r, s}},
                                 {"tau", tau.str(20)}, {"series_prec", sprec}};
        }
        if (c.pass) c.details = Json{{"samples", 10}, {"tolerance", tol30}};
        rep.add(std::move(c));
    }

    {
        CheckResult c;
        c.name = "weight2_transformation";
        c.pass = true;
        for (int trial = 0; trial < 10 && c.pass; ++trial) {
            int n = 2 + static_cast<int>(rng.below(7));
            SL2Mat a = random_sl2(rng, 2);
            double im = 1.0 + 0.1 * static_cast<double>(rng.below(11));
            double re = -0.45 + 0.09 * static_cast<double>(rng.below(11));
            HPComplex tau = complex_point(re, im, prec);
            long r = rng.range(0, n - 1), s = rng.range(0, n - 1);
            if (r == 0 && s == 0) s = 1;
            IndexPair p(n, r, s);
            // the weight-2 law on the wp-value:
            // (E(A tau; p) + 1/12) (c tau + d)^{-2} = E(tau; pA) + 1/12
            HPComplex ca(Real(a.c, prec), Real(0, prec));
            HPComplex da(Real(a.d, prec), Real(0, prec));
            HPComplex aa(Real(a.a, prec), Real(0, prec));
            HPComplex ba(Real(a.b, prec), Real(0, prec));
            HPComplex denom = ca * tau + da;
            HPComplex atau = (aa * tau + ba) / denom;
            HPComplex twelfth(Real(Rational(1, 12), prec), Real(0, prec));
            HPComplex lhs = (e_value(p, atau, digits) + twelfth) / (denom * denom);
            HPComplex rhs = e_value(index_transform(p, a), tau, digits) + twelfth;
            c.pass = close_to(lhs, rhs, tol30);
            if (!c.pass)
                c.details = Json{{"level", n}, {"pair", {r, s}}, {"A", a.str()},
                                 {"tau", tau.str(20)}};
        }
        if (c.pass) c.details = Json{{"samples", 10}, {"tolerance", tol30}};
        rep.add(std::move(c));
    }
    return rep;
}

// ---------------------------------------------------------------------

std::vector<std::string> suite_names() {
    return {"eisenstein", "lambda", "integrality", "psi", "remark34", "cm"};
}

std::vector<SuiteReport> run_suite(const std::string& name, const SuiteConfig& cfg) {
    std::vector<SuiteReport> out;
    auto levels_or = [&](std::vector<int> def) {
        return cfg.levels.empty() ? def : cfg.levels;
    };
    if (name == "eisenstein") {
        for (int n : levels_or({2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}))
            out.push_back(suite_eisenstein(n, cfg));
    } else if (name == "lambda") {
        for (int n : levels_or({2, 3, 4, 5, 6, 7, 8})) out.push_back(suite_lambda(n, cfg));
    } else if (name == "integrality") {
        for (int n : levels_or({3, 4, 5, 7, 8, 9, 12})) out.push_back(suite_integrality(n, cfg));
    } else if (name == "psi") {
        for (int n : levels_or({2, 3})) out.push_back(suite_psi(n, cfg));
    } else if (name == "remark34") {
        out.push_back(suite_remark34(cfg));
    } else if (name == "cm") {
        out.push_back(suite_cm(cfg));
    } else {
        throw std::invalid_argument("unknown suite '" + name + "'; expected one of "
                                    "eisenstein|lambda|integrality|psi|remark34|cm");
    }
    if (!cfg.outdir.empty()) {
        std::filesystem::create_directories(cfg.outdir);
        for (const SuiteReport& r : out) {
            std::string path = cfg.outdir + "/" + r.suite +
                               (r.level > 0 ? "_" + std::to_string(r.level) : "") + ".json";
            write_json_file(path, r.to_json());
        }
    }
    return out;
}

}  // namespace genlambda
