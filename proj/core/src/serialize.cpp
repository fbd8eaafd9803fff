#include "genlambda/serialize.hpp"

#include <fstream>

namespace genlambda {

namespace {

std::string rational_str(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_parse(const std::string& s) {
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("cannot parse rational '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace

Json cyc_to_json(const CycNum& a) {
    Json out = Json::array();
    for (const Rational& r : a.coeffs()) out.push_back(rational_str(r));
    return out;
}

CycNum cyc_from_json(int level, const Json& j) {
    std::vector<Rational> c;
    c.reserve(j.size());
    for (const Json& e : j) c.push_back(rational_parse(e.get<std::string>()));
    return CycNum::from_coeffs(level, std::move(c));
}

Json qseries_to_json(const QSeries& s) {
    Json out;
    out["level"] = s.level();
    out["order"] = s.order();
    out["precision"] = s.precision();
    Json coeffs = Json::array();
    for (const CycNum& c : s.coeffs()) coeffs.push_back(cyc_to_json(c));
    out["coeffs"] = coeffs;
    return out;
}

QSeries qseries_from_json(const Json& j) {
    int level = j.at("level").get<int>();
    long order = j.at("order").get<long>();
    long prec = j.at("precision").get<long>();
    std::vector<CycNum> c;
    for (const Json& e : j.at("coeffs")) c.push_back(cyc_from_json(level, e));
    return QSeries(level, order, std::move(c), prec);
}

Json psi_to_json(const PsiPoly& psi) {
    Json out;
    out["level"] = psi.level;
    out["k"] = psi.k;
    out["degree"] = psi.degree;
    out["jdegree"] = psi.jdegree;
    Json coeffs = Json::array();
    for (long i = 0; i <= psi.degree; ++i)
        for (long d = 0; d <= psi.jdegree; ++d) {
            const CycNum& v = psi.coeff(i, d);
            if (v.is_zero()) continue;
            Json entry;
            entry["x_power"] = i;
            entry["j_power"] = d;
            entry["value"] = cyc_to_json(v);
            coeffs.push_back(entry);
        }
    out["coeffs"] = coeffs;
    Json checks;
    checks["monic"] = psi.checks.monic;
    checks["support_mod_N"] = psi.checks.support_ok;
    checks["remainders_ok"] = psi.checks.remainders_ok;
    checks["integral"] = psi.checks.integral;
    checks["precision"] = psi.checks.prec;
    checks["verified_trailing"] = psi.checks.verified_trailing;
    checks["retries"] = psi.checks.retries;
    if (!psi.checks.offending.empty()) checks["offending"] = psi.checks.offending;
    out["checks"] = checks;
    return out;
}

PsiPoly psi_from_json(const Json& j) {
    PsiPoly psi;
    psi.level = j.at("level").get<int>();
    psi.k = j.at("k").get<long>();
    psi.degree = j.at("degree").get<long>();
    psi.jdegree = j.at("jdegree").get<long>();
    psi.c.assign(static_cast<std::size_t>(psi.degree) + 1,
                 std::vector<CycNum>(static_cast<std::size_t>(psi.jdegree) + 1,
                                     CycNum::zero(psi.level)));
    for (const Json& e : j.at("coeffs")) {
        long i = e.at("x_power").get<long>();
        long d = e.at("j_power").get<long>();
        psi.c.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(d)) =
            cyc_from_json(psi.level, e.at("value"));
    }
    const Json& checks = j.at("checks");
    psi.checks.monic = checks.at("monic").get<bool>();
    psi.checks.support_ok = checks.at("support_mod_N").get<bool>();
    psi.checks.remainders_ok = checks.at("remainders_ok").get<bool>();
    psi.checks.integral = checks.at("integral").get<bool>();
    psi.checks.prec = checks.at("precision").get<long>();
    psi.checks.verified_trailing = checks.at("verified_trailing").get<long>();
    psi.checks.retries = checks.at("retries").get<int>();
    return psi;
}

Json integrality_to_json(const IntegralityReport& rep) {
    Json out;
    out["level"] = rep.level;
    out["k"] = rep.k;
    out["matrix"] = {rep.matrix.a, rep.matrix.b, rep.matrix.c, rep.matrix.d};
    out["precision"] = rep.prec;
    out["zeta_factor_integral"] = rep.zeta_factor_integral;
    out["c_factor_integral"] = rep.c_factor_integral;
    out["pass"] = rep.pass();
    if (rep.offending_exponent) {
        out["offending_exponent"] = *rep.offending_exponent;
        out["offending_value"] = rep.offending_value;
    }
    return out;
}

Json remark34_to_json(const Remark34Report& rep) {
    Json out;
    out["level"] = 6;
    out["matrix"] = {3, 11, 1, 4};
    out["precision"] = rep.prec;
    out["F_vanishes"] = rep.f_vanishes;
    out["F_vanishes_to"] = rep.f_vanishes_to;
    out["q2_coefficient_zero"] = rep.q2_coefficient_zero;
    out["det_is_one"] = rep.det_is_one;
    out["M_outside_gamma6"] = rep.m_outside_gamma6;
    out["lambda1_fixed"] = rep.lambda1_fixed;
    out["pass"] = rep.pass();
    return out;
}

Json hpcomplex_to_json(const HPComplex& z, int digits) {
    Json out;
    out["re"] = z.re.str(digits);
    out["im"] = z.im.str(digits);
    out["err"] = z.err;
    return out;
}

Json cm_certificate_to_json(const CMCertificate& cert) {
    int digits = static_cast<int>(cert.digits);
    Json out;
    Json inputs;
    inputs["level"] = cert.level;
    inputs["k"] = cert.k;
    inputs["digits"] = cert.digits;
    if (cert.disc) inputs["disc"] = *cert.disc;
    inputs["theta"] = hpcomplex_to_json(cert.theta, digits);
    out["inputs"] = inputs;
    out["x"] = hpcomplex_to_json(cert.x, digits);
    out["j_theta"] = hpcomplex_to_json(cert.j_theta, digits);
    out["residual"] = cert.residual;
    out["tolerance"] = cert.tolerance;
    out["verdict"] = cert.certified ? "pass" : "fail";
    if (!cert.note.empty()) out["note"] = cert.note;
    return out;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << dump_json(j);
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    Json j;
    in >> j;
    return j;
}

}  // namespace genlambda
