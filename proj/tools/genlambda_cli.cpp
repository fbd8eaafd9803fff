#include <CLI11.hpp>

#include <genlambda/serialize.hpp>
#include <genlambda/suites.hpp>

#include <iostream>

using namespace genlambda;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecision = 3;

std::pair<long, long> parse_pair(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("expected 'r,s', got '" + s + "'");
    return {std::stol(s.substr(0, comma)), std::stol(s.substr(comma + 1))};
}

SL2Mat parse_matrix(const std::string& s) {
    std::array<long, 4> v{};
    std::size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        std::size_t next = s.find(',', pos);
        if ((next == std::string::npos) != (i == 3))
            throw CLI::ValidationError("expected 'a,b,c,d', got '" + s + "'");
        v[static_cast<std::size_t>(i)] = std::stol(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return SL2Mat(v[0], v[1], v[2], v[3]);
}

// "a+bi" / "a-bi" / "bi" / "a", decimal parts
HPComplex parse_complex(const std::string& s, mpfr_prec_t prec) {
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw CLI::ValidationError("empty complex literal");
    if (t.back() == 'i' || t.back() == 'I') {
        t.pop_back();
        if (t.back() == '*') t.pop_back();
        // split the imaginary coefficient from an optional real prefix
        std::size_t split = t.find_last_of("+-");
        while (split != std::string::npos && split > 0 &&
               (t[split - 1] == 'e' || t[split - 1] == 'E'))
            split = t.find_last_of("+-", split - 1);
        std::string re_part = "0", im_part;
        if (split == std::string::npos || split == 0) {
            im_part = t;
        } else {
            re_part = t.substr(0, split);
            im_part = t.substr(split);
        }
        if (im_part.empty() || im_part == "+") im_part = "1";
        if (im_part == "-") im_part = "-1";
        return HPComplex(Real(re_part, prec), Real(im_part, prec));
    }
    return HPComplex(Real(t, prec), Real(0, prec));
}

void emit(const Json& j, const std::string& out, bool to_stdout) {
    if (!out.empty()) write_json_file(out, j);
    if (to_stdout || out.empty()) std::cout << dump_json(j);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized lambda functions: exact q-expansions over Q(zeta_N), "
                 "integrality certificates, Psi_k construction, CM value certification"};
    app.require_subcommand(1);

    int level = 0;
    long prec = 0;
    long digits = 50;
    int jobs = 1;
    std::uint64_t seed = 1;
    std::string out;
    app.add_option("--level", level, "level N")->type_name("N");
    app.add_option("--prec", prec, "q-adic working precision");
    app.add_option("--digits", digits, "decimal digits for numeric evaluation");
    app.add_option("--jobs", jobs, "worker threads");
    app.add_option("--seed", seed, "seed for randomized sweeps");
    app.add_option("--out", out, "output file or directory (per subcommand)");

    // eseries
    auto* cmd_eseries = app.add_subcommand("eseries", "q-expansion of E(tau; r, s)");
    std::string pair_arg;
    bool as_json = false;
    cmd_eseries->add_option("--pair", pair_arg, "index pair r,s")->required();
    cmd_eseries->add_flag("--json", as_json, "print JSON instead of a summary line");

    // lambda
    auto* cmd_lambda = app.add_subcommand("lambda", "series of Lambda_k, Lambda_k o A, "
                                                    "or Lambda(tau; Q1, Q2)");
    long k_arg = 0;
    std::string matrix_arg, q1_arg, q2_arg;
    cmd_lambda->add_option("--k", k_arg, "k coprime to N");
    cmd_lambda->add_option("--matrix", matrix_arg, "SL2(Z) matrix a,b,c,d");
    cmd_lambda->add_option("--q1", q1_arg, "first basis row r,s");
    cmd_lambda->add_option("--q2", q2_arg, "second basis row r,s");
    cmd_lambda->add_flag("--json", as_json, "print JSON instead of a summary line");

    // certify
    auto* cmd_certify = app.add_subcommand("certify", "verification sweeps");
    auto* cert_integrality = cmd_certify->add_subcommand(
        "integrality", "(1-zeta^k)^3- and C_N-integrality over all k and cosets");
    auto* cert_remark34 = cmd_certify->add_subcommand(
        "remark34", "the level-6 exceptional identity");

    // psi
    auto* cmd_psi = app.add_subcommand("psi", "construct Psi_k(X) over Z[zeta][j]");
    long psi_k = 1;
    cmd_psi->add_option("--k", psi_k, "k coprime to N");

    // cm
    auto* cmd_cm = app.add_subcommand("cm", "certify C_N Lambda_k(theta) against Psi_k");
    std::string theta_arg, psi_file;
    long disc = 0;
    long cm_k = 1;
    cmd_cm->add_option("--k", cm_k, "k coprime to N");
    cmd_cm->add_option("--theta", theta_arg, "upper half plane point 'a+bi'");
    cmd_cm->add_option("--disc", disc, "negative discriminant (maximal-order generator)");
    cmd_cm->add_option("--psi", psi_file, "precomputed psi_N_k.json (else computed now)");

    // suite
    auto* cmd_suite = app.add_subcommand("suite", "run a named verification suite");
    std::string suite_name;
    std::vector<int> suite_levels;
    cmd_suite->add_option("name", suite_name, "eisenstein|lambda|integrality|psi|remark34|cm")
        ->required();
    cmd_suite->add_option("--levels", suite_levels, "levels to run (default per suite)");

    // global flags are accepted after the subcommand name as well
    for (CLI::App* sc : {cmd_eseries, cmd_lambda, cmd_certify, cert_integrality,
                         cert_remark34, cmd_psi, cmd_cm, cmd_suite})
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (cmd_eseries->parsed()) {
            if (level < 2) throw CLI::ValidationError("--level is required and must be >= 2");
            auto [r, s] = parse_pair(pair_arg);
            long p = prec > 0 ? prec : 20;
            QSeries e = e_series(IndexPair(level, r, s), p);
            if (as_json || !out.empty()) emit(qseries_to_json(e), out, as_json);
            if (!as_json) std::cout << "E(tau;" << r << "," << s << ") = " << e.str() << "\n";
            return kExitPass;
        }

        if (cmd_lambda->parsed()) {
            if (level < 2) throw CLI::ValidationError("--level is required and must be >= 2");
            long p = prec > 0 ? prec : std::max(200L, 20L * level);
            QSeries s;
            std::string label;
            if (!q1_arg.empty() || !q2_arg.empty()) {
                if (q1_arg.empty() || q2_arg.empty())
                    throw CLI::ValidationError("--q1 and --q2 must be given together");
                auto [r1, s1] = parse_pair(q1_arg);
                auto [r2, s2] = parse_pair(q2_arg);
                BasisPair bp(level, r1, s1, r2, s2);
                s = lambda_basis(bp, p);
                label = "Lambda(tau; " + q1_arg + "; " + q2_arg + ")";
            } else {
                if (k_arg == 0) throw CLI::ValidationError("--k is required without --q1/--q2");
                if (!matrix_arg.empty()) {
                    SL2Mat a = parse_matrix(matrix_arg);
                    s = lambda_composed(level, k_arg, a, p);
                    label = "Lambda_" + std::to_string(k_arg) + " o " + a.str();
                } else {
                    s = lambda_k_series(level, k_arg, p);
                    label = "Lambda_" + std::to_string(k_arg);
                }
            }
            if (as_json || !out.empty()) emit(qseries_to_json(s), out, as_json);
            if (!as_json) std::cout << label << " = " << s.str() << "\n";
            return kExitPass;
        }

        if (cert_integrality->parsed()) {
            SuiteConfig cfg;
            cfg.prec = prec;
            cfg.jobs = jobs;
            cfg.seed = seed;
            cfg.outdir = out;
            if (level >= 2) cfg.levels = {level};
            bool pass = true;
            for (const SuiteReport& r : run_suite("integrality", cfg)) {
                pass = pass && r.pass;
                std::cout << "integrality N=" << r.level << ": "
                          << (r.pass ? "pass" : "FAIL") << "\n";
                if (!r.pass) std::cout << dump_json(r.to_json());
            }
            return pass ? kExitPass : kExitCheckFailure;
        }

        if (cert_remark34->parsed()) {
            Remark34Report r = remark34_check(prec > 0 ? prec : 200);
            Json j = remark34_to_json(r);
            emit(j, out, false);
            return r.pass() ? kExitPass : kExitCheckFailure;
        }

        if (cmd_psi->parsed()) {
            if (level < 2) throw CLI::ValidationError("--level is required and must be >= 2");
            PsiPoly psi = psi_poly(level, psi_k, prec, jobs);
            std::string path = out.empty() ? "psi_" + std::to_string(level) + "_" +
                                                 std::to_string(psi_k) + ".json"
                                           : out;
            write_json_file(path, psi_to_json(psi));
            std::cout << "Psi_" << psi_k << " at level " << level << ": degree " << psi.degree
                      << ", j-degree " << psi.jdegree << ", checks "
                      << (psi.checks.pass() ? "pass" : "FAIL") << ", written to " << path
                      << "\n";
            return psi.checks.pass() ? kExitPass : kExitCheckFailure;
        }

        if (cmd_cm->parsed()) {
            if (level < 2) throw CLI::ValidationError("--level is required and must be >= 2");
            mpfr_prec_t wp = static_cast<mpfr_prec_t>(digits * 3.33) + 64;
            CMPoint theta;
            if (disc != 0) {
                theta = CMPoint::from_discriminant(disc, wp);
            } else if (!theta_arg.empty()) {
                theta.tau = parse_complex(theta_arg, wp);
            } else {
                throw CLI::ValidationError("one of --theta or --disc is required");
            }
            PsiPoly psi;
            if (!psi_file.empty()) {
                psi = psi_from_json(read_json_file(psi_file));
                if (psi.level != level || psi.k != cm_k)
                    throw CLI::ValidationError("--psi file is for N=" +
                                               std::to_string(psi.level) + ", k=" +
                                               std::to_string(psi.k));
            } else {
                psi = psi_poly(level, cm_k, prec, jobs);
            }
            CMCertificate cert = cm_certify(psi, theta, digits);
            emit(cm_certificate_to_json(cert), out, false);
            return cert.certified ? kExitPass : kExitCheckFailure;
        }

        if (cmd_suite->parsed()) {
            SuiteConfig cfg;
            cfg.levels = suite_levels;
            if (level >= 2 && cfg.levels.empty()) cfg.levels = {level};
            cfg.prec = prec;
            cfg.digits = digits;
            cfg.jobs = jobs;
            cfg.seed = seed;
            cfg.outdir = out;
            bool pass = true;
            for (const SuiteReport& r : run_suite(suite_name, cfg)) {
                pass = pass && r.pass;
                std::cout << r.suite << (r.level > 0 ? " N=" + std::to_string(r.level) : "")
                          << ": " << (r.pass ? "pass" : "FAIL") << "\n";
                for (const CheckResult& c : r.checks)
                    std::cout << "  " << (c.pass ? "ok   " : "FAIL ") << c.name << "\n";
                if (!r.pass) std::cout << dump_json(r.to_json());
            }
            return pass ? kExitPass : kExitCheckFailure;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PrecisionFailure& e) {
        std::cerr << "precision insufficient: " << e.what() << "\n";
        return kExitPrecision;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitUsage;
}
