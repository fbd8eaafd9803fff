#ifndef GENLAMBDA_SUITES_HPP
#define GENLAMBDA_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "genlambda/serialize.hpp"
#include "genlambda/util.hpp"

namespace genlambda {

struct SuiteConfig {
    std::vector<int> levels;     // empty = suite default
    long prec = 0;               // 0 = max(200, 20 N) identity default
    long digits = 50;
    int jobs = 1;
    std::uint64_t seed = 1;
    std::string outdir;          // empty = no report files written

    long prec_for(int n) const { return prec > 0 ? prec : std::max(200L, 20L * n); }
};

struct CheckResult {
    std::string name;
    bool pass = false;
    Json details;  // enough to reproduce the single failing check
};

struct SuiteReport {
    std::string suite;
    int level = 0;
    bool pass = true;
    std::vector<CheckResult> checks;

    void add(CheckResult r) {
        pass = pass && r.pass;
        checks.push_back(std::move(r));
    }
    Json to_json() const;
};

// Named verification suites. Each returns one report per level; writes
// <outdir>/<suite>_<level>.json when outdir is set. Deterministic for a
// fixed config.
std::vector<SuiteReport> run_suite(const std::string& name, const SuiteConfig& cfg);
std::vector<std::string> suite_names();

// individual suites (per level where applicable)
SuiteReport suite_eisenstein(int n, const SuiteConfig& cfg);
SuiteReport suite_lambda(int n, const SuiteConfig& cfg);
SuiteReport suite_integrality(int n, const SuiteConfig& cfg);
SuiteReport suite_psi(int n, const SuiteConfig& cfg);
SuiteReport suite_remark34(const SuiteConfig& cfg);
SuiteReport suite_cm(const SuiteConfig& cfg);

// shared helpers, also used by the acceptance tests
QSeries e_diff_congruence_rhs(const IndexPair& p1, const IndexPair& p2, long prec);
SL2Mat random_sl2(Rng& rng, int entry_bound);
SL2Mat random_gamma_n(Rng& rng, int n);

}  // namespace genlambda

#endif
