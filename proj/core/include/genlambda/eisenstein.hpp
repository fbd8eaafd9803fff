#ifndef GENLAMBDA_EISENSTEIN_HPP
#define GENLAMBDA_EISENSTEIN_HPP

#include <utility>

#include "genlambda/qseries.hpp"
#include "genlambda/sl2.hpp"

namespace genlambda {

// Residue pair (r, s) mod N indexing E(tau; r, s); (r, s) != (0, 0) mod N.
struct IndexPair {
    int level;
    long r;
    long s;

    IndexPair(int level_, long r_, long s_);

    // representative with 0 <= r, s < N
    IndexPair normalized() const;
    // canonical under (r,s) ~ (-r,-s): lexicographic minimum of the two
    IndexPair canonical() const;
    bool same_class(const IndexPair& o) const;      // equal mod N up to sign
    bool negated_class(const IndexPair& o) const;   // (r,s) == -(o.r,o.s) mod N

    std::string str() const;
};

// {x} and mu(x): 0 <= {x} <= N/2, x = mu(x){x} mod N, with mu(x) = 1
// whenever x = 0 or N/2 mod N.
struct BraceMu {
    long brace;
    int mu;
};
BraceMu brace_mu(long x, int n);

struct ReducedIndex {
    long brace;          // {r}
    int mu;              // mu(r)
    long omega_exponent; // mu(r) * s mod N
};
ReducedIndex reduce_index(const IndexPair& p);

// E(tau; r, s)[A]_2 = E(tau; ar+cs, br+ds)
IndexPair index_transform(const IndexPair& p, const SL2Mat& A);

// q-expansion of E(tau; r, s) modulo q^prec; lies in nonnegative powers
// of q. Memoized on the reduced index class, so repeated requests from
// the coset sweeps are cheap.
QSeries e_series(const IndexPair& p, long prec);

// same expansion evaluated directly on (r, s) with no cache and no index
// canonicalization; lets periodicity/evenness be verified as identities
// of the formula instead of artifacts of the cache key
QSeries e_series_raw(const IndexPair& p, long prec);

// e_series(p1) - e_series(p2); throws on p2 = +-p1 (the difference is
// identically zero by evenness).
QSeries e_diff_series(const IndexPair& p1, const IndexPair& p2, long prec);

// order t and exact leading coefficient theta of the difference
// E(p1) - E(p2) = theta q^t (1 + q h(q)); theta != 0 is checked, and a
// failure carries a diagnostic rather than a guess.
std::pair<long, CycNum> theta_leading(const IndexPair& p1, const IndexPair& p2);

}  // namespace genlambda

#endif
