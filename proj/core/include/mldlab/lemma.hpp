#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mldlab/rational.hpp"
#include "mldlab/types.hpp"

namespace mldlab {

/// Matching certificate for the terminal lemma. Elements of the 6-tuple
/// {a_1, a_2, a_3, a_4, -e, -1} are paired so that each pair sums to
/// 0 mod r; when q = gcd(e, r) > 1 the matching has the rigid shape
/// (a_4, -e), (a_i, -1), (a_j, a_k).
struct PairingCertificate {
    enum class Kind { q_eq_1, q_gt_1 };
    Kind kind = Kind::q_eq_1;
    // pairs[i] = {label, value} x 2 with value in [0, r)
    std::vector<std::array<std::pair<std::string, long long>, 2>> pairs;

    bool revalidate(long long r) const; // each pair sums to 0 mod r
};

/// Σ residue(a_i k) == residue(ek) + k + r for every k in [1, r-1].
bool terminal_lemma_hypothesis(const HyperquotientType& h);

/// gcd(e,r) == gcd(a_4,r) and a_1, a_2, a_3 coprime to r.
bool terminal_tuple_admissible(const HyperquotientType& h);

/// Searches the <= 15 matchings (q = 1) or the <= 3 rigid assignments
/// (q > 1). Requires the hypothesis and admissibility; nullopt signals a
/// counterexample to the lemma and is treated as a test failure.
std::optional<PairingCertificate>
terminal_lemma_pairing(const HyperquotientType& h);

/// Exhaustive check over one index r: all admissible tuples satisfying the
/// hypothesis, with a_1 <= a_2 <= a_3 as the canonical labeling. Returns
/// the tuples with no pairing certificate; expected empty.
struct TerminalScan {
    long long hypothesis_tuples = 0;
    std::vector<HyperquotientType> counterexamples;
};
TerminalScan verify_terminal_lemma(long long r);
TerminalScan verify_terminal_lemma_range(long long r_max, int jobs = 1);

enum class NcBranch { five_dim, q_reduction };

/// Outcome of the non-canonical lemma checker for one (tuple, k0).
struct NcLemmaVerdict {
    bool accepted = false;
    std::optional<long long> k0;
    std::optional<Rational> bound; // k0/r
    std::optional<NcBranch> branch;
    std::array<bool, 3> stars{false, false, false};
    std::string failure_reason;
    // Set when an internal identity the lemma guarantees fails to hold
    // (divisibility in the q-reduction, or the mld identity of the chosen
    // branch). Must never be true; scans surface it as an anomaly.
    bool inconsistency = false;
};

/// Verifies, in order: q = gcd(e,r) = gcd(a_4,r); a_1..a_3 coprime to r; at
/// least one star condition (unless require_star is false); the defect
/// identity at k0; the lower bound at every other k. On acceptance picks
/// the branch by residue(a_4·k0): nonzero recomputes the 5-dim mld of
/// 1/r(a_1..a_4, -e) and asserts it equals 1 + k0/r; zero reduces to
/// 1/q(a_1,a_2,a_3) and asserts mld = k0/r.
NcLemmaVerdict nc_lemma_check(const HyperquotientType& h, long long k0,
                              bool require_star = true);

struct NcInstance {
    HyperquotientType h;
    long long k0 = 0;
    Rational bound;
    NcBranch branch = NcBranch::five_dim;
    std::array<bool, 3> stars{false, false, false};

    bool operator==(const NcInstance&) const = default;
};

struct NcScanResult {
    std::optional<Rational> max_bound;
    std::vector<NcInstance> attaining;
    std::vector<NcInstance> accepted; // all, sorted by (r, type, k0)
    std::vector<std::string> inconsistencies;
};

/// Enumerates all (tuple, k0) with r <= r_max passing nc_lemma_check.
/// Accepted instances are emitted with the lexicographically least
/// labeling of {a_1,a_2,a_3} that the checker accepts.
NcScanResult nc_lemma_scan(long long r_max, int jobs = 1,
                           bool require_star = true);

const char* nc_branch_name(NcBranch b);

} // namespace mldlab
