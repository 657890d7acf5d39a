#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mldlab/rational.hpp"
#include "mldlab/types.hpp"

namespace mldlab {

enum class FCase { cA, odd, cD4, cDn, cE, unclassified };
const char* fcase_name(FCase c);
std::optional<FCase> fcase_from_name(std::string_view name);

/// Syntactic normal-form match on the support alone; no coordinate changes
/// are attempted. Unmatched supports come back unclassified.
FCase classify_f_case(const MonomialSupport& f);

/// Every monomial of f has weight e mod r under the ambient action.
bool equivariance_check(const HyperquotientType& h, const MonomialSupport& f);

struct Rule2Verdict {
    bool pass = false;
    bool clause_i = false;   // gcd(a_i,r) > 1 implies gcd(a_i,r) | gcd(e,r)
    bool clause_ii = false;  // gcd(a_i, a_j, r) = 1 for i < j
    bool clause_iii = false; // a+b+c+d-e ≡ 1 (mod r)
    std::string detail;      // first failure, human-readable
};
Rule2Verdict rule2_check(const HyperquotientType& h);

/// Lattice vector in the closed unit box of the 4-dim ambient lattice,
/// excluding the 16 cube vertices. Built per class k as the residue vector
/// with every zero coordinate optionally lifted to 1.
struct BoxVector {
    Weighting w;
    long long k = 0; // lattice class in [1, r-1]
    bool primitive = false;

    bool operator==(const BoxVector&) const = default;
};
std::vector<BoxVector> enumerate_box_vectors(const HyperquotientType& h);

/// Index of (1,...,1) - v in the same list, when that mirror is in the box.
std::optional<size_t> box_mirror_index(const std::vector<BoxVector>& box,
                                       size_t i);

bool is_primitive_vector(const HyperquotientType& h, const Weighting& w);

struct ScreenEntry {
    Weighting w;
    Rational value; // v(α) = α(xyzt) - α(f)
    bool primitive = false;
};

/// Necessary-condition screen at finite bound: v(α) over every lattice
/// vector with coordinates in [0, bound] and at least two nonzero
/// coordinates (vectors on the rays of σ extract no exceptional divisor).
/// v = 1 exactly is a violation: a crepant divisor is not allowed.
struct ScreenReport {
    std::vector<ScreenEntry> beta_candidates; // primitive, 1-δ < v < 1
    std::vector<ScreenEntry> violations;      // v <= 1-δ, v == 1, or non-primitive v < 1
    bool clear = false;
    long long bound_used = 0;
};
ScreenReport screen_rule1(const HyperquotientType& h, const MonomialSupport& f,
                          const Rational& delta, long long bound);

enum class QuadKind { xy, x2 };

enum class AltCase { case_i, case_ii, beta_exception };
const char* alt_case_name(AltCase c);

/// Per-class record of which residue-identity alternative holds.
struct AltEntry {
    long long k = 0;
    AltCase alt = AltCase::beta_exception;
    long long quad_sum = 0; // residue(ak)+residue(bk)  (xy) or 2·residue(ak) (x2)
    long long tail_sum = 0; // residue(ck)+residue(dk)  (xy) or Σ over yzt (x2)
};

struct AlternativeTrace {
    std::vector<AltEntry> entries;                   // k = 1..r-1
    std::vector<long long> global_identity_failures; // k where Σ ≠ residue(ek)+k+r
};

/// Preconditions: xy needs a+b ≡ e and c+d ≡ 1; x2 needs 2a ≡ e and
/// b+c+d ≡ 1+a (all mod r). Throws std::invalid_argument otherwise.
AlternativeTrace alternative_trace(const HyperquotientType& h, QuadKind kind);

/// Alternation property over box vectors: classify every vector, pair each
/// with its mirror, and require every non-exceptional pair to split one
/// case (i) / one case (ii).
struct MirrorCheck {
    bool ok = true;
    long long pairs_checked = 0;
    std::string detail; // first offending pair
};
MirrorCheck mirror_alternation_check(const HyperquotientType& h, QuadKind kind);

enum class CandidateFamily {
    cA_qgt1_A,
    cA_qgt1_B,
    cA_q1_C,
    cA_q1_D,
    odd,
    cDE_a,
    cDE_b,
    cDE_c,
    cDE_d,
    cDE_e,
    cDE_f,
};
const char* family_name(CandidateFamily f);
std::optional<CandidateFamily> family_from_name(std::string_view name);
FCase family_fcase(CandidateFamily f);

/// Instantiates one parametrized family at index r, walking the parameter
/// over [1, r) subject to the family's coprimality and parity conditions.
/// Throws std::invalid_argument when the family does not apply to r
/// (e.g. the odd family needs 4 | r).
std::vector<HyperquotientType> candidate_types(CandidateFamily family,
                                               long long r);

struct ExclusionWitness {
    Weighting alpha;
    long long k = 0;
    Rational forced_weight;
    std::string family;  // description of the residual monomial family
    std::string outcome; // "no_monomial", "negative_weight", ...
};

struct ExclusionBranch {
    std::string beta; // "none" or the box vector string
    bool dead = false;
    std::vector<ExclusionWitness> dead_constraints; // all unsatisfiable ones
};

enum class ExclusionStatus { excluded, not_excluded, inconclusive, terminal_by_ksb };
const char* exclusion_status_name(ExclusionStatus s);

struct ExclusionReport {
    ExclusionStatus status = ExclusionStatus::not_excluded;
    bool excluded() const { return status == ExclusionStatus::excluded; }
    std::vector<ExclusionBranch> branches;
    std::vector<ExclusionBranch> surviving_branches; // empty iff excluded
    // Uniqueness of the exceptional-value vector is an assumption of the
    // screen, not something the replay derives.
    bool assumed_unique_beta = false;
};

/// Replays the case exclusion: for each admissible placement of the single
/// allowed β among the box vectors (or none), derives the forced residual
/// weight at every constrained vector and decides, exactly, whether an
/// equivariant monomial of that weight exists in the case's residual
/// family. A branch survives only when every forced monomial exists (and
/// avoids β's forbidden weight); excluded means no branch survives.
ExclusionReport exclude_candidate(const HyperquotientType& h, FCase fcase,
                                  const Rational& delta,
                                  long long degree_bound);

struct ReplayRow {
    long long r = 0;
    CandidateFamily family = CandidateFamily::cA_qgt1_A;
    HyperquotientType h;
    ExclusionStatus status = ExclusionStatus::excluded;
    std::vector<long long> witness_ks; // dead classes of the no-beta branch
};

struct ReplaySummary {
    long long excluded = 0;
    long long terminal_by_ksb = 0;
    long long inconclusive = 0;
    long long survivors = 0;
    std::vector<ReplayRow> rows;
};

/// Runs exclude_candidate over every family instance for r in
/// [r_min, r_max]. delta is clamped to (0, 1/2]; r_min must be >= 14.
ReplaySummary replay_exclusions(long long r_min, long long r_max,
                                const Rational& delta, long long degree_bound,
                                int jobs = 1);

} // namespace mldlab
