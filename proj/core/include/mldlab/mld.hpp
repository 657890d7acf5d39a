#pragma once

#include <optional>
#include <vector>

#include "mldlab/rational.hpp"
#include "mldlab/types.hpp"

namespace mldlab {

/// Minimal log discrepancy at the origin together with the lattice witness:
/// the class k attaining the minimum and the lifted vector itself.
struct MldResult {
    Rational value;
    long long witness_k = 0;
    Weighting witness;
};

/// mld at the origin of a cyclic quotient: minimum over k in [0, r) of
/// (1/r)·Σ lift(residue(a_i·k)), where lift sends 0 to r. Ties break to the
/// smallest k. k = 0 yields dim(q), the smooth-point value.
MldResult mld_at_origin(const QuotientType& q);

/// Independent brute force: enumerates every lattice vector with all
/// coordinates in (0, depth] by walking all integer shifts of each class
/// representative, and minimizes the coordinate sum directly.
Rational mld_oracle(const QuotientType& q, long long depth);

/// Equivalence class of quotient types under coordinate permutation and
/// multiplication of all weights by a unit mod r.
struct TypeClass {
    QuotientType canonical;

    bool operator==(const TypeClass&) const = default;
    auto operator<=>(const TypeClass&) const = default;
};

/// Lexicographically least sorted weight vector over all unit multiples.
TypeClass normalize_type(const QuotientType& q);

struct ScanHit {
    TypeClass cls;
    MldResult mld;
};

/// All classes of isolated 3-dimensional types with r <= r_max and
/// threshold < mld < 1, sorted by (r, canonical weights).
std::vector<ScanHit> gap_scan_dim3(long long r_max, const Rational& threshold,
                                   int jobs = 1);

/// Same for 5-dimensional types, not necessarily isolated, with
/// threshold < mld < 2.
std::vector<ScanHit> gap_scan_dim5(long long r_max, const Rational& threshold,
                                   int jobs = 1);

struct OracleDiff {
    QuotientType type;
    Rational closed_form;
    Rational brute_force;
};

/// Cross-checks mld_at_origin against mld_oracle on every class of the
/// given dimension with r <= r_max. Expected empty.
std::vector<OracleDiff> oracle_diff(long long r_max, int dim, long long depth,
                                    int jobs = 1);

} // namespace mldlab
