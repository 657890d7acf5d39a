#include "mldlab/mld.hpp"

#include <algorithm>
#include <stdexcept>

#include "mldlab/parallel.hpp"
#include "mldlab/residue.hpp"

namespace mldlab {

MldResult mld_at_origin(const QuotientType& q) {
    const long long r = q.r;
    const int n1 = q.dim();
    // k = 0: every coordinate lifts to r, the smooth-point value.
    long long best_sum = static_cast<long long>(n1) * r;
    long long best_k = 0;
    std::vector<long long> rs(n1, 0);
    for (long long k = 1; k < r; ++k) {
        long long sum = 0;
        for (int i = 0; i < n1; ++i) {
            rs[i] += q.weights[i];
            if (rs[i] >= r)
                rs[i] -= r;
            sum += lift_residue(rs[i], r);
        }
        if (sum < best_sum) {
            best_sum = sum;
            best_k = k;
        }
    }
    std::vector<long long> coords(n1);
    for (int i = 0; i < n1; ++i)
        coords[i] = lift_residue(residue(q.weights[i] * best_k, r), r);
    return MldResult{Rational(best_sum, r), best_k, Weighting{r, coords}};
}

Rational mld_oracle(const QuotientType& q, long long depth) {
    if (depth < 1)
        throw std::invalid_argument("mld_oracle: depth must be >= 1");
    const long long r = q.r;
    const int n1 = q.dim();
    // Walk every vector (res_i + s_i·r)/r with all coordinates in (0, depth].
    long long best = -1;
    std::vector<long long> base(n1), lo(n1), hi(n1), s(n1);
    for (long long j = 0; j < r; ++j) {
        for (int i = 0; i < n1; ++i) {
            base[i] = residue(q.weights[i] * j, r);
            lo[i] = base[i] == 0 ? 1 : 0;
            hi[i] = (depth * r - base[i]) / r;
            if (base[i] == 0)
                hi[i] = depth;
        }
        for (int i = 0; i < n1; ++i)
            s[i] = lo[i];
        while (true) {
            long long sum = 0;
            for (int i = 0; i < n1; ++i)
                sum += base[i] + s[i] * r;
            if (best < 0 || sum < best)
                best = sum;
            int pos = 0;
            while (pos < n1) {
                if (++s[pos] <= hi[pos])
                    break;
                s[pos] = lo[pos];
                ++pos;
            }
            if (pos == n1)
                break;
        }
    }
    return Rational(best, r);
}

namespace {

// Residues coprime to r, ascending. For r = 1 this is {0}.
std::vector<long long> units_mod(long long r) {
    if (r == 1)
        return {0};
    std::vector<long long> us;
    for (long long u = 1; u < r; ++u)
        if (gcd_ll(u, r) == 1)
            us.push_back(u);
    return us;
}

std::vector<long long> unit_image_sorted(std::span<const long long> ws,
                                         long long u, long long r) {
    std::vector<long long> img(ws.size());
    for (size_t i = 0; i < ws.size(); ++i)
        img[i] = residue(ws[i] * u, r);
    std::sort(img.begin(), img.end());
    return img;
}

} // namespace

TypeClass normalize_type(const QuotientType& q) {
    auto us = units_mod(q.r);
    std::vector<long long> best;
    for (long long u : us) {
        auto img = unit_image_sorted(q.weights, u, q.r);
        if (best.empty() || img < best)
            best = std::move(img);
    }
    return TypeClass{QuotientType::make(q.r, std::move(best))};
}

namespace {

// True when the sorted weight vector is the least over its unit orbit,
// i.e. the canonical class representative.
bool is_canonical_rep(std::span<const long long> sorted_ws, long long r,
                      std::span<const long long> units) {
    for (long long u : units) {
        if (u == 1 && r > 1)
            continue;
        auto img = unit_image_sorted(sorted_ws, u, r);
        if (std::lexicographical_compare(img.begin(), img.end(),
                                         sorted_ws.begin(), sorted_ws.end()))
            return false;
    }
    return true;
}

// Enumerates canonical class representatives of one index: ascending weight
// tuples from the allowed residue pool, keeping only orbit minima.
template <class Fn>
void for_each_canonical(long long r, int dim, bool isolated_only, Fn&& fn) {
    auto units = units_mod(r);
    std::vector<long long> pool;
    for (long long a = 0; a < r; ++a)
        if (!isolated_only || gcd_ll(a, r) == 1)
            pool.push_back(a);
    if (pool.empty())
        return;
    std::vector<long long> ws(dim);
    std::vector<size_t> idx(dim, 0);
    while (true) {
        for (int i = 0; i < dim; ++i)
            ws[i] = pool[idx[i]];
        if (is_canonical_rep(ws, r, units))
            fn(QuotientType{r, ws});
        int pos = dim - 1;
        while (pos >= 0) {
            if (++idx[pos] < pool.size()) {
                for (int i = pos + 1; i < dim; ++i)
                    idx[i] = idx[pos]; // keep tuples ascending
                break;
            }
            --pos;
        }
        if (pos < 0)
            break;
    }
}

std::vector<ScanHit> gap_scan(long long r_max, const Rational& threshold,
                              const Rational& upper, int dim,
                              bool isolated_only, int jobs) {
    auto per_r = parallel_map_ordered(
        static_cast<size_t>(r_max), jobs, [&](size_t ri) {
            long long r = static_cast<long long>(ri) + 1;
            std::vector<ScanHit> hits;
            for_each_canonical(r, dim, isolated_only, [&](const QuotientType& q) {
                MldResult m = mld_at_origin(q);
                if (threshold < m.value && m.value < upper)
                    hits.push_back(ScanHit{TypeClass{q}, std::move(m)});
            });
            return hits;
        });
    std::vector<ScanHit> all;
    for (auto& part : per_r)
        for (auto& h : part)
            all.push_back(std::move(h));
    return all;
}

} // namespace

std::vector<ScanHit> gap_scan_dim3(long long r_max, const Rational& threshold,
                                   int jobs) {
    if (!(Rational(0) < threshold && threshold < Rational(1)))
        throw std::invalid_argument("gap_scan_dim3: threshold must be in (0,1)");
    return gap_scan(r_max, threshold, Rational(1), 3, true, jobs);
}

std::vector<ScanHit> gap_scan_dim5(long long r_max, const Rational& threshold,
                                   int jobs) {
    if (!(Rational(1) < threshold && threshold < Rational(2)))
        throw std::invalid_argument("gap_scan_dim5: threshold must be in (1,2)");
    return gap_scan(r_max, threshold, Rational(2), 5, false, jobs);
}

std::vector<OracleDiff> oracle_diff(long long r_max, int dim, long long depth,
                                    int jobs) {
    if (dim < 2 || dim > 5)
        throw std::invalid_argument("oracle_diff: dimension must be in [2,5]");
    auto per_r = parallel_map_ordered(
        static_cast<size_t>(r_max), jobs, [&](size_t ri) {
            long long r = static_cast<long long>(ri) + 1;
            std::vector<OracleDiff> diffs;
            for_each_canonical(r, dim, false, [&](const QuotientType& q) {
                Rational closed = mld_at_origin(q).value;
                Rational brute = mld_oracle(q, depth);
                if (!(closed == brute))
                    diffs.push_back(OracleDiff{q, closed, brute});
            });
            return diffs;
        });
    std::vector<OracleDiff> all;
    for (auto& part : per_r)
        for (auto& d : part)
            all.push_back(std::move(d));
    return all;
}

} // namespace mldlab
