#pragma once

#include <map>
#include <vector>

#include "oacensus/coloring.hpp"
#include "oacensus/numeric.hpp"
#include "oacensus/oa.hpp"

namespace oac {

/// Exact color-pattern census of an OA under a coloring. Keys of `counts`
/// are compositions v (length r, sum d): s(v) = number of rows with exactly
/// v_i coordinates in class X_i. Two rainbow notions are first-class:
/// `r_strict` counts rows with pairwise distinct colors (the d = 3 theorems)
/// and `r_covering` rows where every one of the r colors appears (the
/// OA(d, d-1) corollary). `t21` is meaningful for d = 3 only.
struct PatternCensus {
    int d = 0;
    int k = 0;
    long n = 0;
    int r = 0;
    std::map<std::vector<int>, i128> counts;

    i128 total = 0;
    i128 mono = 0;                  // M
    std::vector<i128> mono_color;   // M_i
    std::vector<i128> missing;      // S_i = rows with no coordinate in X_i
    i128 r_strict = 0;
    i128 r_covering = 0;
    i128 t21 = 0;

    i128 at(const std::vector<int>& v) const {
        auto it = counts.find(v);
        return it == counts.end() ? i128(0) : it->second;
    }
};

/// Single pass over the rows; `workers` > 1 partitions the rows with a
/// deterministic merge, so the result is independent of the worker count.
PatternCensus full_census(const OrthogonalArray& oa, const Coloring& c, int workers = 1);

/// Exact fast path for d = 3 linear equations over a cyclic group: counts
/// N(i,j,l) by schoolbook integer cyclic convolution of coefficient-scaled
/// class indicators, then aggregates to compositions. Bit-exact equal to
/// full_census of the same array.
PatternCensus census_via_convolution(const AbelianGroup& g, const std::vector<long>& coeffs,
                                     long t, const Coloring& c);

/// Ordered Schur solutions in the integer interval [1, n]: all (x, y, x+y)
/// with x + y <= n. Ground index e of the coloring means the integer e + 1.
struct IntervalSchurCounts {
    i128 mono = 0;
    i128 rainbow_strict = 0;
    std::vector<i128> mono_color;
    long long solutions = 0;
};

IntervalSchurCounts interval_schur_census(const Coloring& c);

/// The Theorem-6 embedding: an r-coloring of [1, n] becomes an (r+1)-coloring
/// of Z_{2n} whose extra class is [n+1, 2n] (2n represented by 0).
Coloring embed_interval_coloring(const Coloring& c);

} // namespace oac
