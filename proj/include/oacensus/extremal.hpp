#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oacensus/census.hpp"
#include "oacensus/numeric.hpp"
#include "oacensus/oa.hpp"

namespace oac {

/// Result of a desk-scale search. In exhaustive mode `objective` is the true
/// global minimum over the stated family and `argmin` the lexicographically
/// smallest minimizer; searches always re-count the reported argmin from
/// scratch before returning. `elapsed_ms` is the one non-reproducible field
/// and is excluded from canonical JSON output.
struct SearchResult {
    i128 objective = 0;
    std::vector<int> argmin;
    long n = 0;
    int r = 0;
    unsigned long long examined = 0;
    double elapsed_ms = 0.0;
    std::string mode;      // "exhaustive" | "random"
    uint64_t seed = 0;
    bool achieved_zero = false;
    std::string objective_name;
};

/// Exact minimum of monochromatic ordered Schur triples over all 2^n
/// two-colorings of [1, n]. Gray-code enumeration with O(n) incremental
/// updates per bit flip; n <= 24.
SearchResult min_schur_all_2colorings(int n, int workers = 1);

/// Minimum over equitable r-colorings of [1, n] (canonical balanced size
/// vector; relabelings share the objective). Exhaustive when the multinomial
/// count is <= 10^7, otherwise `samples` seeded random colorings.
SearchResult min_schur_equitable(int n, int r, uint64_t seed = 0,
                                 unsigned long long samples = 100000);

enum class SearchObjective { rainbow_strict, mono };

/// Randomized hill descent over r-colorings of the OA ground set, minimizing
/// (or maximizing) the chosen pattern count within an evaluation budget.
/// Single-flip and swap moves, first improvement, seeded restarts. The best
/// coloring is exactly re-counted before being reported.
SearchResult search_rainbow_free(const OrthogonalArray& oa, int r, unsigned long long budget,
                                 uint64_t seed,
                                 SearchObjective objective = SearchObjective::rainbow_strict,
                                 bool maximize = false, long min_class_size = 0);

} // namespace oac
