#include "oacensus/extremal.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

namespace oac {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Ordered Schur triples of [1, n] as 0-based index triples (a, b, c) with
// (a+1) + (b+1) = (c+1) <= n.
std::vector<std::array<int, 3>> interval_triples(int n) {
    std::vector<std::array<int, 3>> ts;
    for (int x = 1; x < n; ++x)
        for (int y = 1; x + y <= n; ++y) ts.push_back({x - 1, y - 1, x + y - 1});
    return ts;
}

long long count_mono(const std::vector<std::array<int, 3>>& ts, const std::vector<int>& col) {
    long long m = 0;
    for (const auto& t : ts)
        m += col[size_t(t[0])] == col[size_t(t[1])] && col[size_t(t[1])] == col[size_t(t[2])];
    return m;
}

struct BlockResult {
    long long best = -1;
    std::vector<int> argmin;
};

// Scan one block of the 2^n cube: elements [lo_bits, n) are pinned to the
// bits of `block`, the rest run through a binary-reflected Gray code with
// O(n) incremental mono updates per flip.
BlockResult scan_block(int n, int lo_bits, unsigned long block,
                       const std::vector<std::array<int, 3>>& ts,
                       const std::vector<std::vector<int>>& elem_triples) {
    std::vector<int> col(size_t(n), 0);
    for (int e = lo_bits; e < n; ++e) col[size_t(e)] = int(block >> (e - lo_bits) & 1);
    long long m = count_mono(ts, col);

    BlockResult out;
    out.best = m;
    out.argmin = col;

    const unsigned long long steps = 1ull << lo_bits;
    for (unsigned long long t = 1; t < steps; ++t) {
        int e = __builtin_ctzll(t);
        long long delta = 0;
        const int old_c = col[size_t(e)];
        const int new_c = 1 - old_c;
        for (int ti : elem_triples[size_t(e)]) {
            const auto& tr = ts[size_t(ti)];
            int c0 = col[size_t(tr[0])], c1 = col[size_t(tr[1])], c2 = col[size_t(tr[2])];
            bool before = c0 == c1 && c1 == c2;
            if (tr[0] == e) c0 = new_c;
            if (tr[1] == e) c1 = new_c;
            if (tr[2] == e) c2 = new_c;
            bool after = c0 == c1 && c1 == c2;
            delta += int(after) - int(before);
        }
        col[size_t(e)] = new_c;
        m += delta;
        if ((t & 0xfff) == 0 && count_mono(ts, col) != m)
            throw std::logic_error("gray-code incremental count diverged");
        if (m < out.best || (m == out.best && col < out.argmin)) {
            out.best = m;
            out.argmin = col;
        }
    }
    return out;
}

} // namespace

SearchResult min_schur_all_2colorings(int n, int workers) {
    if (n < 1 || n > 24) fail_precondition("exhaustive 2-coloring sweep supports 1 <= n <= 24");
    auto t0 = Clock::now();

    auto ts = interval_triples(n);
    std::vector<std::vector<int>> elem_triples(static_cast<size_t>(n));
    for (size_t i = 0; i < ts.size(); ++i)
        for (int slot = 0; slot < 3; ++slot) {
            int e = ts[i][size_t(slot)];
            auto& lst = elem_triples[size_t(e)];
            if (lst.empty() || lst.back() != int(i)) lst.push_back(int(i));
        }

    // Block layout depends only on n, so the scan (and the tie-break) is
    // identical for every worker count.
    const int hi_bits = n >= 12 ? 6 : 0;
    const int lo_bits = n - hi_bits;
    const unsigned long blocks = 1ul << hi_bits;

    std::vector<BlockResult> results(blocks);
    workers = std::max(1, workers);
    if (workers == 1 || blocks == 1) {
        for (unsigned long b = 0; b < blocks; ++b)
            results[b] = scan_block(n, lo_bits, b, ts, elem_triples);
    } else {
        std::vector<std::thread> pool;
        std::atomic<unsigned long> next{0};
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (unsigned long b = next.fetch_add(1); b < blocks; b = next.fetch_add(1))
                    results[b] = scan_block(n, lo_bits, b, ts, elem_triples);
            });
        for (auto& th : pool) th.join();
    }

    SearchResult out;
    out.n = n;
    out.r = 2;
    out.mode = "exhaustive";
    out.objective_name = "interval-schur-mono";
    out.examined = 1ull << n;
    long long best = -1;
    for (const auto& br : results) {
        if (best < 0 || br.best < best || (br.best == best && br.argmin < out.argmin)) {
            best = br.best;
            out.argmin = br.argmin;
        }
    }
    if (count_mono(ts, out.argmin) != best)
        throw std::logic_error("argmin recount mismatch");
    out.objective = best;
    out.achieved_zero = best == 0;
    out.elapsed_ms = ms_since(t0);
    return out;
}

SearchResult min_schur_equitable(int n, int r, uint64_t seed, unsigned long long samples) {
    if (r < 1 || n < r) fail_precondition("need 1 <= r <= n");
    auto t0 = Clock::now();
    auto ts = interval_triples(n);

    std::vector<int> base;
    base.reserve(size_t(n));
    long q = n / r, s = n % r;
    for (int c = 0; c < r; ++c) base.insert(base.end(), size_t(q + (c < s ? 1 : 0)), c);
    std::sort(base.begin(), base.end());

    i128 count = 1;
    {
        long rest = n;
        for (int c = 0; c < r; ++c) {
            long sz = q + (c < s ? 1 : 0);
            count = checked_mul(count, binomial(rest, sz));
            rest -= sz;
        }
    }

    SearchResult out;
    out.n = n;
    out.r = r;
    out.seed = seed;
    out.objective_name = "interval-schur-mono";
    long long best = -1;

    if (count <= 10000000) {
        out.mode = "exhaustive";
        std::vector<int> col = base;
        do {
            ++out.examined;
            long long m = count_mono(ts, col);
            if (best < 0 || m < best || (m == best && col < out.argmin)) {
                best = m;
                out.argmin = col;
            }
        } while (std::next_permutation(col.begin(), col.end()));
    } else {
        out.mode = "random";
        std::mt19937_64 rng(seed);
        std::vector<int> col = base;
        for (unsigned long long it = 0; it < samples; ++it) {
            for (size_t i = col.size() - 1; i > 0; --i)
                std::swap(col[i], col[size_t(rng() % (i + 1))]);
            ++out.examined;
            long long m = count_mono(ts, col);
            if (best < 0 || m < best || (m == best && col < out.argmin)) {
                best = m;
                out.argmin = col;
            }
        }
    }
    if (count_mono(ts, out.argmin) != best) throw std::logic_error("argmin recount mismatch");
    out.objective = best;
    out.achieved_zero = best == 0;
    out.elapsed_ms = ms_since(t0);
    return out;
}

namespace {

long long oa_pattern_count(const OrthogonalArray& oa, const std::vector<int>& col,
                           SearchObjective obj) {
    const int d = oa.d;
    long long total = 0;
    std::vector<int> cs(static_cast<size_t>(d));
    for (size_t i = 0; i < oa.row_count(); ++i) {
        for (int j = 0; j < d; ++j) cs[size_t(j)] = col[size_t(oa.at(i, j))];
        if (obj == SearchObjective::mono) {
            bool mono = true;
            for (int j = 1; j < d; ++j) mono &= cs[size_t(j)] == cs[0];
            total += mono;
        } else {
            bool distinct = true;
            for (int a = 0; a < d && distinct; ++a)
                for (int b = a + 1; b < d; ++b)
                    if (cs[size_t(a)] == cs[size_t(b)]) {
                        distinct = false;
                        break;
                    }
            total += distinct;
        }
    }
    return total;
}

bool row_matches(const OrthogonalArray& oa, size_t row, const std::vector<int>& col,
                 SearchObjective obj) {
    const int d = oa.d;
    if (obj == SearchObjective::mono) {
        int c0 = col[size_t(oa.at(row, 0))];
        for (int j = 1; j < d; ++j)
            if (col[size_t(oa.at(row, j))] != c0) return false;
        return true;
    }
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b)
            if (col[size_t(oa.at(row, a))] == col[size_t(oa.at(row, b))]) return false;
    return true;
}

} // namespace

SearchResult search_rainbow_free(const OrthogonalArray& oa, int r, unsigned long long budget,
                                 uint64_t seed, SearchObjective objective, bool maximize,
                                 long min_class_size) {
    if (r < 3) fail_precondition("search needs r >= 3");
    const long n = oa.n;
    if (min_class_size > n / r)
        fail_precondition("min class size infeasible for balanced start");
    auto t0 = Clock::now();

    // Rows touching each ground element, deduplicated.
    std::vector<std::vector<int>> elem_rows(static_cast<size_t>(n));
    for (size_t i = 0; i < oa.row_count(); ++i)
        for (int j = 0; j < oa.d; ++j) {
            auto& lst = elem_rows[size_t(oa.at(i, j))];
            if (lst.empty() || lst.back() != int(i)) lst.push_back(int(i));
        }

    std::mt19937_64 rng(seed);
    auto random_start = [&] {
        std::vector<int> col;
        col.reserve(size_t(n));
        for (long e = 0; e < n; ++e) col.push_back(int(e % r));
        for (size_t i = col.size() - 1; i > 0; --i)
            std::swap(col[i], col[size_t(rng() % (i + 1))]);
        return col;
    };

    auto better = [&](long long a, long long b) { return maximize ? a > b : a < b; };

    std::vector<int> col = random_start();
    std::vector<long> sizes(size_t(r), 0);
    for (int c : col) sizes[size_t(c)]++;
    long long cur = oa_pattern_count(oa, col, objective);

    long long best = cur;
    std::vector<int> best_col = col;

    SearchResult out;
    out.n = n;
    out.r = r;
    out.seed = seed;
    out.mode = "random";
    out.objective_name = objective == SearchObjective::mono ? "mono" : "rainbow-strict";

    const unsigned long long stall_limit = std::max<unsigned long long>(500, budget / 20);
    unsigned long long stalled = 0;
    for (unsigned long long it = 0; it < budget; ++it) {
        ++out.examined;
        bool do_swap = rng() & 1;
        long e1 = long(rng() % uint64_t(n));
        int old1 = col[size_t(e1)];
        long e2 = -1;
        int new1;
        int old2 = 0;
        if (do_swap) {
            e2 = long(rng() % uint64_t(n));
            old2 = col[size_t(e2)];
            if (old1 == old2) {
                ++stalled;
                continue;
            }
            new1 = old2;
        } else {
            new1 = int(rng() % uint64_t(r));
            if (new1 == old1) {
                ++stalled;
                continue;
            }
            if (min_class_size > 0 && sizes[size_t(old1)] - 1 < min_class_size) {
                ++stalled;
                continue;
            }
        }

        // Delta over the union of rows touching the moved element(s).
        long long delta = 0;
        auto account = [&](int row, int sgn) {
            delta += sgn * (row_matches(oa, size_t(row), col, objective) ? 1 : 0);
        };
        for (int rowi : elem_rows[size_t(e1)]) account(rowi, -1);
        if (e2 >= 0)
            for (int rowi : elem_rows[size_t(e2)])
                if (!std::binary_search(elem_rows[size_t(e1)].begin(), elem_rows[size_t(e1)].end(),
                                        rowi))
                    account(rowi, -1);
        col[size_t(e1)] = new1;
        if (e2 >= 0) col[size_t(e2)] = old1;
        for (int rowi : elem_rows[size_t(e1)]) account(rowi, +1);
        if (e2 >= 0)
            for (int rowi : elem_rows[size_t(e2)])
                if (!std::binary_search(elem_rows[size_t(e1)].begin(), elem_rows[size_t(e1)].end(),
                                        rowi))
                    account(rowi, +1);

        long long cand = cur + delta;
        if (better(cand, cur)) {
            cur = cand;
            if (!do_swap) {
                sizes[size_t(old1)]--;
                sizes[size_t(new1)]++;
            }
            stalled = 0;
            if (better(cur, best)) {
                best = cur;
                best_col = col;
            }
        } else {
            col[size_t(e1)] = old1;
            if (e2 >= 0) col[size_t(e2)] = old2;
            ++stalled;
        }

        if (stalled >= stall_limit) {
            col = random_start();
            std::fill(sizes.begin(), sizes.end(), 0);
            for (int c : col) sizes[size_t(c)]++;
            cur = oa_pattern_count(oa, col, objective);
            if (better(cur, best)) {
                best = cur;
                best_col = col;
            }
            stalled = 0;
        }
    }

    // Independent exact re-count of the reported optimum.
    Coloring final_col(n, r, best_col);
    PatternCensus pc = full_census(oa, final_col);
    i128 recount = objective == SearchObjective::mono ? pc.mono : pc.r_strict;
    if (recount != i128(best)) throw std::logic_error("search recount mismatch");

    out.objective = best;
    out.argmin = best_col;
    out.achieved_zero = best == 0;
    out.elapsed_ms = ms_since(t0);
    return out;
}

} // namespace oac
