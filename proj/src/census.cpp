#include "oacensus/census.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace oac {

namespace {

void finalize(PatternCensus& pc) {
    pc.total = 0;
    pc.mono = 0;
    pc.mono_color.assign(size_t(pc.r), 0);
    pc.missing.assign(size_t(pc.r), 0);
    pc.r_strict = 0;
    pc.r_covering = 0;
    pc.t21 = 0;
    for (const auto& [v, s] : pc.counts) {
        pc.total = checked_add(pc.total, s);
        int nonzero = 0, maxv = 0;
        for (int i = 0; i < pc.r; ++i) {
            if (v[size_t(i)] > 0) ++nonzero;
            maxv = std::max(maxv, v[size_t(i)]);
            if (v[size_t(i)] == 0) pc.missing[size_t(i)] = checked_add(pc.missing[size_t(i)], s);
            if (v[size_t(i)] == pc.d) pc.mono_color[size_t(i)] = checked_add(pc.mono_color[size_t(i)], s);
        }
        if (maxv == pc.d) pc.mono = checked_add(pc.mono, s);
        if (maxv <= 1) pc.r_strict = checked_add(pc.r_strict, s);
        if (nonzero == pc.r) pc.r_covering = checked_add(pc.r_covering, s);
        if (pc.d == 3 && maxv == 2) pc.t21 = checked_add(pc.t21, s);
    }
}

using CountMap = std::map<std::vector<int>, i128>;

void census_range(const OrthogonalArray& oa, const Coloring& c, size_t lo, size_t hi,
                  CountMap& out) {
    const int d = oa.d;
    const int r = c.r();
    std::vector<int> v(static_cast<size_t>(r));
    for (size_t i = lo; i < hi; ++i) {
        std::fill(v.begin(), v.end(), 0);
        for (int j = 0; j < d; ++j) v[size_t(c.color(oa.at(i, j)))]++;
        out[v] += 1;
    }
}

} // namespace

PatternCensus full_census(const OrthogonalArray& oa, const Coloring& c, int workers) {
    if (c.n() != oa.n) fail_precondition("coloring ground size != OA ground size");
    PatternCensus pc;
    pc.d = oa.d;
    pc.k = oa.k;
    pc.n = oa.n;
    pc.r = c.r();

    const size_t rows = oa.row_count();
    workers = std::max(1, workers);
    if (workers == 1 || rows < 1024) {
        census_range(oa, c, 0, rows, pc.counts);
    } else {
        size_t w = size_t(workers);
        std::vector<CountMap> partial(w);
        std::vector<std::thread> threads;
        threads.reserve(w);
        for (size_t t = 0; t < w; ++t) {
            size_t lo = rows * t / w, hi = rows * (t + 1) / w;
            threads.emplace_back(
                [&, lo, hi, t] { census_range(oa, c, lo, hi, partial[t]); });
        }
        for (auto& th : threads) th.join();
        for (const auto& p : partial)
            for (const auto& [v, s] : p) pc.counts[v] = checked_add(pc.counts[v], s);
    }
    finalize(pc);
    return pc;
}

PatternCensus census_via_convolution(const AbelianGroup& g, const std::vector<long>& coeffs,
                                     long t, const Coloring& c) {
    if (g.orders().size() != 1) fail_unsupported("convolution census needs a cyclic group");
    if (coeffs.size() != 3) fail_unsupported("convolution census needs d = 3");
    const long n = g.order();
    if (c.n() != n) fail_precondition("coloring ground size != group order");
    for (long a : coeffs) {
        long gg = std::gcd(std::labs(a) % n, n);
        if (n > 1 && gg != 1)
            fail_precondition("coefficient " + std::to_string(a) + " not coprime to n");
    }
    const int r = c.r();

    // scaled[p][i][s] = #{ x in X_i : coeffs[p] * x = s (mod n) }
    auto scale_class = [&](long coeff) {
        std::vector<std::vector<i128>> v(static_cast<size_t>(r), std::vector<i128>(static_cast<size_t>(n), 0));
        for (long x = 0; x < n; ++x) {
            long s = ((coeff % n) * (x % n)) % n;
            if (s < 0) s += n;
            v[size_t(c.color(x))][size_t(s)] += 1;
        }
        return v;
    };
    auto a_ind = scale_class(coeffs[0]);
    auto b_ind = scale_class(coeffs[1]);
    auto c_ind = scale_class(coeffs[2]);

    const long tt = ((t % n) + n) % n;
    PatternCensus pc;
    pc.d = 3;
    pc.k = 2;
    pc.n = n;
    pc.r = r;

    std::vector<i128> conv(static_cast<size_t>(n));
    std::vector<int> v(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            // conv = a_ind[i] (*) b_ind[j], schoolbook cyclic convolution
            std::fill(conv.begin(), conv.end(), 0);
            for (long s1 = 0; s1 < n; ++s1) {
                i128 av = a_ind[size_t(i)][size_t(s1)];
                if (av == 0) continue;
                for (long s2 = 0; s2 < n; ++s2) {
                    i128 bv = b_ind[size_t(j)][size_t(s2)];
                    if (bv == 0) continue;
                    long s = s1 + s2;
                    if (s >= n) s -= n;
                    conv[size_t(s)] = checked_add(conv[size_t(s)], checked_mul(av, bv));
                }
            }
            for (int l = 0; l < r; ++l) {
                i128 count = 0;
                for (long s = 0; s < n; ++s) {
                    long s3 = tt - s;
                    s3 %= n;
                    if (s3 < 0) s3 += n;
                    i128 cv = c_ind[size_t(l)][size_t(s3)];
                    if (cv != 0) count = checked_add(count, checked_mul(conv[size_t(s)], cv));
                }
                if (count == 0) continue;
                std::fill(v.begin(), v.end(), 0);
                v[size_t(i)]++;
                v[size_t(j)]++;
                v[size_t(l)]++;
                pc.counts[v] = checked_add(pc.counts[v], count);
            }
        }
    }
    finalize(pc);
    return pc;
}

IntervalSchurCounts interval_schur_census(const Coloring& c) {
    const long n = c.n();
    IntervalSchurCounts out;
    out.mono_color.assign(size_t(c.r()), 0);
    for (long x = 1; x < n; ++x) {
        int cx = c.color(x - 1);
        for (long y = 1; x + y <= n; ++y) {
            ++out.solutions;
            int cy = c.color(y - 1);
            int cz = c.color(x + y - 1);
            if (cx == cy && cy == cz) {
                out.mono += 1;
                out.mono_color[size_t(cx)] += 1;
            } else if (cx != cy && cy != cz && cx != cz) {
                out.rainbow_strict += 1;
            }
        }
    }
    return out;
}

Coloring embed_interval_coloring(const Coloring& c) {
    const long n = c.n();
    const long nn = 2 * n;
    std::vector<int> a(size_t(nn), c.r()); // new class r = [n+1, 2n]
    for (long v = 1; v <= n; ++v) a[size_t(v % nn)] = c.color(v - 1);
    // integers n+1 .. 2n map to indices n+1 .. 2n-1 and 0
    return Coloring(nn, c.r() + 1, std::move(a));
}

} // namespace oac
