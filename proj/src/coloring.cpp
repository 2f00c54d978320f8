#include "oacensus/coloring.hpp"

#include <algorithm>
#include <random>

namespace oac {

Coloring::Coloring(long n, int r, std::vector<int> assign)
    : n_(n), r_(r), assign_(std::move(assign)) {
    if (n < 1) fail_structural("coloring needs n >= 1");
    if (r < 1) fail_structural("coloring needs r >= 1");
    if ((long)assign_.size() != n) fail_structural("assignment length != n");
    sizes_.assign(r, 0);
    for (int c : assign_) {
        if (c < 0 || c >= r) fail_structural("color id out of [0, r)");
        sizes_[size_t(c)]++;
    }
}

bool Coloring::equitable() const {
    auto [lo, hi] = std::minmax_element(sizes_.begin(), sizes_.end());
    return *hi - *lo <= 1;
}

Coloring equitable_coloring(long n, int r, EquitableMode mode) {
    if (r < 1) fail_precondition("equitable coloring needs r >= 1");
    if (n < r) fail_precondition("equitable coloring needs n >= r");
    std::vector<int> a(static_cast<size_t>(n));
    if (mode == EquitableMode::round_robin) {
        for (long e = 0; e < n; ++e) a[size_t(e)] = int(e % r);
    } else {
        // First (n mod r) classes get the extra element.
        long q = n / r, s = n % r;
        long e = 0;
        for (int c = 0; c < r; ++c) {
            long len = q + (c < s ? 1 : 0);
            for (long j = 0; j < len; ++j) a[size_t(e++)] = c;
        }
    }
    return Coloring(n, r, std::move(a));
}

Coloring rainbow_free_ap_coloring(long n, long t) {
    if (t < 1) fail_precondition("t must be >= 1");
    if (n % (3 * t) != 0) fail_precondition("n must be divisible by 3t");
    long len = n / (3 * t);
    std::vector<int> a(static_cast<size_t>(n));
    for (long e = 0; e < n; ++e) a[size_t(e)] = int(e / len);
    return Coloring(n, int(3 * t), std::move(a));
}

namespace {

void check_subgroup(const FiniteGroup& g, const std::vector<int>& elems, const char* name) {
    std::vector<char> mem(size_t(g.n), 0);
    for (int e : elems) {
        if (e < 0 || e >= g.n) fail_precondition(std::string(name) + ": element index out of range");
        if (mem[size_t(e)]) fail_precondition(std::string(name) + ": repeated element");
        mem[size_t(e)] = 1;
    }
    if (!mem[size_t(g.identity)]) fail_precondition(std::string(name) + ": missing identity");
    for (int a : elems)
        for (int b : elems)
            if (!mem[size_t(g.mul(a, b))])
                fail_precondition(std::string(name) + ": not closed under the group operation (" +
                                  std::to_string(a) + "*" + std::to_string(b) + ")");
}

} // namespace

Coloring subgroup_chain_coloring(const FiniteGroup& g, const std::vector<int>& k,
                                 const std::vector<int>& h) {
    check_subgroup(g, k, "K");
    check_subgroup(g, h, "H");
    std::vector<char> in_h(size_t(g.n), 0);
    for (int e : h) in_h[size_t(e)] = 1;
    for (int e : k)
        if (!in_h[size_t(e)]) fail_precondition("K is not contained in H");
    if ((long)h.size() != 2 * (long)k.size()) fail_precondition("[H:K] != 2");
    if (g.n != 2 * (long)h.size()) fail_precondition("[G:H] != 2");

    std::vector<int> a(size_t(g.n), 2);
    for (int e : h) a[size_t(e)] = 1;
    for (int e : k) a[size_t(e)] = 0;
    return Coloring(g.n, 3, std::move(a));
}

Coloring random_coloring(long n, const std::vector<long>& class_sizes, uint64_t seed) {
    long total = 0;
    for (long s : class_sizes) {
        if (s < 0) fail_precondition("negative class size");
        total += s;
    }
    if (total != n) fail_precondition("class sizes must sum to n");
    std::vector<int> a;
    a.reserve(size_t(n));
    for (size_t c = 0; c < class_sizes.size(); ++c)
        a.insert(a.end(), size_t(class_sizes[c]), int(c));
    // Hand-rolled Fisher-Yates: identical sequences on every platform.
    std::mt19937_64 rng(seed);
    for (long i = n - 1; i > 0; --i) {
        long j = long(rng() % uint64_t(i + 1));
        std::swap(a[size_t(i)], a[size_t(j)]);
    }
    return Coloring(n, int(class_sizes.size()), std::move(a));
}

ColoringStats stats(const Coloring& c) {
    i128 sum_sq = 0;
    long min_size = c.class_sizes().front();
    for (long s : c.class_sizes()) {
        sum_sq = checked_add(sum_sq, checked_mul(s, s));
        min_size = std::min(min_size, s);
    }
    const i128 n = c.n();
    const i128 r = c.r();
    ColoringStats st;
    st.alpha_c = Rational(checked_mul(3, sum_sq) - checked_mul(n, n), checked_mul(n, n));
    // sum c_i^2 / r - 1/r^2 = (r * sum|X_i|^2 - n^2) / (r^2 n^2)
    st.variance = Rational(checked_mul(r, sum_sq) - checked_mul(n, n),
                           checked_mul(checked_mul(r, r), checked_mul(n, n)));
    st.min_density = Rational(min_size, n);
    return st;
}

} // namespace oac
