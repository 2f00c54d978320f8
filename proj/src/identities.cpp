#include "oacensus/identities.hpp"

#include <algorithm>
#include <functional>

#include "oacensus/oa.hpp"

namespace oac {

namespace {

std::string vec_str(const std::vector<int>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[size_t(i)]);
    return s + "]";
}

// Multinomial C(d; u_1, ..., u_r, d - |u|).
i128 multinomial(int d, const std::vector<int>& u) {
    i128 result = 1;
    long long rest = d;
    for (int ui : u) {
        result = checked_mul(result, binomial(rest, ui));
        rest -= ui;
    }
    return result;
}

// All nonnegative integer vectors of length r with sum exactly s, in
// lexicographic order.
void compositions(int r, int s, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> v(size_t(r), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == r - 1) {
            v[size_t(pos)] = left;
            fn(v);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            v[size_t(pos)] = x;
            rec(pos + 1, left - x);
        }
    };
    if (r == 0) return;
    rec(0, s);
}

// All nonnegative vectors with sum <= k, lexicographic.
void vectors_up_to(int r, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> v(size_t(r), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == r) {
            fn(v);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            v[size_t(pos)] = x;
            rec(pos + 1, left - x);
        }
    };
    rec(0, k);
}

IdentityReport make_eq(std::string name, i128 lhs, i128 rhs) {
    IdentityReport rep;
    rep.identity = std::move(name);
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.residual = lhs - rhs;
    rep.relation = IdentityReport::Relation::equal;
    rep.pass = rep.residual == 0;
    return rep;
}

IdentityReport make_ge(std::string name, i128 lhs, i128 rhs) {
    IdentityReport rep;
    rep.identity = std::move(name);
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.residual = lhs - rhs;
    rep.relation = IdentityReport::Relation::at_least;
    rep.pass = rep.residual >= 0;
    return rep;
}

i128 sum_sizes_squared(const Coloring& c) {
    i128 s = 0;
    for (long sz : c.class_sizes()) s = checked_add(s, checked_mul(sz, sz));
    return s;
}

void need(bool cond, const char* msg) {
    if (!cond) fail_precondition(msg);
}

} // namespace

std::vector<IdentityReport> verify_counting_identity(const PatternCensus& pc, const Coloring& c) {
    need(pc.n == c.n() && pc.r == c.r(), "census and coloring disagree on n or r");
    std::vector<IdentityReport> reports;
    const auto& sizes = c.class_sizes();
    vectors_up_to(pc.r, pc.k, [&](const std::vector<int>& u) {
        int usum = 0;
        for (int x : u) usum += x;
        i128 lhs = 0;
        for (const auto& [v, s] : pc.counts) {
            i128 coef = 1;
            for (int i = 0; i < pc.r; ++i)
                coef = checked_mul(coef, binomial(v[size_t(i)], u[size_t(i)]));
            lhs = checked_add(lhs, checked_mul(coef, s));
        }
        i128 rhs = multinomial(pc.d, u);
        for (int i = 0; i < pc.r; ++i)
            rhs = checked_mul(rhs, checked_pow(sizes[size_t(i)], u[size_t(i)]));
        rhs = checked_mul(rhs, checked_pow(pc.n, pc.k - usum));
        auto rep = make_eq("counting u=" + vec_str(u), lhs, rhs);
        if (!rep.pass) rep.witness = "u=" + vec_str(u);
        reports.push_back(std::move(rep));
    });
    return reports;
}

IdentityReport check_2m_r(const PatternCensus& pc, const Coloring& c) {
    need(pc.d == 3 && pc.k == 2, "2M-R identity needs an OA(3,2) census");
    need(pc.n == c.n() && pc.r == c.r(), "census and coloring disagree");
    i128 lhs = checked_mul(2, pc.mono) - pc.r_strict;
    i128 rhs = checked_mul(3, sum_sizes_squared(c)) - checked_mul(i128(pc.n), pc.n);
    auto rep = make_eq("2M-R", lhs, rhs);
    rep.note = "R = rainbow with pairwise distinct colors";
    return rep;
}

IdentityReport check_cor_32_2(const PatternCensus& pc, const Coloring& c) {
    need(pc.r == 2 && c.r() == 2, "corollary needs r = 2");
    need(pc.d == 3 && pc.k == 2, "corollary needs an OA(3,2) census");
    const i128 x1 = c.class_sizes()[0], x2 = c.class_sizes()[1];
    i128 rhs = checked_add(checked_mul(x1, x1) - checked_mul(x1, x2), checked_mul(x2, x2));
    auto rep = make_eq("mono-2coloring", pc.mono, rhs);
    // Bound: M >= n^2 / 4, compared as 4M >= n^2.
    i128 n2 = checked_mul(i128(pc.n), pc.n);
    bool bound = checked_mul(4, pc.mono) >= n2;
    rep.pass = rep.pass && bound;
    rep.note = bound ? "4M >= n^2 holds" : "4M >= n^2 FAILS";
    if (!rep.pass) rep.witness = "M=" + to_string(pc.mono);
    return rep;
}

IdentityReport check_cor_32_3(const PatternCensus& pc, const Coloring& c) {
    need(pc.r == 3 && c.r() == 3, "corollary needs r = 3");
    need(pc.d == 3 && pc.k == 2, "corollary needs an OA(3,2) census");
    // 9 sigma^2 n^2 = 3 sum |X_i|^2 - n^2 exactly for r = 3.
    i128 lhs = checked_mul(2, pc.mono) - pc.r_strict;
    i128 rhs = checked_mul(3, sum_sizes_squared(c)) - checked_mul(i128(pc.n), pc.n);
    auto rep = make_eq("2M-R-variance", lhs, rhs);
    bool bound = checked_mul(2, pc.mono) >= rhs; // M >= (9 sigma^2 / 2) n^2
    rep.pass = rep.pass && bound;
    rep.note = "bound 2M >= 9 sigma_c^2 n^2: " + std::string(bound ? "holds" : "FAILS");
    return rep;
}

IdentityReport check_alpha_bounds(const PatternCensus& pc, const Coloring& c) {
    need(pc.d == 3 && pc.k == 2, "density bounds need an OA(3,2) census");
    need(pc.n == c.n() && pc.r == c.r(), "census and coloring disagree");
    // alpha_c n^2 = 3 sum |X_i|^2 - n^2 is already an integer.
    i128 alpha_n2 = checked_mul(3, sum_sizes_squared(c)) - checked_mul(i128(pc.n), pc.n);
    IdentityReport rep;
    if (alpha_n2 > 0) {
        rep = make_ge("alpha-mono", checked_mul(2, pc.mono), alpha_n2);
        rep.note = "hard form 2M >= alpha_c n^2; unscaled reading M >= alpha_c n^2 " +
                   std::string(pc.mono >= alpha_n2 ? "holds" : "does not hold") +
                   " (informational)";
    } else if (alpha_n2 < 0) {
        rep = make_ge("alpha-rainbow", pc.r_strict, -alpha_n2);
        rep.note = "R_strict >= |alpha_c| n^2";
    } else {
        rep = make_ge("alpha-zero", pc.r_strict, 0);
        rep.note = "alpha_c = 0: no bound claimed";
    }
    if (c.r() >= 4 && c.equitable() && pc.n % c.r() == 0) {
        // Equal class sizes: R >= (1 - 3/r) n^2, cleared to r R >= (r-3) n^2.
        i128 lhs = checked_mul(i128(c.r()), pc.r_strict);
        i128 rhs = checked_mul(i128(c.r() - 3), checked_mul(i128(pc.n), pc.n));
        bool eq_bound = lhs >= rhs;
        rep.pass = rep.pass && eq_bound;
        rep.note += "; equitable r>=4 bound rR >= (r-3)n^2: " +
                    std::string(eq_bound ? "holds" : "FAILS");
    }
    return rep;
}

std::vector<IdentityReport> check_thm_dd1(const PatternCensus& pc, const Coloring& c) {
    need(pc.k == pc.d - 1, "theorem needs k = d - 1");
    need(pc.n == c.n() && pc.r == c.r(), "census and coloring disagree");
    const int d = pc.d;
    const i128 n = pc.n;
    const int sign = d % 2 == 0 ? -1 : 1; // (-1)^{d-1}
    std::vector<IdentityReport> reports;
    i128 lhs_sum = 0, rhs_sum = 0;
    for (int i = 0; i < pc.r; ++i) {
        i128 xi = c.class_sizes()[size_t(i)];
        i128 lhs = checked_mul(n, checked_add(pc.missing[size_t(i)],
                                              checked_mul(sign, pc.mono_color[size_t(i)])));
        i128 rhs = checked_pow(n - xi, d) - checked_mul(-sign, checked_pow(xi, d));
        lhs_sum = checked_add(lhs_sum, lhs);
        rhs_sum = checked_add(rhs_sum, rhs);
        auto rep = make_eq("missing-mono color=" + std::to_string(i), lhs, rhs);
        if (!rep.pass) rep.witness = "color " + std::to_string(i);
        reports.push_back(std::move(rep));
    }
    reports.push_back(make_eq("missing-mono sum", lhs_sum, rhs_sum));
    return reports;
}

IdentityReport check_cor_dr3(const PatternCensus& pc, const Coloring& c) {
    need(pc.r == 3 && c.r() == 3, "corollary needs r = 3");
    need(pc.k == pc.d - 1, "corollary needs k = d - 1");
    const int d = pc.d;
    const i128 n = pc.n;
    const int sign = d % 2 == 0 ? -1 : 1; // (-1)^{d-1}
    i128 lhs = checked_mul(
        n, checked_mul(i128(1 + sign), pc.mono) - pc.r_covering);
    i128 rhs = -checked_pow(n, d);
    for (long sz : c.class_sizes())
        rhs = checked_add(rhs, checked_pow(n - sz, d) - checked_mul(-sign, checked_pow(i128(sz), d)));
    auto rep = make_eq("mono-covering-rainbow", lhs, rhs);
    rep.note = "R = rainbow with all colors present";
    return rep;
}

std::vector<IdentityReport> check_thm_asym(const PatternCensus& pc, const Coloring& c) {
    need(pc.n == c.n() && pc.r == c.r(), "census and coloring disagree");
    const int d = pc.d, k = pc.k, r = pc.r;
    i128 min_size = c.class_sizes()[0];
    for (long s : c.class_sizes()) min_size = std::min<i128>(min_size, s);
    const i128 bound_rhs = checked_pow(min_size, k);
    const i128 ball = binomial(d - k + r - 1, r - 1);

    std::vector<IdentityReport> reports;
    compositions(r, d, [&](const std::vector<int>& v) {
        // u <= v with |u| = k: decrement largest entries first (ties: lowest index).
        std::vector<int> u = v;
        int excess = d - k;
        while (excess > 0) {
            int best = 0;
            for (int i = 1; i < r; ++i)
                if (u[size_t(i)] > u[size_t(best)]) best = i;
            u[size_t(best)]--;
            --excess;
        }
        // Scan v' >= u with |v'| = d; track the maximizer (lexicographic tie-break).
        i128 best_s = -1;
        std::vector<int> best_v;
        std::vector<int> vp(static_cast<size_t>(r));
        compositions(r, d - k, [&](const std::vector<int>& w) {
            for (int i = 0; i < r; ++i) vp[size_t(i)] = u[size_t(i)] + w[size_t(i)];
            i128 s = pc.at(vp);
            if (s > best_s) {
                best_s = s;
                best_v = vp;
            }
        });
        long dist = 0;
        for (int i = 0; i < r; ++i) dist += std::abs(v[size_t(i)] - best_v[size_t(i)]);
        auto rep = make_ge("ball v=" + vec_str(v), checked_mul(best_s, ball), bound_rhs);
        rep.pass = rep.pass && dist <= 2 * (d - k);
        rep.witness = "v'=" + vec_str(best_v) + " dist=" + std::to_string(dist);
        reports.push_back(std::move(rep));
    });
    return reports;
}

RegularityResult is_regular_equation(const std::vector<long>& coeffs) {
    RegularityResult out;
    const size_t d = coeffs.size();
    if (d == 0 || d > 20) fail_precondition("regularity check supports 1..20 coefficients");
    for (unsigned long mask = 1; mask < (1ul << d); ++mask) {
        long long sum = 0;
        for (size_t i = 0; i < d; ++i)
            if (mask >> i & 1) sum += coeffs[i];
        if (sum == 0) {
            out.regular = true;
            for (size_t i = 0; i < d; ++i)
                if (mask >> i & 1) {
                    out.subset.push_back(int(i));
                    out.subset_values.push_back(coeffs[i]);
                }
            return out;
        }
    }
    return out;
}

IdentityReport check_rainbowpr(const AbelianGroup& g, const std::vector<long>& coeffs,
                               const Coloring& c) {
    need(c.r() == 3, "rainbow regular-equation check needs r = 3");
    need(c.equitable(), "rainbow regular-equation check needs an equitable coloring");
    RegularityResult reg = is_regular_equation(coeffs);
    if (!reg.regular) fail_precondition("equation is not regular (no zero-sum coefficient subset)");

    OrthogonalArray oa = from_linear_equation(g, coeffs, 0);
    PatternCensus pc = full_census(oa, c);
    const i128 n = g.order();

    long long all_sum = 0;
    for (long a : coeffs) all_sum += a;

    auto rep = make_ge("rainbow-regular", pc.r_strict, checked_mul(2, n));
    if (all_sum == 0) {
        // Diagonal (x, x, ..., x) solutions are monochromatic.
        bool diag = pc.mono >= n;
        rep.pass = rep.pass && diag;
        rep.note = "a+b+c=0: diagonal gives M >= n (" + std::string(diag ? "holds" : "FAILS") +
                   "); M=" + to_string(pc.mono);
    } else {
        rep.hard = false;
        rep.note = "zero-sum witness is a proper subset; R >= 2n is report-only";
    }
    rep.witness = "R_strict=" + to_string(pc.r_strict);
    return rep;
}

long smallest_prime_divisor(long n) {
    if (n < 2) return n;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return p;
    return n;
}

IdentityReport check_3ap_rainbow(const FiniteGroup& g, const Coloring& c) {
    need(c.r() == 3, "rainbow AP(3) check needs r = 3");
    long p = smallest_prime_divisor(g.n);
    if (p <= 53)
        fail_precondition("smallest prime divisor p(G) = " + std::to_string(p) + " must exceed 53");

    OrthogonalArray oa = ap3_triples(g);
    PatternCensus pc = full_census(oa, c);
    const i128 n = g.n;
    i128 m = c.class_sizes()[0];
    for (long s : c.class_sizes()) m = std::min<i128>(m, s);

    // R >= (6 alpha (2 - 3 alpha) - 29/15) n^2, cleared by 15:
    // 15 R >= 90 m (2n - 3m) - 29 n^2.
    i128 lhs = checked_mul(15, pc.r_strict);
    i128 rhs = checked_mul(90, checked_mul(m, checked_mul(2, n) - checked_mul(3, m))) -
               checked_mul(29, checked_mul(n, n));
    auto rep = make_ge("rainbow-ap3", lhs, rhs);
    // alpha > 0.2725 <=> 400 m > 109 n; then a rainbow AP(3) must exist.
    if (checked_mul(400, m) > checked_mul(109, n)) {
        bool positive = pc.r_strict > 0;
        rep.pass = rep.pass && positive;
        rep.note = "alpha > 0.2725: R > 0 " + std::string(positive ? "holds" : "FAILS");
    }
    rep.witness = "R_strict=" + to_string(pc.r_strict) + " min_class=" + to_string(m);
    return rep;
}

} // namespace oac
