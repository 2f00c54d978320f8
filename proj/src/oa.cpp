#include "oacensus/oa.hpp"

#include <algorithm>
#include <numeric>

#include "oacensus/numeric.hpp"

namespace oac {

namespace {

long long pow_cap(long n, int k) {
    long long rows = 1;
    for (int i = 0; i < k; ++i) {
        rows *= n;
        if (rows > kMaxOaRows) fail_precondition("n^k exceeds the 2^24 row cap");
    }
    return rows;
}

void check_coeff_coprime(long coeff, long exponent) {
    long g = std::gcd(std::abs(coeff) % exponent, exponent);
    if (exponent == 1) return; // trivial group: everything is invertible
    if (g != 1)
        fail_precondition("coefficient " + std::to_string(coeff) +
                          " shares factor gcd=" + std::to_string(g) + " with group exponent " +
                          std::to_string(exponent));
}

// Per-component modular inverse of a scalar coefficient.
std::vector<long> component_inverses(const AbelianGroup& g, long coeff) {
    std::vector<long> inv(g.orders().size());
    for (size_t c = 0; c < g.orders().size(); ++c) {
        long q = g.orders()[c];
        if (q == 1) {
            inv[c] = 0;
            continue;
        }
        long a = ((coeff % q) + q) % q;
        // extended gcd, q >= 2, gcd(a, q) == 1 guaranteed by precondition
        long old_r = a, r = q, old_s = 1, s = 0;
        while (r != 0) {
            long qt = old_r / r;
            long tmp = old_r - qt * r; old_r = r; r = tmp;
            tmp = old_s - qt * s; old_s = s; s = tmp;
        }
        inv[c] = ((old_s % q) + q) % q;
    }
    return inv;
}

} // namespace

OrthogonalArray from_linear_equation(const AbelianGroup& g, const std::vector<long>& coeffs,
                                     long t) {
    const int d = int(coeffs.size());
    if (d < 2) fail_precondition("linear equation needs degree >= 2");
    for (long a : coeffs) check_coeff_coprime(a, g.exponent());
    const long n = g.order();
    const long long row_count = pow_cap(n, d - 1);

    OrthogonalArray oa;
    oa.d = d;
    oa.k = d - 1;
    oa.n = n;
    oa.provenance = "linear-equation";
    oa.rows.resize(size_t(row_count) * d);

    const auto& orders = g.orders();
    const size_t comps = orders.size();
    std::vector<long> last_inv = component_inverses(g, coeffs[size_t(d - 1)]);
    std::vector<long> t_tuple = g.decode(t);

    std::vector<long> free_idx(size_t(d - 1), 0);
    std::vector<std::vector<long>> free_tuple(size_t(d - 1), std::vector<long>(comps, 0));
    size_t out = 0;
    for (long long rix = 0; rix < row_count; ++rix) {
        // Solve coeffs[d-1] * x = t - sum coeffs[i] * x_i per cyclic component.
        long solved = 0, mul = 1;
        for (size_t c = 0; c < comps; ++c) {
            long q = orders[c];
            long acc = t_tuple[c] % q;
            for (int i = 0; i < d - 1; ++i) {
                long term = (coeffs[size_t(i)] % q) * (free_tuple[size_t(i)][c] % q) % q;
                acc = ((acc - term) % q + q) % q;
            }
            solved += (last_inv[c] * acc % q) * mul;
            mul *= q;
        }
        for (int i = 0; i < d - 1; ++i) oa.rows[out++] = int32_t(free_idx[size_t(i)]);
        oa.rows[out++] = int32_t(solved);

        // Lexicographic increment of the free coordinates (last fastest).
        for (int i = d - 2; i >= 0; --i) {
            if (++free_idx[size_t(i)] < n) {
                free_tuple[size_t(i)] = g.decode(free_idx[size_t(i)]);
                break;
            }
            free_idx[size_t(i)] = 0;
            free_tuple[size_t(i)].assign(comps, 0);
        }
    }
    return oa;
}

OrthogonalArray from_linear_system(const AbelianGroup& g, const ModMatrix& a,
                                   const std::vector<long>& b) {
    const long m = a.rows;
    const int d = int(a.cols);
    if (d > 12) fail_precondition("linear systems limited to degree 12");
    if ((long)b.size() != m) fail_precondition("right-hand side length != m");
    const long exponent = g.exponent();

    // Re-reduce A modulo the group exponent, then require every m x m
    // submatrix determinant to be a unit.
    ModMatrix am(m, d, exponent, a.entries);
    if (exponent > 1) {
        std::vector<int> cols(static_cast<size_t>(m));
        std::iota(cols.begin(), cols.end(), 0);
        while (true) {
            long det = det_mod(am, cols, exponent);
            long gg = std::gcd(det, exponent);
            if (gg != 1) {
                std::string names;
                for (int c : cols) names += (names.empty() ? "" : ",") + std::to_string(c);
                fail_precondition("submatrix {" + names + "} has determinant sharing gcd=" +
                                  std::to_string(gg == 0 ? exponent : gg) + " with the exponent");
            }
            // next combination
            long i = m - 1;
            while (i >= 0 && cols[size_t(i)] == d - m + i) --i;
            if (i < 0) break;
            ++cols[size_t(i)];
            for (long j = i + 1; j < m; ++j) cols[size_t(j)] = cols[size_t(j - 1)] + 1;
        }
    }

    const int free_count = d - int(m);
    if (free_count < 0) fail_precondition("system needs m <= d");
    const long n = g.order();
    const long long row_count = pow_cap(n, free_count);

    // Inverse of the bound-column block, per cyclic component.
    const auto& orders = g.orders();
    const size_t comps = orders.size();
    std::vector<int> bound_cols(static_cast<size_t>(m));
    std::iota(bound_cols.begin(), bound_cols.end(), free_count);
    std::vector<std::vector<long>> inv_per_comp(comps);
    for (size_t c = 0; c < comps; ++c) {
        long q = orders[c];
        if (q == 1) continue;
        inv_per_comp[c] = invert_submatrix_mod(am, bound_cols, q);
    }

    std::vector<std::vector<long>> b_tuple(static_cast<size_t>(m));
    for (long i = 0; i < m; ++i) b_tuple[size_t(i)] = g.decode(b[size_t(i)]);

    OrthogonalArray oa;
    oa.d = d;
    oa.k = free_count;
    oa.n = n;
    oa.provenance = "linear-system";
    oa.rows.resize(size_t(row_count) * d);

    std::vector<long> free_idx(size_t(free_count), 0);
    std::vector<std::vector<long>> free_tuple(size_t(free_count), std::vector<long>(comps, 0));
    std::vector<long> bound_idx(size_t(m), 0);
    std::vector<long> rhs(static_cast<size_t>(m)), sol(static_cast<size_t>(m));
    size_t out = 0;
    for (long long rix = 0; rix < row_count; ++rix) {
        std::fill(bound_idx.begin(), bound_idx.end(), 0);
        long mul = 1;
        for (size_t c = 0; c < comps; ++c) {
            long q = orders[c];
            if (q == 1) {
                continue;
            }
            for (long i = 0; i < m; ++i) {
                long acc = b_tuple[size_t(i)][c] % q;
                for (int j = 0; j < free_count; ++j) {
                    long term = am.at(i, j) % q * (free_tuple[size_t(j)][c] % q) % q;
                    acc = ((acc - term) % q + q) % q;
                }
                rhs[size_t(i)] = acc;
            }
            const auto& inv = inv_per_comp[c];
            for (long i = 0; i < m; ++i) {
                long acc = 0;
                for (long j = 0; j < m; ++j) acc = (acc + inv[size_t(i) * m + j] * rhs[size_t(j)]) % q;
                sol[size_t(i)] = acc;
            }
            for (long i = 0; i < m; ++i) bound_idx[size_t(i)] += sol[size_t(i)] * mul;
            mul *= q;
        }
        for (int j = 0; j < free_count; ++j) oa.rows[out++] = int32_t(free_idx[size_t(j)]);
        for (long i = 0; i < m; ++i) oa.rows[out++] = int32_t(bound_idx[size_t(i)]);

        for (int i = free_count - 1; i >= 0; --i) {
            if (++free_idx[size_t(i)] < n) {
                free_tuple[size_t(i)] = g.decode(free_idx[size_t(i)]);
                break;
            }
            free_idx[size_t(i)] = 0;
            free_tuple[size_t(i)].assign(comps, 0);
        }
    }
    return oa;
}

namespace {

OrthogonalArray schur_from_table(long n, const std::vector<int>& table, const char* provenance) {
    pow_cap(n, 2);
    OrthogonalArray oa;
    oa.d = 3;
    oa.k = 2;
    oa.n = n;
    oa.provenance = provenance;
    oa.rows.resize(size_t(n) * n * 3);
    size_t out = 0;
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y) {
            oa.rows[out++] = int32_t(x);
            oa.rows[out++] = int32_t(y);
            oa.rows[out++] = int32_t(table[size_t(x) * n + y]);
        }
    return oa;
}

} // namespace

OrthogonalArray schur_triples(const FiniteGroup& g) {
    return schur_from_table(g.n, g.table, "schur-group");
}

OrthogonalArray schur_triples(const Quasigroup& q) {
    return schur_from_table(q.n, q.table, "schur-quasigroup");
}

OrthogonalArray ap3_triples(const FiniteGroup& g) {
    if (g.n % 2 == 0) fail_precondition("ap3_triples needs a group of odd order");
    pow_cap(g.n, 2);
    OrthogonalArray oa;
    oa.d = 3;
    oa.k = 2;
    oa.n = g.n;
    oa.provenance = "ap3";
    oa.rows.resize(size_t(g.n) * g.n * 3);
    size_t out = 0;
    for (int a = 0; a < g.n; ++a)
        for (int x = 0; x < g.n; ++x) {
            int ax = g.mul(a, x);
            oa.rows[out++] = int32_t(a);
            oa.rows[out++] = int32_t(ax);
            oa.rows[out++] = int32_t(g.mul(ax, x));
        }
    return oa;
}

StrengthCheck verify_strength(const OrthogonalArray& oa) {
    StrengthCheck out;
    if (oa.d < 1 || oa.k < 0 || oa.k > oa.d || oa.n < 1) {
        out.detail = "malformed header";
        return out;
    }
    long long expect = 1;
    for (int i = 0; i < oa.k; ++i) {
        expect *= oa.n;
        if (expect > kMaxOaRows) fail_precondition("n^k exceeds the 2^24 row cap");
    }
    if ((long long)oa.row_count() != expect) {
        out.detail = "row count " + std::to_string(oa.row_count()) + " != n^k = " +
                     std::to_string(expect);
        return out;
    }
    for (int32_t v : oa.rows)
        if (v < 0 || v >= oa.n) fail_structural("row entry out of [0, n)");

    std::vector<int> cols(static_cast<size_t>(oa.k));
    std::iota(cols.begin(), cols.end(), 0);
    std::vector<uint32_t> counts(static_cast<size_t>(expect));
    const size_t rows = oa.row_count();
    while (true) {
        std::fill(counts.begin(), counts.end(), 0);
        for (size_t ri = 0; ri < rows; ++ri) {
            long long key = 0;
            for (int c : cols) key = key * oa.n + oa.at(ri, c);
            counts[size_t(key)]++;
        }
        for (long long key = 0; key < expect; ++key) {
            if (counts[size_t(key)] != 1) {
                out.columns = cols;
                out.tuple.assign(size_t(oa.k), 0);
                long long rem = key;
                for (int i = oa.k - 1; i >= 0; --i) {
                    out.tuple[size_t(i)] = int(rem % oa.n);
                    rem /= oa.n;
                }
                out.count = counts[size_t(key)];
                std::string cs, ts;
                for (int c : cols) cs += (cs.empty() ? "" : ",") + std::to_string(c);
                for (int v : out.tuple) ts += (ts.empty() ? "" : ",") + std::to_string(v);
                out.detail = "columns {" + cs + "} tuple (" + ts + ") occurs " +
                             std::to_string(out.count) + " times";
                return out;
            }
        }
        // next k-combination of columns
        int i = oa.k - 1;
        while (i >= 0 && cols[size_t(i)] == oa.d - oa.k + i) --i;
        if (i < 0) break;
        ++cols[size_t(i)];
        for (int j = i + 1; j < oa.k; ++j) cols[size_t(j)] = cols[size_t(j - 1)] + 1;
    }
    out.pass = true;
    out.detail = "strength " + std::to_string(oa.k) + " verified";
    return out;
}

bool same_row_set(const OrthogonalArray& a, const OrthogonalArray& b) {
    if (a.d != b.d || a.row_count() != b.row_count()) return false;
    auto sorted_rows = [](const OrthogonalArray& oa) {
        std::vector<std::vector<int32_t>> rs(oa.row_count());
        for (size_t i = 0; i < oa.row_count(); ++i) {
            auto r = oa.row(i);
            rs[i].assign(r.begin(), r.end());
        }
        std::sort(rs.begin(), rs.end());
        return rs;
    };
    return sorted_rows(a) == sorted_rows(b);
}

Quasigroup build_z3_extension(const Quasigroup& y) {
    const long m = y.n;
    const long n = 3 * m;
    if (n > kMaxGroundOrder) fail_precondition("extension order exceeds 2^16 cap");
    Quasigroup x;
    x.n = n;
    x.table.resize(size_t(n) * n);
    for (long a = 0; a < m; ++a)
        for (int i = 0; i < 3; ++i)
            for (long b = 0; b < m; ++b)
                for (int j = 0; j < 3; ++j)
                    x.table[size_t(3 * a + i) * n + size_t(3 * b + j)] =
                        int(3 * y.mul(int(a), int(b)) + (2 * (i + j)) % 3);
    return x;
}

Quasigroup swap_block(const Quasigroup& l, const SwapSpec& spec) {
    if (l.n % 3 != 0) fail_structural("ground set is not of the form Y x Z_3");
    const long m = l.n / 3;
    const bool pair01 = spec.layer_a == 0 && spec.layer_b == 1;
    const bool pair02 = spec.layer_a == 0 && spec.layer_b == 2;
    if (!pair01 && !pair02) fail_precondition("symbol pair must be (0,1) or (0,2)");
    std::vector<char> in_u(size_t(m), 0), in_v(size_t(m), 0);
    for (int x : spec.u) {
        if (x < 0 || x >= m) fail_precondition("U contains an index outside Y");
        in_u[size_t(x)] = 1;
    }
    for (int y : spec.v) {
        if (y < 0 || y >= m) fail_precondition("V contains an index outside Y");
        in_v[size_t(y)] = 1;
    }

    Quasigroup out = l;
    for (long row = 0; row < l.n; ++row) {
        if (!in_u[size_t(row / 3)]) continue;
        for (long col = 0; col < l.n; ++col) {
            if (!in_v[size_t(col / 3)]) continue;
            int& e = out.table[size_t(row) * l.n + col];
            int base = e / 3, layer = e % 3;
            if (layer == spec.layer_a) e = 3 * base + spec.layer_b;
            else if (layer == spec.layer_b) e = 3 * base + spec.layer_a;
        }
    }
    LatinCheck lc = validate_latin(out);
    if (!lc.pass) fail_structural("swap broke the latin property: " + lc.detail);
    return out;
}

} // namespace oac
