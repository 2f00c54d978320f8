#include "oacensus/ground.hpp"

#include <numeric>
#include <random>

namespace oac {

AbelianGroup::AbelianGroup(std::vector<long> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) fail_structural("abelian group needs at least one cyclic order");
    for (long q : orders_) {
        if (q < 1) fail_structural("cyclic order must be >= 1");
        if (n_ > kMaxGroundOrder / q) fail_precondition("group order exceeds 2^16 desk-scale cap");
        n_ *= q;
        exponent_ = std::lcm(exponent_, q);
    }
}

std::vector<long> AbelianGroup::decode(long index) const {
    std::vector<long> t(orders_.size());
    for (size_t i = 0; i < orders_.size(); ++i) {
        t[i] = index % orders_[i];
        index /= orders_[i];
    }
    return t;
}

long AbelianGroup::encode(const std::vector<long>& tuple) const {
    if (tuple.size() != orders_.size()) fail_structural("tuple arity mismatch");
    long idx = 0;
    for (size_t i = orders_.size(); i-- > 0;) {
        long x = tuple[i] % orders_[i];
        if (x < 0) x += orders_[i];
        idx = idx * orders_[i] + x;
    }
    return idx;
}

long AbelianGroup::add(long a, long b) const {
    long idx = 0, mul = 1, r = 0;
    for (size_t i = 0; i < orders_.size(); ++i) {
        long q = orders_[i];
        r = (a % q + b % q) % q;
        idx += r * mul;
        mul *= q;
        a /= q;
        b /= q;
    }
    return idx;
}

long AbelianGroup::neg(long a) const {
    long idx = 0, mul = 1;
    for (size_t i = 0; i < orders_.size(); ++i) {
        long q = orders_[i];
        long x = a % q;
        idx += (x == 0 ? 0 : q - x) * mul;
        mul *= q;
        a /= q;
    }
    return idx;
}

long AbelianGroup::scale(long k, long a) const {
    long idx = 0, mul = 1;
    for (size_t i = 0; i < orders_.size(); ++i) {
        long q = orders_[i];
        long x = ((k % q) * (a % q)) % q;
        if (x < 0) x += q;
        idx += x * mul;
        mul *= q;
        a /= q;
    }
    return idx;
}

int FiniteGroup::inv(int a) const {
    for (int b = 0; b < n; ++b)
        if (mul(a, b) == identity) return b;
    fail_structural("element has no inverse (table is not a group)");
}

int FiniteGroup::pow(int a, long e) const {
    int r = identity;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

namespace {

// Returns -1 on success, else the first offending row (axis 0) or column
// (axis 1) index.
long first_non_permutation(const std::vector<int>& table, long n, int axis) {
    std::vector<char> seen(n);
    for (long i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (long j = 0; j < n; ++j) {
            int v = axis == 0 ? table[size_t(i) * n + j] : table[size_t(j) * n + i];
            if (seen[v]) return i;
            seen[v] = 1;
        }
    }
    return -1;
}

void check_table_shape(const std::vector<int>& table, long n, const char* what) {
    if (n < 1) fail_structural(std::string(what) + ": order must be >= 1");
    if (n > kMaxGroundOrder) fail_precondition(std::string(what) + ": order exceeds 2^16 cap");
    if (table.size() != size_t(n) * size_t(n)) fail_structural(std::string(what) + ": table is not n x n");
    for (int v : table)
        if (v < 0 || v >= n) fail_structural(std::string(what) + ": entry out of [0, n)");
}

} // namespace

GroupCheck validate_group(const FiniteGroup& g) {
    check_table_shape(g.table, g.n, "group");
    GroupCheck out;
    const long n = g.n;

    long bad = first_non_permutation(g.table, n, 0);
    if (bad >= 0) {
        out.axiom = "latin-row";
        out.witness = {bad, -1, -1};
        out.detail = "row " + std::to_string(bad) + " repeats a symbol";
        return out;
    }
    bad = first_non_permutation(g.table, n, 1);
    if (bad >= 0) {
        out.axiom = "latin-column";
        out.witness = {bad, -1, -1};
        out.detail = "column " + std::to_string(bad) + " repeats a symbol";
        return out;
    }

    long e = -1;
    for (long cand = 0; cand < n; ++cand) {
        bool ok = true;
        for (long x = 0; x < n && ok; ++x)
            ok = g.table[size_t(cand) * n + x] == x && g.table[size_t(x) * n + cand] == x;
        if (ok) {
            e = cand;
            break;
        }
    }
    if (e < 0) {
        out.axiom = "identity";
        out.detail = "no two-sided identity element";
        return out;
    }
    if (e != g.identity) {
        out.axiom = "identity";
        out.witness = {g.identity, e, -1};
        out.detail = "declared identity " + std::to_string(g.identity) +
                     " but two-sided identity is " + std::to_string(e);
        return out;
    }

    auto assoc_fails = [&](long a, long b, long c) {
        return g.mul(g.mul(int(a), int(b)), int(c)) != g.mul(int(a), g.mul(int(b), int(c)));
    };
    if (n <= 256) {
        out.exhaustive = true;
        for (long a = 0; a < n; ++a)
            for (long b = 0; b < n; ++b)
                for (long c = 0; c < n; ++c)
                    if (assoc_fails(a, b, c)) {
                        out.axiom = "associativity";
                        out.witness = {a, b, c};
                        out.detail = "(a*b)*c != a*(b*c) at (" + std::to_string(a) + "," +
                                     std::to_string(b) + "," + std::to_string(c) + ")";
                        return out;
                    }
    } else {
        out.exhaustive = false;
        std::mt19937_64 rng(0); // fixed seed: verdicts are reproducible
        for (int i = 0; i < 1000000; ++i) {
            long a = long(rng() % (unsigned long)n);
            long b = long(rng() % (unsigned long)n);
            long c = long(rng() % (unsigned long)n);
            if (assoc_fails(a, b, c)) {
                out.axiom = "associativity";
                out.witness = {a, b, c};
                out.detail = "sampled associativity failure";
                return out;
            }
        }
    }

    out.pass = true;
    out.detail = out.exhaustive ? "group axioms hold (exhaustive associativity scan)"
                                : "group axioms hold (sampled associativity scan)";
    return out;
}

LatinCheck validate_latin(const Quasigroup& q) {
    check_table_shape(q.table, q.n, "quasigroup");
    LatinCheck out;
    long bad = first_non_permutation(q.table, q.n, 0);
    if (bad >= 0) {
        out.row_violation = true;
        out.index = bad;
        out.detail = "row " + std::to_string(bad) + " is not a permutation";
        return out;
    }
    bad = first_non_permutation(q.table, q.n, 1);
    if (bad >= 0) {
        out.row_violation = false;
        out.index = bad;
        out.detail = "column " + std::to_string(bad) + " is not a permutation";
        return out;
    }
    out.pass = true;
    out.detail = "latin square";
    return out;
}

FiniteGroup cayley_table(const AbelianGroup& g) {
    const long n = g.order();
    if (n > 4096) fail_precondition("explicit Cayley table limited to order 4096");
    FiniteGroup fg;
    fg.n = n;
    fg.identity = 0;
    fg.table.resize(size_t(n) * n);
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            fg.table[size_t(a) * n + b] = int(g.add(a, b));
    return fg;
}

FiniteGroup dihedral_group(int m) {
    if (m < 1) fail_structural("dihedral parameter must be >= 1");
    const long n = 2L * m;
    if (n > 4096) fail_precondition("dihedral table limited to order 4096");
    FiniteGroup g;
    g.n = n;
    g.identity = 0;
    g.table.resize(size_t(n) * n);
    // r^i (i < m) and s r^i (i >= m, index m + i); s r^i * s r^j = r^{j-i}.
    auto idx = [&](bool refl, int i) { return (refl ? m : 0) + ((i % m) + m) % m; };
    for (int a = 0; a < n; ++a) {
        bool ra = a >= m;
        int ia = ra ? a - m : a;
        for (int b = 0; b < n; ++b) {
            bool rb = b >= m;
            int ib = rb ? b - m : b;
            int prod;
            if (!ra && !rb) prod = idx(false, ia + ib);
            else if (!ra && rb) prod = idx(true, ib - ia);
            else if (ra && !rb) prod = idx(true, ia + ib);
            else prod = idx(false, ib - ia);
            g.table[size_t(a) * n + b] = prod;
        }
    }
    return g;
}

Quasigroup as_quasigroup(const FiniteGroup& g) {
    Quasigroup q;
    q.n = g.n;
    q.table = g.table;
    return q;
}

ModMatrix::ModMatrix(long m, long d, long q, const std::vector<long>& raw)
    : rows(m), cols(d), modulus(q) {
    if (m < 1 || d < 1 || m > d) fail_structural("ModMatrix requires 1 <= m <= d");
    if (q < 1) fail_structural("ModMatrix modulus must be >= 1");
    if (raw.size() != size_t(m) * size_t(d)) fail_structural("ModMatrix entry count mismatch");
    entries.resize(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) {
        long v = raw[i] % q;
        entries[i] = v < 0 ? v + q : v;
    }
}

namespace {

// Extended gcd: returns g and s,t with s*a + t*b = g, a,b >= 0.
long extgcd(long a, long b, long& s, long& t) {
    long s0 = 1, t0 = 0, s1 = 0, t1 = 1;
    while (b != 0) {
        long qt = a / b;
        long tmp = a - qt * b; a = b; b = tmp;
        tmp = s0 - qt * s1; s0 = s1; s1 = tmp;
        tmp = t0 - qt * t1; t0 = t1; t1 = tmp;
    }
    s = s0;
    t = t0;
    return a;
}

long mod_reduce(long x, long q) {
    x %= q;
    return x < 0 ? x + q : x;
}

// Forward pass shared by inversion and determinant. W is m x w row-major,
// the first m columns hold the working submatrix. Diagonal entries after the
// pass multiply to +/- det mod q (all row combinations are unimodular).
// Returns gcd(diagonal product, q) > 1 witness, or 0 on success.
long eliminate_forward(std::vector<long>& w, long m, long width, long q) {
    auto at = [&](long r, long c) -> long& { return w[size_t(r) * width + c]; };
    for (long j = 0; j < m; ++j) {
        for (long i = j + 1; i < m; ++i) {
            long a = at(j, j), b = at(i, j);
            if (b == 0) continue;
            long s, t;
            long g = extgcd(a, b, s, t);
            long af = a / g, bf = b / g;
            // [row_j; row_i] <- [[s, t], [-bf, af]] * [row_j; row_i]; det = 1.
            for (long c = j; c < width; ++c) {
                long x = at(j, c), y = at(i, c);
                at(j, c) = mod_reduce(mod_reduce(s % q * x % q, q) + mod_reduce(t % q * y % q, q), q);
                at(i, c) = mod_reduce(mod_reduce(af % q * y % q, q) - mod_reduce(bf % q * x % q, q), q);
            }
        }
        long g = std::gcd(at(j, j), q);
        if (g != 1) return g == 0 ? q : g;
    }
    return 0;
}

std::vector<long> gather_submatrix(const ModMatrix& a, const std::vector<int>& columns, long q,
                                   long width) {
    const long m = a.rows;
    if ((long)columns.size() != m)
        fail_precondition("column subset size must equal the matrix row count");
    for (int c : columns)
        if (c < 0 || c >= a.cols) fail_structural("column index out of range");
    if (q < 2) fail_precondition("modulus must be >= 2");
    std::vector<long> w(size_t(m) * width, 0);
    for (long r = 0; r < m; ++r)
        for (long j = 0; j < m; ++j)
            w[size_t(r) * width + j] = mod_reduce(a.at(r, columns[j]), q);
    return w;
}

} // namespace

std::vector<long> invert_submatrix_mod(const ModMatrix& a, const std::vector<int>& columns, long q) {
    const long m = a.rows;
    const long width = 2 * m;
    std::vector<long> w = gather_submatrix(a, columns, q, width);
    for (long r = 0; r < m; ++r) w[size_t(r) * width + m + r] = 1 % q;

    long bad = eliminate_forward(w, m, width, q);
    if (bad != 0)
        fail_precondition("submatrix not invertible mod " + std::to_string(q) +
                          " (gcd witness " + std::to_string(bad) + ")");

    auto at = [&](long r, long c) -> long& { return w[size_t(r) * width + c]; };
    // Scale diagonals to 1 and clear above.
    for (long j = m - 1; j >= 0; --j) {
        long s, t;
        extgcd(at(j, j), q, s, t); // s * diag = 1 (mod q)
        long inv = mod_reduce(s, q);
        for (long c = j; c < width; ++c) at(j, c) = at(j, c) * inv % q;
        for (long i = 0; i < j; ++i) {
            long f = at(i, j);
            if (f == 0) continue;
            for (long c = j; c < width; ++c)
                at(i, c) = mod_reduce(at(i, c) - f * at(j, c) % q, q);
        }
    }
    std::vector<long> inv(size_t(m) * m);
    for (long r = 0; r < m; ++r)
        for (long c = 0; c < m; ++c) inv[size_t(r) * m + c] = at(r, m + c);
    return inv;
}

long det_mod(const ModMatrix& a, const std::vector<int>& columns, long q) {
    const long m = a.rows;
    std::vector<long> w = gather_submatrix(a, columns, q, m);
    // Same elimination, no early unit check: det = product of diagonals.
    auto at = [&](long r, long c) -> long& { return w[size_t(r) * m + c]; };
    for (long j = 0; j < m; ++j) {
        for (long i = j + 1; i < m; ++i) {
            long aa = at(j, j), bb = at(i, j);
            if (bb == 0) continue;
            long s, t;
            long g = extgcd(aa, bb, s, t);
            long af = aa / g, bf = bb / g;
            for (long c = j; c < m; ++c) {
                long x = at(j, c), y = at(i, c);
                at(j, c) = mod_reduce(mod_reduce(s % q * x % q, q) + mod_reduce(t % q * y % q, q), q);
                at(i, c) = mod_reduce(mod_reduce(af % q * y % q, q) - mod_reduce(bf % q * x % q, q), q);
            }
        }
    }
    long det = 1 % q;
    for (long j = 0; j < m; ++j) det = det * at(j, j) % q;
    return det;
}

} // namespace oac
