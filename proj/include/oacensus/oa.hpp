#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "oacensus/ground.hpp"

namespace oac {

/// Row cap: constructors refuse n^k > 2^24 so arrays stay dense and in RAM.
inline constexpr long long kMaxOaRows = 1LL << 24;

/// An orthogonal array OA(d, k) on ground set [0, n): |rows| = n^k and every
/// choice of k columns carries each k-tuple exactly once. Rows are stored
/// flat and enumerated with free coordinates in lexicographic order, so row
/// order is deterministic for every constructor.
struct OrthogonalArray {
    int d = 0;
    int k = 0;
    long n = 0;
    std::vector<int32_t> rows; // flat, row-major, size = n^k * d
    std::string provenance;

    size_t row_count() const { return d == 0 ? 0 : rows.size() / size_t(d); }
    std::span<const int32_t> row(size_t i) const { return {rows.data() + i * size_t(d), size_t(d)}; }
    int at(size_t i, int j) const { return rows[i * size_t(d) + j]; }
};

/// Verdict of verify_strength. On failure `columns` is the offending column
/// subset and `tuple` a k-tuple whose row count differs from 1.
struct StrengthCheck {
    bool pass = false;
    std::vector<int> columns;
    std::vector<int> tuple;
    long long count = 0;
    std::string detail;
};

/// All solutions of sum_i coeffs[i] * x_i = t in G. Every coefficient must be
/// coprime to the group exponent; the result has strength d-1.
OrthogonalArray from_linear_equation(const AbelianGroup& g, const std::vector<long>& coeffs, long t);

/// All solutions of A x = b in G^d for an m x d matrix whose m x m submatrix
/// determinants are all coprime to the group exponent (checked exhaustively,
/// d <= 12). The result has strength d - m.
OrthogonalArray from_linear_system(const AbelianGroup& g, const ModMatrix& a,
                                   const std::vector<long>& b);

/// Ordered Schur triples (x, y, x*y); n^2 rows, strength 2.
OrthogonalArray schur_triples(const FiniteGroup& g);
OrthogonalArray schur_triples(const Quasigroup& q);

/// 3-term progressions (a, ax, ax^2); requires |G| odd. n^2 rows, strength 2.
OrthogonalArray ap3_triples(const FiniteGroup& g);

StrengthCheck verify_strength(const OrthogonalArray& oa);

/// Row-set equality, order-insensitive (sorted comparison).
bool same_row_set(const OrthogonalArray& a, const OrthogonalArray& b);

/// Example-1 swap mutation. The ground set of the extended quasigroup is
/// Y x Z_3 with element (x, i) encoded as 3x + i (layer = index mod 3).
/// `u`, `v` are subsets of Y; the symbol pair is (0,1) or (0,2).
struct SwapSpec {
    std::vector<int> u;
    std::vector<int> v;
    int layer_a = 0;
    int layer_b = 1;
};

/// Quasigroup on Y x Z_3 with (x,i)*(y,j) = (xy, 2(i+j)).
Quasigroup build_z3_extension(const Quasigroup& y);

/// Exchange, inside the cell block rows(U x Z_3) x cols(V x Z_3), every entry
/// on layer_a with the same-base entry on layer_b. The result is validated to
/// still be a Latin square.
Quasigroup swap_block(const Quasigroup& l, const SwapSpec& spec);

} // namespace oac
