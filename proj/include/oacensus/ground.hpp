#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "oacensus/errors.hpp"

namespace oac {

/// Desk-scale cap: ground structures of order > 2^16 are rejected so that
/// Cayley tables stay addressable and all censuses stay exact in 128 bits.
inline constexpr long kMaxGroundOrder = 1 << 16;

/// Finite abelian group Z_{n_1} x ... x Z_{n_s}. Elements are dense indices
/// in [0, n) encoding mixed-radix tuples, component 0 least significant:
/// index = x_0 + n_0*(x_1 + n_1*(x_2 + ...)).
class AbelianGroup {
  public:
    explicit AbelianGroup(std::vector<long> orders);

    long order() const { return n_; }
    long exponent() const { return exponent_; }
    const std::vector<long>& orders() const { return orders_; }

    std::vector<long> decode(long index) const;
    long encode(const std::vector<long>& tuple) const;

    long add(long a, long b) const;
    long neg(long a) const;
    /// k*a for any integer k (negative allowed).
    long scale(long k, long a) const;

  private:
    std::vector<long> orders_;
    long n_ = 1;
    long exponent_ = 1;
};

/// Finite group given by an explicit Cayley table (row * column).
struct FiniteGroup {
    long n = 0;
    std::vector<int> table; // n*n row-major: table[a*n+b] = a*b
    int identity = 0;

    int mul(int a, int b) const { return table[size_t(a) * n + b]; }
    int inv(int a) const;
    int pow(int a, long e) const; // e >= 0
};

/// Quasigroup = Latin square; only the cancellation law is promised.
struct Quasigroup {
    long n = 0;
    std::vector<int> table;

    int mul(int a, int b) const { return table[size_t(a) * n + b]; }
};

/// Verdict of validate_group. On failure `axiom` names the violated law and
/// `witness` holds the offending element triple (unused slots are -1).
/// `exhaustive` records whether the associativity scan covered all triples
/// (n <= 256) or 10^6 seeded random ones.
struct GroupCheck {
    bool pass = false;
    std::string axiom;
    std::array<long, 3> witness{-1, -1, -1};
    bool exhaustive = true;
    std::string detail;
};

GroupCheck validate_group(const FiniteGroup& g);

struct LatinCheck {
    bool pass = false;
    bool row_violation = false; // false => column violation when !pass
    long index = -1;            // offending row/column
    std::string detail;
};

LatinCheck validate_latin(const Quasigroup& q);

/// Explicit Cayley table of an abelian group (order-capped).
FiniteGroup cayley_table(const AbelianGroup& g);

/// Dihedral group of order 2m: indices 0..m-1 rotations, m..2m-1 reflections.
FiniteGroup dihedral_group(int m);

Quasigroup as_quasigroup(const FiniteGroup& g);

/// Integer matrix with entries reduced modulo a stated modulus; m <= d.
struct ModMatrix {
    long rows = 0, cols = 0;
    long modulus = 0;
    std::vector<long> entries; // row-major, in [0, modulus)

    ModMatrix() = default;
    ModMatrix(long m, long d, long q, const std::vector<long>& raw);
    long at(long r, long c) const { return entries[size_t(r) * cols + c]; }
};

/// Exact inverse of the m x m submatrix of A given by `columns`, modulo q.
/// Fraction-free Gaussian elimination with extended-gcd pivots (unimodular
/// row combinations keep everything in [0, q)); ties broken by smallest
/// pivot index. Throws a precondition Error carrying the gcd witness when
/// the submatrix determinant shares a factor with q.
std::vector<long> invert_submatrix_mod(const ModMatrix& a, const std::vector<int>& columns, long q);

/// Determinant of the chosen submatrix modulo q (same elimination).
long det_mod(const ModMatrix& a, const std::vector<int>& columns, long q);

} // namespace oac
