#pragma once

#include <cstdint>
#include <vector>

#include "oacensus/ground.hpp"
#include "oacensus/numeric.hpp"

namespace oac {

/// An r-coloring of a ground set of size n. r is declared, not inferred:
/// empty color classes are legal and all identity formulas treat c_i = 0
/// literally. Densities are exact rationals |X_i|/n.
///
/// Colorings of an integer interval [1, n] use ground index e for the
/// integer e + 1; this offset convention is fixed throughout.
class Coloring {
  public:
    Coloring(long n, int r, std::vector<int> assign);

    long n() const { return n_; }
    int r() const { return r_; }
    const std::vector<int>& assign() const { return assign_; }
    const std::vector<long>& class_sizes() const { return sizes_; }
    int color(long e) const { return assign_[size_t(e)]; }
    Rational density(int i) const { return Rational(sizes_[size_t(i)], n_); }
    bool equitable() const; // class sizes differ by at most 1

  private:
    long n_;
    int r_;
    std::vector<int> assign_;
    std::vector<long> sizes_;
};

/// alpha_c = 3*sum c_i^2 - 1, variance = sum c_i^2 / r - (sum c_i / r)^2,
/// all exact. For r = 3, 9*variance == alpha_c.
struct ColoringStats {
    Rational alpha_c;
    Rational variance;
    Rational min_density;
};

enum class EquitableMode { blocks, round_robin };

Coloring equitable_coloring(long n, int r, EquitableMode mode);

/// The rainbow-free partition for x+y+z = -1 over Z_n: 3t interval classes
/// A_i = [0, n/3t - 1] + i*(n/3t). Requires 3t | n.
Coloring rainbow_free_ap_coloring(long n, long t);

/// 3-coloring from a subgroup chain K < H < G with both indices 2:
/// color 0 = K, color 1 = H \ K, color 2 = G \ H. Densities (1/4, 1/4, 1/2).
Coloring subgroup_chain_coloring(const FiniteGroup& g, const std::vector<int>& k,
                                 const std::vector<int>& h);

/// Seeded Fisher-Yates shuffle of the color multiset; deterministic per seed.
Coloring random_coloring(long n, const std::vector<long>& class_sizes, uint64_t seed);

ColoringStats stats(const Coloring& c);

} // namespace oac
