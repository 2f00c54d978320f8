#pragma once

#include <string>
#include <vector>

#include "oacensus/census.hpp"
#include "oacensus/coloring.hpp"
#include "oacensus/numeric.hpp"

namespace oac {

/// One verified identity or bound. Both sides are pre-multiplied to clear
/// denominators, so every comparison is between exact integers. `hard` is
/// false for report-only checks (conclusions the paper states but whose
/// proofs do not cover the tested case).
struct IdentityReport {
    std::string identity;
    i128 lhs = 0;
    i128 rhs = 0;
    i128 residual = 0; // lhs - rhs
    enum class Relation { equal, at_least } relation = Relation::equal;
    bool pass = false;
    bool hard = true;
    std::string witness;
    std::string note;
};

/// The counting identity: for every u with |u| <= k,
///   sum_{|v|=d} C(v,u) s(v) = C(d,u) * prod |X_i|^{u_i} * n^{k-|u|},
/// with C(v,u) = prod C(v_i,u_i), C(v,u) = 0 when v < u, C(0,0) = 1.
/// One report per u, in lexicographic u order.
std::vector<IdentityReport> verify_counting_identity(const PatternCensus& pc, const Coloring& c);

/// OA(3,2): 2M - R_strict = 3 * sum |X_i|^2 - n^2.
IdentityReport check_2m_r(const PatternCensus& pc, const Coloring& c);

/// OA(3,2), r = 2: M = |X_1|^2 - |X_1||X_2| + |X_2|^2 and 4M >= n^2.
IdentityReport check_cor_32_2(const PatternCensus& pc, const Coloring& c);

/// OA(3,2), r = 3: 2M - R_strict = 9 sigma_c^2 n^2 and 2M >= 9 sigma_c^2 n^2.
IdentityReport check_cor_32_3(const PatternCensus& pc, const Coloring& c);

/// OA(3,2) density bounds: hard 2M >= alpha_c n^2 when alpha_c > 0 and
/// R_strict >= |alpha_c| n^2 when alpha_c < 0. The unscaled M >= alpha_c n^2
/// reading and the equitable r >= 4 bound are reported in `note`.
IdentityReport check_alpha_bounds(const PatternCensus& pc, const Coloring& c);

/// OA(d, d-1): per color i, n(S_i + (-1)^{d-1} M_i) = (n-|X_i|)^d - (-1)^d |X_i|^d,
/// plus the summed-over-colors form. One report per color + one for the sum.
std::vector<IdentityReport> check_thm_dd1(const PatternCensus& pc, const Coloring& c);

/// OA(d, d-1), r = 3, rainbow = all colors present:
/// n((1 + (-1)^{d-1}) M - R_covering) = sum_i((n-|X_i|)^d - (-1)^d |X_i|^d) - n^d.
IdentityReport check_cor_dr3(const PatternCensus& pc, const Coloring& c);

/// OA(d, k) ball property: for every composition v there is v' with
/// l1-distance d(v, v') <= 2(d-k) and s(v') * C(d-k+r-1, r-1) >= (min|X_i|)^k.
/// u is chosen from v by decrementing largest entries first; the maximizing
/// v' is recorded as the witness.
std::vector<IdentityReport> check_thm_asym(const PatternCensus& pc, const Coloring& c);

/// ax+by+cz = 0 is regular when some nonempty subset of the coefficients
/// sums to zero (over the integers).
struct RegularityResult {
    bool regular = false;
    std::vector<int> subset;        // indices into coeffs (first witness found)
    std::vector<long> subset_values;
};

RegularityResult is_regular_equation(const std::vector<long>& coeffs);

/// Rainbow solutions of a regular equation under an equitable 3-coloring:
/// R_strict >= 2n. Hard only when the whole coefficient set sums to zero
/// (then also asserts M >= n via the diagonal); the a+b = 0 case is
/// report-only.
IdentityReport check_rainbowpr(const AbelianGroup& g, const std::vector<long>& coeffs,
                               const Coloring& c);

/// Rainbow AP(3) in a group with p(G) > 53 and min class density alpha:
/// 15 R_strict >= 90 m (2n - 3m) - 29 n^2 with m = min |X_i|; additionally
/// R_strict > 0 whenever alpha > 0.2725.
IdentityReport check_3ap_rainbow(const FiniteGroup& g, const Coloring& c);

/// Smallest prime divisor of n.
long smallest_prime_divisor(long n);

} // namespace oac
