#pragma once

// Exact dimension bounds, necklace counts and the exhaustive optimality search.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gapcode/sequences.hpp"

namespace gapcode {

using BigInt = boost::multiprecision::cpp_int;

/// C(n, w); zero when w > n.
BigInt binom(std::uint64_t n, std::uint64_t w);
/// Exact floor(log2 v). Throws Error(domain) when v <= 0.
int floor_log2(const BigInt& v);
/// floor(log2 C(n, w)). Throws Error(domain) when the binomial is zero.
int floor_log2_binom(std::uint64_t n, std::uint64_t w);

/// log2[(2^l e / l)^l / sqrt(2 pi l)] = l^2 - l log2 l + l/ln2 - (1/2) log2 l - ln(2 pi)/(2 ln2),
/// an upper bound on floor_log2_binom(2^l, l) by Stirling's inequality.
double stirling_upper_bound(int ell);
/// The same expression with ln(2 pi)/ln2 as the last term. It is smaller by (1/2) log2(2 pi)
/// and drops below floor_log2_binom(2^l, l) from l = 5 on; kept for comparison only.
double stirling_short_form(int ell);

int moebius(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Primitive binary necklaces of length n and weight w:
/// (1/n) sum_{d | gcd(n,w)} mu(d) C(n/d, w/d).
BigInt primitive_necklaces(std::uint64_t n, std::uint64_t w);
/// Same count through the generating function: sum_{d | n} mu(n/d) q(d, wd/n), with q(d, j)
/// the x^j y^(d-j) coefficient of (1/d) sum_{e | d} phi(d/e) (x^(d/e) + y^(d/e))^e.
/// A non-integer wd/n contributes zero.
BigInt primitive_necklaces_gf(std::uint64_t n, std::uint64_t w);

/// ell + floor(log2 p(2^ell, ell)).
int necklace_bound(int ell);

struct DeltaReport {
    int ell = 0;
    int delta = 0;   // floor_log2_binom(2^ell, ell) - k_ell
    double bound = 0; // (1 + 1/(2 ln2)) ell - 1.5 log2 ell - ln(2 pi / e) / (2 ln2)
    bool within_bound = false;
};
DeltaReport delta_ell(int ell);

struct BoundsReport {
    int ell = 0;
    std::uint64_t k_ell = 0;
    std::uint64_t k_hat_ell = 0;
    int log2_binom_floor = 0;
    double stirling_ub = 0;
    int necklace_ub = 0;
    int delta_ell = 0;

    static std::string csv_header();
    std::string csv_row() const;
};
/// ell in [3, 24].
BoundsReport bounds_report(int ell);

struct OptimalityResult {
    int ell = 0;
    std::uint64_t max_k = 0;
    std::vector<CharSeq> maximizers;
    std::uint64_t sequences_visited = 0;
    std::uint64_t anchor_decodable = 0;
    bool f_ell_is_maximizer = false;
    /// Every k reached by some anchor-decodable sequence.
    std::set<std::uint64_t> achieved_k;
};

/// Enumerates all non-decreasing sequences with entries in [1, ell] ending in ell, pruned by
/// the capacity condition, and keeps the anchor-decodable ones. ell in [3, 8].
OptimalityResult optimality_search(int ell);

} // namespace gapcode
