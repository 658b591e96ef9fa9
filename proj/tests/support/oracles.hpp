#pragma once

// Reference implementations for tests. They only share BitString/Codeword with the library and
// deliberately take the slow, literal route.

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gapcode/bits.hpp"

namespace oracle {

using Big = boost::multiprecision::cpp_int;

/// Row-by-row Pascal triangle, so no multiplicative formula is involved.
Big pascal_binomial(unsigned n, unsigned k);
int bit_length_minus_one(const Big& v);

/// Groups every weight-w word of length n by rotation and counts classes of size n. n <= 20.
std::uint64_t brute_primitive_necklaces(unsigned n, unsigned w);

/// Gap encoding on a dense 0/1 array of length 2^ell. `seq` is s(1..L) with s(L) the anchor width.
/// Returns nullopt when a position is written twice.
std::optional<std::vector<std::uint8_t>> dense_encode(const gapcode::BitString& x, const std::vector<int>& seq,
                                                      int ell);

/// The B_t word: widths ell-t, f(ell-1)..f(2), f(1)-t written on 2^ell cells with the anchor at
/// 2^t * x_ell, then the 2^t - 1 cells after the last one removed.
std::optional<std::vector<std::uint8_t>> dense_encode_bt(const gapcode::BitString& x, const std::vector<int>& f,
                                                         int t);

std::vector<gapcode::Index> ones_of(const std::vector<std::uint8_t>& dense);

/// Anchor decodability straight from the definition: capacity, then every nontrivial rotation of
/// the maximal-gap vector compared by value.
bool brute_anchor_decodable(const std::vector<int>& seq, int ell);

/// Every message that the dense encoder maps to c, found by trying each one of c as the anchor.
std::vector<gapcode::BitString> brute_preimages(const gapcode::Codeword& c, const std::vector<int>& seq, int ell);

/// All subsets of {0..n-1} of size w in lexicographic order. C(n, w) must be small.
std::vector<std::vector<gapcode::Index>> lex_subsets(unsigned n, unsigned w);

/// Reference sequence table, ell = 3..10, transcribed by hand.
struct TableRow {
    int ell;
    std::vector<int> f;
    std::vector<int> f_hat;
    unsigned k;
    unsigned k_hat;
};
const std::vector<TableRow>& reference_table();

} // namespace oracle
