#pragma once

// Gap encoder and the anchor-based decoders.
//
// The encoder writes one 1 per message block. The first block x_L fixes the anchor
// position directly; every later block x_j advances the position by 1 + dec(x_j),
// cyclically on Z_n. Decoding locates the anchor from the gap vector alone, after
// which every block is the binary expansion of one gap.

#include <cstddef>
#include <optional>
#include <vector>

#include "gapcode/bits.hpp"
#include "gapcode/sequences.hpp"

namespace gapcode {

enum class DecodeMode {
    strict,     // every recovered gap must fit its block; violations throw not_a_codeword
    permissive, // out-of-range gaps are truncated to their block width
};

struct AnchorResult {
    std::size_t anchor_index = 0;
    bool via_maximal_gap = false;
    /// The argmax rule saw a tie and picked the lowest index. Never set for valid codewords.
    bool ambiguous = false;
};

/// Work counters for the part of decoding that follows gap extraction.
struct DecodeStats {
    std::size_t gap_inspections = 0;
    std::size_t bits_emitted = 0;
};

/// Encodes x (|x| = s.k()) into a word of length 2^s.ell() and weight s.length().
/// Throws Error(length_mismatch) on a wrong message length and Error(weight_collision)
/// when s lets the position pointer wrap onto the anchor.
Codeword encode(const BitString& x, const CharSeq& s);

/// The gap vector of the maximal-gap message (all non-anchor blocks all-ones),
/// anchor first: (2^ell - 1 - sum_{i<L} 2^s(i), 2^s(L-1) - 1, ..., 2^s(1) - 1).
std::vector<Index> maximal_gap_vector(const CharSeq& s);

/// Shift n0 with cshift(g, n0) == target, if any.
std::optional<std::size_t> match_rotation(const std::vector<Index>& g, const std::vector<Index>& target,
                                          DecodeStats* stats = nullptr);

/// Anchor for anchor-decodable sequences: the maximal-gap rotation if g is one, else argmax.
AnchorResult find_anchor(const GapVector& g, const CharSeq& s, DecodeStats* stats = nullptr);

/// Inverse of encode for anchor-decodable s.
BitString decode(const Codeword& c, const CharSeq& s, DecodeMode mode = DecodeMode::strict,
                 DecodeStats* stats = nullptr);

/// Anchor for f_{ell,r}: the candidate gap (>= 2^(ell-r-1)) preceded cyclically by at
/// least 2r - 2 non-candidates. s must come from f_ell_r. Throws Error(not_a_codeword)
/// when no gap reaches the threshold.
AnchorResult find_anchor2(const GapVector& g, const CharSeq& s, DecodeStats* stats = nullptr);
AnchorResult find_anchor2(const GapVector& g, int ell, int r);

/// Inverse of encode for s = f_ell_r(ell, r).
BitString decode2(const Codeword& c, const CharSeq& s, DecodeMode mode = DecodeMode::strict,
                  DecodeStats* stats = nullptr);

} // namespace gapcode
