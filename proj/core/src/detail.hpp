#pragma once

// Shared encode/decode machinery; not installed.

#include <span>
#include <vector>

#include "gapcode/bits.hpp"
#include "gapcode/codec.hpp"

namespace gapcode::detail {

/// Splits x into the values of consecutive blocks of the given widths.
std::vector<std::uint64_t> block_values(const BitString& x, std::span<const int> widths);

/// Positions start, start + 1 + steps[0], ... on Z_n, returned sorted. Throws
/// Error(weight_collision) if the cumulative advance reaches n.
std::vector<Index> place_ones(Index start, std::span<const std::uint64_t> steps, Index n);

/// Writes x_L = anchor_value (anchor_width bits) followed by the gaps after the anchor,
/// each expanded to the matching width in tail_widths.
BitString reconstruct(std::uint64_t anchor_value, int anchor_width, const GapVector& g,
                      std::size_t anchor_index, std::span<const int> tail_widths, DecodeMode mode,
                      DecodeStats* stats);

/// argmax with lowest-index tie breaking.
AnchorResult argmax_anchor(const GapVector& g, DecodeStats* stats);

void require_weight(const Codeword& c, std::size_t weight, Index n);

} // namespace gapcode::detail
