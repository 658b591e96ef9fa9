#pragma once

// Text formats for bit strings and codewords.
//
//   bits : n-character '0'/'1' string, index 0 leftmost
//   ones : "n=<n>:" followed by comma-separated ascending indices, e.g. "n=16:1,2,10,14"
//   hex  : message bits packed MSB-first into hex digits, zero-padded on the right

#include <cstddef>
#include <string>
#include <string_view>

#include "gapcode/bits.hpp"

namespace gapcode::io {

enum class CodewordFormat { bits, ones };

std::string render_bits(const Codeword& c);
std::string render_ones(const Codeword& c);
std::string render(const Codeword& c, CodewordFormat format);

Codeword parse_bits(std::string_view text);
Codeword parse_ones(std::string_view text);
/// Picks the ones format when the text starts with "n=", bits otherwise.
Codeword parse_codeword(std::string_view text);

std::string to_hex(const BitString& x);
/// Reads ceil(len/4) hex digits; the padding bits past len must be zero.
BitString from_hex(std::string_view text, std::size_t len);

} // namespace gapcode::io
