#pragma once

// Code families built on the gap encoder, and a single dispatcher over all of them.
//
//   c    C[ell]     n = 2^ell,             k = k_ell,                  w = ell
//   chat Chat[ell]  n = 2^ell,             k = sum f_{ell,r},          w = ell   (r defaults to r_max)
//   ct   C_t[ell]   n = 2^ell,             k = sum f_ell^(t),          w = t
//   dt   D_t[ell]   n = 2^ell,             k = k_ell - sum_{i<=ell-t} f_ell(i), w = t
//   bt   B_t[ell]   n = 2^ell - 2^t + 1,   k = k_ell - 2t,             w = ell

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gapcode/bits.hpp"
#include "gapcode/codec.hpp"
#include "gapcode/sequences.hpp"

namespace gapcode {

enum class Construction { c, chat, ct, dt, bt };

std::string_view to_string(Construction c) noexcept;
/// Accepts "c", "chat", "ct", "dt", "bt". Throws Error(parse).
Construction parse_construction(std::string_view text);

struct CodeParams {
    Construction construction = Construction::c;
    int ell = 0;
    std::optional<std::uint64_t> t;
    std::optional<int> r;
    Index n = 0;
    std::uint64_t k = 0;
    std::size_t w = 0;

    friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

/// Validates the combination and fills in (n, k, w). Throws Error(parameter).
CodeParams resolve_params(Construction construction, int ell, std::optional<std::uint64_t> t = std::nullopt,
                          std::optional<int> r = std::nullopt);

Codeword encode_ct(const BitString& x, int ell, std::uint64_t t);
BitString decode_ct(const Codeword& c, int ell, std::uint64_t t, DecodeMode mode = DecodeMode::strict);

/// The last t entries of f_ell: the blocks a D_t message still carries.
CharSeq dt_sequence(int ell, std::uint64_t t);
Codeword encode_dt(const BitString& x, int ell, std::uint64_t t);
BitString decode_dt(const Codeword& c, int ell, std::uint64_t t, DecodeMode mode = DecodeMode::strict);

/// Block widths of a B_t message in message order: ell - t, f(ell-1), ..., f(2), f(1) - t.
std::vector<int> bt_block_lengths(int ell, std::uint64_t t);
/// Gap vector of the maximal-gap B_t word, anchor gap first. The anchor gap accounts
/// for the 2^t - 1 zeros removed after the last written one.
std::vector<Index> bt_maximal_gap_vector(int ell, std::uint64_t t);
Codeword encode_bt(const BitString& x, int ell, std::uint64_t t);
/// In strict mode the result is re-encoded and compared, so any accepted word lies in the code.
BitString decode_bt(const Codeword& c, int ell, std::uint64_t t, DecodeMode mode = DecodeMode::strict,
                    DecodeStats* stats = nullptr);

/// A resolved construction with its sequences precomputed.
class Code {
public:
    explicit Code(CodeParams params);
    static Code make(Construction construction, int ell, std::optional<std::uint64_t> t = std::nullopt,
                     std::optional<int> r = std::nullopt);

    const CodeParams& params() const noexcept { return params_; }
    /// Characteristic sequence the encoder runs on (f_ell for bt).
    const CharSeq& sequence() const noexcept { return seq_; }
    /// Message block widths in message order; they sum to k.
    const std::vector<int>& block_lengths() const noexcept { return widths_; }

    Codeword encode(const BitString& x) const;
    BitString decode(const Codeword& c, DecodeMode mode = DecodeMode::strict, DecodeStats* stats = nullptr) const;

private:
    CodeParams params_;
    CharSeq seq_;
    std::vector<int> widths_;
};

} // namespace gapcode
