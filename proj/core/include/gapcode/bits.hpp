#pragma once

// Bit-string and cyclic index primitives shared by every construction.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gapcode {

using Index = std::uint64_t;

/// Binary string, index 0 is the most significant bit.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::size_t len) : bits_(len, 0) {}
    BitString(std::initializer_list<int> bits);
    explicit BitString(std::vector<std::uint8_t> bits);

    /// Parses an ASCII '0'/'1' string. Throws Error(parse) on any other char.
    static BitString parse(std::string_view text);

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }

    bool operator[](std::size_t i) const noexcept { return bits_[i] != 0; }
    void set(std::size_t i, bool value) noexcept { bits_[i] = value ? 1 : 0; }

    void append(const BitString& other);
    void push_back(bool bit) { bits_.push_back(bit ? 1 : 0); }

    /// Copy of bits [offset, offset + len).
    BitString slice(std::size_t offset, std::size_t len) const;

    std::span<const std::uint8_t> bits() const noexcept { return bits_; }
    std::string to_string() const;

    friend bool operator==(const BitString&, const BitString&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Big-endian decimal value. Throws Error(overflow) when the value needs more than 64 bits.
std::uint64_t dec(const BitString& x);
std::uint64_t dec(std::span<const std::uint8_t> bits);

/// Inverse of dec for a fixed width. Throws Error(overflow) if v >= 2^len.
BitString from_dec(std::uint64_t v, std::size_t len);

/// Appends the len-bit big-endian representation of v to out.
void append_dec(BitString& out, std::uint64_t v, std::size_t len);

/// Number of zeros strictly between a and b walking forward on Z_n: (b - a - 1) mod n.
Index gap(Index a, Index b, Index n);

/// result[i] = g[(shift + i) mod |g|]; shift may be negative or exceed |g|.
template <typename T>
std::vector<T> cshift(std::span<const T> g, std::int64_t shift)
{
    std::vector<T> out;
    if (g.empty()) return out;
    const auto len = static_cast<std::int64_t>(g.size());
    std::int64_t start = shift % len;
    if (start < 0) start += len;
    out.reserve(g.size());
    for (std::int64_t i = 0; i < len; ++i) {
        out.push_back(g[static_cast<std::size_t>((start + i) % len)]);
    }
    return out;
}

template <typename T>
std::vector<T> cshift(const std::vector<T>& g, std::int64_t shift)
{
    return cshift(std::span<const T>(g), shift);
}

/// n-bit constant-weight word in canonical (n, sorted one-positions) form.
class Codeword {
public:
    Codeword() = default;
    /// Throws Error(domain) unless ones is strictly increasing and below n.
    Codeword(Index n, std::vector<Index> ones);

    Index n() const noexcept { return n_; }
    std::size_t weight() const noexcept { return ones_.size(); }
    const std::vector<Index>& ones() const noexcept { return ones_; }

    /// Rotates every one-position forward by shift (mod n).
    Codeword rotated(Index shift) const;

    friend bool operator==(const Codeword&, const Codeword&) = default;

private:
    Index n_ = 0;
    std::vector<Index> ones_;
};

/// Zeros between cyclically successive ones. Sum of gaps plus weight equals n.
struct GapVector {
    std::vector<Index> g;
    Index n = 0;

    std::size_t size() const noexcept { return g.size(); }
    Index operator[](std::size_t i) const noexcept { return g[i]; }
};

/// g[m] = gap(ones[m-1 mod w], ones[m]). Throws Error(domain) for weight 0.
GapVector extract_gaps(const Codeword& c);

constexpr bool is_power_of_two(std::uint64_t v) noexcept { return v != 0 && (v & (v - 1)) == 0; }

/// floor(log2 v) for v >= 1.
int floor_log2(std::uint64_t v) noexcept;
/// ceil(log2 v) for v >= 1.
int ceil_log2(std::uint64_t v) noexcept;

} // namespace gapcode
