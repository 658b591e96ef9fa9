#include "gapcode/bits.hpp"

#include <bit>
#include <string>

#include "gapcode/error.hpp"

namespace gapcode {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::parameter: return "parameter";
    case ErrorKind::overflow: return "overflow";
    case ErrorKind::domain: return "domain";
    case ErrorKind::length_mismatch: return "length-mismatch";
    case ErrorKind::weight_collision: return "weight-collision";
    case ErrorKind::malformed_codeword: return "malformed-codeword";
    case ErrorKind::not_a_codeword: return "not-a-codeword";
    case ErrorKind::budget_exceeded: return "budget-exceeded";
    case ErrorKind::parse: return "parse";
    }
    return "unknown";
}

BitString::BitString(std::initializer_list<int> bits)
{
    bits_.reserve(bits.size());
    for (int b : bits) {
        if (b != 0 && b != 1) throw Error(ErrorKind::domain, "bit value must be 0 or 1");
        bits_.push_back(static_cast<std::uint8_t>(b));
    }
}

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits))
{
    for (auto b : bits_) {
        if (b > 1) throw Error(ErrorKind::domain, "bit value must be 0 or 1");
    }
}

BitString BitString::parse(std::string_view text)
{
    BitString out;
    out.bits_.reserve(text.size());
    for (char ch : text) {
        if (ch != '0' && ch != '1') {
            throw Error(ErrorKind::parse, "bit string may only contain '0' and '1'");
        }
        out.bits_.push_back(ch == '1' ? 1 : 0);
    }
    return out;
}

void BitString::append(const BitString& other)
{
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

BitString BitString::slice(std::size_t offset, std::size_t len) const
{
    if (offset > bits_.size() || len > bits_.size() - offset) {
        throw Error(ErrorKind::domain, "slice out of range");
    }
    BitString out;
    out.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(offset),
                     bits_.begin() + static_cast<std::ptrdiff_t>(offset + len));
    return out;
}

std::string BitString::to_string() const
{
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) s[i] = '1';
    }
    return s;
}

std::uint64_t dec(std::span<const std::uint8_t> bits)
{
    std::size_t lead = 0;
    while (lead < bits.size() && bits[lead] == 0) ++lead;
    if (bits.size() - lead > 64) throw Error(ErrorKind::overflow, "value exceeds 64 bits");
    std::uint64_t v = 0;
    for (std::size_t i = lead; i < bits.size(); ++i) {
        v = (v << 1) | bits[i];
    }
    return v;
}

std::uint64_t dec(const BitString& x)
{
    return dec(x.bits());
}

void append_dec(BitString& out, std::uint64_t v, std::size_t len)
{
    if (len < 64 && (v >> len) != 0) {
        throw Error(ErrorKind::overflow,
                    "value " + std::to_string(v) + " does not fit in " + std::to_string(len) + " bits");
    }
    for (std::size_t i = len; i-- > 0;) {
        out.push_back(i < 64 && ((v >> i) & 1U));
    }
}

BitString from_dec(std::uint64_t v, std::size_t len)
{
    BitString out;
    append_dec(out, v, len);
    return out;
}

Index gap(Index a, Index b, Index n)
{
    if (n == 0 || a >= n || b >= n) throw Error(ErrorKind::domain, "gap endpoints must lie in [0, n)");
    // (b - a - 1) mod n without signed arithmetic
    return (b + n - a - 1) % n;
}

Codeword::Codeword(Index n, std::vector<Index> ones) : n_(n), ones_(std::move(ones))
{
    for (std::size_t i = 0; i < ones_.size(); ++i) {
        if (ones_[i] >= n_) throw Error(ErrorKind::domain, "one-position outside [0, n)");
        if (i > 0 && ones_[i] <= ones_[i - 1]) {
            throw Error(ErrorKind::domain, "one-positions must be strictly increasing");
        }
    }
}

Codeword Codeword::rotated(Index shift) const
{
    std::vector<Index> out;
    out.reserve(ones_.size());
    shift %= n_;
    // positions that wrap past n come out first
    for (Index p : ones_) {
        if (p + shift >= n_) out.push_back(p + shift - n_);
    }
    for (Index p : ones_) {
        if (p + shift < n_) out.push_back(p + shift);
    }
    return Codeword(n_, std::move(out));
}

GapVector extract_gaps(const Codeword& c)
{
    const auto& ones = c.ones();
    if (ones.empty()) throw Error(ErrorKind::domain, "a zero-weight word has no gaps");
    GapVector out;
    out.n = c.n();
    out.g.resize(ones.size());
    const std::size_t w = ones.size();
    for (std::size_t m = 0; m < w; ++m) {
        out.g[m] = gap(ones[(m + w - 1) % w], ones[m], c.n());
    }
    return out;
}

int floor_log2(std::uint64_t v) noexcept
{
    return static_cast<int>(std::bit_width(v)) - 1;
}

int ceil_log2(std::uint64_t v) noexcept
{
    return v <= 1 ? 0 : static_cast<int>(std::bit_width(v - 1));
}

} // namespace gapcode
