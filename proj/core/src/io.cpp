#include "gapcode/io.hpp"

#include <charconv>
#include <string>
#include <vector>

#include "gapcode/error.hpp"

namespace gapcode::io {

namespace {

Index parse_index(std::string_view text)
{
    Index v = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (text.empty() || ec != std::errc{} || ptr != last) {
        throw Error(ErrorKind::parse, "expected a decimal index, got '" + std::string(text) + "'");
    }
    return v;
}

int hex_digit(char ch)
{
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
    return -1;
}

} // namespace

std::string render_bits(const Codeword& c)
{
    std::string s(c.n(), '0');
    for (Index p : c.ones()) s[p] = '1';
    return s;
}

std::string render_ones(const Codeword& c)
{
    std::string s = "n=" + std::to_string(c.n()) + ":";
    bool first = true;
    for (Index p : c.ones()) {
        if (!first) s += ',';
        s += std::to_string(p);
        first = false;
    }
    return s;
}

std::string render(const Codeword& c, CodewordFormat format)
{
    return format == CodewordFormat::bits ? render_bits(c) : render_ones(c);
}

Codeword parse_bits(std::string_view text)
{
    if (text.empty()) throw Error(ErrorKind::parse, "empty codeword");
    std::vector<Index> ones;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
            ones.push_back(i);
        } else if (text[i] != '0') {
            throw Error(ErrorKind::parse, "codeword bits may only contain '0' and '1'");
        }
    }
    return Codeword(text.size(), std::move(ones));
}

Codeword parse_ones(std::string_view text)
{
    if (!text.starts_with("n=")) throw Error(ErrorKind::parse, "ones format must start with 'n='");
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw Error(ErrorKind::parse, "ones format needs ':' after n");
    const Index n = parse_index(text.substr(2, colon - 2));
    if (n == 0) throw Error(ErrorKind::parse, "blocklength must be positive");

    std::vector<Index> ones;
    auto rest = text.substr(colon + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        ones.push_back(parse_index(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
        if (rest.empty()) throw Error(ErrorKind::parse, "trailing comma in ones list");
    }
    try {
        return Codeword(n, std::move(ones));
    } catch (const Error& e) {
        throw Error(ErrorKind::parse, e.what());
    }
}

Codeword parse_codeword(std::string_view text)
{
    return text.starts_with("n=") ? parse_ones(text) : parse_bits(text);
}

std::string to_hex(const BitString& x)
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string s;
    s.reserve((x.size() + 3) / 4);
    for (std::size_t i = 0; i < x.size(); i += 4) {
        int nibble = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            nibble <<= 1;
            if (i + j < x.size() && x[i + j]) nibble |= 1;
        }
        s.push_back(digits[nibble]);
    }
    return s;
}

BitString from_hex(std::string_view text, std::size_t len)
{
    if (text.size() != (len + 3) / 4) {
        throw Error(ErrorKind::parse, "expected " + std::to_string((len + 3) / 4) + " hex digits");
    }
    BitString out(len);
    for (std::size_t i = 0; i < text.size(); ++i) {
        const int nibble = hex_digit(text[i]);
        if (nibble < 0) throw Error(ErrorKind::parse, "invalid hex digit");
        for (std::size_t j = 0; j < 4; ++j) {
            const bool bit = (nibble >> (3 - j)) & 1;
            const std::size_t pos = 4 * i + j;
            if (pos < len) {
                out.set(pos, bit);
            } else if (bit) {
                throw Error(ErrorKind::parse, "nonzero padding bits in hex message");
            }
        }
    }
    return out;
}

} // namespace gapcode::io
