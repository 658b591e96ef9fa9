#include "gapcode/codec.hpp"

#include <string>

#include "detail.hpp"
#include "gapcode/error.hpp"

namespace gapcode {

namespace detail {

std::vector<std::uint64_t> block_values(const BitString& x, std::span<const int> widths)
{
    std::vector<std::uint64_t> values;
    values.reserve(widths.size());
    const auto bits = x.bits();
    std::size_t offset = 0;
    for (int w : widths) {
        const auto width = static_cast<std::size_t>(w);
        values.push_back(dec(bits.subspan(offset, width)));
        offset += width;
    }
    return values;
}

std::vector<Index> place_ones(Index start, std::span<const std::uint64_t> steps, Index n)
{
    std::vector<Index> unwrapped{start};
    std::vector<Index> wrapped;
    Index advance = 0;
    for (auto step : steps) {
        advance += 1 + step;
        if (advance >= n) {
            throw Error(ErrorKind::weight_collision,
                        "position pointer wrapped past the anchor; sequence is not admissible");
        }
        const Index pos = start + advance;
        if (pos < n) {
            unwrapped.push_back(pos);
        } else {
            wrapped.push_back(pos - n);
        }
    }
    wrapped.insert(wrapped.end(), unwrapped.begin(), unwrapped.end());
    return wrapped;
}

BitString reconstruct(std::uint64_t anchor_value, int anchor_width, const GapVector& g,
                      std::size_t anchor_index, std::span<const int> tail_widths, DecodeMode mode,
                      DecodeStats* stats)
{
    BitString x;
    append_dec(x, anchor_value, static_cast<std::size_t>(anchor_width));
    const std::size_t len = g.size();
    for (std::size_t i = 1; i < len; ++i) {
        Index value = g[(anchor_index + i) % len];
        const int width = tail_widths[i - 1];
        const Index limit = Index{1} << width;
        if (value >= limit) {
            if (mode == DecodeMode::strict) {
                throw Error(ErrorKind::not_a_codeword,
                            "gap " + std::to_string(value) + " exceeds block width " + std::to_string(width));
            }
            value &= limit - 1;
        }
        append_dec(x, value, static_cast<std::size_t>(width));
        if (stats) {
            ++stats->gap_inspections;
            stats->bits_emitted += static_cast<std::size_t>(width);
        }
    }
    if (stats) stats->bits_emitted += static_cast<std::size_t>(anchor_width);
    return x;
}

AnchorResult argmax_anchor(const GapVector& g, DecodeStats* stats)
{
    AnchorResult out;
    for (std::size_t m = 1; m < g.size(); ++m) {
        if (g[m] > g[out.anchor_index]) {
            out.anchor_index = m;
            out.ambiguous = false;
        } else if (g[m] == g[out.anchor_index]) {
            out.ambiguous = true;
        }
    }
    if (stats) stats->gap_inspections += g.size();
    return out;
}

void require_weight(const Codeword& c, std::size_t weight, Index n)
{
    if (c.n() != n) {
        throw Error(ErrorKind::malformed_codeword,
                    "blocklength " + std::to_string(c.n()) + " differs from " + std::to_string(n));
    }
    if (c.weight() != weight) {
        throw Error(ErrorKind::malformed_codeword,
                    "weight " + std::to_string(c.weight()) + " differs from " + std::to_string(weight));
    }
}

} // namespace detail

namespace {

void require_codec_sequence(const CharSeq& s)
{
    if (s.ell() > kMaxEll) {
        throw Error(ErrorKind::parameter, "ell above the supported maximum " + std::to_string(kMaxEll));
    }
    if (s.entries().back() != s.ell()) {
        throw Error(ErrorKind::parameter, "the last sequence entry must equal ell");
    }
}

std::vector<int> tail_widths(const CharSeq& s)
{
    auto widths = s.block_lengths();
    widths.erase(widths.begin());
    return widths;
}

} // namespace

Codeword encode(const BitString& x, const CharSeq& s)
{
    require_codec_sequence(s);
    if (x.size() != s.k()) {
        throw Error(ErrorKind::length_mismatch,
                    "message has " + std::to_string(x.size()) + " bits, expected " + std::to_string(s.k()));
    }
    const auto widths = s.block_lengths();
    const auto values = detail::block_values(x, widths);
    const Index n = s.blocklength();
    return Codeword(n, detail::place_ones(values[0], std::span(values).subspan(1), n));
}

std::vector<Index> maximal_gap_vector(const CharSeq& s)
{
    const auto& e = s.entries();
    const Index n = s.blocklength();
    Index sum = 0;
    for (std::size_t i = 0; i + 1 < e.size(); ++i) sum += Index{1} << e[i];
    std::vector<Index> out;
    out.reserve(e.size());
    // wraps modulo 2^64 for sequences that fail condition 1; such vectors never match
    out.push_back(n - 1 - sum);
    for (std::size_t i = e.size() - 1; i-- > 0;) out.push_back((Index{1} << e[i]) - 1);
    return out;
}

std::optional<std::size_t> match_rotation(const std::vector<Index>& g, const std::vector<Index>& target,
                                          DecodeStats* stats)
{
    const std::size_t len = g.size();
    if (target.size() != len) return std::nullopt;
    for (std::size_t n0 = 0; n0 < len; ++n0) {
        if (stats) ++stats->gap_inspections;
        if (g[n0] != target[0]) continue;
        std::size_t i = 1;
        while (i < len && g[(n0 + i) % len] == target[i]) ++i;
        if (stats) stats->gap_inspections += i - 1;
        if (i == len) return n0;
    }
    return std::nullopt;
}

AnchorResult find_anchor(const GapVector& g, const CharSeq& s, DecodeStats* stats)
{
    if (auto n0 = match_rotation(g.g, maximal_gap_vector(s), stats)) {
        return AnchorResult{*n0, true, false};
    }
    return detail::argmax_anchor(g, stats);
}

BitString decode(const Codeword& c, const CharSeq& s, DecodeMode mode, DecodeStats* stats)
{
    require_codec_sequence(s);
    detail::require_weight(c, s.length(), s.blocklength());
    const auto g = extract_gaps(c);
    const auto anchor = find_anchor(g, s, stats);
    const auto widths = tail_widths(s);
    return detail::reconstruct(c.ones()[anchor.anchor_index], s.ell(), g, anchor.anchor_index, widths,
                               mode, stats);
}

AnchorResult find_anchor2(const GapVector& g, const CharSeq& s, DecodeStats* stats)
{
    if (s.family() != SeqFamily::f_ell_r || !s.r()) {
        throw Error(ErrorKind::parameter, "find_anchor2 needs a sequence built by f_ell_r");
    }
    const int ell = s.ell();
    const int r = *s.r();
    const std::size_t len = g.size();
    if (len != s.length()) throw Error(ErrorKind::malformed_codeword, "gap vector length differs from ell");

    if (delta(ell, r) == 1) {
        if (auto n0 = match_rotation(g.g, maximal_gap_vector(s), stats)) {
            return AnchorResult{*n0, true, false};
        }
    }

    const Index threshold = Index{1} << (ell - r - 1);
    std::size_t m0 = len;
    for (std::size_t m = 0; m < len; ++m) {
        if (stats) ++stats->gap_inspections;
        if (g[m] >= threshold) {
            m0 = m;
            break;
        }
    }
    if (m0 == len) throw Error(ErrorKind::not_a_codeword, "no gap reaches the candidate threshold");

    const auto needed = static_cast<std::size_t>(2 * r - 2);
    std::size_t non_candidates = 0;
    for (std::size_t i = 1; i <= len; ++i) {
        const std::size_t m = (m0 + i) % len;
        if (stats) ++stats->gap_inspections;
        if (g[m] < threshold) {
            ++non_candidates;
        } else {
            if (non_candidates >= needed) return AnchorResult{m, false, false};
            non_candidates = 0;
        }
    }
    return AnchorResult{m0, false, true};
}

AnchorResult find_anchor2(const GapVector& g, int ell, int r)
{
    return find_anchor2(g, f_ell_r(ell, r));
}

BitString decode2(const Codeword& c, const CharSeq& s, DecodeMode mode, DecodeStats* stats)
{
    require_codec_sequence(s);
    detail::require_weight(c, s.length(), s.blocklength());
    const auto g = extract_gaps(c);
    AnchorResult anchor;
    try {
        anchor = find_anchor2(g, s, stats);
    } catch (const Error& e) {
        if (mode == DecodeMode::strict || e.kind() != ErrorKind::not_a_codeword) throw;
        anchor = detail::argmax_anchor(g, stats);
    }
    const auto widths = tail_widths(s);
    return detail::reconstruct(c.ones()[anchor.anchor_index], s.ell(), g, anchor.anchor_index, widths,
                               mode, stats);
}

} // namespace gapcode
