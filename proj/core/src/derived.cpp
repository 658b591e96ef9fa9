#include "gapcode/derived.hpp"

#include <algorithm>
#include <string>

#include "detail.hpp"
#include "gapcode/error.hpp"

namespace gapcode {

std::string_view to_string(Construction c) noexcept
{
    switch (c) {
    case Construction::c: return "c";
    case Construction::chat: return "chat";
    case Construction::ct: return "ct";
    case Construction::dt: return "dt";
    case Construction::bt: return "bt";
    }
    return "?";
}

Construction parse_construction(std::string_view text)
{
    for (auto c : {Construction::c, Construction::chat, Construction::ct, Construction::dt, Construction::bt}) {
        if (text == to_string(c)) return c;
    }
    throw Error(ErrorKind::parse, "unknown construction '" + std::string(text) + "'");
}

namespace {

void require_codec_ell(int ell)
{
    if (ell < 3 || ell > kMaxEll) {
        throw Error(ErrorKind::parameter,
                    "ell must lie in [3, " + std::to_string(kMaxEll) + "], got " + std::to_string(ell));
    }
}

std::uint64_t require_t(std::optional<std::uint64_t> t, std::string_view construction)
{
    if (!t) throw Error(ErrorKind::parameter, "construction " + std::string(construction) + " needs t");
    return *t;
}

void require_dt(int ell, std::uint64_t t)
{
    require_codec_ell(ell);
    if (t < 1 || t >= static_cast<std::uint64_t>(ell)) {
        throw Error(ErrorKind::parameter, "D_t needs 1 <= t < ell");
    }
}

void require_bt(int ell, std::uint64_t t, const CharSeq& f)
{
    if (t < 1 || t >= static_cast<std::uint64_t>(f(1))) {
        throw Error(ErrorKind::parameter,
                    "B_t needs 1 <= t < f_ell(1) = " + std::to_string(f(1)) + " for ell = " + std::to_string(ell));
    }
}

Index bt_length(int ell, std::uint64_t t)
{
    return (Index{1} << ell) - (Index{1} << t) + 1;
}

} // namespace

CodeParams resolve_params(Construction construction, int ell, std::optional<std::uint64_t> t, std::optional<int> r)
{
    require_codec_ell(ell);
    CodeParams p;
    p.construction = construction;
    p.ell = ell;
    p.n = Index{1} << ell;
    switch (construction) {
    case Construction::c:
        p.k = f_ell(ell).k();
        p.w = static_cast<std::size_t>(ell);
        break;
    case Construction::chat: {
        const int rr = r.value_or(r_max(ell));
        p.r = rr;
        p.k = f_ell_r(ell, rr).k();
        p.w = static_cast<std::size_t>(ell);
        break;
    }
    case Construction::ct: {
        const auto tt = require_t(t, "ct");
        p.t = tt;
        p.k = f_ell_t(ell, tt).k();
        p.w = tt;
        break;
    }
    case Construction::dt: {
        const auto tt = require_t(t, "dt");
        require_dt(ell, tt);
        p.t = tt;
        p.k = dt_sequence(ell, tt).k();
        p.w = tt;
        break;
    }
    case Construction::bt: {
        const auto tt = require_t(t, "bt");
        const auto f = f_ell(ell);
        require_bt(ell, tt, f);
        p.t = tt;
        p.n = bt_length(ell, tt);
        p.k = f.k() - 2 * tt;
        p.w = static_cast<std::size_t>(ell);
        break;
    }
    }
    if (r && construction != Construction::chat) {
        throw Error(ErrorKind::parameter, "r only applies to the chat construction");
    }
    if (t && (construction == Construction::c || construction == Construction::chat)) {
        throw Error(ErrorKind::parameter, "t does not apply to construction " + std::string(to_string(construction)));
    }
    return p;
}

Codeword encode_ct(const BitString& x, int ell, std::uint64_t t)
{
    require_codec_ell(ell);
    return encode(x, f_ell_t(ell, t));
}

BitString decode_ct(const Codeword& c, int ell, std::uint64_t t, DecodeMode mode)
{
    require_codec_ell(ell);
    return decode(c, f_ell_t(ell, t), mode);
}

CharSeq dt_sequence(int ell, std::uint64_t t)
{
    require_dt(ell, t);
    const auto f = f_ell(ell);
    std::vector<int> tail(f.entries().end() - static_cast<std::ptrdiff_t>(t), f.entries().end());
    return CharSeq(ell, std::move(tail));
}

Codeword encode_dt(const BitString& x, int ell, std::uint64_t t)
{
    // Running the encoder on the kept blocks only is the same as encoding with the
    // dropped blocks zeroed and then erasing the ones they wrote.
    return encode(x, dt_sequence(ell, t));
}

BitString decode_dt(const Codeword& c, int ell, std::uint64_t t, DecodeMode mode)
{
    return decode(c, dt_sequence(ell, t), mode);
}

std::vector<int> bt_block_lengths(int ell, std::uint64_t t)
{
    require_codec_ell(ell);
    const auto f = f_ell(ell);
    require_bt(ell, t, f);
    const int tt = static_cast<int>(t);
    std::vector<int> widths;
    widths.reserve(static_cast<std::size_t>(ell));
    widths.push_back(ell - tt);
    for (int i = ell - 1; i >= 2; --i) widths.push_back(f(static_cast<std::size_t>(i)));
    widths.push_back(f(1) - tt);
    return widths;
}

std::vector<Index> bt_maximal_gap_vector(int ell, std::uint64_t t)
{
    const auto widths = bt_block_lengths(ell, t);
    std::vector<Index> out{0};
    Index tail_sum = 0;
    for (std::size_t i = 1; i < widths.size(); ++i) {
        out.push_back((Index{1} << widths[i]) - 1);
        tail_sum += Index{1} << widths[i];
    }
    out[0] = (Index{1} << ell) - (Index{1} << t) - tail_sum;
    return out;
}

Codeword encode_bt(const BitString& x, int ell, std::uint64_t t)
{
    const auto widths = bt_block_lengths(ell, t);
    std::uint64_t k = 0;
    for (int w : widths) k += static_cast<std::uint64_t>(w);
    if (x.size() != k) {
        throw Error(ErrorKind::length_mismatch,
                    "message has " + std::to_string(x.size()) + " bits, expected " + std::to_string(k));
    }
    const auto values = detail::block_values(x, widths);
    const Index full = Index{1} << ell;
    const Index start = values[0] << t;

    // cumulative advance after the anchor stays within 2^ell - 2^f(ell-1) - 2^t, so the
    // 2^t - 1 positions removed below are all zeros
    const auto f = f_ell(ell);
    const Index bound = full - (Index{1} << f(static_cast<std::size_t>(ell - 1))) - (Index{1} << t);
    Index advance = 0;
    for (std::size_t i = 1; i < values.size(); ++i) advance += 1 + values[i];
    if (advance > bound) {
        throw Error(ErrorKind::weight_collision, "cumulative advance exceeds the B_t bound");
    }

    auto ones = detail::place_ones(start, std::span(values).subspan(1), full);
    const Index last = (start + advance) % full;
    const Index removed = (Index{1} << t) - 1;
    const Index first_removed = (last + 1) % full;
    for (auto& p : ones) {
        // number of removed positions below p; the removed window never contains a one
        Index below = 0;
        if (first_removed + removed <= full) {
            if (p > first_removed) below = std::min(p - first_removed, removed);
        } else {
            below = first_removed + removed - full;
        }
        p -= below;
    }
    return Codeword(bt_length(ell, t), std::move(ones));
}

BitString decode_bt(const Codeword& c, int ell, std::uint64_t t, DecodeMode mode, DecodeStats* stats)
{
    const auto widths = bt_block_lengths(ell, t);
    detail::require_weight(c, static_cast<std::size_t>(ell), bt_length(ell, t));
    const auto g = extract_gaps(c);

    AnchorResult anchor;
    if (auto n0 = match_rotation(g.g, bt_maximal_gap_vector(ell, t), stats)) {
        anchor = AnchorResult{*n0, true, false};
    } else {
        anchor = detail::argmax_anchor(g, stats);
    }
    const Index j = c.ones()[anchor.anchor_index];
    const Index step = Index{1} << t;
    std::uint64_t anchor_value = (j + step - 1) >> t;  // ceil(j / 2^t)
    const std::uint64_t anchor_limit = std::uint64_t{1} << widths[0];
    if (anchor_value >= anchor_limit) {
        if (mode == DecodeMode::strict) {
            throw Error(ErrorKind::not_a_codeword, "anchor position beyond the B_t anchor range");
        }
        anchor_value &= anchor_limit - 1;
    }

    auto x = detail::reconstruct(anchor_value, widths[0], g, anchor.anchor_index,
                                 std::span(widths).subspan(1), mode, stats);
    if (mode == DecodeMode::strict) {
        bool same = false;
        try {
            same = encode_bt(x, ell, t) == c;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::weight_collision) throw;
        }
        if (!same) throw Error(ErrorKind::not_a_codeword, "word does not re-encode to itself under B_t");
    }
    return x;
}

namespace {

CharSeq sequence_for(const CodeParams& p)
{
    switch (p.construction) {
    case Construction::c: return f_ell(p.ell);
    case Construction::chat: return f_ell_r(p.ell, p.r.value_or(r_max(p.ell)));
    case Construction::ct: return f_ell_t(p.ell, p.t.value());
    case Construction::dt: return dt_sequence(p.ell, p.t.value());
    case Construction::bt: return f_ell(p.ell);
    }
    throw Error(ErrorKind::parameter, "unknown construction");
}

} // namespace

Code::Code(CodeParams params)
    : params_(resolve_params(params.construction, params.ell, params.t, params.r)),
      seq_(sequence_for(params_))
{
    widths_ = params_.construction == Construction::bt ? bt_block_lengths(params_.ell, *params_.t)
                                                       : seq_.block_lengths();
}

Code Code::make(Construction construction, int ell, std::optional<std::uint64_t> t, std::optional<int> r)
{
    CodeParams p;
    p.construction = construction;
    p.ell = ell;
    p.t = t;
    p.r = r;
    return Code(p);
}

Codeword Code::encode(const BitString& x) const
{
    if (params_.construction == Construction::bt) return encode_bt(x, params_.ell, *params_.t);
    return gapcode::encode(x, seq_);
}

BitString Code::decode(const Codeword& c, DecodeMode mode, DecodeStats* stats) const
{
    switch (params_.construction) {
    case Construction::chat: return decode2(c, seq_, mode, stats);
    case Construction::bt: return decode_bt(c, params_.ell, *params_.t, mode, stats);
    default: return gapcode::decode(c, seq_, mode, stats);
    }
}

} // namespace gapcode
