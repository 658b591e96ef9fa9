#include "gapcode/sequences.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>

#include "gapcode/error.hpp"

namespace gapcode {

namespace {

void require_ell(int ell)
{
    if (ell < 3 || ell > kMaxSequenceEll) {
        throw Error(ErrorKind::parameter,
                    "ell must lie in [3, " + std::to_string(kMaxSequenceEll) + "], got " +
                        std::to_string(ell));
    }
}

// Smallest p such that v is invariant under a cyclic shift by p (p == |v| when none).
std::size_t cyclic_period(const std::vector<Index>& v)
{
    const std::size_t len = v.size();
    if (len == 0) return 0;
    std::vector<std::size_t> pi(len, 0);
    for (std::size_t i = 1; i < len; ++i) {
        std::size_t j = pi[i - 1];
        while (j > 0 && v[i] != v[j]) j = pi[j - 1];
        if (v[i] == v[j]) ++j;
        pi[i] = j;
    }
    const std::size_t p = len - pi[len - 1];
    return len % p == 0 ? p : len;
}

} // namespace

CharSeq::CharSeq(int ell, std::vector<int> entries, SeqFamily family, std::optional<int> r)
    : ell_(ell), entries_(std::move(entries)), family_(family), r_(r)
{
    if (ell_ < 1 || ell_ > kMaxSequenceEll) {
        throw Error(ErrorKind::parameter, "blocklength exponent out of range");
    }
    if (entries_.empty()) throw Error(ErrorKind::parameter, "sequence must be non-empty");
    for (int e : entries_) {
        if (e < 1 || e > kMaxSequenceEll) {
            throw Error(ErrorKind::parameter, "sequence entries must be positive block lengths");
        }
        k_ += static_cast<std::uint64_t>(e);
    }
}

std::vector<int> CharSeq::block_lengths() const
{
    return {entries_.rbegin(), entries_.rend()};
}

std::string CharSeq::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(entries_[i]);
    }
    return s;
}

CharSeq parse_sequence(std::string_view text, std::optional<int> ell)
{
    std::vector<int> entries;
    while (true) {
        const auto comma = text.find(',');
        const auto field = text.substr(0, comma);
        int v = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() || v < 1) {
            throw Error(ErrorKind::parse, "sequence entries must be positive integers");
        }
        entries.push_back(v);
        if (comma == std::string_view::npos) break;
        text = text.substr(comma + 1);
    }
    const int exponent = ell.value_or(static_cast<int>(entries.size()));
    try {
        return CharSeq(exponent, std::move(entries));
    } catch (const Error& e) {
        throw Error(ErrorKind::parse, e.what());
    }
}

std::uint64_t mu(std::uint64_t v)
{
    return (std::uint64_t{1} << ceil_log2(v)) - v;
}

int r_max(int ell)
{
    return (ell + 3) / 4;
}

int delta(int ell, int r)
{
    return ell > 2 * r + 2 ? 1 : 0;
}

FamilyParams family_params(int ell, std::optional<int> r, std::optional<std::uint64_t> t)
{
    require_ell(ell);
    FamilyParams p;
    p.ell = ell;
    p.mu = is_power_of_two(static_cast<std::uint64_t>(ell)) ? 0 : mu(static_cast<std::uint64_t>(ell));
    if (r) {
        if (*r < 1 || *r > r_max(ell)) {
            throw Error(ErrorKind::parameter, "r must lie in [1, floor((ell+3)/4)] = [1, " +
                                                  std::to_string(r_max(ell)) + "]");
        }
        p.r = r;
        p.delta = delta(ell, *r);
    }
    if (t) {
        if (*t < 1 || *t >= (std::uint64_t{1} << (ell - 1))) {
            throw Error(ErrorKind::parameter, "t must satisfy 1 <= t and log2 t < ell - 1");
        }
        p.t = t;
        p.mu_t = is_power_of_two(*t) ? 0 : mu(*t);
    }
    return p;
}

CharSeq f_ell(int ell)
{
    require_ell(ell);
    const auto l = static_cast<std::uint64_t>(ell);
    std::vector<int> s(l);
    if (is_power_of_two(l)) {
        const int lg = floor_log2(l);
        s[0] = ell - lg - 1;
        for (std::size_t i = 1; i + 1 < l; ++i) s[i] = ell - lg;
    } else {
        const auto m = mu(l);
        const int lo = ell - ceil_log2(l);
        const int hi = ell - floor_log2(l);
        // i = 1..ell-mu take ell - ceil(log2 ell), the rest up to ell-1 take ell - floor(log2 ell)
        for (std::uint64_t i = 1; i < l; ++i) s[i - 1] = i <= l - m ? lo : hi;
    }
    s[l - 1] = ell;
    return CharSeq(ell, std::move(s), SeqFamily::f_ell);
}

CharSeq f_ell_r(int ell, int r)
{
    family_params(ell, r);
    const int d = delta(ell, r);
    std::vector<int> s(static_cast<std::size_t>(ell));
    for (int i = 1; i <= ell; ++i) {
        int v = 0;
        if (i == ell) {
            v = ell;
        } else if (i == 1) {
            v = r + d;
        } else if (i <= ell - 2 * r - 1) {
            v = r + i - 1;
        } else {
            v = ell - 1 - (ell - i + 1) / 2;  // ell - 1 - ceil((ell - i) / 2)
        }
        s[static_cast<std::size_t>(i - 1)] = v;
    }
    return CharSeq(ell, std::move(s), SeqFamily::f_ell_r, r);
}

CharSeq f_hat(int ell)
{
    require_ell(ell);
    return f_ell_r(ell, r_max(ell));
}

CharSeq f_ell_t(int ell, std::uint64_t t)
{
    family_params(ell, std::nullopt, t);
    std::vector<int> s(t);
    if (t > 1) {
        if (is_power_of_two(t)) {
            const int lg = floor_log2(t);
            s[0] = ell - lg - 1;
            for (std::uint64_t i = 1; i + 1 < t; ++i) s[i] = ell - lg;
        } else {
            const auto m = mu(t);
            const int lo = ell - ceil_log2(t);
            const int hi = ell - floor_log2(t);
            for (std::uint64_t i = 1; i < t; ++i) s[i - 1] = i <= t - m ? lo : hi;
        }
    }
    s[t - 1] = ell;
    return CharSeq(ell, std::move(s), SeqFamily::f_ell_t);
}

std::string AnchorCheck::describe() const
{
    switch (failure) {
    case AnchorFailure::none: return "anchor-decodable";
    case AnchorFailure::not_nondecreasing: return "sequence is not non-decreasing";
    case AnchorFailure::last_entry: return "last entry differs from ell";
    case AnchorFailure::capacity:
        return "condition 1 fails: 2^ell - sum_{i<L} 2^s(i) < 2^s(L-1)";
    case AnchorFailure::shift_invariant:
        return "condition 2 fails: gamma is invariant under cyclic shift by " +
               std::to_string(shift.value_or(0));
    }
    return "unknown";
}

AnchorCheck is_anchor_decodable(const CharSeq& s)
{
    AnchorCheck out;
    const auto& e = s.entries();
    const std::size_t len = e.size();
    for (std::size_t i = 1; i < len; ++i) {
        if (e[i] < e[i - 1]) {
            out.failure = AnchorFailure::not_nondecreasing;
            return out;
        }
    }
    if (e.back() != s.ell()) {
        out.failure = AnchorFailure::last_entry;
        return out;
    }

    const Index n = s.blocklength();
    // sum of 2^s(i), i < L; saturates once it reaches n
    Index sum = 0;
    for (std::size_t i = 0; i + 1 < len; ++i) {
        const Index term = Index{1} << e[i];
        if (term > n - sum) {
            out.failure = AnchorFailure::capacity;
            return out;
        }
        sum += term;
    }
    if (len >= 2 && n - sum < (Index{1} << e[len - 2])) {
        out.failure = AnchorFailure::capacity;
        return out;
    }

    out.gamma.reserve(len);
    out.gamma.push_back(n - 1 - sum);
    for (std::size_t i = len - 1; i-- > 0;) out.gamma.push_back((Index{1} << e[i]) - 1);

    const std::size_t p = cyclic_period(out.gamma);
    if (p < len) {
        out.failure = AnchorFailure::shift_invariant;
        out.shift = p;
        return out;
    }
    out.decodable = true;
    return out;
}

std::uint64_t k_ell_closed_form(int ell)
{
    require_ell(ell);
    const auto l = static_cast<std::uint64_t>(ell);
    const auto fl = static_cast<std::uint64_t>(floor_log2(l));
    if (is_power_of_two(l)) return l * l - l * fl + (fl - 1);
    const auto cl = static_cast<std::uint64_t>(ceil_log2(l));
    const auto m = mu(l);
    return l * l - (m * fl + (l - m) * cl) + fl;
}

std::uint64_t k_ell_r_closed_form(int ell, int r)
{
    family_params(ell, r);
    const auto l = static_cast<std::uint64_t>(ell);
    const auto rr = static_cast<std::uint64_t>(r);
    return l * (l - 1) / 2 + rr * (l - rr - 1) + 1 + static_cast<std::uint64_t>(delta(ell, r));
}

std::uint64_t k_hat_closed_form(int ell)
{
    require_ell(ell);
    const auto l = static_cast<std::uint64_t>(ell);
    const std::uint64_t ceil_term = (3 * (l - 1) + 3) / 4;
    const std::uint64_t d = ell > 6 ? 1 : 0;
    return l * (l - 1) / 2 + static_cast<std::uint64_t>(r_max(ell)) * (ceil_term - 1) + d;
}

double k_lower_bound(int ell)
{
    require_ell(ell);
    const double l = ell;
    const double lg = std::log2(l);
    const double b = static_cast<double>(static_cast<std::uint64_t>(ell) -
                                         (std::uint64_t{1} << floor_log2(static_cast<std::uint64_t>(ell))));
    const double base = l * l - l * lg + lg;
    if (b == 0.0) return base - 1.0;
    const double inv_ln2 = 1.0 / std::numbers::ln2;
    return base - b * (2.0 - inv_ln2) - (b / l) * inv_ln2;
}

double k_lower_bound_uniform(int ell)
{
    require_ell(ell);
    const double l = ell;
    const double lg = std::log2(l);
    const double c = 1.0 / (2.0 * std::numbers::ln2);
    return l * l - l * lg + lg - l * (1.0 - c) - c;
}

} // namespace gapcode
