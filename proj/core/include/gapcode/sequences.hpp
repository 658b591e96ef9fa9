#pragma once

// Characteristic sequences: the block lengths that drive gap encoding.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gapcode/bits.hpp"

namespace gapcode {

/// Largest ell accepted by the encoders and decoders (n = 2^ell).
inline constexpr int kMaxEll = 24;
/// Largest ell for which sequences can be built; 2^ell must fit in 64 bits.
inline constexpr int kMaxSequenceEll = 62;

enum class SeqFamily { custom, f_ell, f_ell_r, f_ell_t };

/// Block lengths s(1..L) for codes of blocklength n = 2^ell.
///
/// The message is read as x_L || x_{L-1} || ... || x_1 with |x_i| = s(i). For the main
/// constructions L = ell; the weight-modified family has L = t. Entries must be positive.
class CharSeq {
public:
    CharSeq(int ell, std::vector<int> entries, SeqFamily family = SeqFamily::custom,
            std::optional<int> r = std::nullopt);

    int ell() const noexcept { return ell_; }
    Index blocklength() const noexcept { return Index{1} << ell_; }
    std::size_t length() const noexcept { return entries_.size(); }
    std::uint64_t k() const noexcept { return k_; }

    /// 1-based access: s(i), i in [1, length()].
    int operator()(std::size_t i) const noexcept { return entries_[i - 1]; }
    const std::vector<int>& entries() const noexcept { return entries_; }

    /// Block lengths in message order: s(L), s(L-1), ..., s(1).
    std::vector<int> block_lengths() const;

    SeqFamily family() const noexcept { return family_; }
    /// Set for sequences built by f_ell_r.
    std::optional<int> r() const noexcept { return r_; }

    /// Comma-separated entries, e.g. "1,2,2,4".
    std::string to_string() const;

    friend bool operator==(const CharSeq& a, const CharSeq& b)
    {
        return a.ell_ == b.ell_ && a.entries_ == b.entries_;
    }

private:
    int ell_;
    std::vector<int> entries_;
    std::uint64_t k_ = 0;
    SeqFamily family_;
    std::optional<int> r_;
};

/// Parses "1,2,2,4". The blocklength exponent defaults to the sequence length.
CharSeq parse_sequence(std::string_view text, std::optional<int> ell = std::nullopt);

/// mu = 2^ceil(log2 v) - v.
std::uint64_t mu(std::uint64_t v);
/// floor((ell + 3) / 4), the largest admissible r.
int r_max(int ell);
/// 1 if ell > 2r + 2, else 0.
int delta(int ell, int r);

struct FamilyParams {
    int ell = 0;
    std::optional<int> r;
    std::optional<std::uint64_t> t;
    std::uint64_t mu = 0;                 // 0 when ell is a power of two
    std::optional<std::uint64_t> mu_t;    // 0 when t is a power of two
    std::optional<int> delta;
};

/// Validates and resolves the derived parameters. Throws Error(parameter).
FamilyParams family_params(int ell, std::optional<int> r = std::nullopt,
                           std::optional<std::uint64_t> t = std::nullopt);

CharSeq f_ell(int ell);
CharSeq f_ell_r(int ell, int r);
/// f_ell_r(ell, r_max(ell)).
CharSeq f_hat(int ell);
/// Length-t sequence for weight-t codes of blocklength 2^ell; requires 1 <= t < 2^(ell-1).
CharSeq f_ell_t(int ell, std::uint64_t t);

enum class AnchorFailure {
    none,
    not_nondecreasing,
    last_entry,       // s(L) != ell
    capacity,         // condition 1: 2^ell - sum_{i<L} 2^s(i) >= 2^s(L-1)
    shift_invariant,  // condition 2: gamma equals one of its nontrivial cyclic shifts
};

struct AnchorCheck {
    bool decodable = false;
    AnchorFailure failure = AnchorFailure::none;
    /// Smallest 0 < l0 < L with cshift(gamma, l0) == gamma, for shift_invariant.
    std::optional<std::size_t> shift;
    /// gamma vector when condition 1 holds.
    std::vector<Index> gamma;

    std::string describe() const;
};

/// Anchor-decodability of s. Works for any length L with n = 2^ell.
AnchorCheck is_anchor_decodable(const CharSeq& s);

/// Closed form of k for f_ell.
std::uint64_t k_ell_closed_form(int ell);
/// ell(ell-1)/2 + r(ell-r-1) + 1 + delta(ell, r).
std::uint64_t k_ell_r_closed_form(int ell, int r);
/// The max-over-r closed form with the ceil(3(ell-1)/4) term, evaluated as written.
/// It is off by one from the sum of f_hat at some ell (e.g. 39 vs 40 at ell = 8);
/// f_hat(ell).k() is authoritative.
std::uint64_t k_hat_closed_form(int ell);

/// Lower bound on k_ell with ell = 2^a + b.
double k_lower_bound(int ell);
/// ell^2 - ell log2 ell + log2 ell - ell(1 - 1/(2 ln 2)) - 1/(2 ln 2), valid for every ell >= 3.
double k_lower_bound_uniform(int ell);

} // namespace gapcode
