#pragma once

// Independent reference machinery: lexicographic ranking of w-subsets, and round-trip
// verification drivers for every construction.

#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gapcode/analysis.hpp"
#include "gapcode/bits.hpp"
#include "gapcode/codec.hpp"
#include "gapcode/derived.hpp"

namespace gapcode {

/// rank-th w-subset of {0..n-1} in lexicographic order. Throws Error(domain) if rank >= C(n, w).
Codeword unrank_lex(const BigInt& rank, Index n, std::size_t w);
/// Throws Error(malformed_codeword) when the weight is not w.
BigInt rank_lex(const Codeword& c, std::size_t w);

struct VerifyFailure {
    BitString message;
    std::optional<Codeword> codeword;
    std::optional<BitString> decoded;
    std::string kind;   // error kind, or "mismatch", "weight", "length", "collision"
    std::string detail;
};

struct VerifyReport {
    CodeParams params;
    std::uint64_t messages_checked = 0;
    std::uint64_t failure_count = 0;
    std::vector<VerifyFailure> failures;  // first max_failures_kept only
    bool injectivity_checked = false;
    bool codebook_distinct = true;
    bool weight_ok = true;
    std::chrono::nanoseconds elapsed{0};

    bool ok() const noexcept { return failure_count == 0 && codebook_distinct && weight_ok; }
    /// Sums counters and concatenates failures; injectivity across shards is not re-checked.
    void merge(const VerifyReport& other, std::size_t max_failures_kept);
    /// One "key=value" line for scripts.
    std::string summary() const;
    /// Summary followed by one line per kept failure.
    std::string render() const;
};

struct VerifyOptions {
    DecodeMode mode = DecodeMode::strict;
    std::uint64_t budget = std::uint64_t{1} << 25;
    unsigned jobs = 1;
    std::size_t max_failures_kept = 16;
};

/// Every message of the code. Throws Error(budget_exceeded) when 2^k > options.budget.
VerifyReport verify_exhaustive(const CodeParams& params, const VerifyOptions& options = {});

/// `samples` messages from a seeded generator plus boundary_messages(params). Deterministic in
/// (params, samples, seed); jobs only changes the wall time.
VerifyReport verify_sampled(const CodeParams& params, std::uint64_t samples, std::uint64_t seed,
                            const VerifyOptions& options = {});

/// All-zero and all-ones messages, and the messages whose non-anchor blocks are all ones
/// with the anchor block swept (exhaustively up to 2^16 values, else strided).
std::vector<BitString> boundary_messages(const CodeParams& params);

/// Deterministic message generator: splitmix64 over (seed, index).
BitString sampled_message(std::uint64_t k, std::uint64_t seed, std::uint64_t index);

struct CensusResult {
    std::uint64_t words = 0;      // C(n, w)
    std::uint64_t in_image = 0;   // words that decode and re-encode to themselves
    std::set<std::vector<Index>> image;
};

/// Walks every weight-w word of the code's blocklength through unrank_lex and keeps those in the
/// image of the encoder. Supported for c and chat; throws Error(budget_exceeded) past `budget` words.
CensusResult coverage_census(const CodeParams& params, std::uint64_t budget = std::uint64_t{1} << 20);

} // namespace gapcode
