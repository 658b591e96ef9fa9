#include "gapcode/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <thread>
#include <variant>

#include "gapcode/error.hpp"
#include "gapcode/io.hpp"

namespace gapcode {

Codeword unrank_lex(const BigInt& rank, Index n, std::size_t w)
{
    if (rank < 0 || rank >= binom(n, w)) {
        throw Error(ErrorKind::domain, "rank out of range for C(" + std::to_string(n) + ", " + std::to_string(w) + ")");
    }
    BigInt r = rank;
    std::vector<Index> ones;
    ones.reserve(w);
    Index next = 0;
    for (std::size_t i = 0; i < w; ++i) {
        for (Index c = next;; ++c) {
            // subsets whose i-th element is c
            const auto count = binom(n - c - 1, w - i - 1);
            if (r < count) {
                ones.push_back(c);
                next = c + 1;
                break;
            }
            r -= count;
        }
    }
    return Codeword(n, std::move(ones));
}

BigInt rank_lex(const Codeword& c, std::size_t w)
{
    if (c.weight() != w) {
        throw Error(ErrorKind::malformed_codeword,
                    "weight " + std::to_string(c.weight()) + " differs from " + std::to_string(w));
    }
    BigInt rank = 0;
    Index next = 0;
    const auto& ones = c.ones();
    for (std::size_t i = 0; i < w; ++i) {
        for (Index v = next; v < ones[i]; ++v) rank += binom(c.n() - v - 1, w - i - 1);
        next = ones[i] + 1;
    }
    return rank;
}

void VerifyReport::merge(const VerifyReport& other, std::size_t max_failures_kept)
{
    messages_checked += other.messages_checked;
    failure_count += other.failure_count;
    for (const auto& f : other.failures) {
        if (failures.size() >= max_failures_kept) break;
        failures.push_back(f);
    }
    codebook_distinct = codebook_distinct && other.codebook_distinct;
    weight_ok = weight_ok && other.weight_ok;
    elapsed = std::max(elapsed, other.elapsed);
}

std::string VerifyReport::summary() const
{
    std::ostringstream out;
    out << "construction=" << to_string(params.construction) << " ell=" << params.ell;
    if (params.t) out << " t=" << *params.t;
    if (params.r) out << " r=" << *params.r;
    out << " n=" << params.n << " k=" << params.k << " w=" << params.w << " checked=" << messages_checked
        << " failures=" << failure_count << " codebook_distinct="
        << (injectivity_checked ? (codebook_distinct ? "yes" : "no") : "unchecked")
        << " weight_ok=" << (weight_ok ? "yes" : "no")
        << " elapsed_ms=" << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()
        << " status=" << (ok() ? "ok" : "fail");
    return out.str();
}

std::string VerifyReport::render() const
{
    std::ostringstream out;
    out << summary() << '\n';
    for (const auto& f : failures) {
        out << "failure kind=" << f.kind << " message=" << f.message.to_string();
        if (f.codeword) out << " codeword=" << io::render_ones(*f.codeword);
        if (f.decoded) out << " decoded=" << f.decoded->to_string();
        if (!f.detail.empty()) out << " detail=\"" << f.detail << '"';
        out << '\n';
    }
    if (failure_count > failures.size()) {
        out << "... " << failure_count - failures.size() << " more failures not shown\n";
    }
    return out.str();
}

namespace {

std::uint64_t splitmix64(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Position-set keys for injectivity: packed into one word when they fit, else text.
class KeySet {
public:
    KeySet(Index n, std::size_t w) : width_(static_cast<unsigned>(ceil_log2(n)))
    {
        packed_ = width_ * w <= 64;
    }

    void add(const Codeword& c)
    {
        if (packed_) {
            std::uint64_t key = 0;
            for (auto p : c.ones()) key = width_ == 64 ? p : (key << width_) | p;
            words_.push_back(key);
        } else {
            text_.push_back(io::render_ones(c));
        }
    }

    void absorb(KeySet&& other)
    {
        words_.insert(words_.end(), other.words_.begin(), other.words_.end());
        text_.insert(text_.end(), std::make_move_iterator(other.text_.begin()),
                     std::make_move_iterator(other.text_.end()));
    }

    bool distinct()
    {
        return packed_ ? all_distinct(words_) : all_distinct(text_);
    }

private:
    template <typename T>
    static bool all_distinct(std::vector<T>& v)
    {
        std::sort(v.begin(), v.end());
        return std::adjacent_find(v.begin(), v.end()) == v.end();
    }

    unsigned width_;
    bool packed_ = true;
    std::vector<std::uint64_t> words_;
    std::vector<std::string> text_;
};

void record(VerifyReport& report, VerifyFailure failure, std::size_t keep)
{
    ++report.failure_count;
    if (report.failures.size() < keep) report.failures.push_back(std::move(failure));
}

// One round trip; returns the codeword when encoding succeeded.
std::optional<Codeword> check_one(const Code& code, const BitString& x, VerifyReport& report,
                                  const VerifyOptions& options)
{
    ++report.messages_checked;
    const auto& p = code.params();
    std::optional<Codeword> c;
    try {
        c = code.encode(x);
    } catch (const Error& e) {
        record(report, {x, std::nullopt, std::nullopt, std::string(to_string(e.kind())), e.what()},
               options.max_failures_kept);
        return std::nullopt;
    }
    if (c->n() != p.n) {
        record(report, {x, c, std::nullopt, "length", "blocklength " + std::to_string(c->n())},
               options.max_failures_kept);
        return c;
    }
    if (c->weight() != p.w) {
        report.weight_ok = false;
        record(report, {x, c, std::nullopt, "weight", "weight " + std::to_string(c->weight())},
               options.max_failures_kept);
        return c;
    }
    try {
        auto y = code.decode(*c, options.mode);
        if (y != x) record(report, {x, c, y, "mismatch", ""}, options.max_failures_kept);
    } catch (const Error& e) {
        record(report, {x, c, std::nullopt, std::string(to_string(e.kind())), e.what()},
               options.max_failures_kept);
    }
    return c;
}

template <typename MessageAt>
VerifyReport run_sharded(const CodeParams& params, std::uint64_t count, const VerifyOptions& options,
                         bool check_injectivity, MessageAt message_at)
{
    const auto started = std::chrono::steady_clock::now();
    const Code code(params);
    const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(std::max<std::uint64_t>(count, 1))));

    std::vector<VerifyReport> parts(jobs);
    std::vector<KeySet> keys(jobs, KeySet(params.n, params.w));
    auto work = [&](unsigned j) {
        const std::uint64_t lo = count * j / jobs;
        const std::uint64_t hi = count * (j + 1) / jobs;
        for (std::uint64_t i = lo; i < hi; ++i) {
            auto c = check_one(code, message_at(i), parts[j], options);
            if (check_injectivity && c) keys[j].add(*c);
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::jthread> threads;
        for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(work, j);
    }

    VerifyReport report;
    report.params = code.params();
    for (unsigned j = 0; j < jobs; ++j) {
        report.merge(parts[j], options.max_failures_kept);
        if (j > 0) keys[0].absorb(std::move(keys[j]));
    }
    if (check_injectivity) {
        report.injectivity_checked = true;
        report.codebook_distinct = keys[0].distinct();
    }
    report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - started);
    return report;
}

} // namespace

VerifyReport verify_exhaustive(const CodeParams& params, const VerifyOptions& options)
{
    const auto resolved = resolve_params(params.construction, params.ell, params.t, params.r);
    if (resolved.k >= 64 || (std::uint64_t{1} << resolved.k) > options.budget) {
        throw Error(ErrorKind::budget_exceeded,
                    "2^" + std::to_string(resolved.k) + " messages exceed the exhaustive budget of " +
                        std::to_string(options.budget) + "; use sampled verification");
    }
    const std::size_t k = resolved.k;
    return run_sharded(resolved, std::uint64_t{1} << k, options, true,
                       [k](std::uint64_t i) { return from_dec(i, k); });
}

BitString sampled_message(std::uint64_t k, std::uint64_t seed, std::uint64_t index)
{
    BitString x(k);
    const std::uint64_t words = (k + 63) / 64;
    for (std::uint64_t wi = 0; wi < words; ++wi) {
        const std::uint64_t word = splitmix64(seed ^ splitmix64(index * words + wi));
        for (std::uint64_t b = 0; b < 64 && wi * 64 + b < k; ++b) x.set(wi * 64 + b, (word >> (63 - b)) & 1);
    }
    return x;
}

std::vector<BitString> boundary_messages(const CodeParams& params)
{
    const Code code(resolve_params(params.construction, params.ell, params.t, params.r));
    const auto& widths = code.block_lengths();
    const std::size_t k = code.params().k;

    std::vector<BitString> out;
    out.emplace_back(k);
    BitString ones(k);
    for (std::size_t i = 0; i < k; ++i) ones.set(i, true);
    out.push_back(ones);

    const auto anchor_width = static_cast<std::size_t>(widths[0]);
    const std::uint64_t values = std::uint64_t{1} << anchor_width;
    const std::uint64_t sweep = std::min<std::uint64_t>(values, std::uint64_t{1} << 16);
    for (std::uint64_t i = 0; i < sweep; ++i) {
        // strided when the block is too wide to sweep; the top value is appended below
        const std::uint64_t v = sweep == values ? i : (sweep == 1 ? 0 : i * ((values - 1) / (sweep - 1)));
        BitString x = from_dec(v, anchor_width);
        for (std::size_t b = anchor_width; b < k; ++b) x.push_back(true);
        out.push_back(std::move(x));
    }
    if (sweep != values) {
        BitString x = from_dec(values - 1, anchor_width);
        for (std::size_t b = anchor_width; b < k; ++b) x.push_back(true);
        out.push_back(std::move(x));
    }
    return out;
}

VerifyReport verify_sampled(const CodeParams& params, std::uint64_t samples, std::uint64_t seed,
                            const VerifyOptions& options)
{
    const auto resolved = resolve_params(params.construction, params.ell, params.t, params.r);
    const auto boundary = boundary_messages(resolved);
    const std::uint64_t k = resolved.k;
    return run_sharded(resolved, samples + boundary.size(), options, false, [&](std::uint64_t i) {
        return i < boundary.size() ? boundary[i] : sampled_message(k, seed, i - boundary.size());
    });
}

CensusResult coverage_census(const CodeParams& params, std::uint64_t budget)
{
    const auto resolved = resolve_params(params.construction, params.ell, params.t, params.r);
    if (resolved.construction != Construction::c && resolved.construction != Construction::chat) {
        throw Error(ErrorKind::parameter, "coverage census supports the c and chat constructions");
    }
    const auto total = binom(resolved.n, resolved.w);
    if (total > budget) {
        throw Error(ErrorKind::budget_exceeded, "C(n, w) = " + total.str() + " words exceed the census budget");
    }
    const Code code(resolved);
    CensusResult out;
    out.words = static_cast<std::uint64_t>(total);
    for (std::uint64_t r = 0; r < out.words; ++r) {
        const auto c = unrank_lex(BigInt(r), resolved.n, resolved.w);
        try {
            if (code.encode(code.decode(c, DecodeMode::strict)) != c) continue;
        } catch (const Error&) {
            continue;
        }
        ++out.in_image;
        out.image.insert(c.ones());
    }
    return out;
}

} // namespace gapcode
