#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gapcode/analysis.hpp"
#include "gapcode/derived.hpp"
#include "gapcode/error.hpp"
#include "oracles.hpp"

using namespace gapcode;

namespace {

std::set<std::vector<Index>> codebook(const Code& code)
{
    std::set<std::vector<Index>> book;
    const auto k = code.params().k;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) book.insert(code.encode(from_dec(m, k)).ones());
    return book;
}

void exhaustive_round_trip(const Code& code)
{
    const auto& p = code.params();
    std::set<std::vector<Index>> book;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << p.k); ++m) {
        const auto x = from_dec(m, p.k);
        const auto c = code.encode(x);
        ASSERT_EQ(c.n(), p.n);
        ASSERT_EQ(c.weight(), p.w);
        ASSERT_EQ(code.decode(c), x) << x.to_string();
        book.insert(c.ones());
    }
    EXPECT_EQ(book.size(), std::size_t{1} << p.k);
}

} // namespace

TEST(Params, Resolution)
{
    auto p = resolve_params(Construction::c, 4);
    EXPECT_EQ(std::tie(p.n, p.k, p.w), std::make_tuple(Index{16}, std::uint64_t{9}, std::size_t{4}));
    p = resolve_params(Construction::chat, 9);
    EXPECT_EQ(std::tie(p.n, p.k, p.w), std::make_tuple(Index{512}, std::uint64_t{53}, std::size_t{9}));
    EXPECT_EQ(p.r, 3);
    p = resolve_params(Construction::bt, 6, 2);
    EXPECT_EQ(std::tie(p.n, p.k, p.w), std::make_tuple(Index{61}, std::uint64_t{18}, std::size_t{6}));
    p = resolve_params(Construction::ct, 5, 2);
    EXPECT_EQ(std::tie(p.n, p.k, p.w), std::make_tuple(Index{32}, std::uint64_t{8}, std::size_t{2}));
    p = resolve_params(Construction::dt, 5, 3);
    EXPECT_EQ(std::tie(p.n, p.k, p.w), std::make_tuple(Index{32}, std::uint64_t{11}, std::size_t{3}));

    EXPECT_THROW(resolve_params(Construction::ct, 5), Error);
    EXPECT_THROW(resolve_params(Construction::ct, 5, 16), Error);
    EXPECT_THROW(resolve_params(Construction::dt, 5, 5), Error);
    EXPECT_THROW(resolve_params(Construction::bt, 5, 2), Error);  // f_5(1) = 2
    EXPECT_THROW(resolve_params(Construction::c, 5, 1), Error);
    EXPECT_THROW(resolve_params(Construction::c, 25), Error);
    EXPECT_THROW(resolve_params(Construction::ct, 5, 2, 1), Error);
    EXPECT_EQ(parse_construction("bt"), Construction::bt);
    EXPECT_THROW(parse_construction("b"), Error);
}

TEST(Params, DtDimensionFormula)
{
    for (int ell = 3; ell <= 24; ++ell) {
        const auto f = f_ell(ell);
        for (int t = 1; t < ell; ++t) {
            std::uint64_t dropped = 0;
            for (int i = 1; i <= ell - t; ++i) dropped += static_cast<std::uint64_t>(f(static_cast<std::size_t>(i)));
            EXPECT_EQ(resolve_params(Construction::dt, ell, static_cast<std::uint64_t>(t)).k, f.k() - dropped);
        }
    }
}

TEST(Ct, Examples)
{
    EXPECT_EQ(encode_ct(BitString(8), 5, 2), Codeword(32, {0, 1}));
    EXPECT_EQ(decode_ct(Codeword(32, {0, 1}), 5, 2), BitString(8));
    BitString x = from_dec(5, 6);
    append_dec(x, 3, 4);
    append_dec(x, 1, 4);
    EXPECT_EQ(encode_ct(x, 6, 3), Codeword(64, {5, 9, 11}));
    EXPECT_EQ(decode_ct(Codeword(64, {5, 9, 11}), 6, 3), x);
}

TEST(Ct, Exhaustive)
{
    for (std::uint64_t t : {2, 3, 4}) exhaustive_round_trip(Code::make(Construction::ct, 5, t));
    EXPECT_EQ(resolve_params(Construction::ct, 5, 4).k, 13u);
}

TEST(Ct, C2IsOptimal)
{
    for (int ell = 3; ell <= 16; ++ell) {
        const auto k = resolve_params(Construction::ct, ell, 2).k;
        EXPECT_EQ(k, static_cast<std::uint64_t>(2 * ell - 2));
        EXPECT_EQ(static_cast<int>(k), oracle::bit_length_minus_one(oracle::pascal_binomial(1u << ell, 2)));
    }
}

TEST(Ct, MatchesDenseReference)
{
    std::mt19937_64 rng(29);
    for (int ell = 4; ell <= 12; ++ell) {
        for (std::uint64_t t : {std::uint64_t{2}, std::uint64_t{3}, std::uint64_t{5}, static_cast<std::uint64_t>(ell + 2)}) {
            const auto s = f_ell_t(ell, t);
            for (int i = 0; i < 100; ++i) {
                BitString x(s.k());
                for (std::size_t b = 0; b < s.k(); ++b) x.set(b, rng() & 1);
                const auto dense = oracle::dense_encode(x, s.entries(), ell);
                ASSERT_TRUE(dense);
                ASSERT_EQ(encode_ct(x, ell, t).ones(), oracle::ones_of(*dense));
                ASSERT_EQ(decode_ct(encode_ct(x, ell, t), ell, t), x);
            }
        }
    }
}

TEST(Dt, Examples)
{
    EXPECT_EQ(dt_sequence(4, 2).entries(), (std::vector<int>{2, 4}));
    EXPECT_EQ(encode_dt(BitString(6), 4, 2), Codeword(16, {0, 1}));
    EXPECT_EQ(decode_dt(Codeword(16, {0, 1}), 4, 2), BitString(6));
}

TEST(Dt, Exhaustive)
{
    for (int ell = 4; ell <= 5; ++ell) {
        for (std::uint64_t t = 1; t < static_cast<std::uint64_t>(ell); ++t) {
            exhaustive_round_trip(Code::make(Construction::dt, ell, t));
        }
    }
    EXPECT_EQ(resolve_params(Construction::dt, 5, 3).k, 11u);
}

TEST(Dt, IsTheFullEncodeWithTrailingOnesRemoved)
{
    std::mt19937_64 rng(31);
    for (int ell = 4; ell <= 10; ++ell) {
        const auto f = f_ell(ell);
        for (int t = 1; t < ell; ++t) {
            const auto k = resolve_params(Construction::dt, ell, static_cast<std::uint64_t>(t)).k;
            for (int i = 0; i < 50; ++i) {
                BitString x(k);
                for (std::size_t b = 0; b < k; ++b) x.set(b, rng() & 1);
                BitString padded = x;
                for (std::size_t b = k; b < f.k(); ++b) padded.push_back(false);
                const auto full = oracle::ones_of(*oracle::dense_encode(padded, f.entries(), ell));
                const auto short_word = encode_dt(x, ell, static_cast<std::uint64_t>(t));
                std::set<Index> rest(full.begin(), full.end());
                for (auto p : short_word.ones()) ASSERT_EQ(rest.erase(p), 1u);
                // the removed ones were written consecutively after the last kept one
                ASSERT_EQ(rest.size(), static_cast<std::size_t>(ell - t));
            }
        }
    }
}

TEST(Dt, D2EqualsC2UpToEllSix)
{
    for (int ell = 3; ell <= 8; ++ell) {
        const auto d2 = codebook(Code::make(Construction::dt, ell, 2));
        const auto c2 = codebook(Code::make(Construction::ct, ell, 2));
        if (ell <= 6) {
            EXPECT_EQ(d2, c2) << ell;
        } else {
            // D_2 keeps f_ell(ell-1) + ell bits, one short of 2 ell - 2 from ell = 7 on
            EXPECT_LT(d2.size(), c2.size()) << ell;
            for (const auto& w : d2) EXPECT_TRUE(c2.count(w)) << ell;
        }
    }
}

TEST(Bt, Examples)
{
    EXPECT_EQ(bt_block_lengths(5, 1), (std::vector<int>{4, 3, 3, 2, 1}));
    EXPECT_EQ(encode_bt(BitString(13), 5, 1), Codeword(31, {0, 1, 2, 3, 4}));
    EXPECT_EQ(decode_bt(Codeword(31, {0, 1, 2, 3, 4}), 5, 1), BitString(13));
}

TEST(Bt, Exhaustive)
{
    exhaustive_round_trip(Code::make(Construction::bt, 5, 1));
    exhaustive_round_trip(Code::make(Construction::bt, 6, 1));
    exhaustive_round_trip(Code::make(Construction::bt, 6, 2));
}

TEST(Bt, MatchesDenseReference)
{
    std::mt19937_64 rng(37);
    for (int ell = 5; ell <= 12; ++ell) {
        const auto f = f_ell(ell);
        for (int t = 1; t < f(1); ++t) {
            const auto k = resolve_params(Construction::bt, ell, static_cast<std::uint64_t>(t)).k;
            for (int i = 0; i < 100; ++i) {
                BitString x(k);
                for (std::size_t b = 0; b < k; ++b) x.set(b, rng() & 1);
                const auto dense = oracle::dense_encode_bt(x, f.entries(), t);
                ASSERT_TRUE(dense);
                ASSERT_EQ(encode_bt(x, ell, static_cast<std::uint64_t>(t)).ones(), oracle::ones_of(*dense));
            }
        }
    }
}

TEST(Bt, MaximalGapWordsAndTopAnchor)
{
    for (int ell = 5; ell <= 14; ++ell) {
        const auto f = f_ell(ell);
        for (int t = 1; t < f(1); ++t) {
            const auto tt = static_cast<std::uint64_t>(t);
            const auto widths = bt_block_lengths(ell, tt);
            for (std::uint64_t v : {std::uint64_t{0}, (std::uint64_t{1} << widths[0]) - 1}) {
                BitString x = from_dec(v, static_cast<std::size_t>(widths[0]));
                const auto k = resolve_params(Construction::bt, ell, tt).k;
                for (std::size_t b = x.size(); b < k; ++b) x.push_back(true);
                const auto c = encode_bt(x, ell, tt);
                const auto g = extract_gaps(c);
                const auto target = bt_maximal_gap_vector(ell, tt);
                bool rotation = false;
                for (std::size_t s = 0; s < g.size() && !rotation; ++s) {
                    rotation = cshift(g.g, static_cast<std::int64_t>(s)) == target;
                }
                EXPECT_TRUE(rotation) << ell << ' ' << t;
                EXPECT_EQ(decode_bt(c, ell, tt), x) << ell << ' ' << t;
            }
        }
    }
}

TEST(Bt, StrictDecodeAcceptsExactlyTheCode)
{
    const int ell = 5;
    const std::uint64_t t = 1;
    const auto code = Code::make(Construction::bt, ell, t);
    const auto book = codebook(code);
    std::uint64_t accepted = 0;
    for (const auto& ones : oracle::lex_subsets(31, 5)) {
        const Codeword c(31, ones);
        try {
            code.decode(c);
            ++accepted;
            EXPECT_TRUE(book.count(ones));
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::not_a_codeword);
            EXPECT_FALSE(book.count(ones));
        }
    }
    EXPECT_EQ(accepted, std::uint64_t{1} << 13);
}

TEST(Code, DispatchAgreesWithFreeFunctions)
{
    std::mt19937_64 rng(41);
    const auto c7 = Code::make(Construction::c, 7);
    const auto h7 = Code::make(Construction::chat, 7);
    EXPECT_EQ(c7.sequence(), f_ell(7));
    EXPECT_EQ(h7.sequence(), f_hat(7));
    for (int i = 0; i < 200; ++i) {
        BitString x(31);
        for (std::size_t b = 0; b < 31; ++b) x.set(b, rng() & 1);
        EXPECT_EQ(c7.encode(x), encode(x, f_ell(7)));
        EXPECT_EQ(h7.encode(x), encode(x, f_hat(7)));
        EXPECT_EQ(h7.decode(h7.encode(x)), x);
    }
    const auto b = Code::make(Construction::bt, 6, 2);
    EXPECT_EQ(b.block_lengths(), bt_block_lengths(6, 2));
}
