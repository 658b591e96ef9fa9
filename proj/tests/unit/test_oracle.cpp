#include <gtest/gtest.h>

#include <set>

#include "gapcode/error.hpp"
#include "gapcode/oracle.hpp"
#include "oracles.hpp"

using namespace gapcode;

TEST(Ranking, Examples)
{
    EXPECT_EQ(unrank_lex(0, 8, 3), Codeword(8, {0, 1, 2}));
    EXPECT_EQ(unrank_lex(55, 8, 3), Codeword(8, {5, 6, 7}));
    EXPECT_EQ(unrank_lex(1, 8, 3), Codeword(8, {0, 1, 3}));
    EXPECT_EQ(rank_lex(Codeword(8, {0, 1, 2}), 3), 0);
    EXPECT_EQ(rank_lex(Codeword(8, {5, 6, 7}), 3), 55);
    EXPECT_EQ(rank_lex(Codeword(8, {0, 1, 3}), 3), 1);
    EXPECT_THROW(unrank_lex(56, 8, 3), Error);
    EXPECT_THROW(rank_lex(Codeword(8, {0, 1}), 3), Error);
}

TEST(Ranking, ExhaustiveAgainstEnumeration)
{
    for (auto [n, w] : {std::pair{8u, 3u}, {16u, 4u}, {12u, 5u}}) {
        const auto all = oracle::lex_subsets(n, w);
        for (std::size_t r = 0; r < all.size(); ++r) {
            const auto c = unrank_lex(BigInt(r), n, w);
            ASSERT_EQ(c.ones(), all[r]);
            ASSERT_EQ(rank_lex(c, w), BigInt(r));
        }
    }
}

TEST(Verify, ExhaustiveExamples)
{
    auto r = verify_exhaustive(resolve_params(Construction::c, 3));
    EXPECT_EQ(r.messages_checked, 32u);
    EXPECT_TRUE(r.ok());
    EXPECT_TRUE(r.injectivity_checked);

    r = verify_exhaustive(resolve_params(Construction::chat, 5));
    EXPECT_EQ(r.messages_checked, 32768u);
    EXPECT_TRUE(r.ok());

    r = verify_exhaustive(resolve_params(Construction::bt, 5, 1));
    EXPECT_EQ(r.messages_checked, 8192u);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.params.n, 31u);

    VerifyOptions sharded;
    sharded.jobs = 3;
    r = verify_exhaustive(resolve_params(Construction::c, 4), sharded);
    EXPECT_EQ(r.messages_checked, 512u);
    EXPECT_TRUE(r.ok());
}

TEST(Verify, BudgetExceeded)
{
    VerifyOptions small;
    small.budget = 256;
    try {
        verify_exhaustive(resolve_params(Construction::c, 4), small);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::budget_exceeded);
    }
}

TEST(Verify, SampledIsDeterministic)
{
    const auto p = resolve_params(Construction::c, 10);
    VerifyOptions two;
    two.jobs = 2;
    const auto a = verify_sampled(p, 20000, 42);
    const auto b = verify_sampled(p, 20000, 42, two);
    EXPECT_TRUE(a.ok());
    EXPECT_EQ(a.messages_checked, b.messages_checked);
    EXPECT_EQ(a.failure_count, b.failure_count);
    EXPECT_EQ(sampled_message(69, 42, 7), sampled_message(69, 42, 7));
    EXPECT_NE(sampled_message(69, 42, 7), sampled_message(69, 43, 7));
    EXPECT_NE(sampled_message(69, 42, 7), sampled_message(69, 42, 8));
}

TEST(Verify, BoundaryFamily)
{
    const auto p = resolve_params(Construction::c, 8);
    const auto family = boundary_messages(p);
    EXPECT_EQ(family.size(), 2u + 256u);
    const Code code(p);
    for (const auto& x : family) {
        EXPECT_EQ(code.decode(code.encode(x)), x);
    }
    const auto r = verify_sampled(p, 0, 1);
    EXPECT_EQ(r.messages_checked, family.size());
    EXPECT_TRUE(r.ok());
}

TEST(Verify, ReportRendering)
{
    auto r = verify_exhaustive(resolve_params(Construction::dt, 5, 3));
    const auto s = r.summary();
    EXPECT_NE(s.find("construction=dt ell=5 t=3 n=32 k=11 w=3 checked=2048 failures=0"), std::string::npos);
    EXPECT_NE(s.find("status=ok"), std::string::npos);

    VerifyReport bad;
    bad.params = r.params;
    bad.failure_count = 1;
    bad.messages_checked = 1;
    bad.failures.push_back({BitString::parse("101"), std::nullopt, std::nullopt, "mismatch", ""});
    r.merge(bad, 4);
    EXPECT_FALSE(r.ok());
    EXPECT_EQ(r.messages_checked, 2049u);
    EXPECT_NE(r.render().find("failure kind=mismatch message=101"), std::string::npos);
}

TEST(Census, EllThree)
{
    for (auto construction : {Construction::c, Construction::chat}) {
        const auto p = resolve_params(construction, 3);
        const auto census = coverage_census(p);
        EXPECT_EQ(census.words, 56u);
        EXPECT_EQ(census.in_image, 32u);

        std::set<std::vector<Index>> book;
        const Code code(p);
        for (std::uint64_t m = 0; m < 32; ++m) book.insert(code.encode(from_dec(m, 5)).ones());
        EXPECT_EQ(census.image, book);
    }
    EXPECT_THROW(coverage_census(resolve_params(Construction::c, 6)), Error);
    EXPECT_THROW(coverage_census(resolve_params(Construction::ct, 3, 2)), Error);
}
