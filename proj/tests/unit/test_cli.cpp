#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "gapcode/derived.hpp"
#include "gapcode/io.hpp"
#include "gapcode_cli/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "")
{
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = gapcode::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path)
{
    std::ifstream f(path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

} // namespace

TEST(Cli, Params)
{
    auto r = run({"params", "--construction", "c", "--ell", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "construction=c ell=4 n=16 k=9 w=4\nsequence=1,2,2,4\nblocks=4,2,2,1\n");
    r = run({"params", "--construction", "bt", "--ell", "6", "--t", "2"});
    EXPECT_NE(r.out.find("n=61 k=18 w=6"), std::string::npos);
    r = run({"params", "--construction", "chat", "--ell", "9"});
    EXPECT_NE(r.out.find("n=512 k=53 w=9"), std::string::npos);
    r = run({"params", "--construction", "bt", "--ell", "5", "--t", "2"});
    EXPECT_EQ(r.code, 1);
}

TEST(Cli, EncodeDecodeWorkedExample)
{
    auto r = run({"encode", "--ell", "4"}, "101011100\n");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "n=16:1,2,10,14\n");
    r = run({"decode", "--ell", "4"}, "n=16:1,2,10,14\n0110000000100010\n");
    EXPECT_EQ(r.out, "101011100\n101011100\n");
    r = run({"encode", "--ell", "4", "--codeword-format", "bits"}, "101011100\n");
    EXPECT_EQ(r.out, "0110000000100010\n");
    r = run({"encode", "--ell", "4", "--message-format", "hex"}, "ae0\n");
    EXPECT_EQ(r.out, "n=16:1,2,10,14\n");
    r = run({"decode", "--ell", "4", "--message-format", "hex"}, "n=16:1,2,10,14\n");
    EXPECT_EQ(r.out, "ae0\n");
}

TEST(Cli, StreamErrorsContinue)
{
    auto r = run({"encode", "--ell", "4"}, "101\n101011100\n10x011100\n");
    EXPECT_EQ(r.code, 2);
    std::istringstream lines(r.out);
    std::string a, b, c;
    std::getline(lines, a);
    std::getline(lines, b);
    std::getline(lines, c);
    EXPECT_EQ(a.rfind("error: line 1: length-mismatch", 0), 0u) << a;
    EXPECT_EQ(b, "n=16:1,2,10,14");
    EXPECT_EQ(c.rfind("error: line 3: parse", 0), 0u) << c;
}

TEST(Cli, AdversarialDecode)
{
    const auto r = run({"decode", "--ell", "4"}, "n=16:0,1,2,4\n");
    if (r.code == 0) {
        const auto code = gapcode::Code::make(gapcode::Construction::c, 4);
        auto msg = r.out;
        msg.pop_back();
        EXPECT_EQ(gapcode::io::render_ones(code.encode(gapcode::BitString::parse(msg))), "n=16:0,1,2,4");
    } else {
        EXPECT_EQ(r.code, 2);
        EXPECT_EQ(r.out.rfind("error: line 1: not-a-codeword", 0), 0u);
    }
    const auto p = run({"decode", "--ell", "4", "--permissive"}, "n=16:0,1,2,4\n");
    EXPECT_EQ(p.code, 0);
}

TEST(Cli, EncodeAgreesWithLibraryUnderJobs)
{
    const auto code = gapcode::Code::make(gapcode::Construction::chat, 7);
    std::string input, expected;
    for (std::uint64_t m = 0; m < 3000; ++m) {
        const auto x = gapcode::from_dec(m * 715827883ULL % (1ULL << 31), 31);
        input += x.to_string() + "\n";
        expected += gapcode::io::render_ones(code.encode(x)) + "\n";
    }
    const auto r = run({"encode", "--construction", "chat", "--ell", "7", "--jobs", "4"}, input);
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, expected);
    const auto back = run({"decode", "--construction", "chat", "--ell", "7", "--jobs", "3"}, r.out);
    EXPECT_EQ(back.out, input);
}

TEST(Cli, TableGolden)
{
    const auto r = run({"table", "--max-ell", "10"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, slurp(std::string(GAPCODE_GOLDEN_DIR) + "/table_3_10.csv"));
    const auto b = run({"table", "--max-ell", "4", "--bounds"});
    EXPECT_NE(b.out.find("\n4,\"1,2,2,4\",\"1,2,2,4\",9,9,10,"), std::string::npos);
    EXPECT_NE(b.out.find(",10,1\n"), std::string::npos);
    EXPECT_EQ(run({"table", "--max-ell", "2"}).code, 1);
}

TEST(Cli, Bounds)
{
    const auto r = run({"bounds", "--max-ell", "8"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "ell,k_ell,k_hat_ell,floor_log2_binom,stirling_ub,necklace_ub,delta_ell");
    EXPECT_NE(r.out.find("\n8,42,40,48,"), std::string::npos);
    EXPECT_NE(r.err.find("ell=8"), std::string::npos);
}

TEST(Cli, CheckSeq)
{
    auto r = run({"check-seq", "1,2,2,4"});
    EXPECT_EQ(r.out, "sequence=1,2,2,4 ell=4 k=9\nanchor-decodable: yes\n");
    r = run({"check-seq", "5,5,5,5,5,5,5,8"});
    EXPECT_NE(r.out.find("anchor-decodable: no (condition 2"), std::string::npos);
    r = run({"check-seq", "3,3,4,4,5,5,7"});
    EXPECT_NE(r.out.find("anchor-decodable: no (condition 1"), std::string::npos);
    r = run({"check-seq", "1,a"});
    EXPECT_EQ(r.code, 2);
}

TEST(Cli, Verify)
{
    auto r = run({"verify", "--construction", "c", "--ell", "4", "--exhaustive"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("checked=512 failures=0"), std::string::npos);
    r = run({"verify", "--construction", "dt", "--ell", "5", "--t", "3", "--exhaustive"});
    EXPECT_NE(r.out.find("checked=2048 failures=0"), std::string::npos);
    r = run({"verify", "--construction", "chat", "--ell", "7", "--sampled", "--samples", "100000", "--seed", "7"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("failures=0"), std::string::npos);
    r = run({"verify", "--construction", "c", "--ell", "8"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("--sampled"), std::string::npos);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"encode"}).code, 1);
    EXPECT_EQ(run({"encode", "--ell", "4", "--construction", "zz"}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
}
