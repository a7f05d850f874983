#include "cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace {

struct Run {
    int code;
    nlohmann::json out;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "mtp");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = mtp::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, nlohmann::json::parse(out.str())};
}

}  // namespace

TEST(Cli, SigmaExample) {
    auto r = run({"sigma", "1", "-1", "0", "0"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out["value_int"], "1");
    EXPECT_EQ(r.out["value"]["order"], 1);
    EXPECT_EQ(r.out["value"]["coeffs"]["0"], "1");
}

TEST(Cli, SigmaMethodsAgree) {
    for (auto args : std::vector<std::vector<std::string>>{{"9", "-9", "1", "3"}, {"8", "-4", "1", "0"}, {"25", "-1", "0", "0"}}) {
        auto a = run({"sigma", args[0], args[1], args[2], args[3], "--method", "closed"});
        auto b = run({"sigma", args[0], args[1], args[2], args[3], "--method", "brute"});
        ASSERT_EQ(a.code, 0);
        EXPECT_NEAR(a.out["value"]["approx"]["re"].get<double>(), b.out["value"]["approx"]["re"].get<double>(), 1e-9);
        EXPECT_NEAR(a.out["value"]["approx"]["im"].get<double>(), b.out["value"]["approx"]["im"].get<double>(), 1e-9);
    }
}

TEST(Cli, CosetsEmpty) {
    auto r = run({"cosets", "1", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out["count"], 0);
    EXPECT_TRUE(r.out["elements"].empty());
}

TEST(Cli, CosetsClosedMatchesBrute) {
    auto a = run({"cosets", "27", "9", "--closed"}), b = run({"cosets", "27", "9"});
    EXPECT_EQ(a.out["elements"], b.out["elements"]);
    EXPECT_GT(a.out["count"].get<int>(), 0);
}

TEST(Cli, OtherCommands) {
    EXPECT_EQ(run({"kronecker", "2", "7"}).out["value"], 1);
    EXPECT_EQ(run({"gauss", "1", "0", "30"}).out["value_int"], "8");
    EXPECT_EQ(run({"kloosterman", "1", "0", "9"}).out["value"], run({"kloosterman", "1", "0", "9"}).out["closed"]);
    EXPECT_EQ(run({"splitting", "1", "0", "-1", "-1", "0", "-1"}).out["s"], 1);
    auto c = run({"cocycle", "--g1", "0,-1,0,1,0,0,0,0,1", "--g2", "0", "-1", "0", "1", "0", "0", "0", "0", "1"});
    EXPECT_EQ(c.code, 0);
    EXPECT_EQ(c.out["sigma"], -1);
    auto ct = run({"constant-term", "--lambda", "2,0,0,0", "--cutoff", "500"});
    EXPECT_EQ(ct.code, 0);
    EXPECT_LT(ct.out["coefficient_agreement"].get<double>(), 1e-10);
    EXPECT_EQ(ct.out["coefficients"].size(), 6u);
}

TEST(Cli, Errors) {
    auto u = run({"sigma", "1", "2"});
    EXPECT_EQ(u.code, 2);
    EXPECT_EQ(u.out["error"]["kind"], "usage");
    auto p = run({"splitting", "1", "0", "-1", "1", "0", "-1"});
    EXPECT_EQ(p.code, 2);
    EXPECT_EQ(p.out["error"]["kind"], "precondition");
    EXPECT_EQ(p.out["error"]["precondition"], "requires A1*C2 + 4*B1*B2 + C1*A2 = 0");
    EXPECT_EQ(run({"gauss", "3", "1", "5"}).out["error"]["kind"], "precondition");
    EXPECT_EQ(run({"cocycle", "--g1", "2,0,0,0,1,0,0,0,1", "--g2", "1,0,0,0,1,0,0,0,1"}).code, 2);
    EXPECT_EQ(run({"verify", "no-such-suite"}).code, 2);
}

TEST(Cli, VerifyRunsSuites) {
    auto r = run({"verify", "kloosterman-constant", "--max", "50"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out["passed"], true);
    EXPECT_EQ(run({"verify", "list"}).out["suites"].size(), mtp::suites().size());
}

TEST(Cli, DeterministicOutput) {
    auto a = run({"verify", "cocycle", "--max", "20", "--seed", "5"}), b = run({"verify", "cocycle", "--max", "20", "--seed", "5"});
    a.out.erase("seconds");
    b.out.erase("seconds");
    EXPECT_EQ(a.out, b.out);
}
