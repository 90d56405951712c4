#include "krq/cli.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

namespace krq {
namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

Run run_with_threads(const std::vector<std::string>& args, const char* threads)
{
    ::setenv("KRQ_THREADS", threads, 1);
    Run r = run(args);
    ::unsetenv("KRQ_THREADS");
    return r;
}

TEST(Cli, CnValue)
{
    const auto r = run({"cn", "2", "--q", "2", "--format", "csv"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "n,q,route,value\n2,2,divisors,7\n");

    const auto j = nlohmann::json::parse(run({"cn", "6", "--q", "2", "--route", "gf"}).out);
    EXPECT_EQ(j["tool"], "krq");
    EXPECT_EQ(j["payload"]["value"], "2079");
    EXPECT_EQ(j["q"], "2");
    EXPECT_FALSE(j.contains("wall_time_ms"));
    EXPECT_TRUE(nlohmann::json::parse(run({"cn", "6", "--timing"}).out).contains("wall_time_ms"));
}

TEST(Cli, CnPolynomial)
{
    EXPECT_EQ(run({"cn", "1", "--format", "csv"}).out, "exponent,coefficient\n0,1\n1,-2\n2,1\n");
    EXPECT_EQ(run({"cn", "2", "--format", "pretty"}).out, "C_2(q) = q^4 - q^3 - q + 1\n");
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({"cn", "0"}).code, kExitUsage);
    EXPECT_EQ(run({"cn", "3", "--route", "nope"}).code, kExitUsage);
    EXPECT_EQ(run({"cn", "3", "--q", "1/0"}).code, kExitUsage);
    EXPECT_EQ(run({"cn", "3", "--format", "xml"}).code, kExitUsage);
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(run({"scan", "--max-n", "100", "--q", "3/2"}).code, kExitUsage);
    EXPECT_EQ(run({"scan", "--max-n", "100", "--crosscheck", "200"}).code, kExitUsage);
    EXPECT_EQ(run({"ek", "--k", "2", "--max-h", "4"}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "--max-n", "600", "--gf-max", "600"}).code, kExitUsage);
    EXPECT_EQ(run({"oracle", "--n", "3", "--q", "5"}).code, kExitUsage);
    EXPECT_EQ(run({"oracle", "--n", "4", "--q", "2"}).code, kExitUsage);
    EXPECT_FALSE(run({"cn", "0"}).err.empty());
}

TEST(Cli, CnAtZero)
{
    EXPECT_EQ(run({"cn", "2", "--q", "0", "--format", "csv"}).out, "n,q,route,value\n2,0,divisors,1\n");
}

TEST(Cli, Verify)
{
    const auto r = run({"verify", "--max-n", "40"});
    EXPECT_EQ(r.code, kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["payload"]["discrepancy_count"], 0);
}

TEST(Cli, Oracle)
{
    const auto r = run({"oracle", "--n", "2", "--q", "3", "--format", "csv"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("52"), std::string::npos);
}

TEST(Cli, Criterion)
{
    const auto j = nlohmann::json::parse(run({"criterion", "--max-n", "10000"}).out);
    EXPECT_EQ(j["payload"]["flagged"], nlohmann::json({"3", "6", "10", "28", "136", "496", "8128"}));
}

TEST(Cli, ScanCsvHeader)
{
    const auto r = run({"scan", "--max-n", "30", "--format", "csv"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
              "n,h,p,k,deviation_num,deviation_den,limit_num,limit_den,residual_exp2,certainty");
    EXPECT_NE(r.out.find("\n6,2,3,1,31,64,1,2,-6,proved\n"), std::string::npos);
}

TEST(Cli, ProgressGoesToStderr)
{
    const auto quiet = run({"scan", "--max-n", "200"});
    const auto loud = run({"scan", "--max-n", "200", "--progress"});
    EXPECT_TRUE(quiet.err.empty());
    EXPECT_FALSE(loud.err.empty());
    auto strip = [](nlohmann::json j) {
        j.erase("command");
        return j;
    };
    EXPECT_EQ(strip(nlohmann::json::parse(quiet.out)), strip(nlohmann::json::parse(loud.out)));
}

TEST(Cli, ByteIdenticalAcrossThreadCounts)
{
    const std::vector<std::vector<std::string>> commands = {
        {"scan", "--max-n", "30000", "--q", "2"},
        {"scan", "--max-n", "5000", "--q", "3", "--format", "csv"},
        {"criterion", "--max-n", "20000", "--format", "csv"},
        {"ek", "--k", "3", "--max-h", "14"},
        {"verify", "--max-n", "60"},
    };
    for (const auto& args : commands) {
        const auto one = run_with_threads(args, "1");
        const auto again = run_with_threads(args, "1");
        const auto many = run_with_threads(args, "6");
        EXPECT_EQ(one.code, kExitOk);
        EXPECT_EQ(one.out, again.out) << args[0];
        EXPECT_EQ(one.out, many.out) << args[0];
    }
}

}  // namespace
}  // namespace krq
