#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(DEMAZURE_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json run_json(const std::string& args) {
    const auto r = run(args + " --json");
    EXPECT_EQ(r.code, 0) << args;
    return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(Cli, PieriWorkedExample) {
    const auto j = run_json("pieri --n 3 --level 5 --lambda 2,3,4 --i 2");
    ASSERT_TRUE(j.contains("meta"));
    EXPECT_TRUE(j["meta"].contains("version"));
    EXPECT_TRUE(j["meta"].contains("elapsed_ms"));
    const auto& rows = j.at("result");
    ASSERT_EQ(rows.size(), 4u);
    std::vector<int> shifts;
    for (auto& row : rows) shifts.push_back(row.at("shift").get<int>());
    EXPECT_EQ(shifts, (std::vector<int>{0, 1, 2, 2}));
    EXPECT_EQ(rows[0].at("target"), nlohmann::json::parse("[2,4,4]"));
}

TEST(Cli, PieriRankFiveAndRankOne) {
    const auto j = run_json("pieri --n 5 --level 4 --lambda 2,3,4,2,2 --i 1");
    std::vector<int> shifts;
    for (auto& row : j.at("result")) shifts.push_back(row.at("shift").get<int>());
    EXPECT_EQ(shifts, (std::vector<int>{0, 1, 2, 3}));
    const auto one = run_json("pieri --n 1 --level 1 --lambda 0 --i 1");
    ASSERT_EQ(one.at("result").size(), 1u);
    EXPECT_EQ(one["result"][0].at("label"), "ϖ");
}

TEST(Cli, TextOutput) {
    const auto r = run("pieri --n 3 --level 5 --lambda 2,3,4 --i 2");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("q^2"), std::string::npos);
    const auto s = run("socle --n 5 --level 5 --lambda 4,3,5,1,3");
    EXPECT_EQ(s.code, 0);
    EXPECT_NE(s.out.find("ϖ2+ϖ3+ϖ4+ϖ5"), std::string::npos);
}

TEST(Cli, Socle) {
    const auto j = run_json("socle --n 5 --level 5 --lambda 4,3,5,1,3");
    EXPECT_EQ(j["result"].at("affine_label"), "Λ0+Λ2+Λ3+Λ4+Λ5");
}

TEST(Cli, Dominantize) {
    const auto j = run_json("dominantize --n 7 --affine 1,1,0,0,0,0,1,0 --eps 4,5,8");
    EXPECT_EQ(j["result"].at("label"), "Λ0+Λ3+Λ7");
}

TEST(Cli, MultsAndSeries) {
    EXPECT_EQ(run_json("mults --n 1 --level 2 --lambda 2")["result"], nlohmann::json::parse(R"({"2ϖ":1,"0":1})"));
    const auto s = run_json("series --n 1 --level 1 --mu 0 --bound 3")["result"];
    EXPECT_EQ(s.size(), 1u);
}

TEST(Cli, CacheDirReusesTables) {
    const std::string dir = ::testing::TempDir() + "demazure-cli-cache";
    const auto a = run_json("mults --n 2 --level 2 --lambda 2,1 --cache-dir " + dir)["result"];
    const auto b = run_json("mults --n 2 --level 2 --lambda 2,1 --cache-dir " + dir)["result"];
    EXPECT_EQ(a, b);
}

TEST(Cli, RsetAndCrystal) {
    EXPECT_EQ(run_json("rset --n 3 --level 5 --lambda 2,3,4 --i 2")["result"].size(), 4u);
    const auto c = run_json("crystal --n 2 --level 2 --lambda 2,2 --i 1")["result"];
    EXPECT_FALSE(c.dump().empty());
}

TEST(Cli, VerifySuites) {
    EXPECT_EQ(run("verify --suite pieri-examples").code, 0);
    EXPECT_EQ(run("verify --suite sl3-crystal --max-level 3").code, 0);
    EXPECT_EQ(run("verify --suite poset --n 3 --max-coord 2 --max-level 3").code, 0);
    // the full-box recursion fails on sl3 at level 2; exit code 1
    EXPECT_EQ(run("verify --suite recursion --n 2 --max-level 2").code, 1);
    EXPECT_EQ(run("verify --suite recursion --n 2 --max-level 2 --lemma-domain").code, 0);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("verify --suite nope").code, 2);
    EXPECT_EQ(run("pieri --n 3 --level 5 --lambda 2,3 --i 2").code, 2);
    EXPECT_EQ(run("pieri --n 3 --level 5 --lambda 2,x,4 --i 2").code, 2);
    EXPECT_EQ(run("pieri --n 3 --level 5").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
}
