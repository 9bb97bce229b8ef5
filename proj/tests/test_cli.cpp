#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string &args) {
    const std::string cmd = std::string(MFMC_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    char buf[4096];
    for (std::size_t got; (got = fread(buf, 1, sizeof buf, pipe)) > 0;)
        r.out.append(buf, got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string sample(const char *name) { return std::string(MFMC_SAMPLES) + "/" + name; }

} // namespace

TEST(Cli, AnalyzeExample) {
    const auto r = run("analyze " + sample("example.in"));
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("9 generators of integral closure of Rees algebra: \n"), std::string::npos);
    EXPECT_NE(r.out.find("10 support hyperplanes: \n"), std::string::npos);
    EXPECT_NE(r.out.find("mfmc          true"), std::string::npos);
}

TEST(Cli, ReadsStdin) {
    const auto r = run("facets - < " + sample("example.in"));
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.rfind("10 support hyperplanes: \n", 0), 0u);
}

TEST(Cli, TriangleVerdictIsFalseButExitsZero) {
    const auto r = run("mfmc --tdi-bound 1 " + sample("triangle.edges"));
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("mfmc          false"), std::string::npos);
    EXPECT_NE(r.out.find("1/2 1/2 1/2"), std::string::npos);
    EXPECT_NE(r.out.find("alpha=1 1 1 LP 3/2 vs integral 1"), std::string::npos);
}

TEST(Cli, JsonOutputParses) {
    const auto r = run("analyze --format json --imax 2 " + sample("triangle.edges"));
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("verdict").at("mfmc"), false);
    EXPECT_EQ(j.at("powers").size(), 2u);
    const auto h = run("hilbert --format json " + sample("non_normal.in"));
    ASSERT_EQ(h.status, 0);
    EXPECT_EQ(nlohmann::json::parse(h.out).at("normal").at("value"), false);
}

TEST(Cli, SubcommandsSucceed) {
    for (const char *cmd : {"facets", "hilbert", "vertices", "powers", "mfmc"})
        EXPECT_EQ(run(std::string(cmd) + " " + sample("example.in")).status, 0) << cmd;
}

TEST(Cli, RerunsAreByteIdentical) {
    const auto a = run("analyze --tdi-bound 1 " + sample("example.in"));
    const auto b = run("analyze --tdi-bound 1 " + sample("example.in"));
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ExitCodes) {
    const std::string truncated = testing::TempDir() + "truncated.in";
    std::ofstream(truncated) << "4\n5\n1 0 0 0 1\n";
    EXPECT_EQ(run("analyze " + truncated).status, 2);
    EXPECT_EQ(run("analyze /nonexistent/input").status, 2);
    EXPECT_EQ(run("mfmc --minor-cap 10 " + sample("example.in")).status, 3);
}

TEST(Cli, Scan) {
    const auto r = run("scan --max-vertices 3 --max-edges 3");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("desk-scale evidence only"), std::string::npos);
    EXPECT_EQ(r.out.find("COUNTEREXAMPLE"), std::string::npos);
}
