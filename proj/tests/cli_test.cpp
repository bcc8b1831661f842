#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "mec/cli.hpp"
#include "mec/io.hpp"
#include "mec/oracle.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;

    std::string first_line() const { return out.substr(0, out.find('\n')); }
};

Result run(std::vector<std::string> args, const std::string& input = {})
{
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = mec::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() / ("mec_cli_" + std::to_string(::getpid()) + "_" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text)
    {
        const fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    static std::string slurp(const std::string& p)
    {
        std::ifstream f(p);
        return {std::istreambuf_iterator<char>(f), {}};
    }

    fs::path dir_;
};

const std::string c5 = "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n";
const std::string k4 = "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n";
const std::string k13 = "p edge 4 3\ne 1 2\ne 1 3\ne 1 4\n";

} // namespace

TEST_F(CliTest, SolveCycle)
{
    const std::string g = write("c5.graph", c5);
    const Result r = run({"solve", "--k", "5", g, "-o", path("w.coloring")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.first_line(), "YES k=5");
    const Result v = run({"verify", g, path("w.coloring")});
    EXPECT_EQ(v.code, 0);
    EXPECT_EQ(v.first_line(), "VALID colors=5");
}

TEST_F(CliTest, SolveNoAndThreads)
{
    const std::string g = write("k4.graph", k4);
    const Result r = run({"solve", "--k", "4", "--threads", "3", g});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "NO\n");
}

TEST_F(CliTest, VerifyStarReportsCenter)
{
    const std::string g = write("k13.graph", k13);
    const std::string bad = write("bad.coloring", "s coloring 3\nl 1 2 1\nl 1 3 2\nl 1 4 3\n");
    const Result r = run({"verify", "--q", "2", g, bad});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "INVALID\nviolations: 1\n");
    EXPECT_EQ(run({"verify", "--q", "3", g, bad}).code, 0);
}

TEST_F(CliTest, SigmaOfK4)
{
    const std::string g = write("k4.graph", k4);
    const Result r = run({"sigma", g, "-o", path("s.coloring")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.first_line(), "sigma=3");
    EXPECT_EQ(run({"verify", g, path("s.coloring")}).first_line(), "VALID colors=3");
    EXPECT_EQ(run({"sigma", "--frontier", g}).first_line(), "sigma=3");
}

TEST_F(CliTest, EdgeLimitRefusalAndOverride)
{
    std::string big = "p edge 14 13\n";
    for (int v = 2; v <= 14; ++v)
        big += "e 1 " + std::to_string(v) + "\n";
    const std::string g = write("big.graph", big);
    EXPECT_EQ(run({"sigma", g}).code, 3);
    EXPECT_EQ(run({"sigma", "--edge-limit", "13", g}).first_line(), "sigma=2");
    ::setenv("MEC_EDGE_LIMIT", "20", 1);
    EXPECT_EQ(run({"sigma", g}).code, 0);
    ::unsetenv("MEC_EDGE_LIMIT");
}

TEST_F(CliTest, FormatErrorsAndUsage)
{
    const std::string bad = write("bad.graph", "p edge 2 1\ne 1 1\n");
    const Result r = run({"solve", "--k", "1", bad});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("line 2"), std::string::npos);
    EXPECT_EQ(run({"solve", "--k", "1", path("missing.graph")}).code, 2);
    EXPECT_EQ(run({"solve", path("x")}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST_F(CliTest, ReadsStandardInput)
{
    const Result r = run({"solve", "--k", "5", "-"}, c5);
    EXPECT_EQ(r.first_line(), "YES k=5");
}

TEST_F(CliTest, GeneratedTwoFactorIsSolvable)
{
    const Result gen = run({"gen", "two-factor", "--n", "6", "--seed", "4"});
    ASSERT_EQ(gen.code, 0);
    const Result r = run({"solve", "--k", "6", "-"}, gen.out);
    EXPECT_EQ(r.first_line(), "YES k=6");
    EXPECT_EQ(run({"gen", "two-factor", "--n", "6", "--seed", "4"}).out, gen.out);
}

TEST_F(CliTest, GenRandomIsDeterministic)
{
    const Result a = run({"gen", "random", "--n", "9", "--p", "0.3", "--seed", "42"});
    const Result b = run({"gen", "random", "--n", "9", "--p", "0.3", "--seed", "42"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.first_line().rfind("p edge 9 ", 0), 0u);
}

TEST_F(CliTest, GenMcisWritesAnnotatedAndPendantGraphs)
{
    const std::string inst = write("i.mcis", "p mcis 2 1 2\nv 1 1\nv 2 2\ne 1 2\n");
    const Result a = run({"gen", "mcis", inst});
    ASSERT_EQ(a.code, 0);
    const mec::AnnotatedGraph parsed = mec::load_annotated(a.out);
    EXPECT_EQ(parsed.graph.num_vertices(), 10);
    EXPECT_EQ(parsed.threshold, 3);
    ASSERT_TRUE(parsed.f.has_value());
    const Result p = run({"gen", "mcis", "--pendant", inst});
    const mec::AnnotatedGraph plain = mec::load_annotated(p.out);
    EXPECT_FALSE(plain.f.has_value());
    EXPECT_EQ(plain.graph.num_vertices(), 10 + 7);
    EXPECT_EQ(plain.threshold, 3 + 7);
}

TEST_F(CliTest, ApproxWitnessVerifies)
{
    const std::string g = write("k4.graph", k4);
    const Result r = run({"approx", g, "-o", path("a.coloring")});
    EXPECT_EQ(r.first_line(), "APPROX colors=3");
    EXPECT_EQ(run({"verify", g, path("a.coloring")}).code, 0);
}

TEST_F(CliTest, KernelSolveLiftVerify)
{
    // Two hubs; every other vertex hangs off hub 1, the odd ones off hub 2 as well.
    std::string body;
    int edges = 0;
    for (int v = 3; v <= 30; ++v) {
        body += "e 1 " + std::to_string(v) + "\n";
        ++edges;
        if (v % 2 == 1) {
            body += "e 2 " + std::to_string(v) + "\n";
            ++edges;
        }
    }
    const std::string g = write("hub.graph", "p edge 30 " + std::to_string(edges) + "\n" + body);
    const Result k = run({"kernel", "--rule", "standard", "--k", "4", g, "-o", path("r.graph"), "--lift",
                          path("r.lift")});
    ASSERT_EQ(k.code, 0) << k.err;
    EXPECT_EQ(k.first_line().rfind("REDUCED ", 0), 0u);
    const Result s = run({"solve", "--k", "4", path("r.graph"), "-o", path("r.coloring")});
    ASSERT_EQ(s.first_line(), "YES k=4");
    const Result l = run({"lift", g, path("r.graph"), path("r.lift"), path("r.coloring"), "-o", path("o.coloring")});
    ASSERT_EQ(l.code, 0) << l.err;
    EXPECT_EQ(run({"verify", g, path("o.coloring")}).first_line(), "VALID colors=4");
    EXPECT_EQ(run({"solve", "--k", "4", "--kernelize", g}).first_line(), "YES k=4");
}

TEST_F(CliTest, DualAndC4Rules)
{
    const std::string cycle = write("c5.graph", c5);
    const Result d = run({"kernel", "--rule", "dual", "--k", "0", cycle});
    EXPECT_EQ(d.code, 0);
    EXPECT_EQ(d.first_line(), "REDUCED n=0 m=0 k=0 threshold=0");
    const std::string c4 = write("c4.graph", "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n");
    const Result r = run({"kernel", "--rule", "c4free", "--k", "3", c4});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("4-cycle"), std::string::npos);
    EXPECT_EQ(run({"kernel", "--rule", "standard", "--k", "9", cycle}).out, "NO\n");
}
