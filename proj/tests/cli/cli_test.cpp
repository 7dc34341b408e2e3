#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "msmir/retrieval.hpp"
#include "msmir/smart_format.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int status;
    std::string output;
};

Result run(const std::string& args) {
    const std::string cmd = std::string(MSMIR_CLI_PATH) + " " + args + " 2>&1";
    Result r{0, {}};
    FILE* pipe = popen(cmd.c_str(), "r");
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.output.append(buf, n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t line_count(const fs::path& p) {
    const auto s = slurp(p);
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

class Cli : public ::testing::Test {
protected:
    static inline fs::path dir;

    static void SetUpTestSuite() {
        dir = fs::temp_directory_path() / ("msmir_cli_test_" + std::to_string(getpid()));
        fs::remove_all(dir);
        fs::create_directories(dir);
        const auto r = run("generate --documents 120 --topics 4 --vocabulary 600 --queries 30 --seed 3 --out " +
                           (dir / "gen").string());
        ASSERT_EQ(r.status, 0) << r.output;
    }
    static void TearDownTestSuite() { fs::remove_all(dir); }

    static std::string p(const std::string& name) { return (dir / name).string(); }
};

TEST_F(Cli, VersionReportsIndexFormat) {
    const auto r = run("--version");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.output.find("index format 1"), std::string::npos);
}

TEST_F(Cli, IndexIsByteIdenticalAcrossRunsAndThreads) {
    ASSERT_EQ(run("index " + p("gen/corpus.all") + " --kprime 2 --out " + p("a.idx")).status, 0);
    ASSERT_EQ(run("index " + p("gen/corpus.all") + " --kprime 2 --threads 3 --out " + p("b.idx")).status, 0);
    EXPECT_EQ(slurp(p("a.idx")), slurp(p("b.idx")));
}

TEST_F(Cli, IndexPrintsCorpusStatistics) {
    const auto r = run("index " + p("gen/corpus.all") + " --out " + p("v.idx") + " --stats " + p("stats.csv"));
    ASSERT_EQ(r.status, 0) << r.output;
    EXPECT_NE(r.output.find("documents 120"), std::string::npos);
    EXPECT_NE(r.output.find("avg_sentences_per_doc"), std::string::npos);
    EXPECT_EQ(slurp(p("stats.csv")).substr(0, 19), "documents,vocabular");
}

TEST_F(Cli, QueryLineCounts) {
    ASSERT_EQ(run("index " + p("gen/corpus.all") + " --out " + p("q.idx")).status, 0);
    ASSERT_EQ(run("query " + p("q.idx") + " --text \"some words here\" --out " + p("one.run")).status, 0);
    EXPECT_EQ(line_count(p("one.run")), 120u);
    ASSERT_EQ(run("query " + p("q.idx") + " --queries " + p("gen/queries.all") + " --out " + p("all.run")).status, 0);
    EXPECT_EQ(line_count(p("all.run")), 30u * 120u);
    const auto oov = run("query " + p("q.idx") + " --text \"zzzzqqq\"");
    EXPECT_EQ(oov.status, 0);
    EXPECT_NE(oov.output.find("warning"), std::string::npos);
    EXPECT_NE(oov.output.find(" 0 vsm"), std::string::npos);
}

TEST_F(Cli, EvalIdenticalRunsHaveNoWinners) {
    ASSERT_EQ(run("index " + p("gen/corpus.all") + " --out " + p("e.idx")).status, 0);
    ASSERT_EQ(run("query " + p("e.idx") + " --queries " + p("gen/queries.all") + " --out " + p("x.run")).status, 0);
    fs::copy_file(p("x.run"), p("y.run"), fs::copy_options::overwrite_existing);
    ASSERT_EQ(run("eval " + p("x.run") + " " + p("y.run") + " --qrels " + p("gen/qrels.txt") + " --out " + p("rep")).status, 0);
    EXPECT_EQ(slurp(p("rep/win_counts.csv")), "method,count,percent\nx,0,0\ny,0,0\n");
}

TEST_F(Cli, EvalPerfectRunScoresOne) {
    const auto qrels = msmir::read_qrels_file(p("gen/qrels.txt"));
    std::vector<msmir::RankedList> runs;
    for (const auto& [q, rel] : qrels.relevant) {
        msmir::RankedList list{q, {}};
        double score = 1.0;
        for (const auto& d : rel) list.entries.push_back({0, d, score -= 1e-3});
        runs.push_back(list);
    }
    {
        std::ofstream out(p("perfect.run"));
        msmir::write_trec_run(out, runs, "oracle");
    }
    const auto r = run("eval " + p("perfect.run") + " --qrels " + p("gen/qrels.txt") + " --out " + p("prep"));
    ASSERT_EQ(r.status, 0) << r.output;
    EXPECT_NE(r.output.find("perfect map=1 11pt=1"), std::string::npos) << r.output;
}

TEST_F(Cli, SpectrumAndLowrankCsv) {
    ASSERT_EQ(run("index " + p("gen/corpus.all") + " --kprime 1 --out " + p("s.idx")).status, 0);
    ASSERT_EQ(run("spectrum " + p("s.idx") + " -n 5 --out " + p("sigma.csv")).status, 0);
    EXPECT_EQ(line_count(p("sigma.csv")), 6u);
    const auto r = run("lowrank " + p("s.idx") + " -k 10");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.output.substr(0, 14), "k,distance\n10,");
}

TEST_F(Cli, SynthWindowKeepsCount) {
    const auto r = run("synth " + p("gen/corpus.all") + " -i 3 --mode window --qrels " + p("gen/qrels.txt") +
                       " --out " + p("med3"));
    ASSERT_EQ(r.status, 0) << r.output;
    EXPECT_EQ(msmir::parse_smart_file(p("med3/corpus.all")).size(), 120u);
    EXPECT_EQ(line_count(p("med3/constituents.csv")), 1u + 360u);
    EXPECT_TRUE(fs::exists(p("med3/qrels.txt")));
    ASSERT_EQ(run("synth " + p("gen/corpus.all") + " -i 2 --out " + p("rot2")).status, 0);
    EXPECT_EQ(msmir::parse_smart_file(p("rot2/corpus.all")).size(), 240u);
}

TEST_F(Cli, ErrorsExitNonzero) {
    {
        std::ofstream(p("empty.all")) << ".I 1\n";
        std::ofstream(p("bad.all")) << ".I 1\n.W\nok\nstray\n.X\n.I\n";
        std::ofstream(p("garbage.idx")) << "not an index";
    }
    EXPECT_NE(run("index " + p("empty.all") + " --out " + p("z.idx")).status, 0);
    const auto bad = run("index " + p("bad.all") + " --out " + p("z.idx"));
    EXPECT_NE(bad.status, 0);
    EXPECT_NE(bad.output.find("bad.all:6"), std::string::npos) << bad.output;
    EXPECT_NE(run("query " + p("garbage.idx") + " --text x").status, 0);
    EXPECT_NE(run("query " + p("missing.idx") + " --text x").status, 0);
    EXPECT_NE(run("index " + p("gen/corpus.all") + " --kprime 0 --out " + p("z.idx")).status, 0);
    EXPECT_NE(run("bogus").status, 0);
}

} // namespace
