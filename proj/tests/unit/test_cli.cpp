#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "tangles/io.hpp"
#include "tangles/models.hpp"

namespace tangles::cli {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir = fs::temp_directory_path() / (std::string("tangles_cli_") + info->name());
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }
  std::string path(const std::string& name) const { return (dir / name).string(); }
  fs::path dir;
};

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"cluster", "--input", "/nonexistent.csv", "-a", "3"}).code, kExitUsage);
  EXPECT_EQ(run({"bounds", "thm2", "--n", "100"}).code, kExitUsage);
  EXPECT_EQ(run({"generate", "gmm", "--centers", "0,0;1", "-o", path("g")}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST_F(CliTest, DataErrors) {
  write_text_file(path("bad.csv"), "0,1\n1,2\n");
  const auto r = run({"cluster", "--input", path("bad.csv"), "-a", "1", "-o", path("out")});
  EXPECT_EQ(r.code, kExitData);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);

  write_text_file(path("config.txt"), "colour = red\n");
  EXPECT_EQ(run({"bench", "--config", path("config.txt"), "-o", path("b")}).code, kExitUsage);
}

TEST_F(CliTest, ZeroAgreementIsUsage) {
  ASSERT_EQ(run({"generate", "mindsets", "--n", "30", "--m", "6", "-o", path("g")}).code, kExitOk);
  EXPECT_EQ(run({"cluster", "--input", path("g/answers.csv"), "-a", "0"}).code, kExitUsage);
}

TEST_F(CliTest, GenerateThenClusterMindsets) {
  ASSERT_EQ(run({"generate", "mindsets", "--n", "150", "--m", "20", "--k", "3", "--p", "0", "--seed", "4", "-o",
                 path("gen")})
                .code,
            kExitOk);
  for (const char* name : {"answers.csv", "mindsets.csv", "labels.csv"}) {
    EXPECT_TRUE(fs::exists(dir / "gen" / name)) << name;
  }
  const auto r = run({"cluster", "--input", path("gen/answers.csv"), "-a", "16", "--truth",
                      path("gen/labels.csv"), "-o", path("out")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("tangles: 3"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("nmi: 1\n"), std::string::npos) << r.out;
  for (const char* name : {"labels.csv", "soft.csv", "tree.json", "condensed.json", "dendrogram.json"}) {
    EXPECT_TRUE(fs::exists(dir / "out" / name)) << name;
  }
  const auto tree = nlohmann::json::parse(read_text_file(path("out/tree.json")));
  EXPECT_EQ(tree.at("config").at("agreement"), 16);
  EXPECT_EQ(tree.at("schema_version"), kSchemaVersion);
  EXPECT_EQ(read_labels_file(path("out/labels.csv")).size(), 150U);
}

TEST_F(CliTest, OutputsAreByteIdenticalAcrossRunsAndThreads) {
  ASSERT_EQ(run({"generate", "sbm", "--n", "80", "--p", "0.4", "--q", "0.05", "--seed", "2", "-o", path("gen")}).code,
            kExitOk);
  std::vector<std::string> base{"cluster", "--input", path("gen/graph.txt"), "--format", "edge-list",
                                "-a", "10", "--cuts", "12", "--seed", "5", "--normalize", "--prune", "0"};
  auto with = [&](std::vector<std::string> extra) {
    std::vector<std::string> args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    return args;
  };
  ASSERT_EQ(run(with({"--threads", "1", "-o", path("t1")})).code, kExitOk);
  ASSERT_EQ(run(with({"--threads", "4", "-o", path("t4")})).code, kExitOk);
  ASSERT_EQ(run(with({"--threads", "1", "-o", path("again")})).code, kExitOk);
  for (const char* name : {"labels.csv", "soft.csv", "tree.json", "condensed.json", "dendrogram.json"}) {
    const std::string reference = read_text_file(path(std::string("t1/") + name));
    EXPECT_EQ(reference, read_text_file(path(std::string("t4/") + name))) << name;
    EXPECT_EQ(reference, read_text_file(path(std::string("again/") + name))) << name;
  }
}

TEST_F(CliTest, GenerateIsDeterministic) {
  ASSERT_EQ(run({"generate", "gmm", "--n", "100", "--seed", "3", "-o", path("a")}).code, kExitOk);
  ASSERT_EQ(run({"generate", "gmm", "--n", "100", "--seed", "3", "-o", path("b")}).code, kExitOk);
  ASSERT_EQ(run({"generate", "gmm", "--n", "100", "--seed", "4", "-o", path("c")}).code, kExitOk);
  EXPECT_EQ(read_text_file(path("a/points.csv")), read_text_file(path("b/points.csv")));
  EXPECT_NE(read_text_file(path("a/points.csv")), read_text_file(path("c/points.csv")));
  const auto r = run({"cluster", "--input", path("a/points.csv"), "--format", "points", "-a", "8", "-o", path("out")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
}

TEST_F(CliTest, BoundsMatchLibrary) {
  const auto r = run({"bounds", "thm2", "--n", "100", "--p", "0.3", "--q", "0.05", "--a", "16"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  const auto range = thm2_psi_range(100, 0.3, 0.05, 16);
  EXPECT_EQ(j.at("lower").get<double>(), range.lower);
  EXPECT_EQ(j.at("upper").get<double>(), range.upper);
  EXPECT_EQ(j.at("admissible").get<bool>(), range.admissible);
  ASSERT_TRUE(j.at("interval").is_array());

  const auto t1 = nlohmann::json::parse(run({"bounds", "thm1", "--n", "3000", "--m", "40", "--k", "3", "--p", "0",
                                             "--a", "500"})
                                            .out);
  const auto b = thm1_bounds(3000, 40, 3, 0, 500);
  EXPECT_EQ(t1.at("prob_missing").get<double>(), b.prob_missing);
  EXPECT_EQ(t1.at("total").get<double>(), b.total());

  ASSERT_EQ(run({"bounds", "gauss", "--mu", "0,0", "--nu", "4,0", "--sigma", "1", "--n", "1000", "-o",
                 path("g.json")})
                .code,
            kExitOk);
  const auto g = nlohmann::json::parse(read_text_file(path("g.json")));
  const auto range_g = thm_gauss_agreement_range({0, 0}, {4, 0}, 1.0, 1000);
  EXPECT_EQ(g.at("a_min_uniqueness").get<double>(), range_g.a_min_uniqueness);
  EXPECT_EQ(g.at("axis").get<std::size_t>(), range_g.axis);
}

TEST_F(CliTest, OracleAgrees) {
  ASSERT_EQ(run({"generate", "mindsets", "--n", "40", "--m", "10", "--p", "0.15", "--seed", "1", "-o", path("g")}).code,
            kExitOk);
  const auto r = run({"oracle", "--input", path("g/answers.csv"), "-a", "4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.at("match").get<bool>());
  EXPECT_EQ(j.at("brute_force_tangles"), j.at("tree_tangles"));
}

TEST_F(CliTest, BenchWritesReportAndPlot) {
  write_text_file(path("exp.txt"), "n = 60\nm = 10\nseeds = 2\nsweep = p: 0, 0.1\n");
  const auto r = run({"bench", "--config", path("exp.txt"), "-o", path("bench"), "--threads", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto report = nlohmann::json::parse(read_text_file(path("bench/report.json")));
  EXPECT_EQ(report.at("rows").size(), 4U);
  EXPECT_FALSE(report.at("config").contains("threads"));
  EXPECT_EQ(read_text_file(path("bench/plot.csv")).rfind("x,mean,std,tangle_count\n", 0), 0U);
}

}  // namespace
}  // namespace tangles::cli
