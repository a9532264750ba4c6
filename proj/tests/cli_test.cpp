#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "llyconn/cli.hpp"

using namespace llyconn;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli_main(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, GenerateThenVerifySharpExample) {
  auto gen = run({"generate", "sharp-example", "10", "5"});
  ASSERT_EQ(gen.code, 0);
  EXPECT_NE(gen.out.find("#@mark x 0"), std::string::npos);
  auto ver = run({"verify", "--suite", "thm_1_6"}, gen.out);
  EXPECT_EQ(ver.code, 0) << ver.out << ver.err;
  EXPECT_NE(ver.out.find("PASS"), std::string::npos);
}

TEST(Cli, CycleCurvatureCsv) {
  auto gen = run({"generate", "cycle", "6"});
  auto table = run({"curvature", "--all-edges", "--format", "csv"}, gen.out);
  ASSERT_EQ(table.code, 0);
  EXPECT_EQ(table.out,
            "x,y,kappa,method\n0,1,0,flow-limit\n0,5,0,flow-limit\n1,2,0,flow-limit\n"
            "2,3,0,flow-limit\n3,4,0,flow-limit\n4,5,0,flow-limit\n");
}

TEST(Cli, MalformedInputExitsTwo) {
  auto path = std::filesystem::temp_directory_path() / "llyconn_cli_malformed.txt";
  std::ofstream(path) << "0 0\n";
  auto r = run({"verify", "--input", path.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 1"), std::string::npos);
  std::filesystem::remove(path);
  EXPECT_EQ(run({"verify", "--input", "/nonexistent/graph.txt"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"generate", "cycle"}).code, 2);
  EXPECT_EQ(run({"generate", "cycle", "two"}).code, 2);
  EXPECT_EQ(run({"generate", "sharp-example", "11", "5"}).code, 2);
  EXPECT_EQ(run({"generate", "moebius", "4"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "thm_9_9"}, "0 1\n").code, 2);
  EXPECT_EQ(run({"curvature", "--pair", "0", "2"}, "0 1\n2 3\n").code, 2);
  EXPECT_EQ(run({"curvature", "--format", "yaml"}, "0 1\n").code, 2);
}

TEST(Cli, CurvaturePairAndScale) {
  auto bowtie = run({"generate", "join2kn", "2", "1"}).out;
  auto pair = run({"curvature", "--pair", "0", "2", "--format", "csv"}, bowtie);
  EXPECT_EQ(pair.out, "x,y,kappa,method\n0,2,1/2,flow-limit\n");
  auto scale = run({"curvature", "--scale", "2", "--format", "json"}, bowtie);
  auto j = nlohmann::json::parse(scale.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["kappa"]["num"], 1);
  EXPECT_EQ(j[0]["kappa"]["den"], 2);
  auto none = run({"curvature", "--scale", "2", "--format", "csv"}, run({"generate", "complete", "4"}).out);
  EXPECT_EQ(none.out, "x,y,kappa,method\n");
}

TEST(Cli, Connectivity) {
  auto bowtie = run({"generate", "join2kn", "2", "1"}).out;
  auto text = run({"connectivity"}, bowtie);
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("vertex_connectivity 1"), std::string::npos);
  EXPECT_NE(text.out.find("separator 4"), std::string::npos);
  EXPECT_NE(text.out.find("edge_connectivity 2"), std::string::npos);
  auto j = nlohmann::json::parse(run({"connectivity", "--vertex", "--format", "json"}, bowtie).out);
  EXPECT_EQ(j["vertex"]["value"], 1);
  EXPECT_FALSE(j.contains("edge"));
}

TEST(Cli, GenerateFamilies) {
  auto h = parse_edge_list(run({"generate", "hamming", "2", "3"}).out);
  EXPECT_EQ(h.n, 9);
  EXPECT_EQ(h.labels[5], "(1,2)");
  EXPECT_EQ(parse_edge_list(run({"generate", "product", "3", "3"}).out).edges.size(), 18u);
  EXPECT_EQ(parse_edge_list(run({"generate", "kn-minus-matching", "6", "3"}).out).edges.size(), 12u);
  EXPECT_EQ(parse_edge_list(run({"generate", "path", "4"}).out).edges.size(), 3u);
  auto r1 = run({"generate", "random", "8", "1/2", "--seed", "42"});
  auto r2 = run({"generate", "random", "8", "1/2", "--seed", "42"});
  EXPECT_EQ(r1.code, 0);
  EXPECT_EQ(r1.out, r2.out);
  auto j = nlohmann::json::parse(run({"generate", "complete", "3", "--format", "json"}).out);
  EXPECT_EQ(j["n"], 3);
}

TEST(Cli, GenerateToFile) {
  auto path = std::filesystem::temp_directory_path() / "llyconn_cli_out.txt";
  EXPECT_EQ(run({"generate", "cycle", "5", "--out", path.string()}).code, 0);
  auto v = run({"verify", "--input", path.string(), "--suite", "whitney", "--format", "csv"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("whitney,"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, ReportIsDeterministic) {
  auto graph = run({"generate", "hamming", "2", "3"}).out;
  auto a = run({"report"}, graph), b = run({"report"}, graph);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(run({"report", "--format", "json"}, graph).out);
  EXPECT_EQ(j["curvature"].size(), 18u);
  EXPECT_EQ(j["checks"].size(), check_ids().size());
}

TEST(Cli, JsonInput) {
  auto doc = run({"generate", "complete", "4", "--format", "json"}).out;
  auto v = run({"verify", "--suite", "thm_1_5", "--format", "json"}, doc);
  EXPECT_EQ(v.code, 0);
  auto reports = parse_reports_json(v.out);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_EQ(reports[0].margin, 0);
}

TEST(Cli, AnyFailed) {
  TheoremReport ok, bad;
  bad.pass = false;
  EXPECT_FALSE(cli::any_failed({ok}));
  EXPECT_TRUE(cli::any_failed({ok, bad}));
}
