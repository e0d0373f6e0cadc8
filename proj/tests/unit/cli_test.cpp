#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "json_io.hpp"

using interlace::cli::run_cli;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("interlace_cli_" + name);
  std::ofstream(path) << body;
  return path.string();
}

const char* kTwoPoint = R"({"labels":["p","q"],"dist":[["0","2"],["2","0"]]})";

}  // namespace

TEST(Cli, DistExamples) {
  EXPECT_EQ(run({"dist", "--a", "1,3", "--b", "2,4"}).out, "{\"d\":1,\"adjacent\":true}\n");
  EXPECT_EQ(run({"dist", "--a", "", "--b", "5"}).out, "{\"d\":1,\"adjacent\":true}\n");
  EXPECT_EQ(run({"dist", "--a", "1,2", "--b", "1,2"}).out, "{\"d\":0,\"adjacent\":false}\n");
}

TEST(Cli, OracleOnlyAddsAField) {
  const auto plain = Json::parse(run({"dist", "--a", "1,2,6", "--b", "3,4"}).out);
  const auto checked = run({"dist", "--a", "1,2,6", "--b", "3,4", "--oracle"});
  ASSERT_EQ(checked.code, 0);
  auto j = Json::parse(checked.out);
  EXPECT_EQ(j["bfs"], plain["d"]);
  j.erase("bfs");
  EXPECT_EQ(j, plain);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"dist", "--a", "1,x", "--b", "2"}).code, 2);
  EXPECT_EQ(run({"dist", "--a", "3,1", "--b", "2"}).code, 2);
  EXPECT_EQ(run({"dist", "--a", "1"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({"schreier", "member", "--alpha", "w^", "--set", "1"}).code, 2);
  EXPECT_EQ(run({"embed", "--input", "/nonexistent/metric.json", "--epsilon", "1/2"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Geodesic) {
  const auto r = run({"geodesic", "--a", "1,2,3", "--b", "2,3,4"});
  ASSERT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["length"], j["d"]);
  EXPECT_EQ(j["path"].size(), j["length"].get<std::size_t>() + 1);
  for (const auto& v : j["path"]) EXPECT_EQ(v.size(), 3U);
}

TEST(Cli, EmbedAndVerifyRoundTrip) {
  const auto metric = temp_file("m2.json", kTwoPoint);
  const auto out_path = (std::filesystem::temp_directory_path() / "interlace_cli_e2.json").string();
  const auto r = run({"embed", "--input", metric, "--epsilon", "1/2", "--output", out_path});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["k"], 7);
  EXPECT_EQ(j["scale"], "2");
  EXPECT_EQ(j["distortion"], "1");
  EXPECT_EQ(j["certified"], true);

  // Re-parse and re-emit gives the same value.
  const auto parsed = interlace::cli::embedding_from_json(j);
  auto again = interlace::cli::to_json(parsed);
  EXPECT_EQ(again, j);

  const auto v = run({"verify", "--input", metric, "--embedding", out_path, "--jobs", "2"});
  EXPECT_EQ(v.code, 0) << v.err;
  EXPECT_EQ(Json::parse(v.out)["passed"], true);

  const auto verified = run({"embed", "--input", metric, "--epsilon", "1/2", "--verify"});
  auto vj = Json::parse(verified.out);
  EXPECT_EQ(vj["verification"]["passed"], true);
  vj.erase("verification");
  EXPECT_EQ(vj, j);
}

TEST(Cli, EvenEmbeddingMatchesWorkedExample) {
  const auto metric = temp_file("m2even.json", kTwoPoint);
  const auto j = Json::parse(run({"embed", "--input", metric, "--even"}).out);
  EXPECT_EQ(j["sets"]["p"], Json::parse("[1,2,3,4,7,8,9]"));
  EXPECT_EQ(j["sets"]["q"], Json::parse("[1,2,4,5,6,7,8]"));
}

TEST(Cli, EmbedErrors) {
  const auto metric = temp_file("m2err.json", kTwoPoint);
  EXPECT_EQ(run({"embed", "--input", metric, "--epsilon", "2"}).code, 2);
  EXPECT_EQ(run({"embed", "--input", metric, "--epsilon", "0"}).code, 2);
  EXPECT_EQ(run({"embed", "--input", metric}).code, 2);
  const auto bad = temp_file("bad.json", R"({"labels":["a","b","c"],"dist":[["0","1","3"],["1","0","1"],["3","1","0"]]})");
  const auto r = run({"embed", "--input", bad, "--epsilon", "1/2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("TRIANGLE_VIOLATION"), std::string::npos) << r.err;
  const auto odd = temp_file("odd.json", R"({"labels":["a","b"],"dist":[["0","3"],["3","0"]]})");
  EXPECT_EQ(run({"embed", "--input", odd, "--even"}).code, 1);
}

TEST(Cli, TamperedEmbeddingFailsVerify) {
  const auto metric = temp_file("m2t.json", kTwoPoint);
  auto j = Json::parse(run({"embed", "--input", metric, "--epsilon", "1/2"}).out);
  j["sets"]["p"].push_back(100);
  const auto tampered = temp_file("tampered.json", j.dump());
  const auto r = run({"verify", "--input", metric, "--embedding", tampered});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(Json::parse(r.out)["passed"], false);

  j["sets"].erase("q");
  const auto missing = temp_file("missing.json", j.dump());
  EXPECT_EQ(run({"verify", "--input", metric, "--embedding", missing}).code, 1);
}

TEST(Cli, Schreier) {
  const auto m = Json::parse(run({"schreier", "member", "--alpha", "w", "--set", "3,4,5"}).out);
  EXPECT_EQ(m["member"], true);
  EXPECT_EQ(Json::parse(run({"schreier", "member", "--alpha", "1", "--set", "1,2"}).out)["member"], false);
  const auto e = Json::parse(run({"schreier", "enum", "--alpha", "1", "--n", "3"}).out);
  EXPECT_EQ(e["count"], 5);
  const auto s = run({"schreier", "spread", "--alpha", "1", "--beta", "2", "--n", "3"});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(Json::parse(s.out)["verified"], true);
  EXPECT_EQ(run({"schreier", "spread", "--alpha", "2", "--beta", "2", "--n", "3"}).code, 2);
  const auto w = run({"schreier", "member", "--alpha", "1+w", "--set", "2"});
  EXPECT_EQ(w.code, 0);
  EXPECT_NE(w.err.find("warning"), std::string::npos);
  EXPECT_EQ(run({"schreier", "enum", "--alpha", "w", "--n", "12", "--budget", "5"}).code, 1);
}

TEST(Cli, Rank) {
  const auto tree = temp_file("t.json", "[[],[1]]");
  EXPECT_EQ(Json::parse(run({"rank", "--tree", tree}).out)["rank"], 2);
  const auto open = temp_file("open.json", "[[],[1,2]]");
  EXPECT_EQ(run({"rank", "--tree", open}).code, 1);
  const auto vine = temp_file("v.json", R"([
    {"ground":[],"alphabet":["0","1"],"values":{"":"a"}},
    {"ground":[3],"alphabet":["0","1"],"values":{"0":"a","1":"b"}}])");
  EXPECT_EQ(Json::parse(run({"rank", "--vine", vine}).out)["rank"], 2);
  const auto broken = temp_file("vbad.json", R"([{"ground":[3],"alphabet":["0","1"],"values":{"0":"a","1":"b"}}])");
  EXPECT_EQ(run({"rank", "--vine", broken}).code, 1);
  EXPECT_EQ(Json::parse(run({"rank", "--schreier", "0", "--n", "5"}).out)["rank"], 2);
  EXPECT_EQ(run({"rank"}).code, 2);
}

TEST(Cli, GlueDemoIsSeeded) {
  const auto a = run({"--seed", "5", "glue-demo", "--samples", "200", "--ladder", "12"});
  const auto b = run({"glue-demo", "--samples", "200", "--ladder", "12", "--seed", "5"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto j = Json::parse(a.out);
  EXPECT_EQ(j["violation_count"], 0);
  EXPECT_EQ(j["pairs"].size(), 200U);
  const auto bad = run({"glue-demo", "--samples", "100", "--factor", "1/100", "--summary"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_GT(Json::parse(bad.out)["violation_count"].get<int>(), 0);
}

TEST(Cli, Points) {
  const auto j = Json::parse(run({"points", "--alpha", "0", "--n", "2", "--m", "1", "--distances"}).out);
  EXPECT_EQ(j["count"], 5);
  EXPECT_EQ(j["d_inf"].size(), 5U);
}

TEST(Cli, PrettyIsATable) {
  const auto r = run({"--pretty", "dist", "--a", "1,3", "--b", "2,4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("adjacent"), std::string::npos);
  EXPECT_EQ(r.out.find('{'), std::string::npos);
}

TEST(Cli, BunchJsonRoundTrip) {
  const auto j = Json::parse(R"({"ground":[2,5],"alphabet":["0","1/2"],
    "values":{"0,0":"a","0,1/2":"b","1/2,0":"c","1/2,1/2":"d"}})");
  const auto b = interlace::cli::bunch_from_json(j);
  EXPECT_EQ(interlace::cli::bunch_from_json(interlace::cli::to_json(b)), b);
}
