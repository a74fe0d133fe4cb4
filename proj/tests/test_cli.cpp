#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "intdist/cli.hpp"
#include "intdist/io.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = intdist::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(INTDIST_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, CertifyAvoidingExitsZero) {
  auto r = run({"certify", "--input", data("two_balls_avoiding.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  auto j = intdist::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "certified_avoiding");
}

TEST(Cli, CertifyViolatingExitsOneWithWitness) {
  auto r = run({"certify", "--input", data("two_balls_violating.json")});
  EXPECT_EQ(r.code, 1) << r.err;
  auto j = intdist::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "violation");
  ASSERT_FALSE(j["witness"].is_null());
  EXPECT_NEAR(j["witness"]["distance"].get<double>(), j["witness"]["integer"].get<double>(), 1e-9);
}

TEST(Cli, MalformedInputExitsTwo) {
  auto r = run({"certify", "--input", data("malformed.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("byte"), std::string::npos) << r.err;
}

TEST(Cli, SchemaErrorNamesPath) {
  const char* path = "cli_schema_tmp.json";
  std::ofstream(path) << R"({"dimension":2,"components":[{"center":[0,0],"ball_diameter":"x"}]})";
  auto r = run({"certify", "--input", path});
  std::remove(path);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("$.components[0].ball_diameter"), std::string::npos) << r.err;
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"--bits", "3", "volumes", "--table1"}).code, 2);
  EXPECT_EQ(run({"build", "--construction", "pentagon", "--k", "1"}).code, 2);
}

TEST(Cli, InconclusivePipelineExitsThree) {
  auto r = run({"pipeline", "--construction", "pentagon", "--epsilon", "0.00001", "--k-max", "50"});
  EXPECT_EQ(r.code, 3) << r.out << r.err;
}

TEST(Cli, SameSeedSameBytes) {
  std::vector<std::string> a{"--seed", "7", "certify", "--input", data("two_balls_violating.json"), "--method", "all"};
  auto r1 = run(a), r2 = run(a);
  EXPECT_EQ(r1.code, r2.code);
  EXPECT_EQ(r1.out, r2.out);
}

TEST(Cli, Table1) {
  auto r = run({"volumes", "--table1"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "kind,d,n,value,precision_bits,seed");
  int rows = 0;
  bool saw_disc_slice = false;
  while (std::getline(in, line)) {
    ++rows;
    if (line.rfind("slice,2,", 0) == 0) {
      const double want = std::acos(-1.0) / 12 + std::sqrt(3.0) / 8;
      std::istringstream cells(line);
      std::string cell;
      for (int i = 0; i < 4; ++i) std::getline(cells, cell, ',');
      double got = std::stod(cell);
      EXPECT_NEAR(got, want, 1e-12) << line;
      saw_disc_slice = true;
    }
  }
  EXPECT_EQ(rows, 8);
  EXPECT_TRUE(saw_disc_slice);
}

TEST(Cli, SearchK) {
  auto r = run({"search-k", "--p", "5", "--epsilon", "0.0045", "--form", "pentagon", "--k-max", "100", "--max-hits", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(intdist::json::parse(r.out)["hits"][0]["k"], 6);
  EXPECT_EQ(run({"search-k", "--p", "5", "--epsilon", "0.0001", "--form", "pentagon", "--k-max", "10"}).code, 1);
}

TEST(Cli, CheckIndependence) {
  auto r = run({"check-independence", "--values", "1,sqrt(3),2"});
  EXPECT_EQ(r.code, 1);
  auto rel = intdist::json::parse(r.out)["relation"];
  ASSERT_TRUE(rel.is_array());
  EXPECT_EQ(rel[0].get<long>() * 1 + rel[2].get<long>() * 2, 0);
  EXPECT_EQ(rel[1], 0);
  auto q = run({"--bits", "512", "check-independence", "--p", "7"});
  EXPECT_EQ(q.code, 0);
  EXPECT_TRUE(intdist::json::parse(q.out)["relation"].is_null());
}

TEST(Cli, BuildRoundTrips) {
  auto r = run({"build", "--construction", "pentagon", "--k", "6", "--epsilon", "0.01"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto P = intdist::union_from_string(r.out);
  EXPECT_EQ(P.dimension, 2u);
  EXPECT_EQ(P.components.size(), 5u);
  auto doc = intdist::json::parse(r.out), again = intdist::to_json(P);
  for (const char* key : {"dimension", "components", "shells"}) EXPECT_EQ(doc[key], again[key]) << key;
}

TEST(Cli, PipelinePentagon) {
  auto r = run({"pipeline", "--construction", "pentagon", "--epsilon", "0.01", "--k-max", "200"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = intdist::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "certified_avoiding");
  EXPECT_EQ(j["k"], 6);
}

TEST(Cli, PipelineCsv) {
  auto r = run({"pipeline", "--construction", "one-d", "--n", "3", "--variant", "equal", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "construction,verdict,k,volume,paper_limit,gap,seed");
}

TEST(Cli, RenderWritesSvg) {
  const char* path = "cli_render_tmp.svg";
  auto r = run({"--out", path, "render", "--construction", "pentagon", "--k", "6", "--epsilon", "0.01"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::string svg = slurp(path);
  std::remove(path);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  size_t circles = 0;
  for (size_t p = 0; (p = svg.find("<circle", p)) != std::string::npos; ++p) ++circles;
  EXPECT_EQ(circles, 5u);
}

TEST(Cli, RenderRejectsThreeDimensions) {
  EXPECT_EQ(run({"render", "--construction", "two-slices", "--d", "3", "--k", "10"}).code, 2);
}

TEST(Cli, BinaryExitCodes) {
  const std::string bin = INTDIST_CLI_PATH;
  auto sh = [&](const std::string& args) {
    int s = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(s);
  };
  EXPECT_EQ(sh("certify --input " + data("two_balls_avoiding.json")), 0);
  EXPECT_EQ(sh("certify --input " + data("two_balls_violating.json")), 1);
  EXPECT_EQ(sh("certify --input " + data("malformed.json")), 2);
}
