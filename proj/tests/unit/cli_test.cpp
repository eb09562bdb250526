#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "json_io.hpp"
#include "tropbip/errors.hpp"
#include "tropbip/rational.hpp"

namespace cli = tropbip::cli;
using tropbip::io::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const char* kParams = R"({"a":[0,1],"A":[2,0],"b":[0,3],"B":[1,0]})";

}  // namespace

TEST(Cli, EvalPrintsMatrix) {
  const auto r = run({"eval", "--input", kParams});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "0 2\n1 0\n");
  const auto j = run({"eval", "--input", kParams, "--format", "json"});
  EXPECT_EQ(json::parse(j.out), json::parse(R"({"m":2,"n":2,"entries":[[0,2],[1,0]]})"));
}

TEST(Cli, DecideRejectsNonsingularWitness) {
  const auto r = run({"decide", "--matrix", "[[0,1,1],[1,0,1],[1,1,0]]"});
  EXPECT_EQ(r.code, cli::kExitNo);
  EXPECT_EQ(r.out, "No\n");
}

TEST(Cli, CountRegionsByBruteForce) {
  const auto r = run({"count", "--m", "2", "--n", "2", "--what", "regions", "--method", "brute"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "14\n");
  EXPECT_EQ(run({"count", "--m", "2", "--n", "3", "--what", "regions", "--method", "egf"}).out, "46\n");
  EXPECT_EQ(run({"count", "--m", "3", "--n", "3", "--what", "small", "--method", "formula"}).out, "36\n");
}

TEST(Cli, RegionOfWorkedPoint) {
  const auto r = run({"region-of", "--x", "4,9/2,2", "--y", "3,1/2,5,1,6"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "2' 4' 3 1' 1 2 3' 5'\n");
  EXPECT_EQ(run({"region-of", "--x", "0", "--y", "0"}).code, cli::kExitUsage);
}

TEST(Cli, CertificateReproducesMatrix) {
  for (const char* m : {"[[0,2],[1,0]]", "[[3,1],[0,2]]", "[[0,0,1],[2,1,0],[5,4,3]]"}) {
    const auto d = run({"decide", "--certificate", "--matrix", m});
    ASSERT_EQ(d.code, cli::kExitOk) << d.err;
    const json cert = json::parse(d.out);
    EXPECT_EQ(cert.at("answer"), "Yes");
    const auto e = run({"--format", "json", "eval", "--input", cert.dump()});
    ASSERT_EQ(e.code, cli::kExitOk) << e.err;
    const auto back = tropbip::io::matrix_from_json(json::parse(e.out));
    EXPECT_EQ(back, tropbip::io::matrix_from_json(json::parse(m)));
  }
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"--format", "json", "verify", "--suite", "subdivisions",
                                      "--m",      "2",    "--n",    "3",       "--samples",
                                      "40",       "--seed", "7"};
  const auto a = run(args);
  const auto b = run(args);
  EXPECT_EQ(a.code, cli::kExitOk);
  EXPECT_EQ(a.out, b.out);
  auto jobs = args;
  jobs.insert(jobs.begin(), {"--jobs", "2"});
  EXPECT_EQ(run(jobs).out, a.out);
}

TEST(Cli, JsonOutputsParse) {
  const std::vector<std::vector<std::string>> cases{
      {"--format", "json", "locate", "--matrix", "[[0,2],[1,0]]"},
      {"--format", "json", "fiber", "--matrix", "[[3,1],[0,2]]", "--pin", "Am=0,bn=0"},
      {"--format", "json", "diagram", "--label", "2' 4' 3 1' 1 2 3' 5'"},
      {"--format", "json", "relations", "--label", "1 1' 2 2'", "--version", "both"},
      {"--format", "json", "count", "--what", "large", "--method", "egf", "--m", "2", "--n", "2"},
      {"--format", "json", "enumerate", "--what", "small-cells", "--m", "2", "--n", "2"},
      {"--format", "json", "preimage", "--matrix", "[[0,2],[1,0]]", "--label", "1 2' 2 1'"},
  };
  for (const auto& args : cases) {
    const auto r = run(args);
    EXPECT_EQ(r.code, cli::kExitOk) << args[2] << ": " << r.err;
    EXPECT_TRUE(json::accept(r.out)) << args[2];
  }
}

TEST(Cli, PreimageRoundTrip) {
  const auto r = run({"--format", "json", "preimage", "--matrix", "[[0,2],[1,0]]", "--label", "1 2' 2 1'"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto p = tropbip::io::params_from_json(json::parse(r.out));
  EXPECT_EQ(tropbip::io::to_json(p), json::parse(r.out));
  const auto e = run({"eval", "--input", r.out});
  EXPECT_EQ(e.out, "0 2\n1 0\n");
}

TEST(Cli, StreamListsOneLabelPerLine) {
  const auto r = run({"enumerate", "--what", "regions", "--m", "1", "--n", "2", "--stream"});
  EXPECT_EQ(r.code, cli::kExitOk);
  std::istringstream in(r.out);
  std::string line;
  int count = 0;
  while (std::getline(in, line)) ++count;
  EXPECT_EQ(count, 4);
}

TEST(Cli, ErrorsMapToExitCodes) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"eval", "--input", R"({"a":[1.5],"A":[0],"b":[0],"B":[0]})"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"eval", "--input", R"({"a":[1],"A":[0,1],"b":[0],"B":[0]})"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"dim", "--label", "1 1 1'"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"fiber", "--matrix", "[[0,0],[0,0]]"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--budget", "10", "enumerate", "--what", "regions", "--m", "3", "--n", "3"})
                .code,
            cli::kExitBudget);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST(JsonIo, RationalsRoundTrip) {
  for (const char* s : {"0", "-4", "7/3", "-123456789012345678901234567890"}) {
    const auto q = tropbip::Rat::parse(s);
    EXPECT_EQ(tropbip::io::rat_from_json(tropbip::io::to_json(q)), q) << s;
  }
  EXPECT_EQ(tropbip::io::to_json(tropbip::Rat(7, 3)), json("7/3"));
  EXPECT_THROW(tropbip::io::rat_from_json(json(0.5)), tropbip::StructuralError);
}
