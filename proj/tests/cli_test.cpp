#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "tate/io.hpp"

using namespace tate;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result runCli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(TATE_DATA_DIR) + "/" + name; }

} // namespace

TEST(Cli, ParseIntList) {
  EXPECT_EQ((std::vector<int>{-3, 3, 0}), cli::parseIntList("-3,3,0"));
  EXPECT_EQ((std::vector<int>{2}), cli::parseIntList("+2"));
  EXPECT_THROW(cli::parseIntList(""), std::invalid_argument);
  EXPECT_THROW(cli::parseIntList("1,,2"), std::invalid_argument);
  EXPECT_THROW(cli::parseIntList("1.5"), std::invalid_argument);
  EXPECT_THROW(cli::parseIntList("1, 2"), std::invalid_argument);
}

TEST(Cli, CohomologyMatrix) {
  auto r = runCli({"cohomology", "--module", data("O.json"), "--low", "-3,-3", "--high", "3,3",
                   "--format", "matrix"});
  ASSERT_EQ(0, r.code) << r.err;
  EXPECT_EQ("| 20h 10h 0 10 20  30  40  |\n"
            "| 12h 6h  0 6  12  18  24  |\n"
            "| 6h  3h  0 3  6   9   12  |\n"
            "| 2h  h   0 1  2   3   4   |\n"
            "| 0   0   0 0  0   0   0   |\n"
            "| 0   0   0 0  0   0   0   |\n"
            "| 2h3 h3  0 h2 2h2 3h2 4h2 |\n",
            r.out);
  auto m = runCli({"matrix", "--module", data("O.json"), "--low", "-3,-3", "--high", "3,3"});
  EXPECT_EQ(r.out, m.out);
}

TEST(Cli, TateBettiTable) {
  auto r = runCli({"tate", "--module", data("O.json"), "--low", "-3,-3", "--high", "0,0"});
  ASSERT_EQ(0, r.code) << r.err;
  EXPECT_EQ("index: -6 -5 -4 -3 -2 -1  0\n"
            "total: 97 55 29 14  6  2  1\n"
            "    0:  .  .  .  .  .  .  1\n"
            "    1:  6  5  4  3  2  1  .\n"
            "    2: 21 15 10  6  3  1  .\n"
            "    3: 70 35 15  5  1  .  .\n",
            r.out);
}

TEST(Cli, EmptyModuleFile) {
  auto path = std::filesystem::temp_directory_path() / "tate_cli_empty.json";
  std::ofstream(path).close();
  auto r = runCli({"tate", "--module", path.string(), "--low", "0,0", "--high", "1,1"});
  EXPECT_EQ(2, r.code);
  EXPECT_TRUE(r.out.empty());
  auto err = parseJson(r.err);
  EXPECT_EQ("validation", err.at("error").get<std::string>());
  EXPECT_NE(std::string::npos, err.at("message").get<std::string>().find("parse"));
}

TEST(Cli, ValidationErrors) {
  EXPECT_EQ(2, runCli({}).code);
  EXPECT_EQ(2, runCli({"frobnicate"}).code);
  EXPECT_EQ(2, runCli({"tate", "--module", data("O.json"), "--low", "1,1", "--high", "0,0"}).code);
  EXPECT_EQ(2, runCli({"tate", "--module", data("O.json"), "--low", "1", "--high", "2"}).code);
  EXPECT_EQ(2, runCli({"tate", "--module", data("missing.json"), "--low", "0,0", "--high", "0,0"}).code);
  EXPECT_EQ(2, runCli({"strand", "--module", data("O.json"), "--low", "0,0", "--high", "1,1",
                       "--anchor", "0,0", "--factors", "0,1"})
                   .code);
  EXPECT_EQ(2, runCli({"tate", "--module", data("O.json"), "--low", "0,0", "--high", "0,0",
                       "--mode", "diagonal"})
                   .code);
}

TEST(Cli, ComputationErrors) {
  auto r = runCli({"corner", "--module", data("late_regularity.json"), "--corner", "2,2", "--low",
                   "0,0", "--high", "3,3"});
  EXPECT_EQ(3, r.code);
  auto err = parseJson(r.err);
  EXPECT_EQ("computation", err.at("error").get<std::string>());
  EXPECT_TRUE(err.contains("failingDegree"));
}

TEST(Cli, InlineModuleAndPrime) {
  std::string inline_ = R"({"schema":"tate.module/1","dims":[1,2],"generators":[[0,0]]})";
  auto r = runCli({"cohomology", "-m", inline_, "--low", "0,0", "--high", "1,0", "--format", "json",
                   "--prime", "7"});
  ASSERT_EQ(0, r.code) << r.err;
  auto t = cohomologyFromJson(parseJson(r.out));
  EXPECT_EQ((std::vector<std::uint64_t>{2}), t.at(Multidegree{1, 0}).coefficients());
  EXPECT_EQ(2, runCli({"cohomology", "-m", inline_, "--low", "0,0", "--high", "1,0", "--prime", "9"}).code);
}

TEST(Cli, EnvironmentPrime) {
  std::string inline_ = R"({"schema":"tate.module/1","dims":[1,2],"generators":[[0,0]]})";
  ::setenv("TATE_PRIME", "not-a-prime", 1);
  auto bad = runCli({"cohomology", "-m", inline_, "--low", "0,0", "--high", "0,0"});
  ::setenv("TATE_PRIME", "32003", 1);
  auto good = runCli({"tate", "-m", inline_, "--low", "0,0", "--high", "0,0", "--format", "json"});
  ::unsetenv("TATE_PRIME");
  EXPECT_EQ(2, bad.code);
  ASSERT_EQ(0, good.code) << good.err;
  EXPECT_EQ(32003u, parseJson(good.out).at("prime").get<std::uint32_t>());
}

TEST(Cli, JsonOutputsRoundTrip) {
  auto tate = runCli({"tate", "-m", data("koszul_twisted.json"), "--low", "-1,-1", "--high", "0,0",
                      "--format", "json"});
  ASSERT_EQ(0, tate.code) << tate.err;
  Json j = parseJson(tate.out);
  EXPECT_EQ(j, complexToJson(complexFromJson(j)));

  auto monad = runCli({"beilinson", "-m", data("koszul_twisted.json"), "--format", "json"});
  ASSERT_EQ(0, monad.code) << monad.err;
  Json k = parseJson(monad.out);
  EXPECT_EQ(k, smoduleComplexToJson(smoduleComplexFromJson(k)));

  auto coh = runCli({"cohomology", "-m", data("O.json"), "--low", "-1,-1", "--high", "1,1",
                     "--format", "json"});
  Json c = parseJson(coh.out);
  EXPECT_EQ(c, cohomologyToJson(cohomologyFromJson(c)));
}

TEST(Cli, ParallelOutputIsIdentical) {
  std::vector<std::vector<std::string>> jobs = {
      {"tate", "-m", data("O.json"), "--low", "-3,-3", "--high", "0,0", "--format", "json"},
      {"strand", "-m", data("O.json"), "--low", "-3,-3", "--high", "3,3", "--anchor", "-3,0",
       "--factors", "1"},
      {"beilinson", "-m", data("koszul_twisted.json"), "--format", "json"},
      {"cohomology", "-m", data("koszul_twisted.json"), "--low", "-2,-2", "--high", "2,2"},
  };
  for (auto job : jobs) {
    auto one = runCli(job);
    job.insert(job.end(), {"--parallel", "6"});
    auto six = runCli(job);
    ASSERT_EQ(0, one.code) << one.err;
    EXPECT_EQ(one.out, six.out) << job[0];
  }
}

TEST(Cli, StrandAndPushforward) {
  auto s = runCli({"strand", "-m", data("O.json"), "--low", "-3,-3", "--high", "3,3", "--anchor",
                   "-3,0", "--factors", "1"});
  ASSERT_EQ(0, s.code) << s.err;
  EXPECT_NE(std::string::npos, s.out.find("total: 20 12  6  2  2  6 12 20"));

  auto p = runCli({"pushforward", "-m", data("O_-3_0.json"), "--factors", "1"});
  ASSERT_EQ(0, p.code) << p.err;
  EXPECT_EQ("index 1: free, 2 generators 2x(0), 0 relations\n", p.out);
}

TEST(Cli, VerifyReport) {
  auto r = runCli({"verify", "-m", data("koszul_twisted.json"), "--low", "0,0", "--high", "3,3"});
  ASSERT_EQ(0, r.code) << r.err;
  auto j = parseJson(r.out);
  EXPECT_TRUE(j.at("pass").get<bool>());
  EXPECT_EQ((std::vector<int>{1, 2}), j.at("regularity").get<std::vector<int>>());
  EXPECT_TRUE(j.at("monad").at("mismatches").empty());
}

TEST(Cli, OutFile) {
  auto path = std::filesystem::temp_directory_path() / "tate_cli_out.txt";
  auto r = runCli({"matrix", "-m", data("O.json"), "--low", "0,0", "--high", "1,1", "--out",
                   path.string()});
  ASSERT_EQ(0, r.code) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ("| 3 6 |\n| 1 2 |\n", text.str());
}

TEST(Cli, Help) {
  auto r = runCli({"--help"});
  EXPECT_EQ(0, r.code);
  EXPECT_NE(std::string::npos, r.out.find("cohomology"));
}
