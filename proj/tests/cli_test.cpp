#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include <json.hpp>

#include "fimcowp/cli.hpp"
#include "test_util.hpp"

namespace fimcowp {
namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "fimcowp");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

TEST(CliDecide, Examples) {
  auto r = run({"decide", "--rank", "1", "--mode", "cowp", "aA#"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "true\n");
  r = run({"decide", "--rank", "1", "--mode", "wp", "a#A"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "true\n");
  r = run({"decide", "--rank", "1", "--mode", "cowp", "a#A"});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out, "false\n");
  EXPECT_EQ(run({"decide", "--rank", "1", "--mode", "cowp", "a#a#"}).status, 2);
  EXPECT_EQ(run({"decide", "--rank", "1", "--mode", "cowp", "aA"}).status, 2);
  EXPECT_EQ(run({"decide", "--rank", "1", "aB#"}).status, 2);
}

TEST(CliDecide, PairForm) {
  EXPECT_EQ(run({"decide", "--rank", "1", "--mode", "k1", "aA", ""}).out, "true\n");
  EXPECT_EQ(run({"decide", "--rank", "1", "--mode", "k2", "aA", ""}).out, "false\n");
  EXPECT_EQ(run({"decide", "--rank", "1", "--mode", "k2", "", "aA"}).out, "true\n");
  EXPECT_EQ(run({"decide", "--rank", "1", "--mode", "wp", "aAa", "a"}).status, 0);
  EXPECT_EQ(run({"decide", "--rank", "1", "--mode", "bogus", "a#"}).status, 2);
}

TEST(CliGrammar, Examples) {
  auto r = run({"grammar", "--rank", "1", "--which", "E", "--format", "bnf"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "E -> 1 | A E a | E E | a E A\n");
  r = run({"grammar", "--rank", "1", "--which", "K1", "--format", "json"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("productions").size(), 20U);
  EXPECT_EQ(run({"grammar", "--rank", "2", "--which", "Zx:c"}).status, 2);
  EXPECT_EQ(run({"grammar", "--rank", "2", "--which", "K9"}).status, 2);
  r = run({"grammar", "--rank", "1", "--which", "K1"});
  EXPECT_EQ(r.out, testing::read_file(FIMCOWP_FIXTURE_DIR "/k1_rank1.bnf"));
  r = run({"grammar", "--rank", "1", "--which", "E", "--cnf", "--format", "json"});
  EXPECT_EQ(r.status, 0);
  EXPECT_FALSE(nlohmann::json::parse(r.out).at("productions").empty());
}

TEST(CliParse, Examples) {
  auto r = run({"parse", "--rank", "1", "--which", "K1", "aA#"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "accept\n");
  r = run({"parse", "--rank", "1", "--which", "K1", "a#A"});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out, "reject\n");
  r = run({"parse", "--rank", "1", "--which", "E", "", "--tree"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "accept\nE -> 1\n");
  r = run({"parse", "--rank", "1", "--which", "E", "a#A"});
  EXPECT_EQ(r.status, 2);
  r = run({"parse", "--rank", "1", "--which", "E", "b"});
  EXPECT_EQ(r.status, 2);
}

TEST(CliEnumerate, Examples) {
  auto r = run({"enumerate", "--rank", "1", "--which", "E", "--max-len", "2"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "\naA\nAa\n");
  r = run({"enumerate", "--rank", "1", "--which", "K1", "--max-len", "0"});
  EXPECT_EQ(r.out, "");
  r = run({"enumerate", "--rank", "1", "--which", "K1", "--max-len", "3"});
  EXPECT_EQ(r.out, "aA#\nAa#\n");
  EXPECT_EQ(run({"enumerate", "--rank", "1", "--which", "E", "--max-len", "15"}).status, 2);
}

TEST(CliCrosscheck, Examples) {
  auto r = run({"crosscheck", "--rank", "1", "--which", "E", "--max-len", "10"});
  EXPECT_EQ(r.status, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("universe"), 2047);
  EXPECT_EQ(j.at("agreements"), 2047);
  EXPECT_TRUE(j.at("false_accepts").empty());
  EXPECT_TRUE(j.at("false_rejects").empty());
  EXPECT_TRUE(j.contains("elapsed_ms"));

  r = run({"crosscheck", "--rank", "1", "--which", "coWP-FIM", "--max-len", "6", "--jobs", "2"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("universe"), 769);
  r = run({"crosscheck", "--rank", "2", "--which", "K1", "--max-len", "4"});
  EXPECT_EQ(r.status, 0);
  for (const char* which : {"Zx:a", "Zx:A", "K2", "coWP-FG"}) {
    EXPECT_EQ(run({"crosscheck", "--rank", "1", "--which", which, "--max-len", "5"}).status, 0)
        << which;
  }
  EXPECT_EQ(run({"crosscheck", "--rank", "1", "--which", "E", "--max-len", "6", "--jobs", "0"})
                .status,
            2);
}

TEST(CliMunn, Examples) {
  auto r = run({"munn", "--rank", "1", "aA", "--format", "dot"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("graph munn {"), std::string::npos);
  EXPECT_NE(r.out.find("\"1\" -- \"a\""), std::string::npos);
  r = run({"munn", "--rank", "1", ""});
  EXPECT_EQ(r.out, "graph munn {\n  \"1\" [shape=doublecircle, style=filled];\n}\n");
  r = run({"munn", "--rank", "2", "ab", "--format", "ascii"});
  EXPECT_EQ(r.out, "1 (root)\n  a\n    ab (terminal)\n");
  EXPECT_EQ(run({"munn", "--rank", "1", "ab"}).status, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({"grammar", "--which", "E"}).status, 2);  // rank is required
  EXPECT_EQ(run({"grammar", "--rank", "0", "--which", "E"}).status, 2);
  EXPECT_EQ(run({"--help"}).status, 0);
}

TEST(Cli, OutputIsDeterministic) {
  const auto a = run({"grammar", "--rank", "2", "--which", "coWP-FIM"});
  const auto b = run({"grammar", "--rank", "2", "--which", "coWP-FIM"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
}

TEST(Cli, HardLengthCapFromEnvironment) {
  ::setenv("FIMCOWP_MAXLEN_HARD", "3", 1);
  EXPECT_EQ(run({"enumerate", "--rank", "1", "--which", "E", "--max-len", "4"}).status, 2);
  EXPECT_EQ(run({"enumerate", "--rank", "1", "--which", "E", "--max-len", "3"}).status, 0);
  ::unsetenv("FIMCOWP_MAXLEN_HARD");
}

TEST(Cli, BinaryExitCodes) {
  const std::string bin = FIMCOWP_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int raw = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  EXPECT_EQ(status("decide --rank 1 --mode cowp 'aA#'"), 0);
  EXPECT_EQ(status("decide --rank 1 --mode cowp 'a#A'"), 1);
  EXPECT_EQ(status("decide --rank 1 --mode cowp 'a#a#'"), 2);
  EXPECT_EQ(status("crosscheck --rank 1 --which E --max-len 6"), 0);
}

}  // namespace
}  // namespace fimcowp
