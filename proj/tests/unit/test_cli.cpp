#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace igusa {
namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "igusa");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, ZetaShowsCuspPoles) {
  auto r = run({"zeta", "-f", "y^2-x^3", "-p", "7"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("poles: {s+1, 6s+5}"), std::string::npos);
}

TEST(Cli, OracleVerifyAndChecks) {
  EXPECT_EQ(run({"oracle-verify", "-f", "y^2-x^3", "-p", "7", "-B", "3"}).code, 0);
  auto c = run({"check-conjectures", "-f", "y^2-x^3", "-p", "7", "--chi-all", "--json"});
  EXPECT_EQ(c.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(c.out)["verified"].get<bool>());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"zeta", "-f", "x^+", "-p", "7"}).code, cli::kParseError);
  EXPECT_EQ(run({"zeta", "-f", "x"}).code, cli::kParseError);
  EXPECT_EQ(run({"nonsense"}).code, cli::kParseError);
  EXPECT_EQ(run({"resolve", "-f", "(x^2-2)*y"}).code, cli::kNonRational);
  EXPECT_EQ(run({"zeta", "-f", "y^2-x^3", "-p", "2"}).code, cli::kBadPrime);
  EXPECT_EQ(run({"oracle-verify", "-f", "x", "-p", "7", "-B", "9"}).code, cli::kBudget);
  EXPECT_EQ(run({"zeta", "-f", "x", "-p", "7", "--chi", "9"}).code, cli::kParseError);
  EXPECT_EQ(run({"zeta", "-f", "x", "-p", "7", "--phi", "nothing"}).code, cli::kParseError);
}

TEST(Cli, PolesAndMonodromy) {
  auto p = run({"poles", "-f", "y^2-x^3", "-p", "13", "--chi", "3", "--json"});
  EXPECT_EQ(p.code, 0);
  auto j = nlohmann::json::parse(p.out);
  EXPECT_TRUE(j[0]["actual"].empty());
  auto m = run({"monodromy", "-f", "y^2-x^3"});
  EXPECT_NE(m.out.find("(t^6 - 1)^1"), std::string::npos);
}

TEST(Cli, ResolveWritesGraphAndDot) {
  auto dir = std::filesystem::temp_directory_path() / "igusa_cli_test";
  std::filesystem::create_directories(dir);
  auto graph = (dir / "g.json").string(), dot = (dir / "g.dot").string();
  auto r = run({"resolve", "-f", "y^2-x^3", "-o", graph, "--dot", dot});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("relations: ok"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(dot));
  auto a = run({"zeta", "--graph", graph, "-p", "7"});
  auto b = run({"zeta", "-f", "y^2-x^3", "-p", "7"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"export-graph", "--graph", graph, "--format", "svg"}).code, cli::kParseError);
}

}  // namespace
}  // namespace igusa
