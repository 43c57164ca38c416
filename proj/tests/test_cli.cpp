// Runs the built CLI as a subprocess and checks output plus exit codes.
#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "hypereuler/serialize.hpp"

using namespace hypereuler;

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + HYPEREULER_CLI_PATH + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, Bernoulli) {
  EXPECT_EQ(run("bernoulli 4").out, "1, 1/2, 1/6, 0, -1/30\n");
  const CliRun j = run("bernoulli 0 --format json");
  EXPECT_EQ(j.code, 0);
  EXPECT_EQ(json::parse(j.out), json::parse(R"([{"n":0,"value":"1"}])"));
  EXPECT_EQ(run("bernoulli -1").code, 2);
  EXPECT_EQ(run("bernoulli 3 --format yaml").code, 2);
  EXPECT_EQ(run("nonsense").code, 2);
}

TEST(Cli, Coeffs) {
  const CliRun r3 = run("coeffs 3");
  EXPECT_EQ(r3.code, 0);
  EXPECT_NE(r3.out.find("a(3,2,0) = 1/2"), std::string::npos);
  EXPECT_NE(r3.out.find("a(3,1,0) = -3/2  a(3,1,1) = -1"), std::string::npos);
  EXPECT_NE(r3.out.find("a(3,0,0) = 1  a(3,0,1) = 3/2  a(3,0,2) = 1/2"), std::string::npos);
  const CliRun both = run("coeffs 5 --route both");
  EXPECT_EQ(both.code, 0);
  EXPECT_NE(both.out.find("MATCH"), std::string::npos);
  EXPECT_EQ(both.out.find("MISMATCH"), std::string::npos);
  const CliRun tex = run("coeffs 2 --format latex");
  EXPECT_NE(tex.out.find("&a(2,1,0)=-1,"), std::string::npos);
  EXPECT_NE(tex.out.find("&a(2,0,0)=1, \\quad a(2,0,1)=1."), std::string::npos);
  const CliRun js = run("coeffs 4 --route b --format json");
  EXPECT_TRUE(coeff_table_from_json(json::parse(js.out)).same_entries(a_table(4)));
  EXPECT_EQ(run("coeffs 0").code, 2);
  EXPECT_EQ(run("coeffs 3 --route c").code, 2);
}

TEST(Cli, Hyperharmonic) {
  EXPECT_EQ(run("hh 2 2 2").out, "9/4\n");
  EXPECT_EQ(run("hh 1 1 5").out, "137/60\n");
  EXPECT_EQ(json::parse(run("hh 1 3 2 --format json").out).at("value"), "7/2");
}

TEST(Cli, Decompose) {
  EXPECT_EQ(run("decompose 2 2 4").out, "S(2,4) + S(2,3) - S(1,4)\n");
  EXPECT_EQ(run("decompose 1 2 4 --normalize").out, "S(1,4) + S(1,3) - zeta(3)\n");
  EXPECT_EQ(run("decompose 1 1 2 --reduce-s1").out, "2*zeta(3)\n");
  const CliRun js = run("decompose 1 3 5 --normalize --format json");
  EXPECT_EQ(euler_sum_expr_from_json(json::parse(js.out)), decompose_normalized(1, 3, 5));
  const CliRun bad = run("decompose 1 2 2");
  EXPECT_EQ(bad.code, 3);
  EXPECT_NE(bad.out.find("m >= r+1"), std::string::npos);
}

TEST(Cli, Verify) {
  const CliRun ok = run("verify 1 1 2 --digits 10");
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("PASS"), std::string::npos);
  EXPECT_NE(ok.out.find("2.4041138063"), std::string::npos);
  const json j = json::parse(run("verify 2 2 4 --format json").out);
  EXPECT_TRUE(j.at("pass").get<bool>());
  EXPECT_EQ(j.at("p"), 2);
  const CliRun bad = run("verify 1 3 3");
  EXPECT_EQ(bad.code, 3);
  EXPECT_NE(bad.out.find("m >= r+1"), std::string::npos);
}

TEST(Cli, DigitsFromEnvironmentAndFlagPriority) {
  const json env = json::parse(run("verify 1 1 2 --format json", "HYPEREULER_DIGITS=12").out);
  EXPECT_EQ(env.at("direct").at("value").get<std::string>().size(), std::string("2.").size() + 17 + 4);
  const json flag = json::parse(run("verify 1 1 2 --format json --digits 6", "HYPEREULER_DIGITS=12").out);
  EXPECT_EQ(flag.at("direct").at("value").get<std::string>().size(), std::string("2.").size() + 11 + 4);
  EXPECT_EQ(run("verify 1 1 2", "HYPEREULER_DIGITS=abc").code, 2);
}

TEST(Cli, ElementaryTailCap) {
  EXPECT_EQ(run("verify 1 1 2 --tail elementary --max-terms 1000").code, 4);
}

TEST(Cli, Conjectures) {
  const CliRun text = run("conjectures 6");
  EXPECT_EQ(text.code, 0);
  EXPECT_EQ(text.out.find("VIOLATED"), std::string::npos);
  const json j = json::parse(run("conjectures --format json").out);
  ASSERT_EQ(j.size(), 4u);
  for (const auto& rep : j) {
    EXPECT_TRUE(rep.at("all_pass").get<bool>());
    EXPECT_EQ(rep.at("r_checked").size(), 20u);
  }
  EXPECT_EQ(json::parse(run("conjectures 3 --only 2 --format json").out).size(), 1u);
}
