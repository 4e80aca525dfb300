#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

using nlohmann::json;

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

std::string data(const std::string& name) { return std::string(TORICA_TEST_DATA) + "/" + name; }

CliRun run(const std::string& args) {
  const std::string cmd = std::string(TORICA_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t k;
  while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), k);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

json run_json(const std::string& args, int expect_status) {
  const CliRun r = run("--format json " + args);
  EXPECT_EQ(r.status, expect_status) << args;
  json j = json::parse(r.out);
  EXPECT_EQ(j["schema"], "torica-report/1");
  return j;
}

}  // namespace

TEST(Cli, QuinticHodgeReport) {
  const json j = run_json("hodge " + data("p4.json") + " " + data("quintic.json") + " --b 5,0,0,0,0", 0);
  EXPECT_TRUE(j["ok"].get<bool>());
  const auto& ph = j["result"]["primitive_hodge"];
  EXPECT_EQ(ph[2], 101);
  EXPECT_EQ(ph[3], 1);
  EXPECT_TRUE(j["result"]["flags"]["quasi_smooth"].get<bool>());
}

TEST(Cli, ReportsAreByteIdentical) {
  const std::string args = "--format json hodge " + data("p1xp1.json") + " " + data("p1xp1_33.json");
  const CliRun a = run(args), b = run(args);
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  const std::string forms = "--format json forms verify " + data("p2.json");
  EXPECT_EQ(run(forms).out, run(forms).out);
}

TEST(Cli, PrimitiveCollections) {
  const json j = run_json("fan collections " + data("p1xp1.json"), 0);
  EXPECT_EQ(j["result"]["primitive_collections"].size(), 2u);
  const CliRun t = run("fan collections " + data("p1xp1.json"));
  EXPECT_EQ(t.status, 0);
  EXPECT_NE(t.out.find("|"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  const json bad = run_json("fan classgroup " + data("nonprimitive.json"), 2);
  EXPECT_EQ(bad["error"]["code"], "NonPrimitiveRay");
  EXPECT_EQ(run("fan check " + data("incomplete.json")).status, 1);
  EXPECT_EQ(run("fan check " + data("p2.json")).status, 0);
  EXPECT_EQ(run("certify quasismooth " + data("p2.json") + " " + data("singular_cubic.json")).status, 1);
  EXPECT_EQ(run("hodge " + data("p2.json") + " " + data("mixed_degree.json")).status, 2);
  EXPECT_EQ(run("--budget 2 certify nondegenerate " + data("p2.json") + " " + data("cubic.json")).status, 3);
  EXPECT_EQ(run("no-such-command").status, 2);
  EXPECT_EQ(run("fan check /nonexistent.json").status, 2);
}

TEST(Cli, BudgetFromEnvironment) {
  const std::string cmd = "TORICA_BUDGET=2 " + std::string(TORICA_CLI) + " certify nondegenerate " +
                          data("p2.json") + " " + data("cubic.json") + " >/dev/null 2>&1";
  const int st = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(st), 3);
}

TEST(Cli, OtherSubcommands) {
  const json c = run_json("fan classgroup " + data("cover3.json"), 0);
  EXPECT_EQ(c["result"]["free_rank"], 1);
  const json d = run_json("divisor info " + data("p2.json") + " --b 3,0,0", 0);
  EXPECT_EQ(d["result"]["lattice_points"].size(), 10u);
  const json m = run_json("moduli " + data("p2.json") + " " + data("cubic.json"), 0);
  EXPECT_EQ(m["result"]["moduli_tangent_dim"], 1);
  EXPECT_EQ(m["result"]["aut_dimension"], 8);
  const json n = run_json("certify nondegenerate " + data("p4.json") + " " + data("quintic.json"), 0);
  EXPECT_TRUE(n["ok"].get<bool>());
  const json f = run_json("forms verify " + data("p1xp1.json") + " " + data("p1xp1_33.json"), 0);
  EXPECT_TRUE(f["ok"].get<bool>());
  const json u = run_json("--unsafe-skip-checks hodge " + data("p2.json") + " " + data("singular_cubic.json"), 0);
  EXPECT_TRUE(u["result"]["flags"]["unchecked"].get<bool>());
}
