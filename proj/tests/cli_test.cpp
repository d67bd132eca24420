// Drives the lexcone executable through a shell and checks stdout and exit
// status.

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  std::string out;
  int status = -1;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

std::string sample(const std::string& name) { return quote(std::string(LEXCONE_SAMPLES) + "/" + name); }

Run shell(const std::string& cmd) {
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Run run(const std::string& args, bool merge_stderr = false) {
  return shell(std::string(LEXCONE_CLI) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null"));
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

TEST(Cli, Positive) {
  auto r = run("positive --poset " + sample("chain2.json") + " --vec " + quote(R"({"a":"1","b":"-5"})"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "true\n");
  r = run("positive --poset " + sample("antichain2.json") + " --vec " + quote(R"({"a":"1","b":"-1"})"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "false\n");
}

TEST(Cli, Errors) {
  auto r = run("poset check " + sample("cyclic.json"), true);
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("CycleError"), std::string::npos) << r.out;
  EXPECT_EQ(run("sup --poset " + sample("wedge.json") + " --lhs '{}' --rhs '{}'").status, 2);
  EXPECT_EQ(run("no-such-command").status, 2);
  EXPECT_EQ(run("positive --poset " + sample("chain2.json") + " --vec " + quote(R"({"a":"1/0"})")).status, 2);
  EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, PosetInfo) {
  const auto r = run("poset info " + sample("wedge.json"));
  ASSERT_EQ(r.status, 0);
  const auto j = json_of(r);
  EXPECT_FALSE(j.at("is_lattice").get<bool>());
}

TEST(Cli, DecomposeRecombine) {
  const std::string poset = sample("tree.json");
  const std::string vec = quote(R"({"r":"2","s":"-1","t":"-7/3"})");
  const auto d = run("decompose --poset " + poset + " --vec " + vec);
  ASSERT_EQ(d.status, 0);
  const auto back = run("recombine --poset " + poset + " --decomposition " + quote(json_of(d).dump()));
  ASSERT_EQ(back.status, 0);
  EXPECT_EQ(json_of(back), nlohmann::json::parse(R"({"r":"2","s":"-1","t":"-7/3"})"));
}

TEST(Cli, TensorRoundTrip) {
  const std::string sides = " --left " + sample("chain2.json") + " --right " + sample("chain2_xy.json");
  const std::string vec = quote(R"({"a|x":"1","b|y":"-2"})");
  EXPECT_EQ(run("tensor-member" + sides + " --vec " + vec).out, "true\n");
  const auto rep = run("tensor-decompose" + sides + " --vec " + vec);
  ASSERT_EQ(rep.status, 0);
  const auto flat = run("tensor-flatten" + sides + " --rep " + quote(json_of(rep).dump()));
  ASSERT_EQ(flat.status, 0);
  EXPECT_EQ(json_of(flat), nlohmann::json::parse(R"({"a|x":"1","b|y":"-2"})"));
}

TEST(Cli, NoSupWitness) {
  const auto r = run("nosup-witness --poset " + sample("wedge.json") + " --steps 3");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json_of(r).at("upper_bounds").size(), 4u);
  EXPECT_EQ(run("nosup-witness --poset " + sample("forest.json")).status, 2);
}

TEST(Cli, Cones) {
  EXPECT_EQ(run("cone pointed --cone " + sample("lex2.json")).out, "true\n");
  EXPECT_EQ(run("cone pointed --cone " + sample("plane.json")).out, "false\n");
  EXPECT_EQ(run("cone member --cone " + sample("quadrant.json") + " --vec '[\"1\",\"-1\"]'").out, "false\n");
  EXPECT_EQ(run("cone embed --cone " + sample("sector.json")).status, 0);
  EXPECT_EQ(run("cone dual-vector --cone " + sample("plane.json")).status, 2);
  const auto kp = run("kp check --left " + sample("lex2.json") + " --right " + sample("quadrant.json") +
                      " --trials 20");
  ASSERT_EQ(kp.status, 0);
  EXPECT_TRUE(json_of(kp).at("lp_route_ok").get<bool>());
}

TEST(Cli, Classify) {
  const auto f = run("classify to-forest --term " + sample("term.json"));
  ASSERT_EQ(f.status, 0);
  const auto t = run("classify to-term --poset " + quote(json_of(f).dump()));
  ASSERT_EQ(t.status, 0);
  const auto a = run("classify canonical --poset " + quote(json_of(f).dump()));
  const auto b = run("classify canonical --poset " + sample("tree.json"));
  EXPECT_NE(a.out, b.out);
}

TEST(Cli, SelfcheckIsSeedDeterministic) {
  const auto a = run("selfcheck --seed 5 --trials 10");
  const auto b = run("selfcheck --seed 5 --trials 10 --sequential");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(json_of(a).at("passed").get<bool>());
  const auto env = shell("LEXCONE_SEED=5 " + std::string(LEXCONE_CLI) + " selfcheck --trials 10");
  EXPECT_EQ(env.out, a.out);
}

}  // namespace

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  return RUN_ALL_TESTS();
}
