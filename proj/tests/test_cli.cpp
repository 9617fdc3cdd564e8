#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct CliRun {
  int code;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s)
    q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

// Runs the CLI; `prefix` is prepended to the shell command (env or a pipe).
CliRun cli(const std::vector<std::string>& args, const std::string& prefix = "",
        bool merge_stderr = false) {
  std::string cmd = prefix + quote(BRAIDFORGE_CLI);
  for (const auto& a : args)
    cmd += " " + quote(a);
  cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p)
    return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0)
    out.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("braidforge_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

bool contains(const std::string& s, const std::string& part) {
  return s.find(part) != std::string::npos;
}

} // namespace

TEST(CliValidate, Examples) {
  EXPECT_EQ(cli({"validate", "G2: X=1,2 O=2,1"}).code, 0);
  const CliRun bad = cli({"validate", "G2: X=1,2 O=1,2"}, "", true);
  EXPECT_EQ(bad.code, 2);
  EXPECT_TRUE(contains(bad.out, "row 1")) << bad.out;
  EXPECT_EQ(cli({"validate", "B3: 5"}).code, 2);
  EXPECT_EQ(cli({"validate", R"({"crossings":[],"free_loops":1})"}).code, 0);
}

TEST(CliValidate, ReadsStdinAndFiles) {
  EXPECT_EQ(cli({"validate", "-"}, "printf 'B3: 1 2\\n' | ").code, 0);
  EXPECT_EQ(cli({"validate", temp_file("grid.txt", "G2: X=1,2 O=2,1\n")}).code, 0);
  EXPECT_EQ(cli({"validate", std::string(BRAIDFORGE_SAMPLES) + "/cyclic5.grid"}).code, 0);
}

TEST(CliBraid, Examples) {
  const CliRun unknot = cli({"braid", "--check", "G2: X=1,2 O=2,1"});
  EXPECT_EQ(unknot.code, 0);
  EXPECT_EQ(unknot.out.substr(0, 4), "B1:\n");
  EXPECT_TRUE(contains(unknot.out, "pass"));

  const CliRun hopf = cli({"--json", "braid", "--check", "G4: X=1,2,3,4 O=3,4,1,2"});
  EXPECT_EQ(hopf.code, 0);
  const auto j = nlohmann::json::parse(hopf.out);
  EXPECT_EQ(j.at("braid").at("strands"), 2);
  EXPECT_TRUE(j.at("check").at("agree").get<bool>());

  EXPECT_EQ(cli({"braid", "G2: X=1,2 O=2"}).code, 2);
  EXPECT_EQ(cli({"braid", "B2: 1"}).code, 2);
}

TEST(CliBraid, Trace) {
  const CliRun r = cli({"--json", "braid", "--trace", "G2: X=1,2 O=2,1"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.at("trace").at("moves").size(), 1u);
  EXPECT_EQ(j.at("trace").at("moves")[0].at("column"), 2);
  EXPECT_EQ(j.at("trace").at("sweep").size(), 2u);
}

TEST(CliInvariants, Examples) {
  const CliRun unknot = cli({"--json", "invariants", "G2: X=1,2 O=2,1"});
  ASSERT_EQ(unknot.code, 0);
  EXPECT_EQ(nlohmann::json::parse(unknot.out).at("normalized_bracket_text"), "1");

  const CliRun hopf = cli({"--json", "invariants", "B2: 1 1"});
  ASSERT_EQ(hopf.code, 0);
  const auto j = nlohmann::json::parse(hopf.out);
  EXPECT_EQ(j.at("components"), 2);
  EXPECT_EQ(std::abs(j.at("linking_matrix")[0][1].get<int>()), 1);

  const CliRun jones = cli({"invariants", "--jones-t", "B2: 1 1 1"});
  EXPECT_EQ(jones.code, 0);
  EXPECT_TRUE(contains(jones.out, "jones_t"));
}

TEST(CliInvariants, CapGivesResourceError) {
  std::string long_word = "B2:";
  for (int k = 0; k < 25; ++k)
    long_word += " 1";
  EXPECT_EQ(cli({"invariants", long_word}).code, 3);
  EXPECT_EQ(cli({"invariants", "B2: 1 1"}, "BRAIDFORGE_STATE_SUM_CAP=1 ").code, 3);
  EXPECT_EQ(cli({"--state-sum-cap", "2", "invariants", "B2: 1 1"}).code, 0);
  EXPECT_EQ(cli({"invariants", "B2: 1 1"}, "BRAIDFORGE_STATE_SUM_CAP=x ").code, 2);
}

TEST(CliMarkov, ReplayAndRandom) {
  const std::string path = temp_file("stab.json", R"([{"move":"stabilize","sign":1}])");
  const CliRun replay = cli({"markov", "B1:", "--moves", path});
  EXPECT_EQ(replay.code, 0);
  EXPECT_TRUE(contains(replay.out, "B2: 1\n")) << replay.out;

  const CliRun random = cli({"markov", "B3: 1 -2", "--random", "10", "--seed", "42"});
  EXPECT_EQ(random.code, 0);
  EXPECT_TRUE(contains(random.out, "pass"));

  const std::string bad = temp_file("bad.json", R"([{"move":"destabilize"}])");
  EXPECT_EQ(cli({"markov", "B3: 2 1", "--moves", bad}).code, 2);
  EXPECT_EQ(cli({"markov", "B3: 2 1"}).code, 2);
}

TEST(CliFuzz, Examples) {
  EXPECT_EQ(cli({"fuzz", "--cases", "0"}).code, 0);
  EXPECT_EQ(cli({"fuzz", "--cases", "20", "--seed", "7"}).code, 0);
  const CliRun broken = cli({"--json", "fuzz", "--cases", "200", "--seed", "7",
                          "--corrupt-l-move-table"});
  EXPECT_EQ(broken.code, 1);
  const auto j = nlohmann::json::parse(broken.out);
  EXPECT_EQ(j.at("counterexample").at("move").at("move"), "l_move");
}

TEST(CliSearch, Examples) {
  const CliRun same = cli({"--json", "search", "B2: 1", "B2: 1"});
  ASSERT_EQ(same.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(same.out).at("path").empty());

  const CliRun rel = cli({"--json", "search", "B3: 1 2 1", "B3: 2 1 2"});
  ASSERT_EQ(rel.code, 0);
  const auto j = nlohmann::json::parse(rel.out);
  ASSERT_EQ(j.at("path").size(), 1u);
  EXPECT_EQ(j.at("path")[0].at("move"), "relation");

  const CliRun none = cli({"search", "--depth", "0", "B2: 1", "B3: 1 2"});
  EXPECT_EQ(none.code, 0);
  EXPECT_TRUE(contains(none.out, "not found within caps"));
}

TEST(CliConvert, Examples) {
  const CliRun grid = cli({"convert", "G2: X=1,2 O=2,1", "--to", "pd"});
  ASSERT_EQ(grid.code, 0);
  EXPECT_EQ(nlohmann::json::parse(grid.out),
            nlohmann::json::parse(R"({"crossings":[],"free_loops":1})"));

  const CliRun closure = cli({"convert", "B2: 1", "--to", "braid-closure-pd"});
  ASSERT_EQ(closure.code, 0);
  EXPECT_EQ(nlohmann::json::parse(closure.out).at("crossings").size(), 1u);

  EXPECT_EQ(cli({"convert", R"({"crossings":[],"free_loops":1})", "--to", "grid"}).code, 2);
  EXPECT_EQ(cli({"convert", "G2: X=1,2 O=2,1", "--to", "knot"}).code, 2);
}

TEST(CliExitCodes, UsageErrors) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}
