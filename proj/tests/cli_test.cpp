#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <algorithm>
#include <string>

namespace {

struct Output {
  int code = -1;
  std::string out;
};

// Runs the tool with stderr discarded; arguments are passed through the shell.
Output run(const std::string& args) {
  Output r;
  const std::string cmd = std::string(ENTINV_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(Cli, ClassifyGhz) {
  const Output r = run("classify --dims 2,2,2 --state '[1,1,1]+[2,2,2]'");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"label\": \"C6\""), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\"signature\": \"0,0,0,0\""), std::string::npos);
}

TEST(Cli, UnknownSignatureIsReported) {
  const Output r = run("classify --dims 2,2,2,2 --state '[1,1,1,1]'");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"label\": \"C1\""), std::string::npos) << r.out;
}

TEST(Cli, MSet) {
  const Output r = run("mset --dims 3,4,9 --k 3,3,9");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[18]\n");
}

TEST(Cli, MSetAcceptsUnitDimensions) {
  const Output tight = run("mset --dims 1,2,2 --k 1,2,2");
  EXPECT_EQ(tight.code, 0);
  EXPECT_EQ(tight.out, run("mset --dims 2,2,2 --k 1,2,2").out);
  EXPECT_EQ(run("mset --dims 0,2,2 --k 1,2,2").code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("invariants --dims 2,2,2 --state ''").code, 2);
  EXPECT_EQ(run("invariants --dims 2,x --state '[1,1]'").code, 2);
  EXPECT_EQ(run("classify --dims 3,3,3 --state '[1,1,1]'").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("atlas --dims 2,2 --format xml").code, 2);
  EXPECT_EQ(run("mset --dims 2,2,2 --k 1,1,2").code, 2);
}

TEST(Cli, InvariantsListGeneratingSet) {
  const Output r = run("invariants --dims 2,2,2 --state '[1,1,1]+[1,2,2]+[2,1,2]'");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"signature\": \"0,0,0,1\""), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("{{1,2},{1,3},{2,3}}"), std::string::npos);
}

TEST(Cli, AtlasDefaultsAndFormats) {
  const Output json = run("atlas --dims 2,3");
  EXPECT_EQ(json.code, 0);
  EXPECT_NE(json.out.find("\"shape\": [\n    2,\n    3,\n    6\n  ]"), std::string::npos) << json.out;
  const Output csv = run("atlas --dims 2,2 --d 3 --format csv");
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 10);
  EXPECT_EQ(run("atlas --dims 2,2,2,2 --format csv").out, run("atlas --dims 2,2,2,2 --format csv").out);
}

TEST(Cli, EnumerationIsDeterministicAcrossWorkers) {
  const Output a = run("enumerate --dims 2,2,3 --coeffs 0,1");
  const Output b = run("enumerate --dims 2,2,3 --coeffs 1,0 --parallel 3");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"distinct_signatures\": 9"), std::string::npos);
}

TEST(Cli, MonteCarloRepeatsWithSeed) {
  const Output a = run("montecarlo --dims 2,2,3 --trials 50 --seed 5");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, run("montecarlo --dims 2,2,3 --trials 50 --seed 5 --parallel 2").out);
  EXPECT_EQ(run("montecarlo --dims 2,2,3 --trials 0 --seed 5").code, 2);
}

TEST(Cli, Classical) {
  const Output r = run("classical --dims 2,2,2,2 --state '[1,1,1,1]+[2,2,2,2]'");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"relations_ok\": true"), std::string::npos) << r.out;
}

TEST(Cli, VerifySuite) {
  const Output r = run("verify --suite n4");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS n4.orbits"), std::string::npos);
}
