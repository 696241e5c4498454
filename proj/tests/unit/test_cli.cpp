#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ktgjones/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = ktg::run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, JonesColorZero) {
  auto r = run({"jones", "--r", "5", "--s", "-3", "--t", "5", "--u", "-3", "--n", "0", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"knot\":{\"r\":5,\"s\":-3,\"t\":5,\"u\":-3},\"n\":0,\"variable\":\"w=v^(1/2)\",\"terms\":[[0,1,0]]}\n");
}

TEST(Cli, CompiledModeMatchesClosedBytes) {
  const std::vector<std::string> knot{"--r", "3", "--s", "-3", "--t", "3", "--u", "-5", "--n", "2"};
  auto closed = knot, compiled = knot;
  closed.insert(closed.begin(), "jones");
  compiled.insert(compiled.begin(), "jones");
  compiled.insert(compiled.end(), {"--mode", "compiled"});
  EXPECT_EQ(run(closed).out, run(compiled).out);
}

TEST(Cli, ProgramFileRoundTrip) {
  const std::string path = ::testing::TempDir() + "c5353.ktg";
  {
    std::ofstream f(path);
    f << ktg::to_text(ktg::montesinos_program({5, -3, 5, -3}));
  }
  auto shown = run({"compile", "--program", path, "--show-plan"});
  EXPECT_EQ(shown.code, 0);
  EXPECT_NE(shown.out.find("final graph: single circle"), std::string::npos);
  EXPECT_NE(shown.out.find("sumvars: 4"), std::string::npos);
  auto compiled = run({"jones", "--mode", "compiled", "--program", path, "--n", "2"});
  auto closed = run({"jones", "--n", "2"});
  EXPECT_EQ(compiled.code, 0);
  EXPECT_EQ(compiled.out, closed.out);
  std::remove(path.c_str());
}

TEST(Cli, ThreadsDoNotChangeOutput) {
  EXPECT_EQ(run({"jones", "--n", "3", "--threads", "1"}).out, run({"jones", "--n", "3", "--threads", "8"}).out);
}

TEST(Cli, ManxVerdict) {
  auto r = run({"manx", "--nmax", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"verdict\":\"MANX\""), std::string::npos);
  EXPECT_NE(r.out.find("\"leads\":[[1,1],[2,2],[3,2],[4,3],[5,3]]"), std::string::npos);
}

TEST(Cli, DegreesCsv) {
  auto r = run({"degrees", "--n", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "a,b,c,d,wdeg,lead");
}

TEST(Cli, TailAndCompileEmit) {
  EXPECT_NE(run({"tail", "--depth", "2", "--nmax", "3"}).out.find("\"depth\":2"), std::string::npos);
  auto r = run({"compile", "--emit-program"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("F- v2.t1^32;"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"jones"}).code, 2);
  EXPECT_EQ(run({"jones", "--n", "x"}).code, 2);
  EXPECT_EQ(run({"jones", "--n", "1", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Cli, ComputationErrorsExitOne) {
  auto r = run({"jones", "--r", "4", "--n", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("ktgcalc"), std::string::npos);
  const std::string path = ::testing::TempDir() + "bad.ktg";
  {
    std::ofstream f(path);
    f << "theta;\nA v9;\n";
  }
  auto bad = run({"compile", "--program", path});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("unknown target"), std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, WritesToOutPath) {
  const std::string path = ::testing::TempDir() + "j.json";
  EXPECT_EQ(run({"jones", "--n", "1", "--out", path}).code, 0);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), run({"jones", "--n", "1"}).out);
  std::remove(path.c_str());
}

TEST(Cli, SamplePrograms) {
  const std::string dir = KTG_SAMPLES_DIR;
  for (auto [file, knot] : {std::pair{"/c5353.ktg", std::vector<std::string>{"--r", "5", "--s", "-3", "--t", "5", "--u", "-3"}},
                            std::pair{"/c333m5.ktg", std::vector<std::string>{"--r", "3", "--s", "-3", "--t", "3", "--u", "-5"}}}) {
    std::vector<std::string> closed{"jones", "--n", "3"}, compiled{"jones", "--n", "3", "--mode", "compiled", "--program", dir + file};
    closed.insert(closed.end(), knot.begin(), knot.end());
    compiled.insert(compiled.end(), knot.begin(), knot.end());
    EXPECT_EQ(run(compiled).out, run(closed).out) << file;
  }
  EXPECT_EQ(run({"compile", "--program", dir + "/twisted_unknot.ktg", "--show-plan"}).code, 0);
  auto two = run({"compile", "--program", dir + "/two_circles.ktg", "--show-plan"});
  EXPECT_EQ(two.code, 1);
  EXPECT_NE(two.err.find("not a knot"), std::string::npos);
}
