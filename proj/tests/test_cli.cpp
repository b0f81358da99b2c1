#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "rainbow_kernels/cli.hpp"

namespace rk = rainbow_kernels;
namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rkt-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& contents) const {
    const auto path = dir_ / name;
    std::ofstream(path) << contents;
    return path.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_F(Cli, GenerateThenDecide) {
  const auto out = path("t5.tour");
  const auto gen = rk::run({"gen", "t5star", "-o", out});
  EXPECT_EQ(gen.exit_code, rk::exit_code::decided);
  EXPECT_EQ(gen.report_text, "wrote " + out + "\n");
  EXPECT_EQ(rk::parse_tournament(slurp(out)), rk::t5_star());

  const auto rainbow = rk::run({"kernel", "rainbow", out});
  EXPECT_EQ(rainbow.exit_code, rk::exit_code::negative);
  EXPECT_EQ(rainbow.report_text, "no rainbow kernel\n");

  const auto pcp = rk::run({"kernel", "pcp", out});
  EXPECT_EQ(pcp.exit_code, rk::exit_code::decided);
  EXPECT_EQ(pcp.report_text.rfind("pcp kernel: {0}\n", 0), 0u);
}

TEST_F(Cli, KernelCertificateLayout) {
  const auto f = file("t6.tour", rk::serialize_tournament(rk::t_star(6)));
  const auto r = rk::run({"kernel", "rainbow", f});
  EXPECT_EQ(r.exit_code, rk::exit_code::decided);
  EXPECT_EQ(r.report_text.substr(0, r.report_text.find('\n')), "rainbow kernel: {5}");
  EXPECT_EQ(std::count(r.report_text.begin(), r.report_text.end(), '\n'), 6);
  EXPECT_NE(r.report_text.find("  0: 0 -> 5 (colors"), std::string::npos);
}

TEST_F(Cli, Checks) {
  const auto t5 = file("t5.tour", rk::serialize_tournament(rk::t5_star()));
  const auto thm2 = rk::run({"check", "thm2", t5});
  EXPECT_EQ(thm2.exit_code, rk::exit_code::negative);
  EXPECT_NE(thm2.report_text.find("{0,1,2,3}"), std::string::npos);
  const auto tri = rk::run({"check", "triangles", t5});
  EXPECT_EQ(tri.report_text, "non-rainbow triangle: 0 -> 1 -> 3 -> 0\n");
  EXPECT_EQ(rk::run({"check", "cycles", t5}).exit_code, rk::exit_code::negative);
  // Lemma precondition fails on T_5* (not T*-shaped).
  EXPECT_EQ(rk::run({"check", "lemma1", t5}).exit_code, rk::exit_code::input_error);
  const auto tri2 = file("tri.tour", "tournament 3 2\narc 0 1 0\narc 1 2 1\narc 2 0 0\n");
  EXPECT_EQ(rk::run({"check", "lemma1", tri2}).exit_code, rk::exit_code::decided);
}

TEST_F(Cli, Closures) {
  const auto f = file("p.dg", "digraph 3 1\narc 0 1 0\narc 1 2 0\n");
  EXPECT_EQ(rk::run({"closure", "rainbow", f}).report_text, "closure 3 2\narc 0 1\narc 1 2\n");
  EXPECT_EQ(rk::run({"closure", "pc", f}).report_text, "closure 3 2\narc 0 1\narc 1 2\n");
}

TEST_F(Cli, ReductionPipeline) {
  const auto h = file("h.hg", "hypergraph3 6 2\nedge 1 2 3\nedge 1 4 5\n");
  EXPECT_EQ(rk::run({"solve", "3dpm", h}).exit_code, rk::exit_code::negative);
  const auto chain = rk::run({"verify", "chain", h});
  EXPECT_EQ(chain.exit_code, rk::exit_code::decided);
  EXPECT_NE(chain.report_text.find("chain agrees: no"), std::string::npos);

  const auto rpog = path("h.rpog");
  EXPECT_EQ(rk::run({"reduce", "3dpm-to-rpog", h, "-o", rpog}).exit_code, rk::exit_code::decided);
  const auto direct = rk::run({"reduce", "3dpm-to-rkt", h});
  const auto staged = rk::run({"reduce", "rpog-to-rkt", rpog});
  EXPECT_EQ(direct.report_text, staged.report_text);
  const auto td = file("td.tour", direct.report_text);
  EXPECT_EQ(rk::parse_tournament(slurp(td)).n(), 15u);
  EXPECT_EQ(rk::run({"kernel", "rainbow", td}).exit_code, rk::exit_code::negative);
}

TEST_F(Cli, InputErrors) {
  EXPECT_EQ(rk::run({}).exit_code, rk::exit_code::input_error);
  EXPECT_EQ(rk::run({"frobnicate"}).exit_code, rk::exit_code::input_error);
  EXPECT_EQ(rk::run({"kernel", "blue", "x"}).exit_code, rk::exit_code::input_error);
  const auto missing = rk::run({"kernel", "rainbow", path("nope")});
  EXPECT_EQ(missing.exit_code, rk::exit_code::input_error);
  const auto bad = file("bad.dg", "digraph 2 1\narc 0 0 0\n");
  const auto r = rk::run({"export", "dot", bad});
  EXPECT_EQ(r.exit_code, rk::exit_code::input_error);
  EXPECT_EQ(r.error_text, "error: line 2: loop\n");
  const auto dg = file("d.dg", "digraph 3 1\narc 0 1 0\n");
  EXPECT_EQ(rk::run({"kernel", "pcp", dg}).exit_code, rk::exit_code::input_error);
}

TEST_F(Cli, GuardRefusal) {
  const auto big = file("big.dg", rk::serialize_digraph(rk::random_digraph(30, 2, 0.1, 5)));
  const auto r = rk::run({"kernel", "rainbow", big});
  EXPECT_EQ(r.exit_code, rk::exit_code::refused);
  EXPECT_EQ(r.error_text.rfind("refused: ", 0), 0u);
}

TEST_F(Cli, ExploreIsDeterministic) {
  const auto a = rk::run({"explore", "problem1", "--n", "5", "--seeds", "40", "--seed", "3", "--threads", "1"});
  const auto b = rk::run({"explore", "problem1", "--n", "5", "--seeds", "40", "--seed", "3", "--threads", "3"});
  EXPECT_EQ(a.exit_code, rk::exit_code::decided);
  EXPECT_EQ(a.report_text, b.report_text);
  EXPECT_NE(a.report_text.find("seed=3 n="), std::string::npos);
}

TEST_F(Cli, BinaryMatchesLibrary) {
  const auto f = file("t6.tour", rk::serialize_tournament(rk::t_star(6)));
  const auto out = path("stdout.txt");
  const std::string cmd = std::string(RKT_BINARY) + " export dot " + f + " > " + out;
  const int status = std::system(cmd.c_str());
  ASSERT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), rk::exit_code::decided);
  EXPECT_EQ(slurp(out), rk::run({"export", "dot", f}).report_text);

  const int negative = std::system((std::string(RKT_BINARY) + " gen t5star -o " + path("t5") +
                                    " > /dev/null && " + RKT_BINARY + " kernel rainbow " +
                                    path("t5") + " > /dev/null")
                                       .c_str());
  ASSERT_TRUE(WIFEXITED(negative));
  EXPECT_EQ(WEXITSTATUS(negative), rk::exit_code::negative);
}
