#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "hausp/io.hpp"
#include "test_support.hpp"

using namespace hausp;
using namespace hausp::testing;

namespace {

struct CliRun {
  int code = 0;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "hausp-pg");
  std::vector<const char*> argv;
  for (const auto& s : args) argv.push_back(s.c_str());
  std::ostringstream out, err;
  CliRun r;
  r.code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class Cli : public ::testing::Test {
 protected:
  std::filesystem::path dir;
  void SetUp() override {
    dir = std::filesystem::temp_directory_path() /
          ("hausp_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir);
  }
  void TearDown() override { std::filesystem::remove_all(dir); }
  std::string file(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_F(Cli, MineWritesResultsAndStats) {
  CliRun r = run({"mine", "--input", data_path("example.txt"), "--xi", "0.12", "--output", file("r.txt"), "--stats",
               file("s.txt")});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(load_results(file("r.txt")), example_reference());
  std::ifstream s(file("s.txt"));
  std::string stats((std::istreambuf_iterator<char>(s)), {});
  EXPECT_NE(stats.find("minau=36\n"), std::string::npos);
  EXPECT_NE(stats.find("hausps_found=11\n"), std::string::npos);
}

TEST_F(Cli, MineQuantityFormatWithTrace) {
  CliRun r = run({"mine", "--input", data_path("example_q.txt"), "--eu", data_path("example_eu.txt"), "--xi", "3/25",
               "--strategy", "rsau", "--output", file("r.txt"), "--trace"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(load_results(file("r.txt")), example_reference());
  EXPECT_NE(r.err.find(" | "), std::string::npos);
}

TEST_F(Cli, OracleAndDiff) {
  ASSERT_EQ(run({"oracle", "--input", data_path("example.txt"), "--xi", "0.12", "--max-len", "6", "--output",
                 file("o.txt")}).code,
            kOk);
  ASSERT_EQ(run({"mine", "--input", data_path("example.txt"), "--xi", "0.12", "--max-len", "6", "--output",
                 file("m.txt")}).code,
            kOk);
  CliRun same = run({"diff", file("o.txt"), file("m.txt")});
  EXPECT_EQ(same.code, kOk) << same.out;
  ASSERT_EQ(run({"mine", "--input", data_path("example.txt"), "--xi", "0.2", "--output", file("h.txt")}).code, kOk);
  CliRun differ = run({"diff", file("o.txt"), file("h.txt")});
  EXPECT_EQ(differ.code, kDiffMismatch);
  EXPECT_NE(differ.out.find("< "), std::string::npos);
}

TEST_F(Cli, GenDuplicatesAndSynthesises) {
  ASSERT_EQ(run({"gen", "--input", data_path("example.txt"), "--dup", "2", "--output", file("d.txt")}).code, kOk);
  Database d2 = load_qsdb(file("d.txt"));
  EXPECT_EQ(d2.size(), 6u);
  EXPECT_EQ(d2.total_utility(), 600);
  ASSERT_EQ(run({"gen", "--synthetic", "20", "--seed", "3", "--output", file("s.txt")}).code, kOk);
  EXPECT_EQ(load_qsdb(file("s.txt")).size(), 20u);
}

TEST_F(Cli, BenchPrintsOneBlockPerCell) {
  CliRun r = run({"bench", "--input", data_path("example.txt"), "--xi-list", "0.12,0.2", "--strategies", "rsau,advance"});
  ASSERT_EQ(r.code, kOk) << r.err;
  std::size_t blocks = 0;
  for (std::size_t p = 0; (p = r.out.find("candidates_generated=", p)) != std::string::npos; ++p) ++blocks;
  EXPECT_EQ(blocks, 4u);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, kUsage);
  EXPECT_EQ(run({"mine", "--input", data_path("example.txt"), "--output", file("r.txt")}).code, kUsage);
  EXPECT_EQ(run({"mine", "--input", data_path("example.txt"), "--xi", "0", "--output", file("r.txt")}).code, kUsage);
  EXPECT_EQ(run({"mine", "--input", data_path("example.txt"), "--xi", "0.1", "--strategy", "x", "--output",
                 file("r.txt")}).code,
            kUsage);
  EXPECT_EQ(run({"oracle", "--input", data_path("example.txt"), "--xi", "0.1", "--max-len", "9", "--output",
                 file("r.txt")}).code,
            kUsage);
  std::ofstream(file("bad.txt")) << "1[1] -1 -2 SUtility:2\n";
  CliRun bad = run({"mine", "--input", file("bad.txt"), "--xi", "0.1", "--output", file("r.txt")});
  EXPECT_EQ(bad.code, kParse);
  EXPECT_NE(bad.err.find("line 1"), std::string::npos) << bad.err;
  EXPECT_EQ(run({"mine", "--input", file("missing.txt"), "--xi", "0.1", "--output", file("r.txt")}).code, kIo);
  EXPECT_EQ(run({"mine", "--input", data_path("example.txt"), "--xi", "0.1", "--output", "/nonexistent/dir/r.txt"})
                .code,
            kIo);
}
