#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>

namespace {

namespace fs = std::filesystem;

int run(const std::string& args) {
  const std::string cmd = std::string(RISQAOA_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("risqaoa_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path write_config(const fs::path& dir, const std::string& body) {
  const auto path = dir / "run.ini";
  std::ofstream(path) << body;
  return path;
}

std::string read(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

constexpr const char* kSmall =
    "[scenario]\nrows = 2\ncols = 3\n[model]\nid = 4\n[qaoa]\ndepth = 2\nsteps = 10\nrestarts = 2\n"
    "[validator]\ntheta_step_deg = 2\nphi_step_deg = 4\n";

TEST(Cli, PrintDefaultsSucceeds) { EXPECT_EQ(run("--print-defaults"), 0); }

TEST(Cli, RunWritesArtifacts) {
  const auto dir = scratch("run");
  const auto cfg = write_config(dir, kSmall);
  ASSERT_EQ(run("--out-dir " + dir.string() + " run " + cfg.string()), 0);
  for (const char* f : {"report.json", "trace.csv", "pattern.csv", "pattern.pgm", "hamiltonian_edges.txt"}) {
    EXPECT_TRUE(fs::exists(dir / f)) << f;
  }
  EXPECT_EQ(read(dir / "trace.csv").substr(0, 7), "restart");
}

TEST(Cli, SameSeedGivesSameReportModuloTiming) {
  const auto a = scratch("seed_a"), b = scratch("seed_b");
  const auto cfg = write_config(a, kSmall);
  ASSERT_EQ(run("--seed 5 --out-dir " + a.string() + " run " + cfg.string()), 0);
  ASSERT_EQ(run("--seed 5 --threads 1 --out-dir " + b.string() + " run " + cfg.string()), 0);
  EXPECT_EQ(read(a / "trace.csv"), read(b / "trace.csv"));
  EXPECT_EQ(read(a / "pattern.csv"), read(b / "pattern.csv"));
}

TEST(Cli, OtherSubcommands) {
  const auto dir = scratch("sub");
  const auto cfg = write_config(dir, kSmall);
  const std::string out = "--out-dir " + dir.string() + " ";
  EXPECT_EQ(run(out + "oracle " + cfg.string()), 0);
  EXPECT_EQ(run(out + "compare " + cfg.string()), 0);
  EXPECT_TRUE(fs::exists(dir / "comparison.json"));
  EXPECT_EQ(run(out + "sweep --oracle-only --alphas 0.1,0.4 " + cfg.string()), 0);
  EXPECT_TRUE(fs::exists(dir / "sweep.json"));
  EXPECT_EQ(run(out + "pattern --bits 101010 " + cfg.string()), 0);
  EXPECT_TRUE(fs::exists(dir / "pattern.pgm"));
}

TEST(Cli, ConfigErrorsExitWithTwo) {
  const auto dir = scratch("bad");
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("--bogus-flag"), 2);
  EXPECT_EQ(run("run " + write_config(dir, "[scenario]\nrows = 0\n").string()), 2);
  EXPECT_EQ(run("run " + write_config(dir, "[scenario]\nwidth = 3\n").string()), 2);
  EXPECT_EQ(run("run " + (dir / "missing.ini").string()), 2);
  const auto cfg = write_config(dir, kSmall);
  EXPECT_EQ(run("pattern --bits 10 " + cfg.string()), 2);
  EXPECT_EQ(run("sweep --alphas x,y " + cfg.string()), 2);
}

TEST(Cli, OversizedProblemExitsWithThree) {
  const auto dir = scratch("cap");
  const auto cfg = write_config(dir, "[scenario]\nrows = 6\ncols = 6\n");
  EXPECT_EQ(run("--out-dir " + dir.string() + " run " + cfg.string()), 3);
}

}  // namespace
