#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = SUPERDEG_FIXTURES;

int run(const std::string &args) {
  std::string cmd = std::string(SUPERDEG_CLI) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path &p) {
  std::ifstream in(p);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path scratch(const std::string &name) {
  fs::path p = fs::temp_directory_path() / ("superdeg_cli_" + name);
  fs::remove_all(p);
  return p;
}

std::string conf(const std::string &name) { return (kFixtures / name).string(); }

} // namespace

TEST(Cli, EssentialWritesSetsAndReports) {
  auto out = scratch("essential");
  ASSERT_EQ(run("essential --config " + conf("osp14_varpi1.conf") + " --favourable-k 2 --out " +
                out.string()),
            0);
  std::string es1 = slurp(out / "es_1.txt");
  EXPECT_EQ(std::count(es1.begin(), es1.end(), '\n'), 10);
  EXPECT_TRUE(fs::exists(out / "essential_report.json"));
  EXPECT_TRUE(fs::exists(out / "essential_report.txt"));
}

TEST(Cli, TrivialWeightGivesOneMonomial) {
  auto out = scratch("trivial");
  ASSERT_EQ(run("essential --config " + conf("osp14_trivial.conf") + " --out " + out.string()), 0);
  EXPECT_EQ(slurp(out / "es_1.txt"), "I=00 m=(0,0,0,0) k=1\n");
}

TEST(Cli, BadFamilyIsUsageError) {
  auto dir = scratch("bad");
  fs::create_directories(dir);
  std::ofstream(dir / "bad.conf") << "[algebra]\nfamily = G3\n";
  EXPECT_EQ(run("essential --config " + (dir / "bad.conf").string()), 2);
  EXPECT_EQ(run("essential --bogus-flag"), 2);
}

TEST(Cli, DataFilesAreDeterministic) {
  auto a = scratch("det_a"), b = scratch("det_b");
  for (const auto &out : {a, b})
    ASSERT_EQ(run("degenerate --config " + conf("osp14_varpi1.conf") +
                  " --degree-bound 2 --samples 0,1 --out " + out.string()),
              0);
  EXPECT_EQ(slurp(a / "family.txt"), slurp(b / "family.txt"));
  EXPECT_EQ(slurp(a / "relations.txt"), slurp(b / "relations.txt"));
  EXPECT_FALSE(slurp(a / "family.txt").empty());
  EXPECT_NE(slurp(a / "degenerate_report.json").find("\"meta\""), std::string::npos);
}

TEST(Cli, ToricVerdictsAndErrors) {
  auto out = scratch("toric");
  EXPECT_EQ(run("toric --exponents " + conf("osp14_generators.exp") + " --out " + out.string()), 0);
  EXPECT_NE(slurp(out / "toric_certificate.json").find("\"verdict\": \"toric\""),
            std::string::npos);
  EXPECT_EQ(run("toric --exponents " + conf("odd_removal_violation.exp") + " --out " +
                out.string()),
            1);
  EXPECT_NE(slurp(out / "toric_certificate.txt").find("hypotheses-not-met"), std::string::npos);
  fs::create_directories(out);
  std::ofstream(out / "empty.exp") << "# nothing\n";
  EXPECT_EQ(run("toric --exponents " + (out / "empty.exp").string() + " --out " + out.string()), 2);
}

TEST(Cli, DegreeOneWarns) {
  auto out = scratch("d1");
  ASSERT_EQ(run("degenerate --config " + conf("sl2_veronese.conf") + " --degree-bound 1 --out " +
                out.string()),
            0);
  EXPECT_NE(slurp(out / "degenerate_report.txt").find("warning"), std::string::npos);
}

TEST(Cli, VerifyExampleMissingFixture) {
  auto dir = scratch("nofixtures");
  fs::create_directories(dir);
  EXPECT_EQ(run("verify-example --fixtures " + dir.string()), 2);
}

TEST(Cli, VerifyExampleCorruptedFixtureFailsPolytopeStage) {
  auto dir = scratch("corrupt");
  fs::create_directories(dir);
  for (const char *f : {"osp14_varpi1.conf", "osp14_varpi1.polytope", "osp14_generators.exp"})
    fs::copy_file(kFixtures / f, dir / f);
  std::ofstream(dir / "osp14_varpi1.polytope", std::ios::app) << "0 0 1 0 0 0 <= 0\n";
  EXPECT_EQ(run("verify-example --fixtures " + dir.string() + " --out " + (dir / "out").string()),
            1);
  std::string report = slurp(dir / "out" / "verify_example.txt");
  EXPECT_NE(report.find("stage polytope: FAIL"), std::string::npos);
}
