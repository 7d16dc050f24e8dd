#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>

#include "fixture.hpp"

namespace {

namespace fs = std::filesystem;
using jmtest::TempDir;

struct Result {
  int code = -1;
  std::string out;  // stdout and stderr together
};

Result cli(const std::string& args) {
  const std::string cmd = std::string("'") + JMETRICS_CLI_PATH + "' " + args + " 2>&1";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string q(const fs::path& p) { return "'" + p.string() + "'"; }

TEST(Cli, Version) {
  const auto r = cli("--version");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("jmetrics "), std::string::npos);
}

TEST(Cli, MissingRequiredOption) {
  TempDir out;
  const auto r = cli("--out " + q(out.path()));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("--input"), std::string::npos) << r.out;
}

TEST(Cli, AnalyzesFixture) {
  TempDir out;
  const auto r = cli("--input " + q(jmtest::printshop_dir()) + " --out " + q(out.path()));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("analyzed 6/6 source files (10 artifacts), 3 packages, 7 classes, 0 diagnostics"),
            std::string::npos)
      << r.out;
  EXPECT_TRUE(fs::exists(out / "class_graph.dot"));
}

TEST(Cli, EmitList) {
  TempDir out;
  const auto r = cli("--input " + q(jmtest::printshop_dir()) + " --out " + q(out.path()) + " --emit treemap,charts");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(fs::exists(out / "treemap.svg"));
  EXPECT_TRUE(fs::exists(out / "artifact_chart.svg"));
  EXPECT_FALSE(fs::exists(out / "store"));
  EXPECT_EQ(cli("--input " + q(jmtest::printshop_dir()) + " --out " + q(out.path()) + " --emit pdf").code, 2);
}

TEST(Cli, StrictAndLenient) {
  TempDir out;
  const auto strict = cli("--strict --input " + q(jmtest::broken_dir()) + " --out " + q(out / "s"));
  EXPECT_EQ(strict.code, 1);
  EXPECT_NE(strict.out.find("src/shop/Receipt.java:6:9: error:"), std::string::npos) << strict.out;
  const auto lenient = cli("--input " + q(jmtest::broken_dir()) + " --out " + q(out / "l"));
  EXPECT_EQ(lenient.code, 0);
  EXPECT_NE(lenient.out.find("1 diagnostics"), std::string::npos) << lenient.out;
}

TEST(Cli, MissingInputDirectory) {
  TempDir out;
  EXPECT_EQ(cli("--input " + q(out / "absent") + " --out " + q(out / "o")).code, 2);
}

TEST(Cli, DumpAst) {
  TempDir in, out;
  jmtest::write_file(in / "d.java", "package p; class A { int f; void m(int a) { } }");
  const auto r = cli("--dump-ast --emit report_csv --input " + q(in.path()) + " --out " + q(out.path()));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("CompilationUnit d.java\n  package p\n  Class A\n    Field int f\n    Method void m(int a)\n"),
            std::string::npos)
      << r.out;
}

}  // namespace
