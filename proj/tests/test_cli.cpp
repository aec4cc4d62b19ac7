#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "skein/cli.hpp"
#include "support.hpp"

namespace skein {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "skein");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::path(::testing::TempDir()) / name;
  std::ofstream(path) << text;
  return path.string();
}

std::string corpus_file(const std::string& name) {
  return write_temp(name + ".pd", std::string(find_corpus_entry(name)->pd_text));
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

TEST(Cli, ComputeUnknotAndKink) {
  const CliRun unknot = run({"--porcelain", "compute", write_temp("unknot.pd", "loops 1\n")});
  EXPECT_EQ(unknot.code, kExitOk);
  EXPECT_TRUE(has_line(unknot.out, "lambda=1")) << unknot.out;
  EXPECT_TRUE(has_line(unknot.out, "components=1"));

  const CliRun kink = run({"--porcelain", "compute", write_temp("kink.pd", "Xr 1 1 2 2\n")});
  EXPECT_EQ(kink.code, kExitOk);
  EXPECT_TRUE(has_line(kink.out, "lambda=a")) << kink.out;
}

TEST(Cli, ComputeTrefoilSpecialized) {
  const CliRun r = run({"--porcelain", "compute", corpus_file("trefoil-left"), "--oriented", "--specialize"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(has_line(r.out, "f_specialized=1")) << r.out;
  EXPECT_TRUE(has_line(r.out, "writhe=-3")) << r.out;
}

TEST(Cli, ComputeOrientationMask) {
  const std::string hopf = corpus_file("hopf-positive");
  const CliRun r = run({"--porcelain", "compute", hopf, "--orientation", "01", "--specialize"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(has_line(r.out, "orientation=01"));
  EXPECT_TRUE(has_line(r.out, "writhe=-2"));
  EXPECT_TRUE(has_line(r.out, "f_specialized=-1 - a^4")) << r.out;
  const CliRun bad = run({"compute", hopf, "--orientation", "0"});
  EXPECT_EQ(bad.code, kExitParseError);
  EXPECT_NE(bad.err.find("components"), std::string::npos);
}

TEST(Cli, LambdaSpecializedWithoutOrientation) {
  const CliRun r = run({"--porcelain", "compute", write_temp("two.pd", "loops 2\n"), "--specialize"});
  EXPECT_TRUE(has_line(r.out, "lambda_specialized=-2")) << r.out;
}

TEST(Cli, GTau) {
  EXPECT_TRUE(has_line(run({"--porcelain", "gtau", write_temp("u.pd", "loops 1\n")}).out, "g_tau=-2"));
  EXPECT_TRUE(has_line(run({"--porcelain", "gtau", write_temp("u2.pd", "loops 2\n")}).out, "g_tau=4"));
  EXPECT_TRUE(has_line(run({"--porcelain", "gtau", corpus_file("hopf-positive")}).out, "g_tau=2*a^-2 + 2*a^2"));
}

TEST(Cli, Lmt) {
  EXPECT_TRUE(has_line(run({"--porcelain", "lmt", corpus_file("figure-eight")}).out, "lmt_rhs=1"));
  EXPECT_TRUE(has_line(run({"--porcelain", "lmt", corpus_file("hopf-positive")}).out, "lmt_rhs=-a^-4 - 1"));
  EXPECT_TRUE(has_line(run({"--porcelain", "lmt", corpus_file("borromean")}).out, "lmt_rhs=4"));
}

TEST(Cli, HumanOutputUsesLabels) {
  const CliRun r = run({"compute", write_temp("k2.pd", "Xl 2 1 1 2\n")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("Lambda(D):"), std::string::npos);
  EXPECT_NE(r.out.find("a^-1"), std::string::npos);
}

TEST(Cli, VerifyCorpus) {
  const CliRun r = run({"--porcelain", "verify", "--corpus"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_TRUE(has_line(r.out, "status=pass"));
  EXPECT_TRUE(has_line(r.out, "failures=0"));
  EXPECT_TRUE(has_line(r.out, "diagram=borromean"));
}

TEST(Cli, VerifyRandomIsDeterministic) {
  const CliRun a = run({"--porcelain", "verify", "--random", "25", "--max-crossings", "6", "--seed", "9"});
  const CliRun b = run({"--porcelain", "verify", "--random", "25", "--max-crossings", "6", "--seed", "9"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(has_line(a.out, "diagrams=25"));
  EXPECT_TRUE(has_line(a.out, "diagram=random-0024"));
  const CliRun c = run({"--porcelain", "verify", "--random", "25", "--max-crossings", "6", "--seed", "10"});
  EXPECT_NE(a.out, c.out);
}

TEST(Cli, VerifyFileHumanMode) {
  const CliRun r = run({"verify", corpus_file("whitehead")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("PASS ", 0), 0U) << r.out;
  EXPECT_NE(r.out.find("all 1 diagrams passed"), std::string::npos);
}

TEST(Cli, VerifyNeedsSubjects) { EXPECT_EQ(run({"verify"}).code, kExitParseError); }

TEST(Cli, CorpusListAndShow) {
  const CliRun list = run({"--porcelain", "corpus", "list"});
  EXPECT_EQ(list.code, kExitOk);
  EXPECT_TRUE(has_line(list.out, "entry=unknot"));
  const CliRun show = run({"corpus", "show", "trefoil-right"});
  EXPECT_EQ(show.code, kExitOk);
  EXPECT_EQ(parse_pd(show.out), testing::corpus_diagram("trefoil-right"));
  EXPECT_EQ(run({"corpus", "show", "nope"}).code, kExitParseError);
}

TEST(Cli, EveryCorpusEntryShowsAsValidPd) {
  for (const auto& entry : corpus()) {
    const CliRun show = run({"corpus", "show", std::string(entry.name)});
    ASSERT_EQ(show.code, kExitOk) << entry.name;
    EXPECT_EQ(parse_pd(show.out).component_count(), static_cast<std::size_t>(entry.expected_com)) << entry.name;
  }
}

TEST(Cli, ParseErrorsExitOne) {
  const CliRun r = run({"compute", write_temp("bad.pd", "Xr 1 1 2 2\nXr 7 8 9\n")});
  EXPECT_EQ(r.code, kExitParseError);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  EXPECT_EQ(run({"compute", "/nonexistent/file.pd"}).code, kExitParseError);
  EXPECT_EQ(run({"compute", write_temp("empty.pd", "# nothing\n")}).code, kExitParseError);
}

TEST(Cli, UsageErrors) {
  EXPECT_NE(run({}).code, kExitOk);
  EXPECT_NE(run({"frobnicate"}).code, kExitOk);
  EXPECT_NE(run({"verify", "--random", "x"}).code, kExitOk);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

}  // namespace
}  // namespace skein
