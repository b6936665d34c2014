#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "dualtt/cli.hpp"

using namespace dualtt;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "dualtt");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cliMain(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(DUALTT_SAMPLES_DIR) + "/" + name; }

// A scratch file that lives for the duration of a test.
class TempFile {
 public:
  explicit TempFile(const std::string& content, const std::string& ext = ".txt") {
    static int counter = 0;
    path_ = (std::filesystem::temp_directory_path() /
             ("dualtt_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ext))
                .string();
    std::ofstream(path_) << content;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// ---------------------------------------------------------------------------
// eval

TEST(CliEval, IdentityApplied) {
  CliRun r = run({"eval", sample("id_app.term")});
  EXPECT_EQ(r.code, kExitAccept);
  EXPECT_EQ(r.out, "tt\n");
}

TEST(CliEval, OmegaRunsOutOfFuel) {
  CliRun r = run({"eval", sample("omega.term"), "--fuel", "100"});
  EXPECT_EQ(r.code, kExitUnknown);
  EXPECT_EQ(r.out, "FUEL\n");
}

TEST(CliEval, Stuck) {
  TempFile f("tt tt");
  CliRun r = run({"eval", f.path()});
  EXPECT_EQ(r.code, kExitReject);
  EXPECT_EQ(r.out, "STUCK tt tt\n");
}

TEST(CliEval, OpenTermIsAnInputError) {
  TempFile f("x");
  EXPECT_EQ(run({"eval", f.path()}).code, kExitUsage);
}

TEST(CliEval, SyntaxErrorReportsTheSpan) {
  TempFile f("(\\x. x");
  CliRun r = run({"eval", f.path()});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find(f.path() + ":1:"), std::string::npos) << r.err;
}

// ---------------------------------------------------------------------------
// check

TEST(CliCheck, AcceptsTheIdentityDerivation) {
  CliRun r = run({"check", sample("pi_identity.deriv")});
  EXPECT_EQ(r.code, kExitAccept) << r.err;
}

TEST(CliCheck, RejectsUnitFormationForVoid) {
  CliRun r = run({"check", sample("bad_unit.deriv")});
  EXPECT_EQ(r.code, kExitReject);
  EXPECT_NE(r.err.find("PatternMismatch"), std::string::npos) << r.err;
}

TEST(CliCheck, EarlierTreesAreContextEvidence) {
  EXPECT_EQ(run({"check", sample("hyp_evidence.deriv")}).code, kExitAccept);
  TempFile f(R"((HYP ". , x : Unit >> x in Unit"))");
  CliRun r = run({"check", f.path()});
  EXPECT_EQ(r.code, kExitReject);
  EXPECT_NE(r.err.find("MissingTypehoodEvidence"), std::string::npos);
}

TEST(CliCheck, EmptyFileIsAnInputError) {
  TempFile f("-- nothing here\n");
  EXPECT_EQ(run({"check", f.path()}).code, kExitUsage);
}

TEST(CliCheck, MissingFileIsAnInputError) { EXPECT_EQ(run({"check", "/nonexistent/x.deriv"}).code, kExitUsage); }

// ---------------------------------------------------------------------------
// sem

TEST(CliSem, VacuousSequentHolds) {
  CliRun r = run({"sem", sample("vacuous.seq")});
  EXPECT_EQ(r.code, kExitAccept);
  EXPECT_EQ(r.out, "Yes\n");
}

TEST(CliSem, RefutedSequent) {
  CliRun r = run({"sem", sample("refuted.seq")});
  EXPECT_EQ(r.code, kExitReject);
  EXPECT_EQ(r.out, "No\n");
  EXPECT_NE(r.err.find("[x := tt]"), std::string::npos);
}

TEST(CliSem, UnknownOnDependentTypes) {
  TempFile f(". >> tt in Pi (x : Unit) x");
  EXPECT_EQ(run({"sem", f.path()}).code, kExitUnknown);
}

TEST(CliSem, FuelFlag) {
  TempFile f(". >> (\\x. x x) (\\x. x x) in Unit");
  EXPECT_EQ(run({"sem", f.path(), "--fuel", "20"}).code, kExitUnknown);
}

// ---------------------------------------------------------------------------
// lf

TEST(CliLf, CheckApply) {
  EXPECT_EQ(run({"lf", "check", sample("apply.lf"), "--type", "((Top) Top) (Top) Top"}).code, kExitAccept);
  EXPECT_EQ(run({"lf", "check", sample("apply.lf"), "--type", "((Top) Top) (Top) Bot"}).code, kExitReject);
}

TEST(CliLf, SignatureAndContext) {
  EXPECT_EQ(run({"lf", "check", sample("modus_ponens.lf"), "--type", "Q", "--sig", sample("logic.sig")}).code,
            kExitAccept);
  TempFile f("f x");
  EXPECT_EQ(run({"lf", "check", f.path(), "--type", "Bot", "--ctx", "x : Top, f : (Top) Bot"}).code, kExitAccept);
  EXPECT_EQ(run({"lf", "check", f.path(), "--type", "Bot"}).code, kExitReject);
}

TEST(CliLf, Erase) {
  CliRun r = run({"lf", "erase", sample("apply.lf")});
  EXPECT_EQ(r.code, kExitAccept);
  EXPECT_EQ(r.out, "\\f. \\x. f x\n");
  EXPECT_EQ(run({"lf", "erase", sample("pair.lf")}).code, kExitReject);
}

TEST(CliLf, RedexIsASyntaxError) {
  TempFile f("([x] x) tt");
  EXPECT_EQ(run({"lf", "check", f.path(), "--type", "Top"}).code, kExitUsage);
}

TEST(CliBridge, ErasesAndChecksSemantically) {
  CliRun r = run({"bridge", sample("apply.lf"), "--type", "((Top) Top) (Top) Top"});
  EXPECT_EQ(r.code, kExitAccept) << r.err;
  EXPECT_EQ(run({"bridge", sample("pair.lf"), "--type", "Top * ((Top) Top)"}).code, kExitReject);
}

// ---------------------------------------------------------------------------
// usage

TEST(CliUsage, Errors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"eval"}).code, kExitUsage);
  EXPECT_EQ(run({"lf", "check", sample("apply.lf")}).code, kExitUsage);
  EXPECT_EQ(run({"eval", sample("id_app.term"), "--fuel", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"lf", "check", sample("apply.lf"), "--type", "(Top"}).code, kExitUsage);
}

TEST(CliUsage, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

// ---------------------------------------------------------------------------
// JSON

TEST(CliJson, OneObjectOnStdout) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--json", "eval", sample("id_app.term")},
           {"eval", "--json", sample("omega.term"), "--fuel", "10"},
           {"--json", "check", sample("bad_unit.deriv")},
           {"--json", "sem", sample("refuted.seq")},
           {"--json", "lf", "erase", sample("apply.lf")},
           {"--json", "bridge", sample("apply.lf"), "--type", "((Top) Top) (Top) Top"},
       }) {
    CliRun r = run(args);
    EXPECT_TRUE(r.err.empty()) << r.err;
    ASSERT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1) << r.out;
    auto j = nlohmann::json::parse(r.out);
    ASSERT_TRUE(j.contains("verdict") && j.contains("diagnostics") && j.contains("data"));
    std::string verdict = j["verdict"];
    int want = verdict == "accept" ? 0 : verdict == "reject" ? 1 : 2;
    EXPECT_EQ(r.code, want);
    if (verdict == "reject") EXPECT_FALSE(j["diagnostics"].empty());
  }
}

TEST(CliJson, Stable) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--json", "check", sample("bad_unit.deriv")},
           {"--json", "sem", sample("refuted.seq")},
           {"--json", "eval", sample("id_app.term")},
       })
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST(CliJson, ExactEvalReport) {
  CliRun r = run({"--json", "eval", sample("id_app.term")});
  EXPECT_EQ(r.out, R"({"data":{"result":"value","steps":1,"term":"tt"},"diagnostics":[],"verdict":"accept"})"
                   "\n");
}

TEST(CliJson, InputErrorsAreReportsToo) {
  TempFile f("(\\x. x");
  CliRun r = run({"--json", "eval", f.path()});
  EXPECT_EQ(r.code, kExitUsage);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "reject");
  EXPECT_EQ(j["data"]["error"], "input");
  EXPECT_EQ(j["diagnostics"][0]["span"]["line"], 1);
}

}  // namespace
