// Command-line driver. Exit codes: 0 accept, 1 reject, 2 unknown, 3 usage
// or parse error.

#ifndef DUALTT_CLI_HPP_
#define DUALTT_CLI_HPP_

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dualtt/eval.hpp"
#include "dualtt/lf.hpp"
#include "dualtt/lf_text.hpp"
#include "dualtt/oracle.hpp"
#include "dualtt/report.hpp"
#include "dualtt/rules.hpp"
#include "dualtt/text.hpp"

namespace dualtt {

enum ExitCode : int { kExitAccept = 0, kExitReject = 1, kExitUnknown = 2, kExitUsage = 3 };

namespace detail {

struct InputError {
  SourceSpan span;
  std::string message;
};

inline SourceText readSource(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{SourceSpan{path, 1, 1, 1}, "cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return SourceText(ss.str(), path);
}

inline SourceSpan wholeSpan(const SourceText& src) { return src.span(0, src.text().size()); }

inline int exitFor(Outcome o) {
  switch (o) {
    case Outcome::Accept: return kExitAccept;
    case Outcome::Reject: return kExitReject;
    case Outcome::Unknown: return kExitUnknown;
  }
  return kExitUsage;
}

inline Outcome outcomeFor(const Verdict& v) {
  switch (v.kind()) {
    case Verdict::Kind::Yes: return Outcome::Accept;
    case Verdict::Kind::No: return Outcome::Reject;
    case Verdict::Kind::Unknown: return Outcome::Unknown;
  }
  return Outcome::Unknown;
}

class Driver {
 public:
  Driver(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  bool json = false;

  // Emits the report; `text` is the human-readable result line(s).
  int finish(Report& r, const std::string& text, int code) {
    if (json) {
      out_ << renderJson(r) << "\n";
    } else {
      if (!text.empty()) out_ << text << "\n";
      for (const auto& d : r.diagnostics) err_ << d.span.str() << ": " << d.message << "\n";
    }
    return code;
  }
  int finish(Report& r, const std::string& text) { return finish(r, text, exitFor(r.verdict)); }

  int inputError(const SourceSpan& span, const std::string& message) {
    Report r;
    r.reject(span, message);
    r.data["error"] = "input";
    return finish(r, "", kExitUsage);
  }

  template <class F>
  int guarded(F&& body) {
    try {
      return body();
    } catch (const SyntaxError& e) {
      return inputError(e.span, "syntax error: " + e.message);
    } catch (const InputError& e) {
      return inputError(e.span, e.message);
    }
  }

  int eval(const std::string& path, std::uint64_t fuel) {
    return guarded([&] {
      SourceText src = readSource(path);
      Expr e = parseExpr(src);
      Report r;
      std::string text;
      std::optional<EvalOutcome> res;
      try {
        res = dualtt::eval(e, fuel);
      } catch (const FreeVariable& fv) {
        return inputError(wholeSpan(src), fv.what());
      }
      r.data["steps"] = res->steps();
      switch (res->kind()) {
        case EvalOutcome::Kind::Value:
          text = printExpr(res->term());
          r.data["result"] = "value";
          r.data["term"] = text;
          break;
        case EvalOutcome::Kind::Stuck:
          text = "STUCK " + printExpr(res->term());
          r.data["result"] = "stuck";
          r.data["term"] = printExpr(res->term());
          r.reject(wholeSpan(src), "evaluation is stuck at '" + printExpr(res->term()) + "'");
          break;
        case EvalOutcome::Kind::OutOfFuel:
          text = "FUEL";
          r.data["result"] = "out_of_fuel";
          r.verdict = Outcome::Unknown;
          r.diagnostics.push_back({wholeSpan(src), "no canonical form within " + std::to_string(fuel) + " steps"});
          break;
      }
      return finish(r, text);
    });
  }

  int check(const std::string& path) {
    return guarded([&] {
      SourceText src = readSource(path);
      std::vector<Derivation> ds = parseDerivations(src);
      if (ds.empty()) throw InputError{wholeSpan(src), "no derivation in '" + path + "'"};
      Derivation main = ds.back();
      ds.pop_back();
      RuleCheck c = checkDerivation(main, ds);
      Report r;
      r.data["conclusion"] = printSequent(main.conclusion);
      r.data["evidence"] = ds.size();
      if (c) return finish(r, "accepted: " + printSequent(main.conclusion));
      r.data["error"] = ruleErrorName(c.error);
      r.data["path"] = c.path;
      std::string where = c.path.empty() ? "root" : "node " + c.path;
      r.reject(c.span ? *c.span : wholeSpan(src), std::string(ruleErrorName(c.error)) + " at " + where + ": " + c.message);
      return finish(r, "rejected");
    });
  }

  int sem(const std::string& path, const OracleConfig& cfg) {
    return guarded([&] {
      SourceText src = readSource(path);
      SequentJudgement s = parseSequent(src);
      Verdict v = semSequent(s, cfg);
      Report r;
      r.verdict = outcomeFor(v);
      r.data["sequent"] = printSequent(s);
      r.data["answer"] = verdictName(v.kind());
      if (!v.isYes()) {
        r.data["cause"] = causeName(v.cause());
        r.diagnostics.push_back({wholeSpan(src), v.detail()});
      }
      std::string text = verdictName(v.kind());
      return finish(r, text);
    });
  }

  struct LfInputs {
    lf::Signature sig;
    lf::LfContext ctx;
    std::optional<lf::LfType> type;
    lf::Normal term = lf::Normal::bullet();
    SourceText termSrc{"", ""};
  };

  LfInputs readLf(const std::string& termPath, const std::optional<std::string>& typeText,
                  const std::optional<std::string>& sigPath, const std::optional<std::string>& ctxText) {
    LfInputs in;
    if (sigPath) in.sig = lf::parseSignature(readSource(*sigPath));
    if (ctxText) in.ctx = lf::parseLfContext(*ctxText, "--ctx");
    if (typeText) in.type = lf::parseType(*typeText, "--type");
    in.termSrc = readSource(termPath);
    in.term = lf::parseNormal(in.termSrc, in.sig);
    return in;
  }

  int lfCheck(const std::string& termPath, const std::string& typeText, const std::optional<std::string>& sigPath,
              const std::optional<std::string>& ctxText) {
    return guarded([&] {
      LfInputs in = readLf(termPath, typeText, sigPath, ctxText);
      SourceSpan at = wholeSpan(in.termSrc);
      Report r;
      r.data["term"] = lf::printNormal(in.term);
      r.data["type"] = lf::printType(*in.type);
      if (auto e = lf::checkSignature(in.sig)) {
        r.reject(sigPath ? SourceSpan{*sigPath, 1, 1, 1} : at, std::string("signature: ") + e->what());
        r.data["error"] = lf::lfErrorName(e->kind);
        return finish(r, "rejected");
      }
      if (auto e = lf::checkContext(in.sig, in.ctx)) {
        r.reject(SourceSpan{"--ctx", 1, 1, 1}, std::string("context: ") + e->what());
        r.data["error"] = lf::lfErrorName(e->kind);
        return finish(r, "rejected");
      }
      lf::LfCheck c = lf::check(in.sig, in.ctx, in.term, *in.type);
      if (c) return finish(r, "accepted");
      r.data["error"] = lf::lfErrorName(c.error);
      r.reject(at, std::string(lf::lfErrorName(c.error)) + ": " + c.message);
      return finish(r, "rejected");
    });
  }

  int lfErase(const std::string& termPath, const std::optional<std::string>& sigPath) {
    return guarded([&] {
      LfInputs in = readLf(termPath, std::nullopt, sigPath, std::nullopt);
      Report r;
      try {
        std::string e = printExpr(lf::erase(in.term));
        r.data["erased"] = e;
        return finish(r, e);
      } catch (const lf::LfError& e) {
        r.data["error"] = lf::lfErrorName(e.kind);
        r.reject(wholeSpan(in.termSrc), std::string(lf::lfErrorName(e.kind)) + ": " + e.what());
        return finish(r, "rejected");
      }
    });
  }

  int bridge(const std::string& termPath, const std::string& typeText, const OracleConfig& cfg) {
    return guarded([&] {
      LfInputs in = readLf(termPath, typeText, std::nullopt, std::nullopt);
      SourceSpan at = wholeSpan(in.termSrc);
      Report r;
      r.data["term"] = lf::printNormal(in.term);
      r.data["type"] = lf::printType(*in.type);
      lf::LfCheck c = lf::check({}, {}, in.term, *in.type);
      if (!c) {
        r.data["error"] = lf::lfErrorName(c.error);
        r.reject(at, std::string(lf::lfErrorName(c.error)) + ": " + c.message);
        return finish(r, "rejected");
      }
      Expr m, a;
      try {
        m = lf::erase(in.term);
        a = lf::tr(*in.type);
      } catch (const lf::LfError& e) {
        r.data["error"] = lf::lfErrorName(e.kind);
        r.reject(at, std::string(lf::lfErrorName(e.kind)) + ": " + e.what());
        return finish(r, "rejected");
      }
      r.data["erased"] = printExpr(m);
      r.data["erased_type"] = printExpr(a);
      Verdict v = semVer(m, a, cfg);
      r.verdict = outcomeFor(v);
      r.data["answer"] = verdictName(v.kind());
      if (!v.isYes()) {
        r.data["cause"] = causeName(v.cause());
        r.diagnostics.push_back({at, v.detail()});
      }
      return finish(r, printExpr(m) + " in " + printExpr(a) + ": " + verdictName(v.kind()));
    });
  }

 private:
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace detail

inline int cliMain(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Dual-kernel proof checker for computational and LF type theory", "dualtt"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Print the report as one JSON object");

  std::uint64_t fuel = kDefaultFuel;
  OracleConfig cfg;
  std::string file, typeText;
  std::optional<std::string> sigPath, ctxText;

  auto* evalCmd = app.add_subcommand("eval", "Evaluate a closed term to canonical form");
  evalCmd->add_option("file", file, "Term file")->required();
  evalCmd->add_option("--fuel", fuel, "Beta-step budget")->check(CLI::PositiveNumber);

  auto* checkCmd = app.add_subcommand("check", "Check a derivation against the rule catalog");
  checkCmd->add_option("file", file, "Derivation file; earlier trees are context evidence")->required();

  auto* semCmd = app.add_subcommand("sem", "Decide a sequent by its meaning explanation");
  semCmd->add_option("file", file, "Sequent file")->required();
  semCmd->add_option("--fuel", cfg.fuel, "Beta-step budget per evaluation")->check(CLI::PositiveNumber);
  semCmd->add_option("--max-classes", cfg.maxClasses, "Bound on equivalence classes per type")
      ->check(CLI::PositiveNumber);
  semCmd->add_option("--probe-size", cfg.probeSize, "Largest extra probe term, in nodes")->check(CLI::PositiveNumber);

  auto* lfCmd = app.add_subcommand("lf", "LF kernel");
  lfCmd->require_subcommand(1);
  auto* lfCheckCmd = lfCmd->add_subcommand("check", "Check a proof term against a type");
  lfCheckCmd->add_option("file", file, "Proof term file")->required();
  lfCheckCmd->add_option("--type", typeText, "LF type")->required();
  lfCheckCmd->add_option("--sig", sigPath, "Signature file");
  lfCheckCmd->add_option("--ctx", ctxText, "Context, e.g. \"x : Top, f : (Top) Top\"");
  auto* lfEraseCmd = lfCmd->add_subcommand("erase", "Erase a proof term to a computational term");
  lfEraseCmd->add_option("file", file, "Proof term file")->required();
  lfEraseCmd->add_option("--sig", sigPath, "Signature file");

  auto* bridgeCmd = app.add_subcommand("bridge", "Check, erase, then decide membership semantically");
  bridgeCmd->add_option("file", file, "Proof term file")->required();
  bridgeCmd->add_option("--type", typeText, "LF type")->required();
  bridgeCmd->add_option("--fuel", cfg.fuel, "Beta-step budget per evaluation")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  detail::Driver d(out, err);
  d.json = json;
  if (evalCmd->parsed()) return d.eval(file, fuel);
  if (checkCmd->parsed()) return d.check(file);
  if (semCmd->parsed()) return d.sem(file, cfg);
  if (lfCheckCmd->parsed()) return d.lfCheck(file, typeText, sigPath, ctxText);
  if (lfEraseCmd->parsed()) return d.lfErase(file, sigPath);
  if (bridgeCmd->parsed()) return d.bridge(file, typeText, cfg);
  err << app.help();
  return kExitUsage;
}

}  // namespace dualtt

#endif  // DUALTT_CLI_HPP_
