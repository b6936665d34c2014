// Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero if any
// criterion fails. Size bounds and time limits are fixed here on purpose.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "dualtt/eval.hpp"
#include "dualtt/lf.hpp"
#include "dualtt/lf_text.hpp"
#include "dualtt/oracle.hpp"
#include "dualtt/rules.hpp"
#include "dualtt/text.hpp"
#include "support/corpus.hpp"
#include "support/derivgen.hpp"
#include "support/enumerate.hpp"
#include "support/named.hpp"

using namespace dualtt;

namespace {

struct Result {
  bool ok = true;
  std::string detail;
};

Result fail(std::string why) { return {false, std::move(why)}; }

int failures = 0;

void criterion(const char* name, double limitSeconds, const std::function<Result()>& body) {
  auto start = std::chrono::steady_clock::now();
  Result r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = fail(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.ok && secs > limitSeconds) {
    std::ostringstream why;
    why << "took " << secs << "s, limit " << limitSeconds << "s";
    r = fail(why.str());
  }
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2fs", secs);
  std::printf("%s %s (%s; %s)\n", r.ok ? "PASS" : "FAIL", name, r.detail.c_str(), timing);
  std::fflush(stdout);
  if (!r.ok) ++failures;
}

std::string count(const char* what, std::size_t n) { return std::to_string(n) + " " + what; }

// ---------------------------------------------------------------------------

Result canonical() {
  std::size_t n = 0;
  for (const Expr& e : enumerate::closedExprsUpTo(6)) {
    if (e.is(ExprKind::Ap)) continue;
    EvalOutcome r = eval(e, kDefaultFuel);
    if (!r.isValue() || r.steps() != 0 || !alphaEq(r.term(), e)) return fail("not self-evaluating: " + printExpr(e));
    ++n;
  }
  return {true, count("canonical forms", n)};
}

Result applicationRule() {
  std::vector<Expr> types = enumerate::finitaryTypes(1);
  std::vector<named::T> bodies, args;
  for (std::size_t k = 1; k <= 5; ++k)
    for (auto& e : named::enumerate(k, {"x"}, {"y"}))
      if (!named::freeVars(e).count("y")) bodies.push_back(e);
  for (std::size_t k = 1; k <= 4; ++k)
    for (auto& e : named::enumerate(k, {}, {"y"}))
      if (named::freeVars(e).empty()) args.push_back(e);

  std::size_t n = 0;
  for (const Expr& a : types) {
    std::vector<named::T> members;
    for (const auto& arg : args)
      if (semVer(named::toExpr(arg), a).isYes()) members.push_back(arg);
    for (const Expr& b : types) {
      Expr pi = Expr::piScope(a, "x", b);
      for (const auto& body : bodies) {
        Expr f = named::toExpr(named::lam("x", body));
        if (!semVer(f, pi).isYes()) continue;
        for (const auto& arg : members) {
          Expr app = Expr::ap(f, named::toExpr(arg));
          if (!semVer(app, b).isYes())
            return fail("ap not in codomain: " + printExpr(app) + " at " + printExpr(b));
          EvalOutcome l = eval(app, kDefaultFuel + 1);
          EvalOutcome r = eval(named::toExpr(named::subst(body, "x", arg)), kDefaultFuel);
          if (l.kind() != r.kind() || (l.isValue() && !alphaEq(l.term(), r.term())))
            return fail("beta disagreement on " + printExpr(app));
          ++n;
        }
      }
    }
  }
  if (n < 500) return fail("only " + count("instances", n));
  return {true, count("instances", n)};
}

Result ruleVsOracle() {
  std::size_t n = 0, corpusSize = 0;
  auto test = [&](const Derivation& d, const ContextEvidence& ev, const std::string& name) -> Result {
    RuleCheck c = checkDerivation(d, ev);
    if (!c) return fail(name + " not accepted: " + c.message);
    Verdict v = semSequent(d.conclusion);
    if (!v.isYes())
      return fail(name + ": " + verdictName(v.kind()) + " for " + printSequent(d.conclusion) + " " + v.detail());
    ++n;
    return {};
  };
  for (const auto& e : corpus::load()) {
    if (Result r = test(e.main, e.evidence, e.name); !r.ok) return r;
    ++corpusSize;
  }
  if (corpusSize < 50) return fail("corpus has only " + std::to_string(corpusSize) + " derivations");
  for (const Derivation& d : derivgen::Generator().run(3))
    if (Result r = test(d, derivgen::evidence(d.conclusion.context), printSequent(d.conclusion)); !r.ok) return r;
  return {true, std::to_string(corpusSize) + " hand-written + " + std::to_string(n - corpusSize) + " generated"};
}

Result voidEmptiness() {
  OracleConfig cfg;
  cfg.fuel = 100;
  std::size_t n = 0;
  std::string witness;
  for (std::size_t k = 1; k <= 9 && witness.empty(); ++k)
    enumerate::exprs(k, 0, {}, [&](const Expr& m) {
      if (witness.empty() && semVer(m, Expr::void_(), cfg).isYes()) witness = printExpr(m);
      ++n;
    });
  if (!witness.empty()) return fail("member of Void: " + witness);
  return {true, count("closed terms", n)};
}

Result perLaws() {
  std::vector<Expr> types = enumerate::finitaryTypes(2);
  std::vector<Expr> terms = enumerate::closedExprsUpTo(5);
  OracleConfig cfg;
  cfg.fuel = 1000;
  std::vector<std::vector<Verdict::Kind>> ver;
  for (const Expr& a : types) {
    std::vector<Verdict::Kind> row;
    for (const Expr& m : terms) row.push_back(semVer(m, a, cfg).kind());
    ver.push_back(std::move(row));
  }
  std::size_t triples = 0, typePairs = 0;
  // Symmetry and transitivity over probes plus small members.
  std::vector<std::vector<Expr>> samples;
  for (std::size_t a = 0; a < types.size(); ++a) {
    std::vector<Expr> ms = probes(*classifyFinitary(types[a]).type);
    for (std::size_t i = 0; i < terms.size() && ms.size() < 12; ++i)
      if (ver[a][i] == Verdict::Kind::Yes) ms.push_back(terms[i]);
    std::vector<std::vector<bool>> eq(ms.size(), std::vector<bool>(ms.size()));
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = 0; j < ms.size(); ++j) {
        Verdict r = semEqVer(ms[i], ms[j], types[a], cfg);
        if (r.isUnknown()) return fail("unknown equality at " + printExpr(types[a]));
        eq[i][j] = r.isYes();
      }
    for (std::size_t i = 0; i < ms.size(); ++i) {
      if (!eq[i][i]) return fail("member not self-equal: " + printExpr(ms[i]));
      for (std::size_t j = 0; j < ms.size(); ++j) {
        if (eq[i][j] != eq[j][i]) return fail("asymmetric at " + printExpr(types[a]));
        for (std::size_t k = 0; k < ms.size(); ++k, ++triples)
          if (eq[i][j] && eq[j][k] && !eq[i][k]) return fail("intransitive at " + printExpr(types[a]));
      }
    }
    samples.push_back(std::move(ms));
  }
  // Type equality is mutual inclusion of membership and of equality.
  for (std::size_t a = 0; a < types.size(); ++a)
    for (std::size_t b = 0; b < types.size(); ++b, ++typePairs) {
      Verdict r = semEqType(types[a], types[b], cfg);
      if (r.isUnknown()) return fail("unknown type equality");
      bool same = ver[a] == ver[b];
      for (std::size_t i = 0; same && i < samples[a].size(); ++i)
        for (std::size_t j = 0; same && j < samples[a].size(); ++j)
          same = semEqVer(samples[a][i], samples[a][j], types[a], cfg).kind() ==
                 semEqVer(samples[a][i], samples[a][j], types[b], cfg).kind();
      if (r.isYes() != same) return fail("semEqType disagrees on " + printExpr(types[a]) + " vs " + printExpr(types[b]));
    }
  return {true, count("triples", triples) + ", " + count("type pairs", typePairs)};
}

lf::LfType top() { return lf::LfType::top(); }
lf::LfType bot() { return lf::LfType::bot(); }

Result lfTotality() {
  using namespace lf;
  LfContext g = {{"x", top()}, {"p", LfType::prod(top(), bot())}};
  std::vector<LfType> ts = enumerate::lfe::types(1, {true, {}});
  enumerate::lfe::TermOptions o;
  o.vars = {"x", "p"};
  Normal tt = Normal::bullet();
  std::size_t n = 0, ok = 0;
  for (std::size_t k = 1; k <= 8; ++k)
    enumerate::lfe::normals(k, 0, o, [&](const Normal& m) {
      for (const LfType& a : ts) {
        ok += check({}, g, m, a).ok();
        ++n;
      }
      if (m.is(NormalKind::Neutral)) {
        try {
          infer({}, g, m.neutral());
        } catch (const LfError&) {
        }
      }
      try {
        hsubst(tt, "x", top(), m);
      } catch (const LfError&) {
      }
    });
  if (n < 10000) return fail("only " + count("cases", n));
  return {true, count("cases", n) + ", " + count("accepted", ok)};
}

Result hsubstLemma() {
  using namespace lf;
  LfContext gamma = {{"b", bot()}};
  std::vector<LfType> ts = enumerate::lfe::types(1, {true, {}});
  enumerate::lfe::TermOptions no, mo;
  no.vars = {"b"};
  mo.vars = {"x", "b"};
  std::vector<Normal> ns = enumerate::lfe::normalsUpTo(4, no);
  std::vector<Normal> ms = enumerate::lfe::normalsUpTo(6, mo);
  std::size_t n = 0;
  for (const LfType& alpha : ts) {
    std::vector<Normal> args;
    for (const Normal& a : ns)
      if (check({}, gamma, a, alpha).ok()) args.push_back(a);
    LfContext ext = gamma;
    ext.push_back({"x", alpha});
    for (const Normal& m : ms) {
      if (!freeVars(m).count("x")) continue;
      for (const LfType& beta : ts) {
        if (!check({}, ext, m, beta).ok()) continue;
        for (std::size_t i = 0; i < args.size() && i < 3; ++i) {
          Normal r = hsubst(args[i], "x", alpha, m);
          if (!check({}, gamma, r, beta).ok() || freeVars(r).count("x"))
            return fail("lemma fails for " + printNormal(m) + " [" + printNormal(args[i]) + "/x]");
          if (!lfEq(parseNormal(printNormal(r)), r)) return fail("not a normal form: " + printNormal(r));
          ++n;
        }
      }
    }
  }
  if (n < 1000) return fail("only " + count("instances", n));
  return {true, count("instances", n)};
}

Result erasureBridge() {
  using namespace lf;
  enumerate::lfe::TermOptions o;
  o.products = false;
  o.aborts = false;
  std::vector<LfType> ts = enumerate::lfe::types(2);
  std::size_t n = 0;
  std::string bad;
  for (std::size_t k = 1; k <= 8 && bad.empty(); ++k)
    enumerate::lfe::normals(k, 0, o, [&](const Normal& m) {
      for (const LfType& a : ts) {
        if (!bad.empty() || !check({}, {}, m, a).ok()) continue;
        if (!semVer(erase(m), tr(a)).isYes()) bad = printNormal(m) + " : " + printType(a);
        ++n;
      }
    });
  if (!bad.empty()) return fail("bridge fails for " + bad);
  return {true, count("checked terms", n)};
}

Result roundTrip() {
  std::size_t exprs = 0, lfs = 0, files = 0;
  std::string bad;
  for (std::size_t k = 1; k <= 8 && bad.empty(); ++k)
    enumerate::exprs(k, 0, {"x"}, [&](const Expr& e) {
      std::string s = printExpr(e);
      if (bad.empty() && !alphaEq(parseExpr(s), e)) bad = s;
      ++exprs;
    });
  enumerate::lfe::TermOptions o;
  o.vars = {"x"};
  o.consts = {"c"};
  lf::Signature sig{{}, {{"c", top()}}};
  for (std::size_t k = 1; k <= 8 && bad.empty(); ++k)
    enumerate::lfe::normals(k, 0, o, [&](const lf::Normal& m) {
      std::string s = lf::printNormal(m);
      if (bad.empty() && !lf::lfEq(lf::parseNormal(s, sig), m)) bad = s;
      ++lfs;
    });
  for (const auto& e : corpus::load()) {
    auto all = parseDerivations(SourceText(e.text, e.name));
    for (const auto& d : all) {
      Derivation back = parseDerivation(printDerivation(d));
      if (!alphaEq(back.conclusion, d.conclusion) || printDerivation(back) != printDerivation(d)) bad = e.name;
    }
    ++files;
  }
  if (!bad.empty()) return fail("round trip fails for " + bad);
  return {true, count("terms", exprs) + ", " + count("LF terms", lfs) + ", " + count("corpus files", files)};
}

}  // namespace

int main() {
  criterion("canonical-rule conformance", 1, canonical);
  criterion("application-rule soundness", 30, applicationRule);
  criterion("rule-vs-oracle soundness", 60, ruleVsOracle);
  criterion("void emptiness", 60, voidEmptiness);
  criterion("PER laws", 60, perLaws);
  criterion("LF totality and decidability", 60, lfTotality);
  criterion("hereditary-substitution lemma", 60, hsubstLemma);
  criterion("erasure bridge", 60, erasureBridge);
  criterion("round trip", 60, roundTrip);
  return failures == 0 ? 0 : 1;
}
