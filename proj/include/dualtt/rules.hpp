// Rule schemes for the functional sequent judgement and a checker for
// derivation trees built from them.
//
// A scheme is plain data: sequent patterns over metavariables. Matching is
// first-order and one-pass. A substitution instance [N/x]B whose scope B is
// only bound by a later premise is deferred and checked by computing the
// substitution once everything else is bound.

#ifndef DUALTT_RULES_HPP_
#define DUALTT_RULES_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dualtt/derivation.hpp"
#include "dualtt/judgement.hpp"
#include "dualtt/syntax.hpp"
#include "dualtt/text.hpp"

namespace dualtt {

// ---------------------------------------------------------------------------
// Patterns

enum class PatKind { Meta, Unit, Void, Bullet, Pi, Lam, Ap, Inst, Var };

struct ExprPattern {
  PatKind kind;
  // Meta: expression metavariable. Pi/Lam/Inst: scope metavariable.
  // Var: name metavariable.
  std::string meta;
  std::string binder;  // printing only
  std::vector<ExprPattern> kids;  // Pi: {dom}; Ap: {fun, arg}; Inst: {arg}

  static ExprPattern m(std::string name) { return {PatKind::Meta, std::move(name), {}, {}}; }
  static ExprPattern unit() { return {PatKind::Unit, {}, {}, {}}; }
  static ExprPattern void_() { return {PatKind::Void, {}, {}, {}}; }
  static ExprPattern bullet() { return {PatKind::Bullet, {}, {}, {}}; }
  static ExprPattern var(std::string name) { return {PatKind::Var, std::move(name), {}, {}}; }
  static ExprPattern pi(ExprPattern dom, std::string binder, std::string scope) {
    return {PatKind::Pi, std::move(scope), std::move(binder), {std::move(dom)}};
  }
  static ExprPattern lam(std::string binder, std::string scope) {
    return {PatKind::Lam, std::move(scope), std::move(binder), {}};
  }
  static ExprPattern ap(ExprPattern f, ExprPattern a) { return {PatKind::Ap, {}, {}, {std::move(f), std::move(a)}}; }
  // [arg/binder]scope
  static ExprPattern inst(std::string scope, std::string binder, ExprPattern arg) {
    return {PatKind::Inst, std::move(scope), std::move(binder), {std::move(arg)}};
  }
};

enum class BodyShape { IsSet, EqSet, Ver, EqVer, AnyJudgement };

struct BodyPattern {
  BodyShape shape;
  std::vector<ExprPattern> parts;  // in the order printed
};

enum class CtxShape {
  Same,      // Γ
  Extend,    // Γ, x:A
  Contains,  // Γ, x:A, Γ′
};

struct CtxPattern {
  CtxShape shape = CtxShape::Same;
  std::string var;  // name metavariable for Extend/Contains
  std::optional<ExprPattern> type;
};

struct SequentPattern {
  CtxPattern ctx;
  BodyPattern body;
};

struct RuleScheme {
  std::string name;
  std::vector<SequentPattern> premises;
  SequentPattern conclusion;
};

// ---------------------------------------------------------------------------
// Pattern printing, in the notation of rule figures.

inline std::string printPattern(const ExprPattern& p) {
  switch (p.kind) {
    case PatKind::Meta:
    case PatKind::Var: return p.meta;
    case PatKind::Unit: return "⊤";
    case PatKind::Void: return "⊥";
    case PatKind::Bullet: return "•";
    case PatKind::Pi: return "Π(" + printPattern(p.kids[0]) + ", " + p.binder + "." + p.meta + ")";
    case PatKind::Lam: return "λ" + p.binder + "." + p.meta;
    case PatKind::Ap: return "ap(" + printPattern(p.kids[0]) + "," + printPattern(p.kids[1]) + ")";
    case PatKind::Inst:
      if (p.kids[0].kind == PatKind::Var && p.kids[0].meta == p.binder) return p.meta;
      return "[" + printPattern(p.kids[0]) + "/" + p.binder + "]" + p.meta;
  }
  return "?";
}

inline std::string printPattern(const SequentPattern& s) {
  std::string ctx = "Γ";
  if (s.ctx.shape != CtxShape::Same) ctx += ", " + s.ctx.var + ":" + printPattern(*s.ctx.type);
  if (s.ctx.shape == CtxShape::Contains) ctx += ", Γ′";
  const auto& p = s.body.parts;
  std::string body;
  switch (s.body.shape) {
    case BodyShape::IsSet: body = printPattern(p[0]) + " set"; break;
    case BodyShape::EqSet: body = printPattern(p[0]) + " = " + printPattern(p[1]) + " set"; break;
    case BodyShape::Ver: body = printPattern(p[0]) + " ∈ " + printPattern(p[1]); break;
    case BodyShape::EqVer:
      body = printPattern(p[0]) + " = " + printPattern(p[1]) + " ∈ " + printPattern(p[2]);
      break;
    case BodyShape::AnyJudgement: body = "J"; break;
  }
  return ctx + " ≫ " + body;
}

inline std::string printPattern(const RuleScheme& r) {
  std::string s;
  for (std::size_t i = 0; i < r.premises.size(); ++i) s += (i ? "   " : "") + printPattern(r.premises[i]);
  if (!s.empty()) s += "  ⟹  ";
  return r.name + ": " + s + printPattern(r.conclusion);
}

// ---------------------------------------------------------------------------
// The catalog

inline const std::vector<RuleScheme>& ruleCatalog() {
  using P = ExprPattern;
  auto seq = [](BodyShape shape, std::vector<P> parts) {
    return SequentPattern{CtxPattern{}, BodyPattern{shape, std::move(parts)}};
  };
  auto ext = [](std::string var, P type, BodyShape shape, std::vector<P> parts) {
    return SequentPattern{CtxPattern{CtxShape::Extend, std::move(var), std::move(type)},
                          BodyPattern{shape, std::move(parts)}};
  };
  using B = BodyShape;
  auto piAB = [] { return P::pi(P::m("A"), "x", "B"); };

  static const std::vector<RuleScheme> catalog = {
      {"UNIT-F", {}, seq(B::IsSet, {P::unit()})},
      {"UNIT-EQ-F", {}, seq(B::EqSet, {P::unit(), P::unit()})},
      {"UNIT-I", {}, seq(B::Ver, {P::bullet(), P::unit()})},
      {"UNIT-EQ-I", {}, seq(B::EqVer, {P::bullet(), P::bullet(), P::unit()})},
      {"VOID-F", {}, seq(B::IsSet, {P::void_()})},
      {"VOID-EQ-F", {}, seq(B::EqSet, {P::void_(), P::void_()})},
      {"VOID-E", {seq(B::Ver, {P::m("M"), P::void_()})}, seq(B::AnyJudgement, {})},
      {"PI-F",
       {seq(B::IsSet, {P::m("A")}), ext("x", P::m("A"), B::IsSet, {P::inst("B", "x", P::var("x"))})},
       seq(B::IsSet, {piAB()})},
      {"PI-EQ-F",
       {seq(B::EqSet, {P::m("A"), P::m("A′")}),
        ext("z", P::m("A"), B::EqSet, {P::inst("B", "x", P::var("z")), P::inst("B′", "y", P::var("z"))})},
       seq(B::EqSet, {piAB(), P::pi(P::m("A′"), "y", "B′")})},
      {"PI-I",
       {ext("x", P::m("A"), B::Ver, {P::inst("E", "x", P::var("x")), P::inst("B", "x", P::var("x"))})},
       seq(B::Ver, {P::lam("x", "E"), piAB()})},
      {"PI-EQ-I",
       {ext("z", P::m("A"), B::EqVer,
            {P::inst("E", "x", P::var("z")), P::inst("E′", "y", P::var("z")), P::inst("B", "x", P::var("z"))})},
       seq(B::EqVer, {P::lam("x", "E"), P::lam("y", "E′"), piAB()})},
      {"PI-E",
       {seq(B::Ver, {P::m("M"), piAB()}), seq(B::Ver, {P::m("N"), P::m("A")})},
       seq(B::Ver, {P::ap(P::m("M"), P::m("N")), P::inst("B", "x", P::m("N"))})},
      // The second premise is read at A: the printed A′ has no other
      // occurrence in the figure.
      {"PI-EQ-E",
       {seq(B::EqVer, {P::m("M"), P::m("M′"), piAB()}), seq(B::EqVer, {P::m("N"), P::m("N′"), P::m("A")})},
       seq(B::EqVer,
           {P::ap(P::m("M"), P::m("N")), P::ap(P::m("M′"), P::m("N′")), P::inst("B", "x", P::m("N"))})},
      {"HYP",
       {},
       SequentPattern{CtxPattern{CtxShape::Contains, "x", P::m("A")},
                      BodyPattern{B::Ver, {P::var("x"), P::m("A")}}}},
      {"SYM", {seq(B::EqVer, {P::m("M"), P::m("N"), P::m("A")})}, seq(B::EqVer, {P::m("N"), P::m("M"), P::m("A")})},
      {"TRANS",
       {seq(B::EqVer, {P::m("M"), P::m("N"), P::m("A")}), seq(B::EqVer, {P::m("N"), P::m("P"), P::m("A")})},
       seq(B::EqVer, {P::m("M"), P::m("P"), P::m("A")})},
      {"CONV",
       {seq(B::Ver, {P::m("M"), P::m("A")}), seq(B::EqSet, {P::m("A"), P::m("B")})},
       seq(B::Ver, {P::m("M"), P::m("B")})},
  };
  return catalog;
}

inline const RuleScheme* findRule(const std::string& name) {
  const auto& cat = ruleCatalog();
  auto it = std::find_if(cat.begin(), cat.end(), [&](const RuleScheme& r) { return r.name == name; });
  return it == cat.end() ? nullptr : &*it;
}

// ---------------------------------------------------------------------------
// Matching

namespace detail {

class Matcher {
 public:
  // Returns an empty string on success, otherwise what failed to match.
  std::string conclusion(const SequentPattern& p, const SequentJudgement& s) {
    gamma_ = s.context;
    if (p.ctx.shape == CtxShape::Extend) return "conclusion context cannot be an extension pattern";
    return judgement(p, s);
  }

  std::string premise(const SequentPattern& p, const SequentJudgement& s) {
    switch (p.ctx.shape) {
      case CtxShape::Same:
        if (!alphaEq(s.context, gamma_)) return "context differs from the conclusion's context";
        break;
      case CtxShape::Extend: {
        if (s.context.size() != gamma_.size() + 1 ||
            !alphaEq(Context(s.context.begin(), s.context.end() - 1), gamma_))
          return "context must extend the conclusion's context by exactly one entry";
        const ContextEntry& last = s.context.back();
        if (contextHas(gamma_, last.name)) return "extension variable '" + last.name + "' is not fresh";
        if (auto err = bindName(p.ctx.var, last.name); !err.empty()) return err;
        if (auto err = expr(*p.ctx.type, last.type); !err.empty()) return err;
        break;
      }
      case CtxShape::Contains: return "premise contexts cannot use a lookup pattern";
    }
    return judgement(p, s);
  }

  // Re-examines deferred substitution instances.
  std::string finish() {
    auto pending = std::move(deferred_);
    deferred_.clear();
    for (const auto& [pat, e] : pending) {
      if (!scopes_.count(pat.meta)) return "scope metavariable " + pat.meta + " is never bound";
      if (auto err = expr(pat, e); !err.empty()) return err;
    }
    return {};
  }

 private:
  std::string judgement(const SequentPattern& p, const SequentJudgement& s) {
    const auto& parts = p.body.parts;
    auto want = [&](BodyShape shape) -> std::string {
      static const char* names[] = {"A set", "A = B set", "M ∈ A", "M = N ∈ A", "J"};
      return "expected a judgement of the form '" + std::string(names[static_cast<int>(shape)]) + "'";
    };
    std::string err;
    switch (p.body.shape) {
      case BodyShape::AnyJudgement: break;
      case BodyShape::IsSet:
        if (auto* j = std::get_if<IsSet>(&s.body)) {
          err = expr(parts[0], j->type);
        } else {
          return want(p.body.shape);
        }
        break;
      case BodyShape::EqSet:
        if (auto* j = std::get_if<EqSet>(&s.body)) {
          err = expr(parts[0], j->left);
          if (err.empty()) err = expr(parts[1], j->right);
        } else {
          return want(p.body.shape);
        }
        break;
      case BodyShape::Ver:
        if (auto* j = std::get_if<Ver>(&s.body)) {
          err = expr(parts[0], j->term);
          if (err.empty()) err = expr(parts[1], j->type);
        } else {
          return want(p.body.shape);
        }
        break;
      case BodyShape::EqVer:
        if (auto* j = std::get_if<EqVer>(&s.body)) {
          err = expr(parts[0], j->left);
          if (err.empty()) err = expr(parts[1], j->right);
          if (err.empty()) err = expr(parts[2], j->type);
        } else {
          return want(p.body.shape);
        }
        break;
    }
    if (!err.empty()) return err;
    if (p.ctx.shape == CtxShape::Contains) {
      const std::string& x = names_.at(p.ctx.var);
      auto it = std::find_if(s.context.begin(), s.context.end(), [&](const ContextEntry& e) { return e.name == x; });
      if (it == s.context.end()) return "variable '" + x + "' is not declared in the context";
      if (auto e = expr(*p.ctx.type, it->type); !e.empty())
        return "declared type of '" + x + "' does not match: " + e;
    }
    return {};
  }

  std::string bindName(const std::string& meta, const std::string& name) {
    auto [it, fresh] = names_.emplace(meta, name);
    if (!fresh && it->second != name) return "variable " + meta + " stands for both '" + it->second + "' and '" + name + "'";
    return {};
  }

  std::string bindScope(const std::string& meta, const Expr& scope) {
    auto [it, fresh] = scopes_.emplace(meta, scope);
    if (!fresh && !alphaEq(it->second, scope)) return "binder body " + meta + " is used inconsistently";
    return {};
  }

  // Value of a fully determined pattern (Meta or Var), if available.
  std::optional<Expr> value(const ExprPattern& p) const {
    if (p.kind == PatKind::Meta) {
      auto it = exprs_.find(p.meta);
      if (it != exprs_.end()) return it->second;
    } else if (p.kind == PatKind::Var) {
      auto it = names_.find(p.meta);
      if (it != names_.end()) return Expr::var(it->second);
    }
    return std::nullopt;
  }

  std::string mismatch(const ExprPattern& p, const Expr& e) const {
    return "'" + printExpr(e) + "' does not match " + printPattern(p);
  }

  std::string expr(const ExprPattern& p, const Expr& e) {
    switch (p.kind) {
      case PatKind::Meta: {
        auto [it, fresh] = exprs_.emplace(p.meta, e);
        if (!fresh && !alphaEq(it->second, e))
          return "metavariable " + p.meta + " stands for both '" + printExpr(it->second) + "' and '" + printExpr(e) + "'";
        return {};
      }
      case PatKind::Unit: return e.is(ExprKind::Unit) ? std::string() : mismatch(p, e);
      case PatKind::Void: return e.is(ExprKind::Void) ? std::string() : mismatch(p, e);
      case PatKind::Bullet: return e.is(ExprKind::Bullet) ? std::string() : mismatch(p, e);
      case PatKind::Var:
        if (!e.is(ExprKind::Var)) return mismatch(p, e);
        return bindName(p.meta, e.name());
      case PatKind::Pi:
        if (!e.is(ExprKind::Pi)) return mismatch(p, e);
        if (auto err = expr(p.kids[0], e.dom()); !err.empty()) return err;
        return bindScope(p.meta, e.scope());
      case PatKind::Lam:
        if (!e.is(ExprKind::Lam)) return mismatch(p, e);
        return bindScope(p.meta, e.scope());
      case PatKind::Ap:
        if (!e.is(ExprKind::Ap)) return mismatch(p, e);
        if (auto err = expr(p.kids[0], e.fun()); !err.empty()) return err;
        return expr(p.kids[1], e.arg());
      case PatKind::Inst: {
        auto scope = scopes_.find(p.meta);
        auto arg = value(p.kids[0]);
        if (scope == scopes_.end() || !arg) {
          deferred_.emplace_back(p, e);
          return {};
        }
        Expr expected = instantiate(scope->second, *arg);
        if (!alphaEq(expected, e))
          return "expected '" + printExpr(expected) + "' for " + printPattern(p) + " but found '" + printExpr(e) + "'";
        return {};
      }
    }
    return "unknown pattern";
  }

  Context gamma_;
  std::map<std::string, Expr> exprs_;
  std::map<std::string, Expr> scopes_;
  std::map<std::string, std::string> names_;
  std::vector<std::pair<ExprPattern, Expr>> deferred_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Checking

enum class RuleError {
  None,
  UnknownRule,
  ArityMismatch,
  PatternMismatch,
  ScopeViolation,
  DuplicateName,
  MissingTypehoodEvidence,
};

inline const char* ruleErrorName(RuleError e) {
  switch (e) {
    case RuleError::None: return "None";
    case RuleError::UnknownRule: return "UnknownRule";
    case RuleError::ArityMismatch: return "ArityMismatch";
    case RuleError::PatternMismatch: return "PatternMismatch";
    case RuleError::ScopeViolation: return "ScopeViolation";
    case RuleError::DuplicateName: return "DuplicateName";
    case RuleError::MissingTypehoodEvidence: return "MissingTypehoodEvidence";
  }
  return "?";
}

struct RuleCheck {
  RuleError error = RuleError::None;
  std::string path;     // child indices from the root, e.g. "0.1"; empty = root
  std::string message;
  std::optional<SourceSpan> span;  // of the offending node, when parsed

  bool accepted() const { return error == RuleError::None; }
  explicit operator bool() const { return accepted(); }
};

// Derivations of the typehood sequents for a context's entries.
using ContextEvidence = std::vector<Derivation>;

inline bool fresh(const std::string& x, const Context& ctx) { return !contextHas(ctx, x); }

namespace detail {

inline std::string scopeProblem(const SequentJudgement& s) {
  Context seen;
  for (const auto& entry : s.context) {
    if (!isIdentifier(entry.name)) return "'" + entry.name + "' is not an identifier";
    if (contextHas(seen, entry.name)) return "'" + entry.name + "' is declared twice";
    for (const auto& v : freeVars(entry.type))
      if (!contextHas(seen, v)) return "type of '" + entry.name + "' mentions undeclared '" + v + "'";
    seen.push_back(entry);
  }
  for (const auto& v : freeVars(s.body))
    if (!contextHas(s.context, v)) return "'" + v + "' is not declared in the context";
  for (const auto& e : payloads(s.body))
    if (!isLocallyClosed(e)) return "a term has a dangling bound index";
  return {};
}

inline std::string childPath(const std::string& parent, std::size_t i) {
  return parent.empty() ? std::to_string(i) : parent + "." + std::to_string(i);
}

inline RuleCheck checkNode(const Derivation& d, const std::string& path) {
  auto reject = [&](RuleError e, std::string msg) { return RuleCheck{e, path, std::move(msg), d.span}; };
  const RuleScheme* rule = findRule(d.rule);
  if (!rule) return reject(RuleError::UnknownRule, "unknown rule '" + d.rule + "'");
  if (auto problem = scopeProblem(d.conclusion); !problem.empty()) return reject(RuleError::ScopeViolation, problem);
  if (d.children.size() != rule->premises.size())
    return reject(RuleError::ArityMismatch, d.rule + " takes " + std::to_string(rule->premises.size()) +
                                                " premise(s) but " + std::to_string(d.children.size()) + " given");
  Matcher m;
  if (auto err = m.conclusion(rule->conclusion, d.conclusion); !err.empty())
    return reject(RuleError::PatternMismatch, "conclusion of " + d.rule + " (" + printPattern(rule->conclusion) + "): " + err);
  for (std::size_t i = 0; i < d.children.size(); ++i) {
    if (auto err = m.premise(rule->premises[i], d.children[i].conclusion); !err.empty())
      return reject(RuleError::PatternMismatch, "premise " + std::to_string(i + 1) + " of " + d.rule + " (" +
                                                    printPattern(rule->premises[i]) + "): " + err);
  }
  if (auto err = m.finish(); !err.empty()) return reject(RuleError::PatternMismatch, d.rule + ": " + err);
  for (std::size_t i = 0; i < d.children.size(); ++i) {
    RuleCheck c = checkNode(d.children[i], childPath(path, i));
    if (!c) return c;
  }
  return {};
}

}  // namespace detail

// Γ is a context when each entry is fresh for the entries before it and the
// evidence bundle holds an accepted derivation of `Δ ≫ A set` for each
// prefix `Δ, x:A`.
inline RuleCheck checkCtx(const Context& ctx, const ContextEvidence& evidence = {}) {
  Context prefix;
  for (const auto& entry : ctx) {
    if (!fresh(entry.name, prefix))
      return {RuleError::DuplicateName, {}, "'" + entry.name + "' is declared twice in the context", std::nullopt};
    SequentJudgement wanted{prefix, IsSet{entry.type}};
    bool found = std::any_of(evidence.begin(), evidence.end(), [&](const Derivation& d) {
      return alphaEq(d.conclusion, wanted) && detail::checkNode(d, {}).accepted();
    });
    if (!found)
      return {RuleError::MissingTypehoodEvidence, {},
              "no accepted derivation of '" + printSequent(wanted) + "' in the evidence bundle", std::nullopt};
    prefix.push_back(entry);
  }
  return {};
}

inline RuleCheck checkDerivation(const Derivation& d, const ContextEvidence& evidence = {}) {
  RuleCheck ctx = checkCtx(d.conclusion.context, evidence);
  if (!ctx) {
    ctx.span = d.span;
    return ctx;
  }
  return detail::checkNode(d, {});
}

}  // namespace dualtt

#endif  // DUALTT_RULES_HPP_
