// Proof-theoretic kernel: non-dependent LF with Top, Bot, functions,
// products and atomic Prf(P). Terms are stratified into normal and neutral
// forms so no beta-redex can be written down. Checking is bidirectional and
// substitution is hereditary, so nothing here takes fuel.
//
// Binding is locally nameless, as for Expr: lambda bodies are scopes whose
// bound occurrences are indices, and binder names are printing hints.

#ifndef DUALTT_LF_HPP_
#define DUALTT_LF_HPP_

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dualtt/syntax.hpp"

namespace dualtt::lf {

// ---------------------------------------------------------------------------
// Types

enum class TypeKind : unsigned char { Atom, Top, Bot, Fn, Prod };

class LfType {
 public:
  static LfType atom(std::string name) { return LfType(TypeKind::Atom, std::move(name), {}, {}); }
  static LfType top() { return LfType(TypeKind::Top, {}, {}, {}); }
  static LfType bot() { return LfType(TypeKind::Bot, {}, {}, {}); }
  static LfType fn(const LfType& a, const LfType& b) { return LfType(TypeKind::Fn, {}, a.node_, b.node_); }
  static LfType prod(const LfType& a, const LfType& b) { return LfType(TypeKind::Prod, {}, a.node_, b.node_); }

  TypeKind kind() const { return node_->kind; }
  bool is(TypeKind k) const { return node_->kind == k; }
  const std::string& name() const { return node_->name; }
  LfType left() const { return LfType(node_->left); }
  LfType right() const { return LfType(node_->right); }
  std::size_t depth() const {
    if (!node_->left) return 0;
    return 1 + std::max(left().depth(), right().depth());
  }

 private:
  struct Node {
    TypeKind kind;
    std::string name;
    std::shared_ptr<const Node> left, right;
  };
  explicit LfType(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  LfType(TypeKind k, std::string name, std::shared_ptr<const Node> l, std::shared_ptr<const Node> r)
      : node_(std::make_shared<const Node>(Node{k, std::move(name), std::move(l), std::move(r)})) {}
  std::shared_ptr<const Node> node_;
};

inline bool lfTypeEq(const LfType& a, const LfType& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TypeKind::Atom: return a.name() == b.name();
    case TypeKind::Top:
    case TypeKind::Bot: return true;
    case TypeKind::Fn:
    case TypeKind::Prod: return lfTypeEq(a.left(), b.left()) && lfTypeEq(a.right(), b.right());
  }
  return false;
}

// ---------------------------------------------------------------------------
// Terms

enum class NormalKind : unsigned char { Bullet, Lam, Pair, Abort, Neutral };
enum class NeutralKind : unsigned char { Var, Bound, Const, App, Fst, Snd };

class Neutral;
struct NormalNode;
struct NeutralNode;

class Normal {
 public:
  static Normal bullet();
  // Abstracts the named variable.
  static Normal lam(const std::string& binder, const Normal& body);
  static Normal lamScope(std::string hint, Normal scope);
  static Normal pair(Normal a, Normal b);
  static Normal abort(LfType target, Neutral r);
  static Normal neutral(Neutral r);

  NormalKind kind() const;
  bool is(NormalKind k) const { return kind() == k; }
  const std::string& hint() const;
  const Normal& scope() const;   // Lam
  const Normal& first() const;   // Pair
  const Normal& second() const;  // Pair
  const LfType& target() const;  // Abort
  const Neutral& neutral() const;  // Abort, Neutral

 private:
  friend struct NormalNode;
  explicit Normal(std::shared_ptr<const NormalNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const NormalNode> node_;
};

class Neutral {
 public:
  static Neutral var(std::string name);
  static Neutral bound(std::size_t index);
  static Neutral constant(std::string name);
  static Neutral app(Neutral f, Normal arg);
  static Neutral fst(Neutral r);
  static Neutral snd(Neutral r);

  NeutralKind kind() const;
  bool is(NeutralKind k) const { return kind() == k; }
  const std::string& name() const;  // Var, Const
  std::size_t index() const;        // Bound
  const Neutral& head() const;      // App, Fst, Snd
  const Normal& arg() const;        // App

 private:
  explicit Neutral(std::shared_ptr<const NeutralNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const NeutralNode> node_;
};

struct NormalNode {
  NormalKind kind;
  std::string hint;
  std::optional<Normal> a, b;
  std::optional<LfType> target;
  std::optional<Neutral> r;
};

struct NeutralNode {
  NeutralKind kind;
  std::string name;
  std::size_t index = 0;
  std::optional<Neutral> head;
  std::optional<Normal> arg;
};

namespace detail {
inline std::shared_ptr<const NormalNode> mkNormal(NormalNode n) { return std::make_shared<const NormalNode>(std::move(n)); }
inline std::shared_ptr<const NeutralNode> mkNeutral(NeutralNode n) {
  return std::make_shared<const NeutralNode>(std::move(n));
}
}  // namespace detail

inline Normal Normal::bullet() {
  static const Normal b(detail::mkNormal({NormalKind::Bullet, {}, {}, {}, {}, {}}));
  return b;
}
inline Normal Normal::lamScope(std::string hint, Normal scope) {
  return Normal(detail::mkNormal({NormalKind::Lam, std::move(hint), std::move(scope), {}, {}, {}}));
}
inline Normal Normal::pair(Normal a, Normal b) {
  return Normal(detail::mkNormal({NormalKind::Pair, {}, std::move(a), std::move(b), {}, {}}));
}
inline Normal Normal::abort(LfType target, Neutral r) {
  return Normal(detail::mkNormal({NormalKind::Abort, {}, {}, {}, std::move(target), std::move(r)}));
}
inline Normal Normal::neutral(Neutral r) {
  return Normal(detail::mkNormal({NormalKind::Neutral, {}, {}, {}, {}, std::move(r)}));
}
inline NormalKind Normal::kind() const { return node_->kind; }
inline const std::string& Normal::hint() const { return node_->hint; }
inline const Normal& Normal::scope() const { return *node_->a; }
inline const Normal& Normal::first() const { return *node_->a; }
inline const Normal& Normal::second() const { return *node_->b; }
inline const LfType& Normal::target() const { return *node_->target; }
inline const Neutral& Normal::neutral() const { return *node_->r; }

inline Neutral Neutral::var(std::string name) { return Neutral(detail::mkNeutral({NeutralKind::Var, std::move(name), 0, {}, {}})); }
inline Neutral Neutral::bound(std::size_t index) { return Neutral(detail::mkNeutral({NeutralKind::Bound, {}, index, {}, {}})); }
inline Neutral Neutral::constant(std::string name) {
  return Neutral(detail::mkNeutral({NeutralKind::Const, std::move(name), 0, {}, {}}));
}
inline Neutral Neutral::app(Neutral f, Normal arg) {
  return Neutral(detail::mkNeutral({NeutralKind::App, {}, 0, std::move(f), std::move(arg)}));
}
inline Neutral Neutral::fst(Neutral r) { return Neutral(detail::mkNeutral({NeutralKind::Fst, {}, 0, std::move(r), {}})); }
inline Neutral Neutral::snd(Neutral r) { return Neutral(detail::mkNeutral({NeutralKind::Snd, {}, 0, std::move(r), {}})); }
inline NeutralKind Neutral::kind() const { return node_->kind; }
inline const std::string& Neutral::name() const { return node_->name; }
inline std::size_t Neutral::index() const { return node_->index; }
inline const Neutral& Neutral::head() const { return *node_->head; }
inline const Normal& Neutral::arg() const { return *node_->arg; }

// Convenience for the common case of a variable used as a normal term.
inline Normal nvar(std::string name) { return Normal::neutral(Neutral::var(std::move(name))); }

// ---------------------------------------------------------------------------
// Structural operations

namespace detail {

// Rewrites variable leaves. `leaf(r, depth)` returns a replacement for a Var
// or Bound neutral, or nullopt to keep it.
template <class F>
Normal mapNormal(const Normal& m, std::size_t depth, const F& leaf);

template <class F>
Neutral mapNeutral(const Neutral& r, std::size_t depth, const F& leaf) {
  switch (r.kind()) {
    case NeutralKind::Var:
    case NeutralKind::Bound:
      if (auto rep = leaf(r, depth)) return *rep;
      return r;
    case NeutralKind::Const: return r;
    case NeutralKind::App: return Neutral::app(mapNeutral(r.head(), depth, leaf), mapNormal(r.arg(), depth, leaf));
    case NeutralKind::Fst: return Neutral::fst(mapNeutral(r.head(), depth, leaf));
    case NeutralKind::Snd: return Neutral::snd(mapNeutral(r.head(), depth, leaf));
  }
  return r;
}

template <class F>
Normal mapNormal(const Normal& m, std::size_t depth, const F& leaf) {
  switch (m.kind()) {
    case NormalKind::Bullet: return m;
    case NormalKind::Lam: return Normal::lamScope(m.hint(), mapNormal(m.scope(), depth + 1, leaf));
    case NormalKind::Pair: return Normal::pair(mapNormal(m.first(), depth, leaf), mapNormal(m.second(), depth, leaf));
    case NormalKind::Abort: return Normal::abort(m.target(), mapNeutral(m.neutral(), depth, leaf));
    case NormalKind::Neutral: return Normal::neutral(mapNeutral(m.neutral(), depth, leaf));
  }
  return m;
}

inline void collect(const Neutral& r, std::set<std::string>& vars, std::set<std::string>& consts);
inline void collect(const Normal& m, std::set<std::string>& vars, std::set<std::string>& consts) {
  switch (m.kind()) {
    case NormalKind::Bullet: return;
    case NormalKind::Lam: return collect(m.scope(), vars, consts);
    case NormalKind::Pair:
      collect(m.first(), vars, consts);
      return collect(m.second(), vars, consts);
    case NormalKind::Abort:
    case NormalKind::Neutral: return collect(m.neutral(), vars, consts);
  }
}
inline void collect(const Neutral& r, std::set<std::string>& vars, std::set<std::string>& consts) {
  switch (r.kind()) {
    case NeutralKind::Var: vars.insert(r.name()); return;
    case NeutralKind::Bound: return;
    case NeutralKind::Const: consts.insert(r.name()); return;
    case NeutralKind::App:
      collect(r.head(), vars, consts);
      return collect(r.arg(), vars, consts);
    case NeutralKind::Fst:
    case NeutralKind::Snd: return collect(r.head(), vars, consts);
  }
}

// Largest loose index + 1 at the given depth, 0 if locally closed.
inline std::size_t loose(const Normal& m, std::size_t depth);
inline std::size_t loose(const Neutral& r, std::size_t depth) {
  switch (r.kind()) {
    case NeutralKind::Bound: return r.index() >= depth ? r.index() - depth + 1 : 0;
    case NeutralKind::Var:
    case NeutralKind::Const: return 0;
    case NeutralKind::App: return std::max(loose(r.head(), depth), loose(r.arg(), depth));
    case NeutralKind::Fst:
    case NeutralKind::Snd: return loose(r.head(), depth);
  }
  return 0;
}
inline std::size_t loose(const Normal& m, std::size_t depth) {
  switch (m.kind()) {
    case NormalKind::Bullet: return 0;
    case NormalKind::Lam: return loose(m.scope(), depth + 1);
    case NormalKind::Pair: return std::max(loose(m.first(), depth), loose(m.second(), depth));
    case NormalKind::Abort:
    case NormalKind::Neutral: return loose(m.neutral(), depth);
  }
  return 0;
}

}  // namespace detail

inline std::set<std::string> freeVars(const Normal& m) {
  std::set<std::string> vars, consts;
  detail::collect(m, vars, consts);
  return vars;
}
inline std::set<std::string> constants(const Normal& m) {
  std::set<std::string> vars, consts;
  detail::collect(m, vars, consts);
  return consts;
}
inline bool isLocallyClosed(const Normal& m) { return detail::loose(m, 0) == 0; }

inline Normal abstractName(const Normal& body, const std::string& x) {
  return detail::mapNormal(body, 0, [&](const Neutral& r, std::size_t depth) -> std::optional<Neutral> {
    if (r.is(NeutralKind::Var) && r.name() == x) return Neutral::bound(depth);
    return std::nullopt;
  });
}

inline Normal Normal::lam(const std::string& binder, const Normal& body) {
  return lamScope(binder, abstractName(body, binder));
}

// Replaces the scope's own bound variable with a free name.
inline Normal openScope(const Normal& scope, const std::string& name) {
  return detail::mapNormal(scope, 0, [&](const Neutral& r, std::size_t depth) -> std::optional<Neutral> {
    if (!r.is(NeutralKind::Bound)) return std::nullopt;
    if (r.index() == depth) return Neutral::var(name);
    if (r.index() > depth) return Neutral::bound(r.index() - 1);
    return std::nullopt;
  });
}

inline bool lfEq(const Normal& a, const Normal& b);

inline bool lfEq(const Neutral& a, const Neutral& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case NeutralKind::Var:
    case NeutralKind::Const: return a.name() == b.name();
    case NeutralKind::Bound: return a.index() == b.index();
    case NeutralKind::App: return lfEq(a.head(), b.head()) && lfEq(a.arg(), b.arg());
    case NeutralKind::Fst:
    case NeutralKind::Snd: return lfEq(a.head(), b.head());
  }
  return false;
}

// Definitional equality: alpha-structural identity of normal forms. No eta.
inline bool lfEq(const Normal& a, const Normal& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case NormalKind::Bullet: return true;
    case NormalKind::Lam: return lfEq(a.scope(), b.scope());
    case NormalKind::Pair: return lfEq(a.first(), b.first()) && lfEq(a.second(), b.second());
    case NormalKind::Abort: return lfTypeEq(a.target(), b.target()) && lfEq(a.neutral(), b.neutral());
    case NormalKind::Neutral: return lfEq(a.neutral(), b.neutral());
  }
  return false;
}

inline std::size_t size(const Normal& m);
inline std::size_t size(const Neutral& r) {
  switch (r.kind()) {
    case NeutralKind::Var:
    case NeutralKind::Bound:
    case NeutralKind::Const: return 1;
    case NeutralKind::App: return 1 + size(r.head()) + size(r.arg());
    case NeutralKind::Fst:
    case NeutralKind::Snd: return 1 + size(r.head());
  }
  return 1;
}
// Nodes of the term, where a neutral embedded in a normal costs nothing extra.
inline std::size_t size(const Normal& m) {
  switch (m.kind()) {
    case NormalKind::Bullet: return 1;
    case NormalKind::Lam: return 1 + size(m.scope());
    case NormalKind::Pair: return 1 + size(m.first()) + size(m.second());
    case NormalKind::Abort: return 1 + size(m.neutral());
    case NormalKind::Neutral: return size(m.neutral());
  }
  return 1;
}

// ---------------------------------------------------------------------------
// Signatures and contexts

struct ConstantDecl {
  std::string name;
  LfType type;
};

struct Signature {
  std::vector<std::string> atoms;
  std::vector<ConstantDecl> constants;

  bool hasAtom(const std::string& p) const { return std::find(atoms.begin(), atoms.end(), p) != atoms.end(); }
  const LfType* constant(const std::string& c) const {
    for (const auto& d : constants)
      if (d.name == c) return &d.type;
    return nullptr;
  }
};

struct LfEntry {
  std::string name;
  LfType type;
};
using LfContext = std::vector<LfEntry>;

enum class LfErrorKind {
  None,
  UndeclaredAtom,
  UnboundVariable,
  NotAFunction,
  NotAPair,
  TypeMismatch,
  IntroAgainstWrongType,
  DuplicateName,
  TypeHeadMismatch,
  NotErasable,
};

inline const char* lfErrorName(LfErrorKind k) {
  switch (k) {
    case LfErrorKind::None: return "None";
    case LfErrorKind::UndeclaredAtom: return "UndeclaredAtom";
    case LfErrorKind::UnboundVariable: return "UnboundVariable";
    case LfErrorKind::NotAFunction: return "NotAFunction";
    case LfErrorKind::NotAPair: return "NotAPair";
    case LfErrorKind::TypeMismatch: return "TypeMismatch";
    case LfErrorKind::IntroAgainstWrongType: return "IntroAgainstWrongType";
    case LfErrorKind::DuplicateName: return "DuplicateName";
    case LfErrorKind::TypeHeadMismatch: return "TypeHeadMismatch";
    case LfErrorKind::NotErasable: return "NotErasable";
  }
  return "?";
}

struct LfError : std::runtime_error {
  LfError(LfErrorKind k, const std::string& what) : std::runtime_error(what), kind(k) {}
  LfErrorKind kind;
};

inline std::optional<std::string> undeclaredAtom(const Signature& sig, const LfType& a) {
  switch (a.kind()) {
    case TypeKind::Atom:
      if (sig.hasAtom(a.name())) return std::nullopt;
      return a.name();
    case TypeKind::Top:
    case TypeKind::Bot: return std::nullopt;
    case TypeKind::Fn:
    case TypeKind::Prod:
      if (auto l = undeclaredAtom(sig, a.left())) return l;
      return undeclaredAtom(sig, a.right());
  }
  return std::nullopt;
}

inline bool checkType(const Signature& sig, const LfType& a) { return !undeclaredAtom(sig, a); }

// Names unique; each constant's type mentions only atoms declared before it.
inline std::optional<LfError> checkSignature(const Signature& sig) {
  std::set<std::string> names;
  Signature prefix;
  for (const auto& p : sig.atoms) {
    if (!names.insert(p).second) return LfError(LfErrorKind::DuplicateName, "'" + p + "' is declared twice");
  }
  prefix.atoms = sig.atoms;
  for (const auto& c : sig.constants) {
    if (!names.insert(c.name).second) return LfError(LfErrorKind::DuplicateName, "'" + c.name + "' is declared twice");
    if (auto p = undeclaredAtom(prefix, c.type))
      return LfError(LfErrorKind::UndeclaredAtom, "type of constant '" + c.name + "' uses undeclared atom '" + *p + "'");
  }
  return std::nullopt;
}

inline std::optional<LfError> checkContext(const Signature& sig, const LfContext& ctx) {
  std::set<std::string> names;
  for (const auto& e : ctx) {
    if (!names.insert(e.name).second) return LfError(LfErrorKind::DuplicateName, "'" + e.name + "' is declared twice");
    if (auto p = undeclaredAtom(sig, e.type))
      return LfError(LfErrorKind::UndeclaredAtom, "type of '" + e.name + "' uses undeclared atom '" + *p + "'");
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Bidirectional checking

// ---------------------------------------------------------------------------
// Printing

inline bool isReservedLfWord(std::string_view s) {
  static constexpr std::string_view kReserved[] = {"Top", "Bot", "tt", "fst", "snd", "abort", "atom", "const"};
  for (auto r : kReserved)
    if (s == r) return true;
  return false;
}

// LF names also become computational variables under erasure, so they avoid
// both sets of reserved words.
inline bool isLfIdentifier(std::string_view s) { return isIdentifier(s) && !isReservedLfWord(s); }

namespace detail {

inline std::string printType(const LfType& a, bool leftOfStar) {
  switch (a.kind()) {
    case TypeKind::Atom: return a.name();
    case TypeKind::Top: return "Top";
    case TypeKind::Bot: return "Bot";
    case TypeKind::Fn: {
      std::string s = "(" + printType(a.left(), false) + ") " + printType(a.right(), false);
      return leftOfStar ? "(" + s + ")" : s;
    }
    case TypeKind::Prod: {
      std::string s = printType(a.left(), true) + " * " + printType(a.right(), false);
      return leftOfStar ? "(" + s + ")" : s;
    }
  }
  return "?";
}

class TermPrinter {
 public:
  enum class Pos { Top, Head, Arg, Proj };

  // `tail`: nothing follows m before the enclosing bracket or the end, so
  // a lambda argument needs no parentheses.
  std::string normal(const Normal& m, Pos pos, bool tail = true) {
    switch (m.kind()) {
      case NormalKind::Bullet: return "tt";
      case NormalKind::Lam: {
        std::set<std::string> avoid, consts;
        collect(m.scope(), avoid, consts);
        avoid.insert(consts.begin(), consts.end());
        avoid.insert(names_.begin(), names_.end());
        std::string hint = isLfIdentifier(m.hint()) ? m.hint() : "x";
        std::string z = freshName(hint, [&](const std::string& n) { return avoid.count(n) > 0 || isReservedLfWord(n); });
        names_.push_back(z);
        std::string s = "[" + z + "] " + normal(m.scope(), Pos::Top);
        names_.pop_back();
        return pos == Pos::Top || (pos == Pos::Arg && tail) ? s : "(" + s + ")";
      }
      case NormalKind::Pair: return "<" + normal(m.first(), Pos::Top) + ", " + normal(m.second(), Pos::Top) + ">";
      case NormalKind::Abort:
        return "abort{" + printType(m.target(), false) + "}(" + neutral(m.neutral(), Pos::Top) + ")";
      case NormalKind::Neutral: return neutral(m.neutral(), pos, tail);
    }
    return "?";
  }

  std::string neutral(const Neutral& r, Pos pos, bool tail = true) {
    switch (r.kind()) {
      case NeutralKind::Var:
      case NeutralKind::Const: return r.name();
      case NeutralKind::Bound:
        if (r.index() < names_.size()) return names_[names_.size() - 1 - r.index()];
        return "#" + std::to_string(r.index());
      case NeutralKind::App: {
        bool paren = pos == Pos::Arg || pos == Pos::Proj;
        std::string s = neutral(r.head(), Pos::Head, false) + " " + normal(r.arg(), Pos::Arg, paren || tail);
        return paren ? "(" + s + ")" : s;
      }
      case NeutralKind::Fst:
      case NeutralKind::Snd: {
        std::string s = (r.is(NeutralKind::Fst) ? "fst " : "snd ") + neutral(r.head(), Pos::Proj);
        return pos == Pos::Arg || pos == Pos::Proj ? "(" + s + ")" : s;
      }
    }
    return "?";
  }

 private:
  std::vector<std::string> names_;
};

}  // namespace detail

inline std::string printType(const LfType& a) { return detail::printType(a, false); }
inline std::string printNormal(const Normal& m) { return detail::TermPrinter().normal(m, detail::TermPrinter::Pos::Top); }
inline std::string printNeutral(const Neutral& r) {
  return detail::TermPrinter().neutral(r, detail::TermPrinter::Pos::Top);
}

namespace detail {

inline std::string freshFor(const std::string& hint, const Signature& sig, const LfContext& ctx) {
  return freshName(hint.empty() ? "x" : hint, [&](const std::string& n) {
    if (sig.constant(n) || sig.hasAtom(n)) return true;
    for (const auto& e : ctx)
      if (e.name == n) return true;
    return false;
  });
}

inline void checkOrThrow(const Signature& sig, LfContext& ctx, const Normal& m, const LfType& a);

inline LfType inferOrThrow(const Signature& sig, LfContext& ctx, const Neutral& r) {
  switch (r.kind()) {
    case NeutralKind::Var:
      for (auto it = ctx.rbegin(); it != ctx.rend(); ++it)
        if (it->name == r.name()) return it->type;
      throw LfError(LfErrorKind::UnboundVariable, "variable '" + r.name() + "' is not in the context");
    case NeutralKind::Bound: throw LfError(LfErrorKind::UnboundVariable, "dangling bound index");
    case NeutralKind::Const:
      if (const LfType* t = sig.constant(r.name())) return *t;
      throw LfError(LfErrorKind::UnboundVariable, "constant '" + r.name() + "' is not in the signature");
    case NeutralKind::App: {
      LfType f = inferOrThrow(sig, ctx, r.head());
      if (!f.is(TypeKind::Fn))
        throw LfError(LfErrorKind::NotAFunction,
                      "'" + printNeutral(r.head()) + "' has type " + printType(f) + ", not a function type");
      checkOrThrow(sig, ctx, r.arg(), f.left());
      return f.right();
    }
    case NeutralKind::Fst:
    case NeutralKind::Snd: {
      LfType p = inferOrThrow(sig, ctx, r.head());
      if (!p.is(TypeKind::Prod))
        throw LfError(LfErrorKind::NotAPair,
                      "'" + printNeutral(r.head()) + "' has type " + printType(p) + ", not a product type");
      return r.is(NeutralKind::Fst) ? p.left() : p.right();
    }
  }
  throw LfError(LfErrorKind::UnboundVariable, "unknown neutral");
}

inline void checkOrThrow(const Signature& sig, LfContext& ctx, const Normal& m, const LfType& a) {
  auto wrongIntro = [&](const char* form) {
    throw LfError(LfErrorKind::IntroAgainstWrongType,
                  std::string(form) + " '" + printNormal(m) + "' cannot have type " + printType(a));
  };
  switch (m.kind()) {
    case NormalKind::Bullet:
      if (!a.is(TypeKind::Top)) wrongIntro("unit element");
      return;
    case NormalKind::Lam: {
      if (!a.is(TypeKind::Fn)) wrongIntro("abstraction");
      std::string z = freshFor(m.hint(), sig, ctx);
      ctx.push_back({z, a.left()});
      try {
        checkOrThrow(sig, ctx, openScope(m.scope(), z), a.right());
      } catch (...) {
        ctx.pop_back();
        throw;
      }
      ctx.pop_back();
      return;
    }
    case NormalKind::Pair:
      if (!a.is(TypeKind::Prod)) wrongIntro("pair");
      checkOrThrow(sig, ctx, m.first(), a.left());
      checkOrThrow(sig, ctx, m.second(), a.right());
      return;
    case NormalKind::Abort: {
      if (auto p = undeclaredAtom(sig, m.target()))
        throw LfError(LfErrorKind::UndeclaredAtom, "abort annotation uses undeclared atom '" + *p + "'");
      if (!lfTypeEq(m.target(), a))
        throw LfError(LfErrorKind::TypeMismatch,
                      "abort is annotated " + printType(m.target()) + " but expected " + printType(a));
      LfType s = inferOrThrow(sig, ctx, m.neutral());
      if (!s.is(TypeKind::Bot))
        throw LfError(LfErrorKind::TypeMismatch,
                      "aborted term '" + printNeutral(m.neutral()) + "' has type " + printType(s) + ", expected Bot");
      return;
    }
    case NormalKind::Neutral: {
      LfType s = inferOrThrow(sig, ctx, m.neutral());
      if (!lfTypeEq(s, a))
        throw LfError(LfErrorKind::TypeMismatch,
                      "'" + printNeutral(m.neutral()) + "' has type " + printType(s) + " but expected " + printType(a));
      return;
    }
  }
}

}  // namespace detail

// Synthesizes the type of a neutral term. Throws LfError.
inline LfType infer(const Signature& sig, const LfContext& ctx, const Neutral& r) {
  LfContext work = ctx;
  return detail::inferOrThrow(sig, work, r);
}

struct LfCheck {
  LfErrorKind error = LfErrorKind::None;
  std::string message;
  bool ok() const { return error == LfErrorKind::None; }
  explicit operator bool() const { return ok(); }
};

inline LfCheck check(const Signature& sig, const LfContext& ctx, const Normal& m, const LfType& a) {
  if (auto p = undeclaredAtom(sig, a)) return {LfErrorKind::UndeclaredAtom, "atom '" + *p + "' is not declared"};
  try {
    LfContext work = ctx;
    detail::checkOrThrow(sig, work, m, a);
  } catch (const LfError& e) {
    return {e.kind, e.what()};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Hereditary substitution

namespace detail {

class HSubst {
 public:
  HSubst(std::string x, const Normal& n, const LfType& a) : x_(std::move(x)), n_(n), a_(a) {}

  Normal run(const Normal& m) { return normal(m, x_, n_, a_); }

 private:
  // A neutral either survives as a neutral, or its head was the substituted
  // variable and it has become a normal term at the given type.
  using Result = std::variant<Neutral, std::pair<Normal, LfType>>;

  // Names minted while going under binders. '#' never occurs in parsed names.
  std::string mint() { return "#" + std::to_string(counter_++); }

  [[noreturn]] static void mismatch(const std::string& what) { throw LfError(LfErrorKind::TypeHeadMismatch, what); }

  Normal normal(const Normal& m, const std::string& x, const Normal& n, const LfType& a) {
    switch (m.kind()) {
      case NormalKind::Bullet: return m;
      case NormalKind::Lam: {
        std::string z = mint();
        Normal body = normal(openScope(m.scope(), z), x, n, a);
        return Normal::lamScope(m.hint(), abstractName(body, z));
      }
      case NormalKind::Pair: return Normal::pair(normal(m.first(), x, n, a), normal(m.second(), x, n, a));
      case NormalKind::Abort: {
        Result r = neutral(m.neutral(), x, n, a);
        if (auto* keep = std::get_if<Neutral>(&r)) return Normal::abort(m.target(), *keep);
        auto& [v, t] = std::get<1>(r);
        if (!t.is(TypeKind::Bot)) mismatch("aborted term has type " + printType(t) + " after substitution");
        return Normal::abort(m.target(), asBottom(v));
      }
      case NormalKind::Neutral: {
        Result r = neutral(m.neutral(), x, n, a);
        if (auto* keep = std::get_if<Neutral>(&r)) return Normal::neutral(*keep);
        return std::get<1>(r).first;
      }
    }
    return m;
  }

  // A normal term of type Bot is a neutral or an abort of one.
  static Neutral asBottom(const Normal& v) {
    if (v.is(NormalKind::Neutral) || v.is(NormalKind::Abort)) return v.neutral();
    mismatch("'" + printNormal(v) + "' cannot have type Bot");
  }

  Result neutral(const Neutral& r, const std::string& x, const Normal& n, const LfType& a) {
    switch (r.kind()) {
      case NeutralKind::Var:
        if (r.name() == x) return std::pair{n, a};
        return r;
      case NeutralKind::Bound:
      case NeutralKind::Const: return r;
      case NeutralKind::App: {
        Normal arg = normal(r.arg(), x, n, a);
        Result h = neutral(r.head(), x, n, a);
        if (auto* keep = std::get_if<Neutral>(&h)) return Neutral::app(*keep, arg);
        auto& [v, t] = std::get<1>(h);
        if (!t.is(TypeKind::Fn)) mismatch("applied term has type " + printType(t));
        switch (v.kind()) {
          case NormalKind::Lam: {
            // The redex [arg/y]body is contracted by a substitution at the
            // strictly smaller domain type.
            std::string y = mint();
            return std::pair{normal(openScope(v.scope(), y), y, arg, t.left()), t.right()};
          }
          case NormalKind::Neutral: return Neutral::app(v.neutral(), arg);
          case NormalKind::Abort: return std::pair{Normal::abort(t.right(), v.neutral()), t.right()};
          default: mismatch("'" + printNormal(v) + "' is applied but has type " + printType(t));
        }
      }
      case NeutralKind::Fst:
      case NeutralKind::Snd: {
        bool first = r.is(NeutralKind::Fst);
        Result h = neutral(r.head(), x, n, a);
        if (auto* keep = std::get_if<Neutral>(&h)) return first ? Neutral::fst(*keep) : Neutral::snd(*keep);
        auto& [v, t] = std::get<1>(h);
        if (!t.is(TypeKind::Prod)) mismatch("projected term has type " + printType(t));
        LfType part = first ? t.left() : t.right();
        switch (v.kind()) {
          case NormalKind::Pair: return std::pair{first ? v.first() : v.second(), part};
          case NormalKind::Neutral: return first ? Neutral::fst(v.neutral()) : Neutral::snd(v.neutral());
          case NormalKind::Abort: return std::pair{Normal::abort(part, v.neutral()), part};
          default: mismatch("'" + printNormal(v) + "' is projected but has type " + printType(t));
        }
      }
    }
    return r;
  }

  std::string x_;
  Normal n_;
  LfType a_;
  std::size_t counter_ = 0;
};

}  // namespace detail

// [N/x]M at type α, contracting every redex the substitution creates.
// Throws LfError(TypeHeadMismatch) when α disagrees with how x is used.
inline Normal hsubst(const Normal& n, const std::string& x, const LfType& a, const Normal& m) {
  return detail::HSubst(x, n, a).run(m);
}

// ---------------------------------------------------------------------------
// Erasure to computational terms

inline Expr erase(const Normal& m);

inline Expr erase(const Neutral& r) {
  switch (r.kind()) {
    case NeutralKind::Var: return Expr::var(r.name());
    case NeutralKind::Bound: return Expr::bound(r.index());
    case NeutralKind::App: return Expr::ap(erase(r.head()), erase(r.arg()));
    case NeutralKind::Const:
      throw LfError(LfErrorKind::NotErasable, "constant '" + r.name() + "' has no computational counterpart");
    case NeutralKind::Fst:
    case NeutralKind::Snd:
      throw LfError(LfErrorKind::NotErasable, "projection '" + printNeutral(r) + "' has no computational counterpart");
  }
  throw LfError(LfErrorKind::NotErasable, "unknown neutral");
}

inline Expr erase(const Normal& m) {
  switch (m.kind()) {
    case NormalKind::Bullet: return Expr::bullet();
    case NormalKind::Lam: return Expr::lamScope(m.hint(), erase(m.scope()));
    case NormalKind::Neutral: return erase(m.neutral());
    case NormalKind::Pair:
      throw LfError(LfErrorKind::NotErasable, "pair '" + printNormal(m) + "' has no computational counterpart");
    case NormalKind::Abort:
      throw LfError(LfErrorKind::NotErasable, "abort '" + printNormal(m) + "' has no computational counterpart");
  }
  throw LfError(LfErrorKind::NotErasable, "unknown normal");
}

// Top -> Unit, Bot -> Void, (a) b -> Pi (_ : a) b.
inline Expr tr(const LfType& a) {
  switch (a.kind()) {
    case TypeKind::Top: return Expr::unit();
    case TypeKind::Bot: return Expr::void_();
    case TypeKind::Fn: return Expr::piScope(tr(a.left()), "x", tr(a.right()));
    case TypeKind::Atom:
    case TypeKind::Prod: throw LfError(LfErrorKind::NotErasable, "type " + printType(a) + " has no computational counterpart");
  }
  throw LfError(LfErrorKind::NotErasable, "unknown type");
}

}  // namespace dualtt::lf

#endif  // DUALTT_LF_HPP_
