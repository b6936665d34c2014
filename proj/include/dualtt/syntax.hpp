// Terms of the computational theory.
//
// Binding is locally nameless: bound occurrences are de Bruijn indices and
// free occurrences are names. Binders keep their surface name only as a
// printing hint, so alpha-equivalence is plain structural equality and
// substitution of a locally closed term can never capture.

#ifndef DUALTT_SYNTAX_HPP_
#define DUALTT_SYNTAX_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dualtt {

enum class ExprKind : unsigned char { Var, Bound, Unit, Void, Bullet, Pi, Lam, Ap };

class Expr;

namespace detail {
struct ExprNode;
}

class Expr {
 public:
  Expr();  // Bullet

  static Expr var(std::string name);
  static Expr unit();
  static Expr void_();
  static Expr bullet();
  static Expr ap(Expr fun, Expr arg);

  // Named binders: the free occurrences of `binder` in the body are bound.
  static Expr pi(Expr dom, const std::string& binder, const Expr& cod);
  static Expr lam(const std::string& binder, const Expr& body);

  // Raw locally nameless constructors. `scope` refers to its binder as
  // Bound(0).
  static Expr bound(std::size_t index);
  static Expr piScope(Expr dom, std::string hint, Expr scope);
  static Expr lamScope(std::string hint, Expr scope);

  ExprKind kind() const;
  bool is(ExprKind k) const { return kind() == k; }

  // Var: the name. Pi/Lam: the binder hint.
  const std::string& name() const;
  std::size_t index() const;  // Bound only

  const Expr& dom() const;    // Pi
  const Expr& scope() const;  // Pi codomain, Lam body (Bound(0) = binder)
  const Expr& fun() const;    // Ap
  const Expr& arg() const;    // Ap

  std::size_t size() const;

  // Pointer identity, used as a fast path by structural comparisons.
  bool sameNode(const Expr& other) const { return node_ == other.node_; }

 private:
  explicit Expr(std::shared_ptr<const detail::ExprNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::ExprNode> node_;
};

namespace detail {
struct ExprNode {
  ExprKind kind;
  std::string name;
  std::size_t index = 0;
  std::size_t size = 1;
  Expr a;
  Expr b;
};

inline const std::shared_ptr<const ExprNode>& constantNode(ExprKind k) {
  static const auto unit = std::make_shared<const ExprNode>(ExprNode{ExprKind::Unit, {}, 0, 1, {}, {}});
  static const auto void_ = std::make_shared<const ExprNode>(ExprNode{ExprKind::Void, {}, 0, 1, {}, {}});
  switch (k) {
    case ExprKind::Unit: return unit;
    default: return void_;
  }
}
}  // namespace detail

// A null node reads as Bullet, so default-constructed children cost nothing.
inline Expr::Expr() : node_(nullptr) {}

inline Expr Expr::var(std::string name) {
  return Expr(std::make_shared<const detail::ExprNode>(
      detail::ExprNode{ExprKind::Var, std::move(name), 0, 1, {}, {}}));
}
inline Expr Expr::unit() { return Expr(detail::constantNode(ExprKind::Unit)); }
inline Expr Expr::void_() { return Expr(detail::constantNode(ExprKind::Void)); }
inline Expr Expr::bullet() { return Expr(); }
inline Expr Expr::bound(std::size_t index) {
  return Expr(std::make_shared<const detail::ExprNode>(
      detail::ExprNode{ExprKind::Bound, {}, index, 1, {}, {}}));
}
inline Expr Expr::ap(Expr fun, Expr arg) {
  std::size_t sz = 1 + fun.size() + arg.size();
  return Expr(std::make_shared<const detail::ExprNode>(
      detail::ExprNode{ExprKind::Ap, {}, 0, sz, std::move(fun), std::move(arg)}));
}
inline Expr Expr::piScope(Expr dom, std::string hint, Expr scope) {
  std::size_t sz = 1 + dom.size() + scope.size();
  return Expr(std::make_shared<const detail::ExprNode>(
      detail::ExprNode{ExprKind::Pi, std::move(hint), 0, sz, std::move(dom), std::move(scope)}));
}
inline Expr Expr::lamScope(std::string hint, Expr scope) {
  std::size_t sz = 1 + scope.size();
  return Expr(std::make_shared<const detail::ExprNode>(
      detail::ExprNode{ExprKind::Lam, std::move(hint), 0, sz, std::move(scope), {}}));
}

inline ExprKind Expr::kind() const { return node_ ? node_->kind : ExprKind::Bullet; }
inline const std::string& Expr::name() const {
  static const std::string empty;
  return node_ ? node_->name : empty;
}
inline std::size_t Expr::index() const { return node_ ? node_->index : 0; }
inline const Expr& Expr::dom() const { return node_->a; }
inline const Expr& Expr::scope() const { return node_->kind == ExprKind::Pi ? node_->b : node_->a; }
inline const Expr& Expr::fun() const { return node_->a; }
inline const Expr& Expr::arg() const { return node_->b; }
inline std::size_t Expr::size() const { return node_ ? node_->size : 1; }

// ---------------------------------------------------------------------------
// Identifiers

inline bool isReservedWord(std::string_view s) {
  static constexpr std::string_view kReserved[] = {"Unit", "Void", "tt", "Pi", "in", "set"};
  return std::find(std::begin(kReserved), std::end(kReserved), s) != std::end(kReserved);
}

inline bool isIdentStart(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
inline bool isIdentChar(char c) { return isIdentStart(c) || (c >= '0' && c <= '9') || c == '\''; }

// Nonempty ASCII word, not a keyword.
inline bool isIdentifier(std::string_view s) {
  if (s.empty() || !isIdentStart(s.front())) return false;
  if (!std::all_of(s.begin(), s.end(), isIdentChar)) return false;
  return !isReservedWord(s);
}

// Appends primes to `base` until the result avoids every name in `taken`.
template <class Pred>
std::string freshName(std::string base, Pred taken) {
  if (base.empty()) base = "x";
  while (taken(base)) base += '\'';
  return base;
}

// ---------------------------------------------------------------------------
// Structural operations

inline bool alphaEq(const Expr& a, const Expr& b) {
  if (a.sameNode(b)) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case ExprKind::Var: return a.name() == b.name();
    case ExprKind::Bound: return a.index() == b.index();
    case ExprKind::Unit:
    case ExprKind::Void:
    case ExprKind::Bullet: return true;
    case ExprKind::Pi: return alphaEq(a.dom(), b.dom()) && alphaEq(a.scope(), b.scope());
    case ExprKind::Lam: return alphaEq(a.scope(), b.scope());
    case ExprKind::Ap: return alphaEq(a.fun(), b.fun()) && alphaEq(a.arg(), b.arg());
  }
  return false;
}

namespace detail {
inline void collectFree(const Expr& e, std::set<std::string>& out) {
  switch (e.kind()) {
    case ExprKind::Var: out.insert(e.name()); return;
    case ExprKind::Pi: collectFree(e.dom(), out); collectFree(e.scope(), out); return;
    case ExprKind::Lam: collectFree(e.scope(), out); return;
    case ExprKind::Ap: collectFree(e.fun(), out); collectFree(e.arg(), out); return;
    default: return;
  }
}

// Largest loose index + 1 seen at binder depth `depth`, i.e. 0 when locally
// closed.
inline std::size_t looseBound(const Expr& e, std::size_t depth) {
  switch (e.kind()) {
    case ExprKind::Bound: return e.index() >= depth ? e.index() - depth + 1 : 0;
    case ExprKind::Pi: return std::max(looseBound(e.dom(), depth), looseBound(e.scope(), depth + 1));
    case ExprKind::Lam: return looseBound(e.scope(), depth + 1);
    case ExprKind::Ap: return std::max(looseBound(e.fun(), depth), looseBound(e.arg(), depth));
    default: return 0;
  }
}

template <class F>
Expr mapLeaves(const Expr& e, std::size_t depth, const F& leaf) {
  switch (e.kind()) {
    case ExprKind::Var:
    case ExprKind::Bound: return leaf(e, depth);
    case ExprKind::Pi: {
      Expr d = mapLeaves(e.dom(), depth, leaf);
      Expr s = mapLeaves(e.scope(), depth + 1, leaf);
      if (d.sameNode(e.dom()) && s.sameNode(e.scope())) return e;
      return Expr::piScope(std::move(d), e.name(), std::move(s));
    }
    case ExprKind::Lam: {
      Expr s = mapLeaves(e.scope(), depth + 1, leaf);
      if (s.sameNode(e.scope())) return e;
      return Expr::lamScope(e.name(), std::move(s));
    }
    case ExprKind::Ap: {
      Expr f = mapLeaves(e.fun(), depth, leaf);
      Expr a = mapLeaves(e.arg(), depth, leaf);
      if (f.sameNode(e.fun()) && a.sameNode(e.arg())) return e;
      return Expr::ap(std::move(f), std::move(a));
    }
    default: return e;
  }
}
}  // namespace detail

inline std::set<std::string> freeVars(const Expr& e) {
  std::set<std::string> out;
  detail::collectFree(e, out);
  return out;
}

inline bool occursFree(const std::string& x, const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Var: return e.name() == x;
    case ExprKind::Pi: return occursFree(x, e.dom()) || occursFree(x, e.scope());
    case ExprKind::Lam: return occursFree(x, e.scope());
    case ExprKind::Ap: return occursFree(x, e.fun()) || occursFree(x, e.arg());
    default: return false;
  }
}

inline bool isLocallyClosed(const Expr& e) { return detail::looseBound(e, 0) == 0; }

inline bool isClosed(const Expr& e) { return isLocallyClosed(e) && freeVars(e).empty(); }

namespace detail {
inline bool usesIndex(const Expr& e, std::size_t depth) {
  switch (e.kind()) {
    case ExprKind::Bound: return e.index() == depth;
    case ExprKind::Pi: return usesIndex(e.dom(), depth) || usesIndex(e.scope(), depth + 1);
    case ExprKind::Lam: return usesIndex(e.scope(), depth + 1);
    case ExprKind::Ap: return usesIndex(e.fun(), depth) || usesIndex(e.arg(), depth);
    default: return false;
  }
}
}  // namespace detail

// True when a binder scope mentions its own bound variable.
inline bool scopeUsesBinder(const Expr& scope) { return detail::usesIndex(scope, 0); }

// Replaces the binder of `scope` by `arg`. `arg` must be locally closed.
inline Expr instantiate(const Expr& scope, const Expr& arg) {
  return detail::mapLeaves(scope, 0, [&](const Expr& leaf, std::size_t depth) -> Expr {
    if (leaf.kind() != ExprKind::Bound) return leaf;
    if (leaf.index() == depth) return arg;
    if (leaf.index() > depth) return Expr::bound(leaf.index() - 1);
    return leaf;
  });
}

// Binds the free occurrences of `x`, producing a scope.
inline Expr abstractName(const Expr& body, const std::string& x) {
  return detail::mapLeaves(body, 0, [&](const Expr& leaf, std::size_t depth) -> Expr {
    if (leaf.kind() == ExprKind::Var && leaf.name() == x) return Expr::bound(depth);
    if (leaf.kind() == ExprKind::Bound && leaf.index() >= depth) return Expr::bound(leaf.index() + 1);
    return leaf;
  });
}

inline Expr Expr::pi(Expr dom, const std::string& binder, const Expr& cod) {
  return piScope(std::move(dom), binder, abstractName(cod, binder));
}
inline Expr Expr::lam(const std::string& binder, const Expr& body) {
  return lamScope(binder, abstractName(body, binder));
}

// Opens a binder scope with a named variable.
inline Expr openScope(const Expr& scope, const std::string& name) {
  return instantiate(scope, Expr::var(name));
}

// [arg/x]body. Capture cannot happen: bound occurrences are indices.
inline Expr subst(const Expr& body, const std::string& x, const Expr& arg) {
  return detail::mapLeaves(body, 0, [&](const Expr& leaf, std::size_t) -> Expr {
    if (leaf.kind() == ExprKind::Var && leaf.name() == x) return arg;
    return leaf;
  });
}

// ---------------------------------------------------------------------------
// Contexts and environments

struct ContextEntry {
  std::string name;
  Expr type;
};

using Context = std::vector<ContextEntry>;
using Environment = std::vector<Expr>;

struct LengthMismatch : std::invalid_argument {
  LengthMismatch(std::size_t env, std::size_t ctx)
      : std::invalid_argument("environment has " + std::to_string(env) + " entries but context has " +
                              std::to_string(ctx)) {}
};

inline bool contextHas(const Context& ctx, const std::string& x) {
  return std::any_of(ctx.begin(), ctx.end(), [&](const ContextEntry& e) { return e.name == x; });
}

// [rho/Gamma]e, simultaneous. Each environment entry is first closed under
// the entries before it, so later payloads may mention earlier names.
inline Expr substEnv(const Expr& e, const Environment& rho, const Context& gamma) {
  if (rho.size() != gamma.size()) throw LengthMismatch(rho.size(), gamma.size());
  if (rho.empty()) return e;
  std::vector<Expr> closed;
  closed.reserve(rho.size());
  auto simultaneous = [&](const Expr& target, std::size_t upto) {
    return detail::mapLeaves(target, 0, [&](const Expr& leaf, std::size_t) -> Expr {
      if (leaf.kind() != ExprKind::Var) return leaf;
      // Later entries shadow earlier ones of the same name.
      for (std::size_t i = upto; i-- > 0;)
        if (gamma[i].name == leaf.name()) return closed[i];
      return leaf;
    });
  };
  for (std::size_t i = 0; i < rho.size(); ++i) closed.push_back(simultaneous(rho[i], i));
  return simultaneous(e, rho.size());
}

}  // namespace dualtt

#endif  // DUALTT_SYNTAX_HPP_
