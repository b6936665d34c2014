// A textbook named representation of terms, used as an independent oracle
// for the locally nameless kernel: alpha-equivalence by renaming
// environments and capture-avoiding substitution by explicit renaming.

#ifndef DUALTT_TESTS_NAMED_HPP_
#define DUALTT_TESTS_NAMED_HPP_

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dualtt/syntax.hpp"

namespace named {

enum class K { Var, Unit, Void, Bullet, Pi, Lam, Ap };

struct Node;
using T = std::shared_ptr<const Node>;

struct Node {
  K k;
  std::string x;  // Var name, or binder of Pi/Lam
  T a, b;         // Pi: dom, cod; Lam: body; Ap: fun, arg
};

inline T var(std::string x) { return std::make_shared<const Node>(Node{K::Var, std::move(x), {}, {}}); }
inline T unit() { return std::make_shared<const Node>(Node{K::Unit, {}, {}, {}}); }
inline T void_() { return std::make_shared<const Node>(Node{K::Void, {}, {}, {}}); }
inline T bullet() { return std::make_shared<const Node>(Node{K::Bullet, {}, {}, {}}); }
inline T pi(T dom, std::string x, T cod) { return std::make_shared<const Node>(Node{K::Pi, std::move(x), dom, cod}); }
inline T lam(std::string x, T body) { return std::make_shared<const Node>(Node{K::Lam, std::move(x), body, {}}); }
inline T ap(T f, T a) { return std::make_shared<const Node>(Node{K::Ap, {}, f, a}); }

inline std::size_t size(const T& t) {
  switch (t->k) {
    case K::Pi:
    case K::Ap: return 1 + size(t->a) + size(t->b);
    case K::Lam: return 1 + size(t->a);
    default: return 1;
  }
}

// Built through the kernel's named constructors.
inline dualtt::Expr toExpr(const T& t) {
  using dualtt::Expr;
  switch (t->k) {
    case K::Var: return Expr::var(t->x);
    case K::Unit: return Expr::unit();
    case K::Void: return Expr::void_();
    case K::Bullet: return Expr::bullet();
    case K::Pi: return Expr::pi(toExpr(t->a), t->x, toExpr(t->b));
    case K::Lam: return Expr::lam(t->x, toExpr(t->a));
    case K::Ap: return Expr::ap(toExpr(t->a), toExpr(t->b));
  }
  return Expr();
}

inline std::set<std::string> freeVars(const T& t) {
  switch (t->k) {
    case K::Var: return {t->x};
    case K::Pi: {
      auto s = freeVars(t->a);
      auto c = freeVars(t->b);
      c.erase(t->x);
      s.insert(c.begin(), c.end());
      return s;
    }
    case K::Lam: {
      auto s = freeVars(t->a);
      s.erase(t->x);
      return s;
    }
    case K::Ap: {
      auto s = freeVars(t->a);
      auto c = freeVars(t->b);
      s.insert(c.begin(), c.end());
      return s;
    }
    default: return {};
  }
}

// Alpha-equivalence with a pair of binder-depth maps.
inline bool alpha(const T& a, const T& b, std::map<std::string, int>& ea, std::map<std::string, int>& eb, int depth) {
  if (a->k != b->k) return false;
  auto bindBoth = [&](const T& ba, const T& bb) {
    auto sa = ea.find(a->x) != ea.end() ? std::optional<int>(ea[a->x]) : std::nullopt;
    auto sb = eb.find(b->x) != eb.end() ? std::optional<int>(eb[b->x]) : std::nullopt;
    ea[a->x] = depth;
    eb[b->x] = depth;
    bool r = alpha(ba, bb, ea, eb, depth + 1);
    if (sa) ea[a->x] = *sa; else ea.erase(a->x);
    if (sb) eb[b->x] = *sb; else eb.erase(b->x);
    return r;
  };
  switch (a->k) {
    case K::Var: {
      auto ia = ea.find(a->x), ib = eb.find(b->x);
      if (ia == ea.end() && ib == eb.end()) return a->x == b->x;
      if (ia == ea.end() || ib == eb.end()) return false;
      return ia->second == ib->second;
    }
    case K::Pi: return alpha(a->a, b->a, ea, eb, depth) && bindBoth(a->b, b->b);
    case K::Lam: return bindBoth(a->a, b->a);
    case K::Ap: return alpha(a->a, b->a, ea, eb, depth) && alpha(a->b, b->b, ea, eb, depth);
    default: return true;
  }
}

inline bool alphaEq(const T& a, const T& b) {
  std::map<std::string, int> ea, eb;
  return alpha(a, b, ea, eb, 0);
}

inline std::string freshAway(std::string base, const std::set<std::string>& avoid) {
  while (avoid.count(base)) base += "'";
  return base;
}

// Capture-avoiding [n/x]t, renaming a binder whenever it would capture.
inline T subst(const T& t, const std::string& x, const T& n) {
  switch (t->k) {
    case K::Var: return t->x == x ? n : t;
    case K::Ap: return ap(subst(t->a, x, n), subst(t->b, x, n));
    case K::Pi:
    case K::Lam: {
      T body = t->k == K::Pi ? t->b : t->a;
      T dom = t->k == K::Pi ? subst(t->a, x, n) : nullptr;
      std::string y = t->x;
      if (y == x) return t->k == K::Pi ? pi(dom, y, body) : t;
      auto fvn = freeVars(n);
      if (fvn.count(y) && freeVars(body).count(x)) {
        std::set<std::string> avoid = fvn;
        auto fb = freeVars(body);
        avoid.insert(fb.begin(), fb.end());
        avoid.insert(x);
        std::string z = freshAway(y, avoid);
        body = subst(body, y, var(z));
        y = z;
      }
      body = subst(body, x, n);
      return t->k == K::Pi ? pi(dom, y, body) : lam(y, body);
    }
    default: return t;
  }
}

// A de Bruijn rendering: equal strings iff alpha-equivalent.
inline std::string key(const T& t, std::vector<std::string>& stack) {
  switch (t->k) {
    case K::Var:
      for (std::size_t i = stack.size(); i-- > 0;)
        if (stack[i] == t->x) return "#" + std::to_string(stack.size() - 1 - i);
      return t->x;
    case K::Unit: return "U";
    case K::Void: return "V";
    case K::Bullet: return "*";
    case K::Ap: return "(" + key(t->a, stack) + " " + key(t->b, stack) + ")";
    case K::Lam: {
      stack.push_back(t->x);
      std::string s = "(L " + key(t->a, stack) + ")";
      stack.pop_back();
      return s;
    }
    case K::Pi: {
      std::string d = key(t->a, stack);
      stack.push_back(t->x);
      std::string s = "(P " + d + " " + key(t->b, stack) + ")";
      stack.pop_back();
      return s;
    }
  }
  return "?";
}
inline std::string key(const T& t) {
  std::vector<std::string> stack;
  return key(t, stack);
}

// Every term of exactly `n` nodes with free names from `vars` and binder
// names from `binders`.
inline std::vector<T> enumerate(std::size_t n, const std::vector<std::string>& vars,
                                const std::vector<std::string>& binders) {
  std::vector<T> out;
  if (n == 0) return out;
  if (n == 1) {
    for (const auto& v : vars) out.push_back(var(v));
    for (const auto& v : binders)
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) out.push_back(var(v));
    out.push_back(unit());
    out.push_back(void_());
    out.push_back(bullet());
    return out;
  }
  for (const auto& b : binders)
    for (const auto& body : enumerate(n - 1, vars, binders)) out.push_back(lam(b, body));
  for (std::size_t k = 1; k + 1 < n; ++k) {
    auto left = enumerate(k, vars, binders);
    auto right = enumerate(n - 1 - k, vars, binders);
    for (const auto& l : left)
      for (const auto& r : right) {
        out.push_back(ap(l, r));
        for (const auto& b : binders) out.push_back(pi(l, b, r));
      }
  }
  return out;
}

}  // namespace named

#endif  // DUALTT_TESTS_NAMED_HPP_
