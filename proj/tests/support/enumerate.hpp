// Exhaustive term and type enumerators for property tests.

#ifndef DUALTT_TESTS_ENUMERATE_HPP_
#define DUALTT_TESTS_ENUMERATE_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "dualtt/lf.hpp"
#include "dualtt/syntax.hpp"

namespace enumerate {

using dualtt::Expr;

// Calls f on every locally closed Expr with exactly n nodes whose free
// variables come from `vars`, with `depth` binders in scope.
inline void exprs(std::size_t n, std::size_t depth, const std::vector<std::string>& vars,
                  const std::function<void(const Expr&)>& f) {
  if (n == 0) return;
  if (n == 1) {
    f(Expr::unit());
    f(Expr::void_());
    f(Expr::bullet());
    for (std::size_t i = 0; i < depth; ++i) f(Expr::bound(i));
    for (const auto& v : vars) f(Expr::var(v));
    return;
  }
  exprs(n - 1, depth + 1, vars, [&](const Expr& body) { f(Expr::lamScope("x", body)); });
  for (std::size_t k = 1; k + 1 < n; ++k) {
    exprs(k, depth, vars, [&](const Expr& l) {
      exprs(n - 1 - k, depth, vars, [&](const Expr& r) { f(Expr::ap(l, r)); });
      exprs(n - 1 - k, depth + 1, vars, [&](const Expr& r) { f(Expr::piScope(l, "y", r)); });
    });
  }
}

inline std::vector<Expr> closedExprs(std::size_t n) {
  std::vector<Expr> out;
  exprs(n, 0, {}, [&](const Expr& e) { out.push_back(e); });
  return out;
}

inline std::vector<Expr> closedExprsUpTo(std::size_t n) {
  std::vector<Expr> out;
  for (std::size_t k = 1; k <= n; ++k) exprs(k, 0, {}, [&](const Expr& e) { out.push_back(e); });
  return out;
}

// Finitary types of nesting depth at most d, as Exprs.
inline std::vector<Expr> finitaryTypes(std::size_t d) {
  std::vector<Expr> out = {Expr::unit(), Expr::void_()};
  for (std::size_t level = 1; level <= d; ++level) {
    std::vector<Expr> next = {Expr::unit(), Expr::void_()};
    for (const auto& a : out)
      for (const auto& b : out) next.push_back(Expr::piScope(a, "x", b));
    out = std::move(next);
  }
  return out;
}

// ---------------------------------------------------------------------------
// LF

namespace lfe {

using namespace dualtt::lf;

struct TypeOptions {
  bool products = false;
  std::vector<std::string> atoms;
};

inline std::vector<LfType> types(std::size_t d, const TypeOptions& o = {}) {
  std::vector<LfType> base = {LfType::top(), LfType::bot()};
  for (const auto& a : o.atoms) base.push_back(LfType::atom(a));
  std::vector<LfType> out = base;
  for (std::size_t level = 1; level <= d; ++level) {
    std::vector<LfType> next = base;
    for (const auto& a : out)
      for (const auto& b : out) {
        next.push_back(LfType::fn(a, b));
        if (o.products) next.push_back(LfType::prod(a, b));
      }
    out = std::move(next);
  }
  return out;
}

struct TermOptions {
  std::vector<std::string> vars;    // free variables
  std::vector<std::string> consts;  // signature constants
  bool products = true;
  bool aborts = true;
  std::vector<LfType> abortTargets = {LfType::top(), LfType::bot()};
};

inline void neutrals(std::size_t n, std::size_t depth, const TermOptions& o, const std::function<void(const Neutral&)>& f);

// Every normal term with exactly n nodes (as counted by lf::size).
inline void normals(std::size_t n, std::size_t depth, const TermOptions& o, const std::function<void(const Normal&)>& f) {
  if (n == 0) return;
  if (n == 1) f(Normal::bullet());
  neutrals(n, depth, o, [&](const Neutral& r) { f(Normal::neutral(r)); });
  if (n >= 2) {
    normals(n - 1, depth + 1, o, [&](const Normal& b) { f(Normal::lamScope("x", b)); });
    if (o.aborts)
      neutrals(n - 1, depth, o, [&](const Neutral& r) {
        for (const auto& t : o.abortTargets) f(Normal::abort(t, r));
      });
  }
  if (o.products && n >= 3)
    for (std::size_t k = 1; k + 1 < n; ++k)
      normals(k, depth, o, [&](const Normal& a) {
        normals(n - 1 - k, depth, o, [&](const Normal& b) { f(Normal::pair(a, b)); });
      });
}

inline void neutrals(std::size_t n, std::size_t depth, const TermOptions& o, const std::function<void(const Neutral&)>& f) {
  if (n == 0) return;
  if (n == 1) {
    for (std::size_t i = 0; i < depth; ++i) f(Neutral::bound(i));
    for (const auto& v : o.vars) f(Neutral::var(v));
    for (const auto& c : o.consts) f(Neutral::constant(c));
    return;
  }
  if (o.products)
    neutrals(n - 1, depth, o, [&](const Neutral& r) {
      f(Neutral::fst(r));
      f(Neutral::snd(r));
    });
  for (std::size_t k = 1; k + 1 < n; ++k)
    neutrals(k, depth, o, [&](const Neutral& h) {
      normals(n - 1 - k, depth, o, [&](const Normal& a) { f(Neutral::app(h, a)); });
    });
}

inline std::vector<Normal> normalsUpTo(std::size_t n, const TermOptions& o) {
  std::vector<Normal> out;
  for (std::size_t k = 1; k <= n; ++k) normals(k, 0, o, [&](const Normal& m) { out.push_back(m); });
  return out;
}

}  // namespace lfe

}  // namespace enumerate

#endif  // DUALTT_TESTS_ENUMERATE_HPP_
