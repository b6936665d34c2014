// Big-step call-by-name evaluation of closed terms to canonical form.

#ifndef DUALTT_EVAL_HPP_
#define DUALTT_EVAL_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dualtt/syntax.hpp"

namespace dualtt {

inline constexpr std::uint64_t kDefaultFuel = 10'000;

inline bool isCanonical(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Unit:
    case ExprKind::Void:
    case ExprKind::Bullet:
    case ExprKind::Pi:
    case ExprKind::Lam: return true;
    default: return false;
  }
}

struct FreeVariable : std::invalid_argument {
  explicit FreeVariable(const std::string& what) : std::invalid_argument(what) {}
};

class EvalOutcome {
 public:
  enum class Kind { Value, Stuck, OutOfFuel };

  static EvalOutcome value(Expr c, std::uint64_t steps) { return {Kind::Value, std::move(c), steps}; }
  static EvalOutcome stuck(Expr at, std::uint64_t steps) { return {Kind::Stuck, std::move(at), steps}; }
  static EvalOutcome outOfFuel(std::uint64_t steps) { return {Kind::OutOfFuel, Expr(), steps}; }

  Kind kind() const { return kind_; }
  bool isValue() const { return kind_ == Kind::Value; }
  bool isStuck() const { return kind_ == Kind::Stuck; }
  bool isOutOfFuel() const { return kind_ == Kind::OutOfFuel; }

  // The canonical value, or the stuck term.
  const Expr& term() const { return term_; }
  // Beta-contractions performed.
  std::uint64_t steps() const { return steps_; }

 private:
  EvalOutcome(Kind k, Expr t, std::uint64_t s) : kind_(k), term_(std::move(t)), steps_(s) {}
  Kind kind_;
  Expr term_;
  std::uint64_t steps_;
};

// Evaluates `e` using at most `fuel` beta-contractions. Canonical terms cost
// nothing. The argument of an application is substituted unevaluated.
//
// Implemented as a spine machine so deep head nesting cannot exhaust the
// native stack.
inline EvalOutcome eval(const Expr& e, std::uint64_t fuel) {
  if (!isLocallyClosed(e)) throw FreeVariable("eval: term has a dangling bound index");
  if (auto fv = freeVars(e); !fv.empty()) throw FreeVariable("eval: free variable '" + *fv.begin() + "'");

  std::uint64_t steps = 0;
  Expr head = e;
  std::vector<Expr> spine;  // pending arguments, innermost last
  for (;;) {
    while (head.is(ExprKind::Ap)) {
      spine.push_back(head.arg());
      head = head.fun();
    }
    if (head.is(ExprKind::Lam) && !spine.empty()) {
      if (steps == fuel) return EvalOutcome::outOfFuel(steps);
      ++steps;
      head = instantiate(head.scope(), spine.back());
      spine.pop_back();
      continue;
    }
    if (spine.empty()) return EvalOutcome::value(head, steps);
    // A canonical non-lambda in function position.
    Expr at = head;
    while (!spine.empty()) {
      at = Expr::ap(at, spine.back());
      spine.pop_back();
    }
    return EvalOutcome::stuck(at, steps);
  }
}

}  // namespace dualtt

#endif  // DUALTT_EVAL_HPP_
