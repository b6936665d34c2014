// The four categorical judgement forms under a context.

#ifndef DUALTT_JUDGEMENT_HPP_
#define DUALTT_JUDGEMENT_HPP_

#include <set>
#include <string>
#include <variant>

#include "dualtt/syntax.hpp"

namespace dualtt {

struct IsSet {
  Expr type;
};
struct EqSet {
  Expr left, right;
};
struct Ver {
  Expr term, type;
};
struct EqVer {
  Expr left, right, type;
};

using JudgementBody = std::variant<IsSet, EqSet, Ver, EqVer>;

struct SequentJudgement {
  Context context;
  JudgementBody body;
};

inline bool alphaEq(const JudgementBody& a, const JudgementBody& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b);
        if constexpr (std::is_same_v<T, IsSet>) return alphaEq(x.type, y.type);
        if constexpr (std::is_same_v<T, EqSet>) return alphaEq(x.left, y.left) && alphaEq(x.right, y.right);
        if constexpr (std::is_same_v<T, Ver>) return alphaEq(x.term, y.term) && alphaEq(x.type, y.type);
        if constexpr (std::is_same_v<T, EqVer>)
          return alphaEq(x.left, y.left) && alphaEq(x.right, y.right) && alphaEq(x.type, y.type);
      },
      a);
}

inline bool alphaEq(const Context& a, const Context& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].name != b[i].name || !alphaEq(a[i].type, b[i].type)) return false;
  return true;
}

inline bool alphaEq(const SequentJudgement& a, const SequentJudgement& b) {
  return alphaEq(a.context, b.context) && alphaEq(a.body, b.body);
}

// Payload terms in order of appearance.
inline std::vector<Expr> payloads(const JudgementBody& body) {
  return std::visit(
      [](const auto& j) -> std::vector<Expr> {
        using T = std::decay_t<decltype(j)>;
        if constexpr (std::is_same_v<T, IsSet>) return {j.type};
        if constexpr (std::is_same_v<T, EqSet>) return {j.left, j.right};
        if constexpr (std::is_same_v<T, Ver>) return {j.term, j.type};
        if constexpr (std::is_same_v<T, EqVer>) return {j.left, j.right, j.type};
      },
      body);
}

inline std::set<std::string> freeVars(const JudgementBody& body) {
  std::set<std::string> out;
  for (const Expr& e : payloads(body)) detail::collectFree(e, out);
  return out;
}

}  // namespace dualtt

#endif  // DUALTT_JUDGEMENT_HPP_
