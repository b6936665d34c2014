// Executable meaning explanations on the finitary fragment: types built
// from Unit and Void by non-dependent Pi.
//
// Quantification over "all verifications of A" is replaced by a finite probe
// set: one representative per equivalence class plus a handful of further
// small canonical members. Representatives alone are not enough. At
// (Unit -> Unit) -> Unit the only representative of the domain is \x. tt,
// under which \f. f f looks like a member, yet \x. x is also a member of the
// domain and (\f. f f)(\x. x) evaluates to a lambda.

#ifndef DUALTT_ORACLE_HPP_
#define DUALTT_ORACLE_HPP_

#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "dualtt/eval.hpp"
#include "dualtt/judgement.hpp"
#include "dualtt/syntax.hpp"
#include "dualtt/text.hpp"

namespace dualtt {

struct OracleConfig {
  std::uint64_t fuel = kDefaultFuel;  // per evaluation
  std::uint64_t maxClasses = 256;
  std::size_t probeSize = 5;   // largest extra probe, in AST nodes
  std::size_t probeLimit = 4;  // extra probes per type beyond the representatives
};

// ---------------------------------------------------------------------------
// Finitary types

class FinitaryType {
 public:
  enum class Kind { Unit, Void, Arrow };

  static FinitaryType unit(Expr source = Expr::unit()) { return FinitaryType(Kind::Unit, std::move(source)); }
  static FinitaryType void_(Expr source = Expr::void_()) { return FinitaryType(Kind::Void, std::move(source)); }
  static FinitaryType arrow(FinitaryType dom, FinitaryType cod, std::optional<Expr> source = std::nullopt) {
    Expr src = source ? *source : Expr::piScope(dom.source(), "x", cod.source());
    FinitaryType t(Kind::Arrow, std::move(src));
    t.dom_ = std::make_shared<const FinitaryType>(std::move(dom));
    t.cod_ = std::make_shared<const FinitaryType>(std::move(cod));
    return t;
  }

  Kind kind() const { return kind_; }
  bool is(Kind k) const { return kind_ == k; }
  const FinitaryType& dom() const { return *dom_; }
  const FinitaryType& cod() const { return *cod_; }
  // The canonical type this was classified from.
  const Expr& source() const { return source_; }

  // Structural key, e.g. "((1>0)>1)".
  std::string key() const {
    switch (kind_) {
      case Kind::Unit: return "1";
      case Kind::Void: return "0";
      case Kind::Arrow: return "(" + dom_->key() + ">" + cod_->key() + ")";
    }
    return "?";
  }

  bool operator==(const FinitaryType& o) const { return key() == o.key(); }

 private:
  FinitaryType(Kind k, Expr source) : kind_(k), source_(std::move(source)) {}
  Kind kind_;
  Expr source_;
  std::shared_ptr<const FinitaryType> dom_, cod_;
};

// Number of equivalence classes of verifications, saturating.
inline std::uint64_t classCount(const FinitaryType& t) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  switch (t.kind()) {
    case FinitaryType::Kind::Unit: return 1;
    case FinitaryType::Kind::Void: return 0;
    case FinitaryType::Kind::Arrow: {
      std::uint64_t base = classCount(t.cod()), exp = classCount(t.dom()), r = 1;
      for (std::uint64_t i = 0; i < exp; ++i) {
        if (base == 0) return 0;
        if (base == 1) return 1;
        if (r > kMax / base) return kMax;
        r *= base;
      }
      return r;
    }
  }
  return 0;
}

// A canonical type expression for t, with printable binder names.
inline Expr toExpr(const FinitaryType& t) {
  switch (t.kind()) {
    case FinitaryType::Kind::Unit: return Expr::unit();
    case FinitaryType::Kind::Void: return Expr::void_();
    case FinitaryType::Kind::Arrow: return Expr::piScope(toExpr(t.dom()), "x", toExpr(t.cod()));
  }
  return Expr();
}

struct Classification {
  enum class Status { Finitary, NotAType, NonFinitary, OutOfFuel };
  Status status;
  std::optional<FinitaryType> type;
  std::string detail;

  bool finitary() const { return status == Status::Finitary; }
};

// Evaluates A and reads off a finitary descriptor. A must be closed.
inline Classification classifyFinitary(const Expr& a, std::uint64_t fuel = kDefaultFuel) {
  using S = Classification::Status;
  EvalOutcome r = eval(a, fuel);
  if (r.isOutOfFuel()) return {S::OutOfFuel, std::nullopt, "'" + printExpr(a) + "' ran out of fuel"};
  if (r.isStuck()) return {S::NotAType, std::nullopt, "'" + printExpr(a) + "' is stuck at '" + printExpr(r.term()) + "'"};
  const Expr& v = r.term();
  switch (v.kind()) {
    case ExprKind::Unit: return {S::Finitary, FinitaryType::unit(v), {}};
    case ExprKind::Void: return {S::Finitary, FinitaryType::void_(v), {}};
    case ExprKind::Pi: {
      if (scopeUsesBinder(v.scope()))
        return {S::NonFinitary, std::nullopt, "'" + printExpr(v) + "' is a dependent product"};
      Classification d = classifyFinitary(v.dom(), fuel);
      if (!d.finitary()) return d;
      Classification c = classifyFinitary(instantiate(v.scope(), Expr::bullet()), fuel);
      if (!c.finitary()) return c;
      return {S::Finitary, FinitaryType::arrow(*d.type, *c.type, v), {}};
    }
    default: return {S::NotAType, std::nullopt, "'" + printExpr(a) + "' evaluates to '" + printExpr(v) + "', which is not a type"};
  }
}

// ---------------------------------------------------------------------------
// Verdicts

class Verdict {
 public:
  enum class Kind { Yes, No, Unknown };
  enum class Cause {
    None,
    NotMember,      // a term fails to verify the type
    NotAType,       // a payload or context entry is not a type
    NotMembers,     // precondition of an equality judgement fails
    Separated,      // two members or two types are told apart
    IllScoped,      // free variables outside the context
    Fuel,
    NonFinitary,
    ClassBound,
  };

  static Verdict yes() { return Verdict(Kind::Yes, Cause::None, {}); }
  static Verdict no(Cause c, std::string witness) { return Verdict(Kind::No, c, std::move(witness)); }
  static Verdict unknown(Cause c, std::string reason) { return Verdict(Kind::Unknown, c, std::move(reason)); }

  Kind kind() const { return kind_; }
  Cause cause() const { return cause_; }
  const std::string& detail() const { return detail_; }
  bool isYes() const { return kind_ == Kind::Yes; }
  bool isNo() const { return kind_ == Kind::No; }
  bool isUnknown() const { return kind_ == Kind::Unknown; }

  Verdict withCause(Cause c) const {
    Verdict v = *this;
    if (!v.isYes()) v.cause_ = c;
    return v;
  }
  Verdict prefixed(const std::string& context) const {
    Verdict v = *this;
    if (!v.isYes()) v.detail_ = context + ": " + v.detail_;
    return v;
  }

 private:
  Verdict(Kind k, Cause c, std::string d) : kind_(k), cause_(c), detail_(std::move(d)) {}
  Kind kind_;
  Cause cause_;
  std::string detail_;
};

inline const char* verdictName(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Yes: return "Yes";
    case Verdict::Kind::No: return "No";
    case Verdict::Kind::Unknown: return "Unknown";
  }
  return "?";
}

inline const char* causeName(Verdict::Cause c) {
  switch (c) {
    case Verdict::Cause::None: return "None";
    case Verdict::Cause::NotMember: return "NotMember";
    case Verdict::Cause::NotAType: return "NotAType";
    case Verdict::Cause::NotMembers: return "NotMembers";
    case Verdict::Cause::Separated: return "Separated";
    case Verdict::Cause::IllScoped: return "IllScoped";
    case Verdict::Cause::Fuel: return "Fuel";
    case Verdict::Cause::NonFinitary: return "NonFinitary";
    case Verdict::Cause::ClassBound: return "ClassBound";
  }
  return "?";
}

namespace detail {

// Conjunction where No beats Unknown beats Yes. add() returns false once the
// result is settled as No.
struct Conjunction {
  Verdict result = Verdict::yes();
  bool add(const Verdict& v) {
    if (v.isNo()) {
      result = v;
      return false;
    }
    if (v.isUnknown() && result.isYes()) result = v;
    return true;
  }
};

inline Verdict fromClassification(const Classification& c) {
  using S = Classification::Status;
  switch (c.status) {
    case S::Finitary: return Verdict::yes();
    case S::NotAType: return Verdict::no(Verdict::Cause::NotAType, c.detail);
    case S::NonFinitary: return Verdict::unknown(Verdict::Cause::NonFinitary, c.detail);
    case S::OutOfFuel: return Verdict::unknown(Verdict::Cause::Fuel, c.detail);
  }
  return Verdict::unknown(Verdict::Cause::Fuel, c.detail);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Representatives and probes

struct RepresentativeExplosion : std::runtime_error {
  explicit RepresentativeExplosion(const std::string& what) : std::runtime_error(what) {}
};

// One closed canonical member per equivalence class.
inline std::vector<Expr> representatives(const FinitaryType& t, std::uint64_t maxClasses = 256) {
  if (classCount(t) > maxClasses)
    throw RepresentativeExplosion(printExpr(t.source()) + " has more than " + std::to_string(maxClasses) + " classes");
  switch (t.kind()) {
    case FinitaryType::Kind::Unit: return {Expr::bullet()};
    case FinitaryType::Kind::Void: return {};
    case FinitaryType::Kind::Arrow: {
      std::uint64_t n = classCount(t.dom());
      if (n == 0) return {Expr::lamScope("x", Expr::bound(0))};
      if (n > 1)
        throw std::logic_error("representatives: domain with several classes cannot arise from Unit and Void");
      std::vector<Expr> out;
      for (const Expr& r : representatives(t.cod(), maxClasses)) out.push_back(Expr::lamScope("x", r));
      return out;
    }
  }
  return {};
}

namespace detail {

inline Verdict memberOf(const Expr& m, const FinitaryType& t, const OracleConfig& cfg);

// Closed terms over tt, lambda and application with exactly `size` nodes,
// `depth` binders in scope.
inline const std::vector<Expr>& smallTerms(std::size_t size, std::size_t depth) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, std::size_t>, std::vector<Expr>> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find({size, depth});
    if (it != memo.end()) return it->second;
  }
  std::vector<Expr> out;
  if (size == 1) {
    out.push_back(Expr::bullet());
    for (std::size_t i = 0; i < depth; ++i) out.push_back(Expr::bound(i));
  } else if (size >= 2) {
    static const char* hints[] = {"x", "y", "z", "w"};
    for (const Expr& b : smallTerms(size - 1, depth + 1)) out.push_back(Expr::lamScope(hints[depth % 4], b));
    for (std::size_t k = 1; k + 1 < size; ++k)
      for (const Expr& f : smallTerms(k, depth))
        for (const Expr& a : smallTerms(size - 1 - k, depth)) out.push_back(Expr::ap(f, a));
  }
  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(std::pair{size, depth}, std::move(out)).first->second;
}

inline std::vector<Expr> computeProbes(const FinitaryType& t, const OracleConfig& cfg) {
  switch (t.kind()) {
    case FinitaryType::Kind::Unit: return {Expr::bullet()};
    case FinitaryType::Kind::Void: return {};
    case FinitaryType::Kind::Arrow: break;
  }
  if (classCount(t.dom()) == 0) {
    // Every lambda is a member. One that ignores its argument and one that
    // is stuck on any use.
    return {Expr::lamScope("x", Expr::bound(0)), Expr::lamScope("y", Expr::ap(Expr::bullet(), Expr::bullet()))};
  }
  std::vector<Expr> out = representatives(t, cfg.maxClasses);
  if (out.empty()) return out;
  std::size_t extra = 0;
  for (std::size_t n = 2; n <= cfg.probeSize && extra < cfg.probeLimit; ++n) {
    for (const Expr& body : smallTerms(n - 1, 1)) {
      if (extra >= cfg.probeLimit) break;
      Expr cand = Expr::lamScope("x", body);
      bool seen = false;
      for (const Expr& e : out) seen = seen || alphaEq(e, cand);
      if (seen || !memberOf(cand, t, cfg).isYes()) continue;
      out.push_back(cand);
      ++extra;
    }
  }
  return out;
}

}  // namespace detail

// Closed canonical members of t used wherever the explanations quantify
// over verifications: the representatives first, then small extras.
inline std::vector<Expr> probes(const FinitaryType& t, const OracleConfig& cfg = {}) {
  using Key = std::tuple<std::string, std::uint64_t, std::uint64_t, std::size_t, std::size_t>;
  static std::mutex mu;
  static std::map<Key, std::vector<Expr>> memo;
  Key key{t.key(), cfg.fuel, cfg.maxClasses, cfg.probeSize, cfg.probeLimit};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  // Computed unlocked: probes of t recurse into probes of smaller types.
  std::vector<Expr> out = detail::computeProbes(t, cfg);
  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(key, std::move(out)).first->second;
}

// ---------------------------------------------------------------------------
// Membership and equality

namespace detail {

inline Verdict memberOf(const Expr& m, const FinitaryType& t, const OracleConfig& cfg);

// M = N at t, both already known to be members.
inline Verdict eqMembers(const Expr& m, const Expr& n, const FinitaryType& t, const OracleConfig& cfg) {
  switch (t.kind()) {
    case FinitaryType::Kind::Unit:
    case FinitaryType::Kind::Void: return Verdict::yes();
    case FinitaryType::Kind::Arrow: break;
  }
  Conjunction all;
  for (const Expr& r : probes(t.dom(), cfg)) {
    Verdict v = eqMembers(Expr::ap(m, r), Expr::ap(n, r), t.cod(), cfg);
    if (!all.add(v.prefixed("applied to '" + printExpr(r) + "'"))) break;
  }
  return all.result;
}

inline Verdict memberOf(const Expr& m, const FinitaryType& t, const OracleConfig& cfg) {
  EvalOutcome r = eval(m, cfg.fuel);
  if (r.isOutOfFuel()) return Verdict::unknown(Verdict::Cause::Fuel, "'" + printExpr(m) + "' ran out of fuel");
  if (r.isStuck())
    return Verdict::no(Verdict::Cause::NotMember, "'" + printExpr(m) + "' is stuck at '" + printExpr(r.term()) + "'");
  const Expr& v = r.term();
  auto notMember = [&] {
    return Verdict::no(Verdict::Cause::NotMember,
                       "'" + printExpr(v) + "' is not a canonical verification of " + printExpr(t.source()));
  };
  switch (t.kind()) {
    case FinitaryType::Kind::Unit: return v.is(ExprKind::Bullet) ? Verdict::yes() : notMember();
    case FinitaryType::Kind::Void: return notMember();
    case FinitaryType::Kind::Arrow: break;
  }
  if (!v.is(ExprKind::Lam)) return notMember();
  std::vector<Expr> ps = probes(t.dom(), cfg);
  Conjunction all;
  for (const Expr& p : ps) {
    Verdict pv = memberOf(instantiate(v.scope(), p), t.cod(), cfg);
    if (!all.add(pv.prefixed("'" + printExpr(v) + "' applied to '" + printExpr(p) + "'"))) return all.result;
  }
  // Functionality: equal inputs give equal outputs.
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = 0; j < ps.size(); ++j) {
      if (i == j || !eqMembers(ps[i], ps[j], t.dom(), cfg).isYes()) continue;
      Verdict ev = eqMembers(instantiate(v.scope(), ps[i]), instantiate(v.scope(), ps[j]), t.cod(), cfg);
      if (!all.add(ev.withCause(Verdict::Cause::NotMember)
                       .prefixed("'" + printExpr(v) + "' is not functional on '" + printExpr(ps[i]) + "' and '" +
                                 printExpr(ps[j]) + "'")))
        return all.result;
    }
  }
  return all.result;
}

inline std::optional<Verdict> classifyBoth(const Expr& a, std::optional<Classification>& out, const OracleConfig& cfg) {
  out = classifyFinitary(a, cfg.fuel);
  if (!out->finitary()) return fromClassification(*out);
  if (classCount(*out->type) > cfg.maxClasses)
    return Verdict::unknown(Verdict::Cause::ClassBound, printExpr(a) + " exceeds the class bound");
  return std::nullopt;
}

}  // namespace detail

// M ∈ A for closed M and A.
inline Verdict semVer(const Expr& m, const Expr& a, const OracleConfig& cfg = {}) {
  std::optional<Classification> c;
  if (auto early = detail::classifyBoth(a, c, cfg)) return *early;
  return detail::memberOf(m, *c->type, cfg);
}

// M = N ∈ A. Membership of both sides is checked first.
inline Verdict semEqVer(const Expr& m, const Expr& n, const Expr& a, const OracleConfig& cfg = {}) {
  std::optional<Classification> c;
  if (auto early = detail::classifyBoth(a, c, cfg)) return *early;
  const FinitaryType& t = *c->type;
  detail::Conjunction pre;
  pre.add(detail::memberOf(m, t, cfg).withCause(Verdict::Cause::NotMembers));
  if (!pre.result.isNo()) pre.add(detail::memberOf(n, t, cfg).withCause(Verdict::Cause::NotMembers));
  if (!pre.result.isYes()) return pre.result;
  return detail::eqMembers(m, n, t, cfg).withCause(Verdict::Cause::Separated);
}

// A = B set: the same verifications and the same equality between them.
inline Verdict semEqType(const Expr& a, const Expr& b, const OracleConfig& cfg = {}) {
  std::optional<Classification> ca, cb;
  if (auto early = detail::classifyBoth(a, ca, cfg)) return *early;
  if (auto early = detail::classifyBoth(b, cb, cfg)) return *early;
  const FinitaryType& ta = *ca->type;
  const FinitaryType& tb = *cb->type;
  detail::Conjunction all;
  auto include = [&](const FinitaryType& from, const FinitaryType& into) {
    std::vector<Expr> ps = probes(from, cfg);
    for (const Expr& p : ps) {
      Verdict v = detail::memberOf(p, into, cfg).withCause(Verdict::Cause::Separated);
      if (!all.add(v.prefixed("'" + printExpr(p) + "' separates " + printExpr(from.source()) + " from " +
                              printExpr(into.source()))))
        return false;
    }
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j) {
        bool here = detail::eqMembers(ps[i], ps[j], from, cfg).isYes();
        Verdict there = detail::eqMembers(ps[i], ps[j], into, cfg);
        if (there.isUnknown()) {
          all.add(there);
        } else if (here != there.isYes()) {
          all.add(Verdict::no(Verdict::Cause::Separated, "'" + printExpr(ps[i]) + "' and '" + printExpr(ps[j]) +
                                                             "' are equal in one type but not the other"));
          return false;
        }
      }
    return true;
  };
  if (include(ta, tb)) include(tb, ta);
  return all.result;
}

// ---------------------------------------------------------------------------
// Environments and sequents

struct NonFinitaryContext : std::runtime_error {
  NonFinitaryContext(const std::string& what, Classification::Status s) : std::runtime_error(what), status(s) {}
  Classification::Status status;
};

namespace detail {

struct EnvRow {
  Environment rho;
  std::vector<FinitaryType> types;  // each entry's type under the earlier part of rho
};

inline std::vector<EnvRow> envRows(const Context& gamma, const OracleConfig& cfg) {
  std::vector<EnvRow> rows{EnvRow{}};
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    Context prefix(gamma.begin(), gamma.begin() + static_cast<std::ptrdiff_t>(i));
    std::vector<EnvRow> next;
    for (const EnvRow& row : rows) {
      Expr type = substEnv(gamma[i].type, row.rho, prefix);
      Classification c = classifyFinitary(type, cfg.fuel);
      if (!c.finitary())
        throw NonFinitaryContext("type of '" + gamma[i].name + "': " + c.detail, c.status);
      for (const Expr& p : probes(*c.type, cfg)) {
        EnvRow r = row;
        r.rho.push_back(p);
        r.types.push_back(*c.type);
        next.push_back(std::move(r));
      }
    }
    rows = std::move(next);
  }
  return rows;
}

inline std::string showEnv(const Context& gamma, const Environment& rho) {
  std::string s = "[";
  for (std::size_t i = 0; i < rho.size(); ++i)
    s += (i ? ", " : "") + gamma[i].name + " := " + printExpr(rho[i]);
  return s + "]";
}

inline std::string scopeProblemFor(const SequentJudgement& s) {
  Context seen;
  for (const auto& e : s.context) {
    if (contextHas(seen, e.name)) return "'" + e.name + "' is declared twice";
    for (const auto& v : freeVars(e.type))
      if (!contextHas(seen, v)) return "type of '" + e.name + "' mentions undeclared '" + v + "'";
    seen.push_back(e);
  }
  for (const auto& v : freeVars(s.body))
    if (!contextHas(s.context, v)) return "'" + v + "' is not declared in the context";
  for (const auto& e : payloads(s.body))
    if (!isLocallyClosed(e)) return "a term has a dangling bound index";
  return {};
}

}  // namespace detail

// All environments for Γ built from probes, in lexicographic order.
inline std::vector<Environment> envs(const Context& gamma, const OracleConfig& cfg = {}) {
  std::vector<Environment> out;
  for (auto& row : detail::envRows(gamma, cfg)) out.push_back(std::move(row.rho));
  return out;
}

// Γ ≫ J: every instance holds, and componentwise equal environments give
// equal instances.
inline Verdict semSequent(const SequentJudgement& s, const OracleConfig& cfg = {}) {
  if (auto problem = detail::scopeProblemFor(s); !problem.empty())
    return Verdict::no(Verdict::Cause::IllScoped, problem);
  std::vector<detail::EnvRow> rows;
  try {
    rows = detail::envRows(s.context, cfg);
  } catch (const NonFinitaryContext& e) {
    Classification c{e.status, std::nullopt, e.what()};
    return detail::fromClassification(c);
  } catch (const RepresentativeExplosion& e) {
    return Verdict::unknown(Verdict::Cause::ClassBound, e.what());
  }
  const Context& g = s.context;
  auto sub = [&](const Expr& e, const Environment& rho) { return substEnv(e, rho, g); };

  auto instance = [&](const Environment& rho) -> Verdict {
    return std::visit(
        [&](const auto& j) -> Verdict {
          using T = std::decay_t<decltype(j)>;
          if constexpr (std::is_same_v<T, IsSet>) {
            return detail::fromClassification(classifyFinitary(sub(j.type, rho), cfg.fuel));
          } else if constexpr (std::is_same_v<T, EqSet>) {
            return semEqType(sub(j.left, rho), sub(j.right, rho), cfg);
          } else if constexpr (std::is_same_v<T, Ver>) {
            return semVer(sub(j.term, rho), sub(j.type, rho), cfg);
          } else {
            return semEqVer(sub(j.left, rho), sub(j.right, rho), sub(j.type, rho), cfg);
          }
        },
        s.body);
  };
  auto functional = [&](const Environment& r0, const Environment& r1) -> Verdict {
    return std::visit(
        [&](const auto& j) -> Verdict {
          using T = std::decay_t<decltype(j)>;
          if constexpr (std::is_same_v<T, IsSet>) {
            return semEqType(sub(j.type, r0), sub(j.type, r1), cfg);
          } else if constexpr (std::is_same_v<T, EqSet>) {
            return semEqType(sub(j.left, r0), sub(j.right, r1), cfg);
          } else if constexpr (std::is_same_v<T, Ver>) {
            return semEqVer(sub(j.term, r0), sub(j.term, r1), sub(j.type, r0), cfg);
          } else {
            return semEqVer(sub(j.left, r0), sub(j.right, r1), sub(j.type, r0), cfg);
          }
        },
        s.body);
  };

  detail::Conjunction all;
  for (const auto& row : rows)
    if (!all.add(instance(row.rho).prefixed("in environment " + detail::showEnv(g, row.rho)))) return all.result;

  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (i == j) continue;
      bool equal = true;
      for (std::size_t k = 0; k < g.size() && equal; ++k)
        equal = detail::eqMembers(rows[i].rho[k], rows[j].rho[k], rows[i].types[k], cfg).isYes();
      if (!equal) continue;
      Verdict v = functional(rows[i].rho, rows[j].rho)
                      .prefixed("functionality between " + detail::showEnv(g, rows[i].rho) + " and " +
                                detail::showEnv(g, rows[j].rho));
      if (!all.add(v)) return all.result;
    }
  }
  return all.result;
}

}  // namespace dualtt

#endif  // DUALTT_ORACLE_HPP_
