// Concrete syntax for terms, sequents and derivations.
//
//   e    ::= ident | Unit | Void | tt | Pi (x : e) e | \x. e | e e | (e)
//   ctx  ::= . | ctx , x : e
//   body ::= e set | e = e set | e in e | e = e in e
//   seq  ::= ctx >> body
//   drv  ::= (RULE-NAME "seq" drv ...)
//
// Application is left-associative and binds tighter than the bodies of \ and
// Pi, which extend as far right as possible. `--` starts a line comment.

#ifndef DUALTT_TEXT_HPP_
#define DUALTT_TEXT_HPP_

#include <cctype>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "dualtt/derivation.hpp"
#include "dualtt/judgement.hpp"
#include "dualtt/lexer.hpp"
#include "dualtt/syntax.hpp"

namespace dualtt {

// ---------------------------------------------------------------------------
// Printing

namespace detail {

// Loose indices of `e` relative to its top, each reported once.
inline void looseIndices(const Expr& e, std::size_t depth, std::set<std::size_t>& out) {
  switch (e.kind()) {
    case ExprKind::Bound:
      if (e.index() >= depth) out.insert(e.index() - depth);
      return;
    case ExprKind::Pi:
      looseIndices(e.dom(), depth, out);
      looseIndices(e.scope(), depth + 1, out);
      return;
    case ExprKind::Lam: looseIndices(e.scope(), depth + 1, out); return;
    case ExprKind::Ap:
      looseIndices(e.fun(), depth, out);
      looseIndices(e.arg(), depth, out);
      return;
    default: return;
  }
}

class ExprPrinter {
 public:
  enum class Pos { Top, Fun, Arg };

  std::string print(const Expr& e) {
    out_.clear();
    emit(e, Pos::Top);
    return out_;
  }

 private:
  // Picks a printable binder name that captures nothing in `scope`.
  std::string binderName(const Expr& binder, const Expr& scope) {
    std::set<std::string> avoid = freeVars(scope);
    std::set<std::size_t> loose;
    looseIndices(scope, 0, loose);
    for (std::size_t j : loose)
      if (j >= 1 && j <= names_.size()) avoid.insert(names_[names_.size() - j]);
    std::string hint = isIdentifier(binder.name()) ? binder.name() : "x";
    return freshName(hint, [&](const std::string& n) { return avoid.count(n) > 0; });
  }

  // `tail`: nothing follows e before the enclosing parenthesis or the end,
  // so a binder there may extend to the right without parentheses.
  void emit(const Expr& e, Pos pos, bool tail = true) {
    switch (e.kind()) {
      case ExprKind::Var: out_ += e.name(); return;
      case ExprKind::Bound:
        if (e.index() < names_.size()) {
          out_ += names_[names_.size() - 1 - e.index()];
        } else {
          out_ += "#" + std::to_string(e.index() - names_.size());
        }
        return;
      case ExprKind::Unit: out_ += "Unit"; return;
      case ExprKind::Void: out_ += "Void"; return;
      case ExprKind::Bullet: out_ += "tt"; return;
      case ExprKind::Lam: {
        bool paren = pos == Pos::Fun || (pos == Pos::Arg && !tail);
        if (paren) out_ += '(';
        std::string n = binderName(e, e.scope());
        out_ += "\\" + n + ". ";
        names_.push_back(n);
        emit(e.scope(), Pos::Top);
        names_.pop_back();
        if (paren) out_ += ')';
        return;
      }
      case ExprKind::Pi: {
        bool paren = pos == Pos::Fun || (pos == Pos::Arg && !tail);
        if (paren) out_ += '(';
        std::string n = binderName(e, e.scope());
        out_ += "Pi (" + n + " : ";
        emit(e.dom(), Pos::Top);
        out_ += ") ";
        names_.push_back(n);
        emit(e.scope(), Pos::Top);
        names_.pop_back();
        if (paren) out_ += ')';
        return;
      }
      case ExprKind::Ap: {
        bool paren = pos == Pos::Arg;
        if (paren) out_ += '(';
        emit(e.fun(), Pos::Fun, false);
        out_ += ' ';
        emit(e.arg(), Pos::Arg, paren || tail);
        if (paren) out_ += ')';
        return;
      }
    }
  }

  std::string out_;
  std::vector<std::string> names_;
};

}  // namespace detail

inline std::string printExpr(const Expr& e) { return detail::ExprPrinter().print(e); }

inline std::string printContext(const Context& ctx) {
  std::string s = ".";
  for (const auto& entry : ctx) s += " , " + entry.name + " : " + printExpr(entry.type);
  return s;
}

inline std::string printBody(const JudgementBody& body) {
  return std::visit(
      [](const auto& j) -> std::string {
        using T = std::decay_t<decltype(j)>;
        if constexpr (std::is_same_v<T, IsSet>) return printExpr(j.type) + " set";
        if constexpr (std::is_same_v<T, EqSet>) return printExpr(j.left) + " = " + printExpr(j.right) + " set";
        if constexpr (std::is_same_v<T, Ver>) return printExpr(j.term) + " in " + printExpr(j.type);
        if constexpr (std::is_same_v<T, EqVer>)
          return printExpr(j.left) + " = " + printExpr(j.right) + " in " + printExpr(j.type);
      },
      body);
}

inline std::string printSequent(const SequentJudgement& s) {
  return printContext(s.context) + " >> " + printBody(s.body);
}

inline std::string quoteString(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

inline std::string printDerivation(const Derivation& d, std::size_t indent = 0) {
  std::string s = std::string(indent, ' ') + "(" + d.rule + " " + quoteString(printSequent(d.conclusion));
  for (const auto& c : d.children) s += "\n" + printDerivation(c, indent + 2);
  return s + ")";
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(Lexer& lx) : lx_(lx) {}

  Expr term() {
    const Token& t = lx_.peek();
    if (t.isSymbol("\\")) {
      lx_.next();
      std::string x = ident();
      lx_.expectSymbol(".");
      Expr body = term();
      return Expr::lam(x, body);
    }
    if (t.isWord("Pi")) {
      lx_.next();
      lx_.expectSymbol("(");
      std::string x = ident();
      lx_.expectSymbol(":");
      Expr dom = term();
      lx_.expectSymbol(")");
      Expr cod = term();
      return Expr::pi(dom, x, cod);
    }
    Expr head = atom();
    for (;;) {
      const Token& n = lx_.peek();
      if (startsAtom(n)) {
        head = Expr::ap(head, atom());
      } else if (n.isSymbol("\\") || n.isWord("Pi")) {
        head = Expr::ap(head, term());
        return head;
      } else {
        return head;
      }
    }
  }

  std::string ident() {
    Token t = lx_.peek();
    if (t.kind != TokenKind::Word || isReservedWord(t.text))
      lx_.fail(t, "expected an identifier but found " + Lexer::describe(t));
    lx_.next();
    return t.text;
  }

 private:
  static bool startsAtom(const Token& t) {
    if (t.isSymbol("(")) return true;
    if (t.kind != TokenKind::Word) return false;
    return t.text == "Unit" || t.text == "Void" || t.text == "tt" || !isReservedWord(t.text);
  }

  Expr atom() {
    Token t = lx_.peek();
    if (t.isSymbol("(")) {
      lx_.next();
      Expr e = term();
      lx_.expectSymbol(")");
      return e;
    }
    if (t.isWord("Unit")) return lx_.next(), Expr::unit();
    if (t.isWord("Void")) return lx_.next(), Expr::void_();
    if (t.isWord("tt")) return lx_.next(), Expr::bullet();
    if (t.kind == TokenKind::Word && !isReservedWord(t.text)) return lx_.next(), Expr::var(t.text);
    lx_.fail(t, "expected a term but found " + Lexer::describe(t));
  }

  Lexer& lx_;
};

inline JudgementBody parseBodyFrom(Lexer& lx) {
  ExprParser p(lx);
  Expr first = p.term();
  if (lx.peek().isWord("set")) return lx.next(), IsSet{first};
  if (lx.peek().isWord("in")) {
    lx.next();
    return Ver{first, p.term()};
  }
  if (lx.peek().isSymbol("=")) {
    lx.next();
    Expr second = p.term();
    if (lx.peek().isWord("set")) return lx.next(), EqSet{first, second};
    if (lx.peek().isWord("in")) {
      lx.next();
      return EqVer{first, second, p.term()};
    }
  }
  lx.fail(lx.peek(), "expected 'set', 'in' or '=' but found " + Lexer::describe(lx.peek()));
}

inline SequentJudgement parseSequentFrom(Lexer& lx) {
  ExprParser p(lx);
  SequentJudgement s;
  lx.expectSymbol(".");
  while (lx.peek().isSymbol(",")) {
    lx.next();
    std::string x = p.ident();
    lx.expectSymbol(":");
    s.context.push_back({x, p.term()});
  }
  lx.expectSymbol(">>");
  s.body = parseBodyFrom(lx);
  return s;
}

inline void expectEnd(Lexer& lx) {
  if (!lx.atEnd()) lx.fail(lx.peek(), "unexpected " + Lexer::describe(lx.peek()) + " after end of phrase");
}

}  // namespace detail

inline Expr parseExpr(const SourceText& src) {
  Lexer lx(src);
  Expr e = detail::ExprParser(lx).term();
  detail::expectEnd(lx);
  return e;
}
inline Expr parseExpr(const std::string& text, const std::string& file = "") {
  return parseExpr(SourceText(text, file));
}

inline SequentJudgement parseSequent(const SourceText& src) {
  Lexer lx(src);
  SequentJudgement s = detail::parseSequentFrom(lx);
  detail::expectEnd(lx);
  return s;
}
inline SequentJudgement parseSequent(const std::string& text, const std::string& file = "") {
  return parseSequent(SourceText(text, file));
}

// ---------------------------------------------------------------------------
// Derivation files: a sequence of s-expressions.

namespace detail {

class DerivationReader {
 public:
  explicit DerivationReader(const SourceText& src) : src_(src), s_(src.text()) {}

  std::vector<Derivation> all() {
    std::vector<Derivation> out;
    skip();
    while (i_ < s_.size()) {
      out.push_back(node());
      skip();
    }
    return out;
  }

 private:
  [[noreturn]] void fail(std::size_t at, const std::string& msg) const {
    throw SyntaxError(src_.span(at, at + 1), msg);
  }

  void skip() {
    while (i_ < s_.size()) {
      char c = s_[i_];
      if (c == ' ' || c == '\t' || c == '\n') {
        ++i_;
      } else if (c == '-' && i_ + 1 < s_.size() && s_[i_ + 1] == '-') {
        while (i_ < s_.size() && s_[i_] != '\n') ++i_;
      } else {
        return;
      }
    }
  }

  Derivation node() {
    std::size_t open = i_;
    if (s_[i_] != '(') fail(i_, "expected '('");
    ++i_;
    skip();
    std::size_t nameStart = i_;
    while (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_])) && s_[i_] != '(' &&
           s_[i_] != ')' && s_[i_] != '"')
      ++i_;
    if (i_ == nameStart) fail(nameStart, "expected a rule name");
    Derivation d;
    d.rule = s_.substr(nameStart, i_ - nameStart);
    d.span = src_.span(open, i_);
    skip();
    if (i_ >= s_.size() || s_[i_] != '"') fail(i_, "expected a quoted sequent after rule name");
    d.conclusion = parseSequent(stringLiteral());
    skip();
    while (i_ < s_.size() && s_[i_] == '(') {
      d.children.push_back(node());
      skip();
    }
    if (i_ >= s_.size()) fail(open, "unterminated derivation");
    if (s_[i_] != ')') fail(i_, "expected ')' or a child derivation");
    ++i_;
    return d;
  }

  // Decodes a string literal, keeping the original position of every char.
  SourceText stringLiteral() {
    std::size_t open = i_++;
    std::string text;
    std::vector<SourceText::Pos> pos;
    while (i_ < s_.size() && s_[i_] != '"') {
      if (s_[i_] == '\\' && i_ + 1 < s_.size() && (s_[i_ + 1] == '"' || s_[i_ + 1] == '\\')) ++i_;
      text.push_back(s_[i_]);
      pos.push_back(src_.pos(i_));
      ++i_;
    }
    if (i_ >= s_.size()) fail(open, "unterminated string");
    pos.push_back(src_.pos(i_));
    ++i_;
    return SourceText(std::move(text), src_.file(), std::move(pos));
  }

  const SourceText& src_;
  const std::string& s_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline std::vector<Derivation> parseDerivations(const SourceText& src) {
  return detail::DerivationReader(src).all();
}

inline Derivation parseDerivation(const std::string& text, const std::string& file = "") {
  SourceText src(text, file);
  auto all = parseDerivations(src);
  if (all.size() != 1)
    throw SyntaxError(src.span(0, src.text().size()),
                      "expected exactly one derivation, found " + std::to_string(all.size()));
  return all.front();
}

}  // namespace dualtt

#endif  // DUALTT_TEXT_HPP_
