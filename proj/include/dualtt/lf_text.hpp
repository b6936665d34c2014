// Concrete syntax for LF types, terms, signatures and contexts.
//
//   type   ::= factor ("*" type)?
//   factor ::= Top | Bot | P | "(" type ")" type | "(" type ")"
//   normal ::= tt | "[" x "]" normal | "<" normal "," normal ">"
//            | abort "{" type "}" "(" neutral ")" | neutral
//   neutral ::= head arg*        head ::= x | c | fst head | snd head | "(" neutral ")"
//
// The grammar has no place for a redex: a lambda or pair in head position
// is a syntax error.

#ifndef DUALTT_LF_TEXT_HPP_
#define DUALTT_LF_TEXT_HPP_

#include <string>
#include <utility>
#include <vector>

#include "dualtt/lexer.hpp"
#include "dualtt/lf.hpp"
#include "dualtt/source.hpp"

namespace dualtt::lf {

namespace detail {

class LfParser {
 public:
  LfParser(const SourceText& src, const Signature* sig) : lx_(src, false), sig_(sig) {}

  Lexer& lexer() { return lx_; }

  static bool startsType(const Token& t) {
    if (t.isSymbol("(")) return true;
    return t.kind == TokenKind::Word && (t.text == "Top" || t.text == "Bot" || !isReservedLfWord(t.text));
  }

  LfType type() {
    LfType left = factor();
    if (lx_.peek().isSymbol("*")) {
      lx_.next();
      return LfType::prod(left, type());
    }
    return left;
  }

  Normal normal() {
    const Token& t = lx_.peek();
    if (t.isWord("tt")) {
      Token tok = lx_.next();
      noArguments(tok, "tt");
      return Normal::bullet();
    }
    if (t.isSymbol("[")) {
      lx_.next();
      std::string x = name();
      lx_.expectSymbol("]");
      bound_.push_back(x);
      Normal body = normal();
      bound_.pop_back();
      return Normal::lamScope(x, body);
    }
    if (t.isSymbol("<")) {
      Token open = t;
      Normal m = pair();
      noArguments(open, "a pair");
      return m;
    }
    if (t.isWord("abort")) {
      Token tok = t;
      Normal m = abortTerm();
      noArguments(tok, "abort");
      return m;
    }
    if (t.isSymbol("(")) {
      // Either a parenthesized normal, or the head of an application.
      Token open = lx_.next();
      Normal inner = normal();
      lx_.expectSymbol(")");
      if (!inner.is(NormalKind::Neutral)) {
        noArguments(open, "a non-neutral term");
        return inner;
      }
      return Normal::neutral(arguments(inner.neutral()));
    }
    return Normal::neutral(neutral());
  }

  Neutral neutral() { return arguments(head()); }

  std::string name() {
    const Token& t = lx_.peek();
    if (t.kind != TokenKind::Word || !isLfIdentifier(t.text)) lx_.fail(t, "expected a name but found " + Lexer::describe(t));
    return lx_.next().text;
  }

 private:
  Normal pair() {
    lx_.expectSymbol("<");
    Normal a = normal();
    lx_.expectSymbol(",");
    Normal b = normal();
    lx_.expectSymbol(">");
    return Normal::pair(std::move(a), std::move(b));
  }

  Normal abortTerm() {
    lx_.expectWord("abort");
    lx_.expectSymbol("{");
    LfType target = type();
    lx_.expectSymbol("}");
    lx_.expectSymbol("(");
    Neutral r = neutral();
    lx_.expectSymbol(")");
    return Normal::abort(std::move(target), std::move(r));
  }

  LfType factor() {
    const Token& t = lx_.peek();
    if (t.isWord("Top")) {
      lx_.next();
      return LfType::top();
    }
    if (t.isWord("Bot")) {
      lx_.next();
      return LfType::bot();
    }
    if (t.isSymbol("(")) {
      lx_.next();
      LfType inner = type();
      lx_.expectSymbol(")");
      if (startsType(lx_.peek())) return LfType::fn(inner, type());
      return inner;
    }
    if (t.kind == TokenKind::Word && isLfIdentifier(t.text)) return LfType::atom(lx_.next().text);
    lx_.fail(t, "expected a type but found " + Lexer::describe(t));
  }

  static bool startsArgument(const Token& t) {
    if (t.isSymbol("(") || t.isSymbol("[") || t.isSymbol("<")) return true;
    if (t.kind != TokenKind::Word) return false;
    return t.text == "tt" || t.text == "abort" || isLfIdentifier(t.text);
  }

  void noArguments(const Token& at, const char* what) {
    if (startsArgument(lx_.peek()))
      lx_.fail(at, std::string(what) + " is not neutral and cannot be applied");
  }

  Neutral head() {
    const Token& t = lx_.peek();
    if (t.isWord("fst") || t.isWord("snd")) {
      bool first = t.text == "fst";
      lx_.next();
      if (lx_.peek().isSymbol("<")) lx_.fail(lx_.peek(), "a pair cannot be projected: redexes are not terms");
      Neutral r = head();
      return first ? Neutral::fst(r) : Neutral::snd(r);
    }
    if (t.isSymbol("(")) {
      Token open = lx_.next();
      Normal inner = normal();
      lx_.expectSymbol(")");
      if (!inner.is(NormalKind::Neutral)) lx_.fail(open, "expected a neutral term here: redexes are not terms");
      return inner.neutral();
    }
    if (t.kind == TokenKind::Word && isLfIdentifier(t.text)) {
      std::string x = lx_.next().text;
      for (std::size_t i = bound_.size(); i-- > 0;)
        if (bound_[i] == x) return Neutral::bound(bound_.size() - 1 - i);
      if (sig_ && sig_->constant(x)) return Neutral::constant(x);
      return Neutral::var(x);
    }
    lx_.fail(t, "expected a term but found " + Lexer::describe(t));
  }

  Neutral arguments(Neutral r) {
    while (startsArgument(lx_.peek())) {
      Normal arg = argument();
      r = Neutral::app(std::move(r), std::move(arg));
    }
    return r;
  }

  // An argument is atomic unless it is a trailing lambda.
  Normal argument() {
    const Token& t = lx_.peek();
    if (t.isSymbol("[")) return normal();
    if (t.isSymbol("(")) {
      lx_.next();
      Normal inner = normal();
      lx_.expectSymbol(")");
      return inner;
    }
    if (t.kind == TokenKind::Word && isLfIdentifier(t.text)) {
      std::string x = lx_.next().text;
      for (std::size_t i = bound_.size(); i-- > 0;)
        if (bound_[i] == x) return Normal::neutral(Neutral::bound(bound_.size() - 1 - i));
      if (sig_ && sig_->constant(x)) return Normal::neutral(Neutral::constant(x));
      return nvar(x);
    }
    if (t.isWord("tt")) {
      lx_.next();
      return Normal::bullet();
    }
    if (t.isSymbol("<")) return pair();
    return abortTerm();
  }

  Lexer lx_;
  const Signature* sig_;
  std::vector<std::string> bound_;
};

inline void expectEnd(Lexer& lx) {
  if (!lx.atEnd()) lx.fail(lx.peek(), "unexpected " + Lexer::describe(lx.peek()) + " after the end of input");
}

}  // namespace detail

inline LfType parseType(const SourceText& src) {
  detail::LfParser p(src, nullptr);
  LfType t = p.type();
  detail::expectEnd(p.lexer());
  return t;
}
inline LfType parseType(const std::string& text, const std::string& file = "<input>") {
  return parseType(SourceText(text, file));
}

// Identifiers declared as constants in `sig` parse as constants.
inline Normal parseNormal(const SourceText& src, const Signature& sig = {}) {
  detail::LfParser p(src, &sig);
  Normal m = p.normal();
  detail::expectEnd(p.lexer());
  return m;
}
inline Normal parseNormal(const std::string& text, const Signature& sig = {}, const std::string& file = "<input>") {
  return parseNormal(SourceText(text, file), sig);
}

// Lines of `atom P` and `const c : T`.
inline Signature parseSignature(const SourceText& src) {
  detail::LfParser p(src, nullptr);
  Lexer& lx = p.lexer();
  Signature sig;
  while (!lx.atEnd()) {
    const Token& t = lx.peek();
    if (t.isWord("atom")) {
      lx.next();
      sig.atoms.push_back(p.name());
    } else if (t.isWord("const")) {
      lx.next();
      std::string c = p.name();
      lx.expectSymbol(":");
      sig.constants.push_back({c, p.type()});
    } else {
      lx.fail(t, "expected 'atom' or 'const' but found " + Lexer::describe(t));
    }
  }
  return sig;
}
inline Signature parseSignature(const std::string& text, const std::string& file = "<input>") {
  return parseSignature(SourceText(text, file));
}

// "x : Top, f : (Top) Top"; empty text is the empty context.
inline LfContext parseLfContext(const SourceText& src) {
  detail::LfParser p(src, nullptr);
  Lexer& lx = p.lexer();
  LfContext ctx;
  if (lx.atEnd()) return ctx;
  for (;;) {
    std::string x = p.name();
    lx.expectSymbol(":");
    ctx.push_back({x, p.type()});
    if (lx.atEnd()) break;
    lx.expectSymbol(",");
  }
  return ctx;
}
inline LfContext parseLfContext(const std::string& text, const std::string& file = "<input>") {
  return parseLfContext(SourceText(text, file));
}

inline std::string printContext(const LfContext& ctx) {
  std::string s;
  for (std::size_t i = 0; i < ctx.size(); ++i) s += (i ? ", " : "") + ctx[i].name + " : " + printType(ctx[i].type);
  return s;
}

inline std::string printSignature(const Signature& sig) {
  std::string s;
  for (const auto& a : sig.atoms) s += "atom " + a + "\n";
  for (const auto& c : sig.constants) s += "const " + c.name + " : " + printType(c.type) + "\n";
  return s;
}

}  // namespace dualtt::lf

#endif  // DUALTT_LF_TEXT_HPP_
