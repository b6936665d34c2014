// Tokenizer shared by the term, sequent and LF parsers.

#ifndef DUALTT_LEXER_HPP_
#define DUALTT_LEXER_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dualtt/source.hpp"
#include "dualtt/syntax.hpp"

namespace dualtt {

// Text plus the original position of every character, so that text lifted
// out of a string literal still reports spans in the enclosing file.
class SourceText {
 public:
  struct Pos {
    std::size_t line, col;
  };

  SourceText(std::string text, std::string file) : file_(std::move(file)) {
    text_.reserve(text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (c == '\r') {
        if (i + 1 < text.size() && text[i + 1] == '\n') continue;
        c = '\n';
      }
      text_.push_back(c);
      pos_.push_back({line, col});
      if (c == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    pos_.push_back({line, col});
  }

  SourceText(std::string text, std::string file, std::vector<Pos> pos)
      : file_(std::move(file)), text_(std::move(text)), pos_(std::move(pos)) {}

  const std::string& text() const { return text_; }
  const std::string& file() const { return file_; }

  // Span of [begin, end). Empty ranges and ranges at end of input are clamped
  // onto the nearest real character.
  SourceSpan span(std::size_t begin, std::size_t end) const {
    if (text_.empty()) return SourceSpan{file_, 1, 1, 1};
    if (begin >= text_.size()) begin = text_.size() - 1;
    if (end <= begin) end = begin + 1;
    if (end > text_.size()) end = text_.size();
    Pos a = pos_[begin];
    Pos b = pos_[end - 1];
    // Multi-line ranges are reported on their first line.
    std::size_t last = b.line == a.line ? b.col : a.col;
    return SourceSpan{file_, a.line, a.col, last};
  }

  const Pos& pos(std::size_t offset) const { return pos_[offset]; }

 private:
  std::string file_;
  std::string text_;
  std::vector<Pos> pos_;
};

enum class TokenKind { Word, Symbol, End };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t begin = 0, end = 0;

  bool isWord(std::string_view w) const { return kind == TokenKind::Word && text == w; }
  bool isSymbol(std::string_view s) const { return kind == TokenKind::Symbol && text == s; }
};

class Lexer {
 public:
  // LF syntax closes nested pairs with ">>", so it lexes '>' singly.
  explicit Lexer(const SourceText& src, bool sequentArrow = true) : src_(src), sequentArrow_(sequentArrow) {
    tokenize();
  }

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  Token next() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool atEnd() const { return peek().kind == TokenKind::End; }

  [[noreturn]] void fail(const Token& at, const std::string& msg) const {
    throw SyntaxError(src_.span(at.begin, at.end), msg);
  }

  Token expectSymbol(std::string_view s) {
    if (!peek().isSymbol(s)) fail(peek(), "expected '" + std::string(s) + "' but found " + describe(peek()));
    return next();
  }
  Token expectWord(std::string_view w) {
    if (!peek().isWord(w)) fail(peek(), "expected '" + std::string(w) + "' but found " + describe(peek()));
    return next();
  }

  static std::string describe(const Token& t) {
    if (t.kind == TokenKind::End) return "end of input";
    return "'" + t.text + "'";
  }

  const SourceText& source() const { return src_; }

 private:
  void tokenize() {
    const std::string& s = src_.text();
    std::size_t i = 0;
    while (i < s.size()) {
      char c = s[i];
      if (c == ' ' || c == '\t' || c == '\n') {
        ++i;
        continue;
      }
      if (c == '-' && i + 1 < s.size() && s[i + 1] == '-') {
        while (i < s.size() && s[i] != '\n') ++i;
        continue;
      }
      if (isIdentStart(c)) {
        std::size_t j = i + 1;
        while (j < s.size() && isIdentChar(s[j])) ++j;
        toks_.push_back({TokenKind::Word, s.substr(i, j - i), i, j});
        i = j;
        continue;
      }
      if (sequentArrow_ && c == '>' && i + 1 < s.size() && s[i + 1] == '>') {
        toks_.push_back({TokenKind::Symbol, ">>", i, i + 2});
        i += 2;
        continue;
      }
      static constexpr std::string_view kSingle = "():.\\,=[]<>{}*";
      if (kSingle.find(c) != std::string_view::npos) {
        toks_.push_back({TokenKind::Symbol, std::string(1, c), i, i + 1});
        ++i;
        continue;
      }
      std::string shown = static_cast<unsigned char>(c) >= 0x80 ? "non-ASCII character" : "character '" + std::string(1, c) + "'";
      throw SyntaxError(src_.span(i, i + 1), "unexpected " + shown);
    }
    toks_.push_back({TokenKind::End, "", s.size(), s.size()});
  }

  const SourceText& src_;
  bool sequentArrow_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace dualtt

#endif  // DUALTT_LEXER_HPP_
