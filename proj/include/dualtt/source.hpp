// Source positions and syntax errors.

#ifndef DUALTT_SOURCE_HPP_
#define DUALTT_SOURCE_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace dualtt {

// 1-based line; 1-based columns, `colEnd` inclusive.
struct SourceSpan {
  std::string file;
  std::size_t line = 1;
  std::size_t colStart = 1;
  std::size_t colEnd = 1;

  std::string str() const {
    std::string s = file.empty() ? std::string("<input>") : file;
    s += ':' + std::to_string(line) + ':' + std::to_string(colStart);
    if (colEnd != colStart) s += '-' + std::to_string(colEnd);
    return s;
  }
};

struct SyntaxError : std::runtime_error {
  SyntaxError(SourceSpan where, const std::string& msg)
      : std::runtime_error(where.str() + ": " + msg), span(std::move(where)), message(msg) {}
  SourceSpan span;
  std::string message;
};

}  // namespace dualtt

#endif  // DUALTT_SOURCE_HPP_
