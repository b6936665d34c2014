// The CLI's result object and its JSON form.
//
//   {"data": {...}, "diagnostics": [{"message": "...", "span": {"col_end": 5,
//    "col_start": 1, "file": "f.sq", "line": 1}}], "verdict": "accept"}
//
// Keys are sorted, so identical input gives byte-identical output.

#ifndef DUALTT_REPORT_HPP_
#define DUALTT_REPORT_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "dualtt/source.hpp"

namespace dualtt {

enum class Outcome { Accept, Reject, Unknown };

inline const char* outcomeName(Outcome o) {
  switch (o) {
    case Outcome::Accept: return "accept";
    case Outcome::Reject: return "reject";
    case Outcome::Unknown: return "unknown";
  }
  return "?";
}

struct Diagnostic {
  SourceSpan span;
  std::string message;
};

struct Report {
  Outcome verdict = Outcome::Accept;
  std::vector<Diagnostic> diagnostics;
  nlohmann::json data = nlohmann::json::object();

  void reject(SourceSpan span, std::string message) {
    verdict = Outcome::Reject;
    diagnostics.push_back({std::move(span), std::move(message)});
  }
};

inline nlohmann::json toJson(const SourceSpan& s) {
  return {{"file", s.file}, {"line", s.line}, {"col_start", s.colStart}, {"col_end", s.colEnd}};
}

inline nlohmann::json toJson(const Report& r) {
  nlohmann::json diags = nlohmann::json::array();
  for (const auto& d : r.diagnostics) diags.push_back({{"span", toJson(d.span)}, {"message", d.message}});
  return {{"verdict", outcomeName(r.verdict)}, {"diagnostics", diags}, {"data", r.data}};
}

inline std::string renderJson(const Report& r) { return toJson(r).dump(); }

}  // namespace dualtt

#endif  // DUALTT_REPORT_HPP_
