// Rule-instance trees.

#ifndef DUALTT_DERIVATION_HPP_
#define DUALTT_DERIVATION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "dualtt/judgement.hpp"
#include "dualtt/source.hpp"

namespace dualtt {

struct Derivation {
  std::string rule;
  SequentJudgement conclusion;
  std::vector<Derivation> children;
  std::optional<SourceSpan> span;  // set by the parser
};

}  // namespace dualtt

#endif  // DUALTT_DERIVATION_HPP_
