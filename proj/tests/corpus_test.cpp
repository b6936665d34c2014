#include <gtest/gtest.h>

#include <set>

#include "dualtt/oracle.hpp"
#include "support/corpus.hpp"

using namespace dualtt;

namespace {

const std::vector<corpus::Entry>& entries() {
  static const auto all = corpus::load();
  return all;
}

void collectRules(const Derivation& d, std::set<std::string>& out) {
  out.insert(d.rule);
  for (const auto& c : d.children) collectRules(c, out);
}

TEST(Corpus, IsLargeAndCoversTheCatalog) {
  EXPECT_GE(entries().size(), 50u);
  std::set<std::string> used;
  for (const auto& e : entries()) collectRules(e.main, used);
  for (const auto& r : ruleCatalog()) EXPECT_TRUE(used.count(r.name)) << r.name;
}

TEST(Corpus, EveryDerivationIsAccepted) {
  for (const auto& e : entries()) {
    RuleCheck c = checkDerivation(e.main, e.evidence);
    EXPECT_TRUE(c.accepted()) << e.name << ": " << ruleErrorName(c.error) << " at '" << c.path << "': " << c.message;
  }
}

TEST(Corpus, EveryConclusionHoldsSemantically) {
  for (const auto& e : entries()) {
    Verdict v = semSequent(e.main.conclusion);
    EXPECT_TRUE(v.isYes()) << e.name << ": " << verdictName(v.kind()) << " " << v.detail();
  }
}

TEST(Corpus, EvidenceIsItselfAccepted) {
  for (const auto& e : entries())
    for (const auto& d : e.evidence) EXPECT_TRUE(checkDerivation(d, e.evidence).accepted()) << e.name;
}

TEST(Corpus, PrintParseRoundTrip) {
  for (const auto& e : entries()) {
    Derivation back = parseDerivation(printDerivation(e.main));
    EXPECT_EQ(printDerivation(back), printDerivation(e.main)) << e.name;
    EXPECT_TRUE(alphaEq(back.conclusion, e.main.conclusion)) << e.name;
  }
}

}  // namespace
