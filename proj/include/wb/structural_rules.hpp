#pragma once

#include <map>

#include "wb/sequent.hpp"

namespace wb {

// A deep-inference structural rule synthesized from a product-language
// sequent sigma = chi |- delta. Applied backward inside any context:
//
//     Gamma[ delta{D/p} ] |- phi
//     --------------------------
//     Gamma[ chi{D/p} ]   |- phi
//
// where every product in sigma becomes the structural product.
struct StructuralRule {
  std::string name;
  Inequality sigma;

  const FormulaPtr& conclusion_pattern() const { return sigma.lhs; }
  const FormulaPtr& premise_pattern() const { return sigma.rhs; }
};

// A sequent is good when no variable repeats in its lefthand side; rules
// synthesized from good sequents keep the mix rule admissible.
bool is_good(const Inequality& sigma);

// vars(delta) within vars(chi): adding the rule cannot introduce formulas
// that are not already present, so the subformula property survives.
bool preserves_subformula(const Inequality& sigma);

StructuralRule synthesize_rule(const std::string& name, const Inequality& sigma);

// Matching of product patterns against structures. Variables are
// metavariables; repeated variables must bind structurally equal parts.
bool match_pattern(const FormulaPtr& pattern, const StructurePtr& s,
                   std::map<std::string, StructurePtr>& binding);
StructurePtr instantiate_pattern(const FormulaPtr& pattern, const std::map<std::string, StructurePtr>& binding);

std::string rules_to_json(const std::vector<StructuralRule>& rules);
std::vector<StructuralRule> rules_from_json(const std::string& text);

}  // namespace wb
