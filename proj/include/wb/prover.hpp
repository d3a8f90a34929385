#pragma once

#include <optional>
#include <set>

#include "wb/sequent.hpp"
#include "wb/structural_rules.hpp"

namespace wb {

// Base calculus plus synthesized structural rules. The mix rule is only ever
// enabled to generate admissibility obligations; backward search never
// applies it.
struct RuleSet {
  std::string name = "bdfnl";
  std::vector<StructuralRule> rules;
  bool mix_enabled = false;
};

struct ProofLimits {
  int depth = 40;
  int max_structure_size = 0;  // 0 means 4x the end-sequent size
};

struct DerivationTree {
  ConsecutionSequent conclusion;
  std::string rule;
  std::vector<DerivationTree> premises;
};

// Backward proof search with branch-local loop pruning and failure caching.
// Absence means "not proved within bounds", never refutation.
std::optional<DerivationTree> prove(const ConsecutionSequent& s, const RuleSet& rules, ProofLimits limits = {});

// Validates every node of a derivation against the rule schemas.
bool check_proof(const DerivationTree& d, const RuleSet& rules, std::string* why = nullptr);

// Proves the formula sequent lhs |- rhs.
std::optional<DerivationTree> translate_and_prove(const Inequality& s, const RuleSet& rules,
                                                  ProofLimits limits = {});

// Builds a mix instance from a left premise D |- phi and a multi-hole shape:
// right premise shape[phi]...[phi] |- succedent, conclusion
// shape[D]...[D] |- succedent. Both premises are searched for cut-free
// proofs; requires rules.mix_enabled.
std::optional<DerivationTree> prove_with_mix(const ConsecutionSequent& left, const StructurePtr& right_shape,
                                             const FormulaPtr& succedent, const RuleSet& rules,
                                             ProofLimits limits = {});

int derivation_height(const DerivationTree& d);
int derivation_nodes(const DerivationTree& d);

// Every formula occurring anywhere in the derivation (structure leaves,
// succedents, and rule-internal formulas) is a subformula of the end-sequent.
bool subformula_property(const DerivationTree& d);

}  // namespace wb
