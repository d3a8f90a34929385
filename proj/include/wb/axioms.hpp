#pragma once

#include <optional>

#include "wb/prover.hpp"
#include "wb/sequent.hpp"

namespace wb {

// The named strict implication axioms, with their product-language
// correspondents where one is known.
struct AxiomInfo {
  std::string name;          // I, Tr, MP, W, RT, B, B', C, Fr, W', Sym, Euc, D
  std::string sequent;       // the si sequent
  std::string product_name;  // wl, tr, ct, ... (empty if no product correspondent)
  std::string product;       // the corresponding product sequent (empty likewise)
};

const std::vector<AxiomInfo>& axiom_table();  // 13 entries
Inequality axiom(const std::string& name);
std::optional<Inequality> product_correspondent(const std::string& name);  // 10 entries non-empty
Inequality product_sequent(const std::string& short_name);                 // by wl/tr/ct/... tag

// Named proof systems: the base calculus extended with structural rules
// synthesized from sets of product sequents.
struct SystemInfo {
  std::string name;                          // bdfnl, rwh, rt, rw, rrt, rb, rb', rc, rfr, rw', rbca, rkt, rk4, rs4, rkw
  std::vector<std::string> product_rules;    // short names of the defining product sequents
};

const std::vector<SystemInfo>& system_table();
RuleSet make_system(const std::string& name);
std::vector<Inequality> system_axioms(const std::string& name);  // the defining product sequents

}  // namespace wb
