#include "wb/axioms.hpp"

#include <algorithm>

namespace wb {

const std::vector<AxiomInfo>& axiom_table() {
  static const std::vector<AxiomInfo> table = {
      {"I", "q |- p -> p", "wl", "p * q |- p"},
      {"Tr", "(p -> q) & (q -> r) |- p -> r", "tr", "p * s |- (p * s) * s"},
      {"MP", "p & (p -> q) |- q", "ct", "p |- p * p"},
      {"W", "p |- q -> p", "wr", "q * p |- p"},
      {"RT", "p -> q |- r -> (p -> q)", "rt", "p * (r * s) |- p * s"},
      {"B", "p -> q |- (r -> p) -> (r -> q)", "b", "r * (t * s) |- (r * t) * s"},
      {"B'", "p -> q |- (q -> r) -> (p -> r)", "b'", "p * (t * s) |- (p * s) * t"},
      {"C", "p -> (q -> r) |- q -> (p -> r)", "c", "p * (q * s) |- q * (p * s)"},
      {"Fr", "p -> (q -> r) |- (p -> q) -> (p -> r)", "fr", "p * (u * s) |- (p * u) * (p * s)"},
      {"W'", "p -> (p -> q) |- p -> q", "w'", "p * r |- p * (p * r)"},
      {"Sym", "p |- ((p -> q) -> r) | q", "", ""},
      {"Euc", "top |- ((p -> q) -> r) | (p -> q)", "", ""},
      {"D", "top -> bot |- bot", "", ""},
  };
  return table;
}

namespace {

const AxiomInfo& find_axiom(const std::string& name) {
  for (const auto& a : axiom_table())
    if (a.name == name) return a;
  throw std::invalid_argument("unknown axiom tag: " + name);
}

}  // namespace

Inequality axiom(const std::string& name) { return parse_inequality(find_axiom(name).sequent, Lang::SI); }

std::optional<Inequality> product_correspondent(const std::string& name) {
  const AxiomInfo& a = find_axiom(name);
  if (a.product.empty()) return std::nullopt;
  return parse_inequality(a.product, Lang::Prod);
}

Inequality product_sequent(const std::string& short_name) {
  for (const auto& a : axiom_table())
    if (a.product_name == short_name && !a.product.empty()) return parse_inequality(a.product, Lang::Prod);
  throw std::invalid_argument("unknown product sequent tag: " + short_name);
}

const std::vector<SystemInfo>& system_table() {
  static const std::vector<SystemInfo> table = {
      {"bdfnl", {}},
      {"rwh", {"wl", "tr"}},
      {"rt", {"ct"}},
      {"rw", {"wr"}},
      {"rrt", {"rt"}},
      {"rb", {"b"}},
      {"rb'", {"b'"}},
      {"rc", {"c"}},
      {"rfr", {"fr"}},
      {"rw'", {"w'"}},
      {"rbca", {"ct", "wr"}},
      {"rkt", {"wl", "tr", "ct"}},
      {"rk4", {"wl", "tr", "rt"}},
      {"rs4", {"wl", "tr", "ct", "rt"}},
      {"rkw", {"wl", "tr", "wr"}},
  };
  return table;
}

RuleSet make_system(const std::string& name) {
  for (const auto& sys : system_table()) {
    if (sys.name != name) continue;
    RuleSet rs;
    rs.name = name;
    for (const auto& tag : sys.product_rules) rs.rules.push_back(synthesize_rule(tag, product_sequent(tag)));
    return rs;
  }
  throw std::invalid_argument("unknown system: " + name);
}

std::vector<Inequality> system_axioms(const std::string& name) {
  for (const auto& sys : system_table()) {
    if (sys.name != name) continue;
    std::vector<Inequality> out;
    for (const auto& tag : sys.product_rules) out.push_back(product_sequent(tag));
    return out;
  }
  throw std::invalid_argument("unknown system: " + name);
}

}  // namespace wb
