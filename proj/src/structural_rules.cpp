#include "wb/structural_rules.hpp"

#include <nlohmann/json.hpp>

namespace wb {

namespace {

void count_vars(const FormulaPtr& f, std::map<std::string, int>& counts) {
  if (f->kind == FKind::Var) {
    ++counts[f->name];
    return;
  }
  if (f->is_atom()) return;
  count_vars(f->left, counts);
  count_vars(f->right, counts);
}

void require_product_lang(const Inequality& sigma) {
  if (!in_lang(sigma.lhs, Lang::Prod) || !in_lang(sigma.rhs, Lang::Prod))
    throw LangError("structural rules come from product-language sequents: " + print(sigma));
}

}  // namespace

bool is_good(const Inequality& sigma) {
  require_product_lang(sigma);
  std::map<std::string, int> counts;
  count_vars(sigma.lhs, counts);
  for (const auto& [v, c] : counts)
    if (c > 1) return false;
  return true;
}

bool preserves_subformula(const Inequality& sigma) {
  require_product_lang(sigma);
  std::vector<std::string> lhs_vars = prop_vars(sigma.lhs);
  for (const auto& v : prop_vars(sigma.rhs))
    if (std::find(lhs_vars.begin(), lhs_vars.end(), v) == lhs_vars.end()) return false;
  return true;
}

StructuralRule synthesize_rule(const std::string& name, const Inequality& sigma) {
  require_product_lang(sigma);
  return {name, sigma};
}

bool match_pattern(const FormulaPtr& pattern, const StructurePtr& s,
                   std::map<std::string, StructurePtr>& binding) {
  switch (pattern->kind) {
    case FKind::Var: {
      auto it = binding.find(pattern->name);
      if (it != binding.end()) return equal(it->second, s);
      binding[pattern->name] = s;
      return true;
    }
    case FKind::Top:
    case FKind::Bot:
      return s->kind == SKind::Leaf && equal(s->formula, pattern);
    case FKind::Prod:
      return s->kind == SKind::SProd && match_pattern(pattern->left, s->left, binding) &&
             match_pattern(pattern->right, s->right, binding);
    default:
      throw LangError("not a product pattern: " + print(pattern));
  }
}

StructurePtr instantiate_pattern(const FormulaPtr& pattern, const std::map<std::string, StructurePtr>& binding) {
  switch (pattern->kind) {
    case FKind::Var: {
      auto it = binding.find(pattern->name);
      if (it == binding.end()) throw std::invalid_argument("unbound metavariable " + pattern->name);
      return it->second;
    }
    case FKind::Top:
    case FKind::Bot:
      return s_leaf(pattern);
    case FKind::Prod:
      return s_prod(instantiate_pattern(pattern->left, binding), instantiate_pattern(pattern->right, binding));
    default:
      throw LangError("not a product pattern: " + print(pattern));
  }
}

std::string rules_to_json(const std::vector<StructuralRule>& rules) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rules) out.push_back({{"name", r.name}, {"sequent", print(r.sigma)}});
  return out.dump(2);
}

std::vector<StructuralRule> rules_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<StructuralRule> out;
  for (const auto& item : j)
    out.push_back(synthesize_rule(item.at("name").get<std::string>(),
                                  parse_inequality(item.at("sequent").get<std::string>(), Lang::Prod)));
  return out;
}

}  // namespace wb
