#include "wb/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace wb {

FormulaPtr rename_atoms(const FormulaPtr& f, FKind kind, const std::map<std::string, std::string>& renaming) {
  if (f->kind == kind) {
    auto it = renaming.find(f->name);
    if (it == renaming.end()) return f;
    auto g = std::make_shared<Formula>();
    g->kind = kind;
    g->name = it->second;
    return g;
  }
  if (f->is_atom()) return f;
  FormulaPtr l = rename_atoms(f->left, kind, renaming);
  FormulaPtr r = rename_atoms(f->right, kind, renaming);
  if (l == f->left && r == f->right) return f;
  auto g = std::make_shared<Formula>();
  g->kind = f->kind;
  g->left = l;
  g->right = r;
  return g;
}

namespace {

std::vector<std::string> name_pool(const char* const* base, size_t base_n, size_t n) {
  std::vector<std::string> pool;
  for (size_t i = 0; i < n; ++i) {
    if (i < base_n) pool.push_back(base[i]);
    else pool.push_back(std::string(base[0]) + std::to_string(i));
  }
  return pool;
}

std::vector<std::string> collect_names(const QuasiInequality& q, FKind kind) {
  std::set<std::string> s;
  auto grab = [&](const FormulaPtr& f) {
    for (const auto& n : atom_names(f, kind)) s.insert(n);
  };
  for (const auto& a : q.antecedent) { grab(a.lhs); grab(a.rhs); }
  grab(q.consequent.lhs);
  grab(q.consequent.rhs);
  return {s.begin(), s.end()};
}

QuasiInequality apply_renaming(const QuasiInequality& q, const std::map<std::string, std::string>& noms,
                               const std::map<std::string, std::string>& conoms) {
  auto rn = [&](const FormulaPtr& f) {
    return rename_atoms(rename_atoms(f, FKind::Nom, noms), FKind::Conom, conoms);
  };
  QuasiInequality out;
  for (const auto& a : q.antecedent) out.antecedent.push_back({rn(a.lhs), rn(a.rhs)});
  out.consequent = {rn(q.consequent.lhs), rn(q.consequent.rhs)};
  std::sort(out.antecedent.begin(), out.antecedent.end(),
            [](const Inequality& a, const Inequality& b) { return print(a, true) < print(b, true); });
  return out;
}

}  // namespace

QuasiInequality canonical_names(const QuasiInequality& q) {
  static const char* nom_base[] = {"i", "j", "k"};
  static const char* conom_base[] = {"m", "n", "o"};
  std::vector<std::string> noms = collect_names(q, FKind::Nom);
  std::vector<std::string> conoms = collect_names(q, FKind::Conom);
  std::vector<std::string> nom_pool = name_pool(nom_base, 3, noms.size());
  std::vector<std::string> conom_pool = name_pool(conom_base, 3, conoms.size());

  std::vector<size_t> nperm(noms.size()), cperm(conoms.size());
  std::iota(nperm.begin(), nperm.end(), 0);

  QuasiInequality best;
  std::string best_key;
  do {
    std::map<std::string, std::string> nmap;
    for (size_t i = 0; i < noms.size(); ++i) nmap[noms[i]] = nom_pool[nperm[i]];
    std::iota(cperm.begin(), cperm.end(), 0);
    do {
      std::map<std::string, std::string> cmap;
      for (size_t i = 0; i < conoms.size(); ++i) cmap[conoms[i]] = conom_pool[cperm[i]];
      QuasiInequality cand = apply_renaming(q, nmap, cmap);
      std::string key = print(cand, true);
      if (best_key.empty() || key < best_key) {
        best_key = key;
        best = cand;
      }
    } while (std::next_permutation(cperm.begin(), cperm.end()));
  } while (std::next_permutation(nperm.begin(), nperm.end()));
  return best;
}

std::string canonical_print(const QuasiInequality& q) {
  QuasiInequality c = canonical_names(q);
  std::vector<std::string> noms = collect_names(c, FKind::Nom);
  std::vector<std::string> conoms = collect_names(c, FKind::Conom);
  std::string out;
  if (!noms.empty() || !conoms.empty()) {
    out = "forall";
    for (const auto& n : noms) out += " " + n;
    for (const auto& n : conoms) out += " " + n;
    out += ": ";
  }
  return out + print(c, true);
}

Inequality canonical_prop_vars(const Inequality& s) {
  static const char* base[] = {"p", "q", "r", "s", "t", "u", "v", "w"};
  std::vector<std::string> order;
  auto walk = [&](const FormulaPtr& f, auto&& self) -> void {
    if (f->kind == FKind::Var) {
      if (std::find(order.begin(), order.end(), f->name) == order.end()) order.push_back(f->name);
      return;
    }
    if (f->is_atom()) return;
    self(f->left, self);
    self(f->right, self);
  };
  walk(s.lhs, walk);
  walk(s.rhs, walk);
  std::map<std::string, FormulaPtr> binding;
  for (size_t i = 0; i < order.size(); ++i) {
    std::string target = i < 8 ? base[i] : "p" + std::to_string(i);
    binding[order[i]] = f_var(target);
  }
  return substitute(s, binding);
}

}  // namespace wb
