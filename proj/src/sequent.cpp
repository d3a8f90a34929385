#include "wb/sequent.hpp"

#include <algorithm>
#include <set>

namespace wb {

bool equal(const Inequality& a, const Inequality& b) {
  return equal(a.lhs, b.lhs) && equal(a.rhs, b.rhs);
}

std::string print(const Inequality& s, bool bare_names) {
  return print(s.lhs, bare_names) + " |- " + print(s.rhs, bare_names);
}

std::vector<std::string> prop_vars(const Inequality& s) {
  std::set<std::string> vs;
  for (const auto& n : prop_vars(s.lhs)) vs.insert(n);
  for (const auto& n : prop_vars(s.rhs)) vs.insert(n);
  return {vs.begin(), vs.end()};
}

bool occurs(const Inequality& s, const std::string& v, FKind kind) {
  return occurs(s.lhs, v, kind) || occurs(s.rhs, v, kind);
}

Inequality substitute(const Inequality& s, const std::map<std::string, FormulaPtr>& binding) {
  return {substitute(s.lhs, binding), substitute(s.rhs, binding)};
}

bool is_pure(const QuasiInequality& q) {
  for (const auto& a : q.antecedent)
    if (!prop_vars(a).empty()) return false;
  return prop_vars(q.consequent).empty();
}

std::string print(const QuasiInequality& q, bool bare_names) {
  std::string out;
  for (size_t i = 0; i < q.antecedent.size(); ++i) {
    if (i) out += " ; ";
    out += print(q.antecedent[i], bare_names);
  }
  if (!q.antecedent.empty()) out += " => ";
  out += print(q.consequent, bare_names);
  return out;
}

StructurePtr s_leaf(FormulaPtr f) {
  if (!f) throw std::invalid_argument("null formula in structure leaf");
  if (!in_lang(f, Lang::LC)) throw LangError("structure leaf must be an lc formula: " + print(f));
  auto s = std::make_shared<Structure>();
  s->kind = SKind::Leaf;
  s->formula = std::move(f);
  return s;
}

static StructurePtr s_bin(SKind k, StructurePtr a, StructurePtr b) {
  if (!a || !b) throw std::invalid_argument("null child in structure");
  auto s = std::make_shared<Structure>();
  s->kind = k;
  s->left = std::move(a);
  s->right = std::move(b);
  return s;
}

StructurePtr s_prod(StructurePtr a, StructurePtr b) { return s_bin(SKind::SProd, std::move(a), std::move(b)); }
StructurePtr s_meet(StructurePtr a, StructurePtr b) { return s_bin(SKind::SMeet, std::move(a), std::move(b)); }

StructurePtr s_hole() {
  static const StructurePtr h = [] {
    auto s = std::make_shared<Structure>();
    s->kind = SKind::Hole;
    return s;
  }();
  return h;
}

bool equal(const StructurePtr& a, const StructurePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  if (a->kind == SKind::Leaf) return equal(a->formula, b->formula);
  if (a->kind == SKind::Hole) return true;
  return equal(a->left, b->left) && equal(a->right, b->right);
}

static void print_struct_rec(const StructurePtr& s, bool parens, std::string& out) {
  switch (s->kind) {
    case SKind::Leaf: {
      if (s->formula->is_atom())
        out += print(s->formula);
      else
        out += "(" + print(s->formula) + ")";
      return;
    }
    case SKind::Hole: out += "[-]"; return;
    default: break;
  }
  if (parens) out += '(';
  print_struct_rec(s->left, true, out);
  out += s->kind == SKind::SProd ? " o " : " ^ ";
  print_struct_rec(s->right, true, out);
  if (parens) out += ')';
}

std::string print(const StructurePtr& s) {
  std::string out;
  print_struct_rec(s, false, out);
  return out;
}

int structure_size(const StructurePtr& s) {
  if (s->kind == SKind::Leaf) return formula_size(s->formula);
  if (s->kind == SKind::Hole) return 1;
  return 1 + structure_size(s->left) + structure_size(s->right);
}

int count_holes(const StructurePtr& s) {
  if (s->kind == SKind::Hole) return 1;
  if (s->kind == SKind::Leaf) return 0;
  return count_holes(s->left) + count_holes(s->right);
}

Context::Context(StructurePtr s) : shape(std::move(s)) {
  if (count_holes(shape) != 1) throw std::invalid_argument("context must contain exactly one hole");
}

StructurePtr fill_holes(const StructurePtr& shape, const StructurePtr& s) {
  switch (shape->kind) {
    case SKind::Hole: return s;
    case SKind::Leaf: return shape;
    default: {
      StructurePtr l = fill_holes(shape->left, s);
      StructurePtr r = fill_holes(shape->right, s);
      if (l == shape->left && r == shape->right) return shape;
      return s_bin(shape->kind, l, r);
    }
  }
}

StructurePtr Context::fill(const StructurePtr& s) const { return fill_holes(shape, s); }

FormulaPtr tau(const StructurePtr& s) {
  switch (s->kind) {
    case SKind::Leaf: return s->formula;
    case SKind::SProd: return f_prod(tau(s->left), tau(s->right));
    case SKind::SMeet: return f_and(tau(s->left), tau(s->right));
    case SKind::Hole: throw std::invalid_argument("tau applied to a context hole");
  }
  throw std::logic_error("unreachable");
}

bool equal(const ConsecutionSequent& a, const ConsecutionSequent& b) {
  return equal(a.antecedent, b.antecedent) && equal(a.succedent, b.succedent);
}

std::string print(const ConsecutionSequent& s) {
  return print(s.antecedent) + " |- " + print(s.succedent);
}

}  // namespace wb
