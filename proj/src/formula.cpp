#include "wb/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace wb {

namespace {

FormulaPtr make_atom(FKind k, std::string name = {}) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->name = std::move(name);
  return f;
}

FormulaPtr make_bin(FKind k, FormulaPtr a, FormulaPtr b) {
  if (!a || !b) throw std::invalid_argument("null child in formula constructor");
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->left = std::move(a);
  f->right = std::move(b);
  return f;
}

void check_identifier(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("empty identifier");
  if (!std::islower(static_cast<unsigned char>(name[0])))
    throw std::invalid_argument("identifier must start with a lowercase letter: " + name);
  for (char c : name) {
    if (!std::islower(static_cast<unsigned char>(c)) && !std::isdigit(static_cast<unsigned char>(c)) && c != '_')
      throw std::invalid_argument("bad identifier character in: " + name);
  }
}

}  // namespace

FormulaPtr f_var(const std::string& name) {
  check_identifier(name);
  return make_atom(FKind::Var, name);
}
FormulaPtr f_nom(const std::string& name) {
  check_identifier(name);
  return make_atom(FKind::Nom, name);
}
FormulaPtr f_conom(const std::string& name) {
  check_identifier(name);
  return make_atom(FKind::Conom, name);
}
FormulaPtr f_top() {
  static const FormulaPtr t = make_atom(FKind::Top);
  return t;
}
FormulaPtr f_bot() {
  static const FormulaPtr b = make_atom(FKind::Bot);
  return b;
}
FormulaPtr f_and(FormulaPtr a, FormulaPtr b) { return make_bin(FKind::And, std::move(a), std::move(b)); }
FormulaPtr f_or(FormulaPtr a, FormulaPtr b) { return make_bin(FKind::Or, std::move(a), std::move(b)); }
FormulaPtr f_imp(FormulaPtr a, FormulaPtr b) { return make_bin(FKind::Imp, std::move(a), std::move(b)); }
FormulaPtr f_prod(FormulaPtr a, FormulaPtr b) { return make_bin(FKind::Prod, std::move(a), std::move(b)); }
FormulaPtr f_coimp(FormulaPtr a, FormulaPtr b) { return make_bin(FKind::Coimp, std::move(a), std::move(b)); }

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->name != b->name) return false;
  if (a->is_atom()) return true;
  return equal(a->left, b->left) && equal(a->right, b->right);
}

int formula_size(const FormulaPtr& f) {
  if (!f) return 0;
  if (f->is_atom()) return 1;
  return 1 + formula_size(f->left) + formula_size(f->right);
}

namespace {

const char* op_token(FKind k) {
  switch (k) {
    case FKind::And: return "&";
    case FKind::Or: return "|";
    case FKind::Imp: return "->";
    case FKind::Prod: return "*";
    case FKind::Coimp: return "<-";
    default: return "?";
  }
}

void print_rec(const FormulaPtr& f, bool bare, bool parens, std::string& out) {
  switch (f->kind) {
    case FKind::Var: out += f->name; return;
    case FKind::Nom:
      if (!bare) out += "j:";
      out += f->name;
      return;
    case FKind::Conom:
      if (!bare) out += "m:";
      out += f->name;
      return;
    case FKind::Top: out += "top"; return;
    case FKind::Bot: out += "bot"; return;
    default: break;
  }
  if (parens) out += '(';
  print_rec(f->left, bare, true, out);
  out += ' ';
  out += op_token(f->kind);
  out += ' ';
  print_rec(f->right, bare, true, out);
  if (parens) out += ')';
}

}  // namespace

std::string print(const FormulaPtr& f, bool bare_names) {
  std::string out;
  print_rec(f, bare_names, false, out);
  return out;
}

bool in_lang(const FormulaPtr& f, Lang lang) {
  switch (f->kind) {
    case FKind::Nom:
    case FKind::Conom: return lang == Lang::LCX;
    case FKind::Var:
    case FKind::Top:
    case FKind::Bot: return true;
    case FKind::And:
    case FKind::Or:
    case FKind::Imp:
      if (lang == Lang::Prod) return false;
      break;
    case FKind::Prod:
      if (lang == Lang::SI) return false;
      break;
    case FKind::Coimp:
      if (lang == Lang::SI || lang == Lang::Prod) return false;
      break;
  }
  return in_lang(f->left, lang) && in_lang(f->right, lang);
}

Lang lang_of(const FormulaPtr& f) {
  if (in_lang(f, Lang::SI)) return Lang::SI;
  if (in_lang(f, Lang::Prod)) return Lang::Prod;
  if (in_lang(f, Lang::LC)) return Lang::LC;
  return Lang::LCX;
}

const char* lang_name(Lang lang) {
  switch (lang) {
    case Lang::SI: return "si";
    case Lang::Prod: return "prod";
    case Lang::LC: return "lc";
    case Lang::LCX: return "lc+";
  }
  return "?";
}

FormulaPtr substitute(const FormulaPtr& f, const std::map<std::string, FormulaPtr>& binding) {
  switch (f->kind) {
    case FKind::Var: {
      auto it = binding.find(f->name);
      return it == binding.end() ? f : it->second;
    }
    case FKind::Nom:
    case FKind::Conom:
    case FKind::Top:
    case FKind::Bot: return f;
    default: {
      FormulaPtr l = substitute(f->left, binding);
      FormulaPtr r = substitute(f->right, binding);
      if (l == f->left && r == f->right) return f;
      auto g = std::make_shared<Formula>();
      g->kind = f->kind;
      g->left = l;
      g->right = r;
      return g;
    }
  }
}

namespace {

void polarity_rec(const FormulaPtr& f, const std::string& v, bool pos, bool& seen_pos, bool& seen_neg) {
  switch (f->kind) {
    case FKind::Var:
      if (f->name == v) (pos ? seen_pos : seen_neg) = true;
      return;
    case FKind::Nom:
    case FKind::Conom:
    case FKind::Top:
    case FKind::Bot: return;
    case FKind::Imp:
      polarity_rec(f->left, v, !pos, seen_pos, seen_neg);
      polarity_rec(f->right, v, pos, seen_pos, seen_neg);
      return;
    case FKind::Coimp:
      // first coordinate covariant, second contravariant
      polarity_rec(f->left, v, pos, seen_pos, seen_neg);
      polarity_rec(f->right, v, !pos, seen_pos, seen_neg);
      return;
    default:
      polarity_rec(f->left, v, pos, seen_pos, seen_neg);
      polarity_rec(f->right, v, pos, seen_pos, seen_neg);
      return;
  }
}

}  // namespace

Polarity polarity(const FormulaPtr& f, const std::string& v) {
  bool sp = false, sn = false;
  polarity_rec(f, v, true, sp, sn);
  if (sp && sn) return Polarity::Both;
  if (sp) return Polarity::Positive;
  if (sn) return Polarity::Negative;
  return Polarity::Absent;
}

bool positive_in(const FormulaPtr& f, const std::string& v) {
  Polarity p = polarity(f, v);
  return p == Polarity::Positive || p == Polarity::Absent;
}

bool negative_in(const FormulaPtr& f, const std::string& v) {
  Polarity p = polarity(f, v);
  return p == Polarity::Negative || p == Polarity::Absent;
}

bool occurs(const FormulaPtr& f, const std::string& v, FKind kind) {
  if (f->kind == kind) return f->name == v;
  if (f->is_atom()) return false;
  return occurs(f->left, v, kind) || occurs(f->right, v, kind);
}

namespace {
void collect_atoms(const FormulaPtr& f, FKind kind, std::set<std::string>& out) {
  if (f->kind == kind) {
    out.insert(f->name);
    return;
  }
  if (f->is_atom()) return;
  collect_atoms(f->left, kind, out);
  collect_atoms(f->right, kind, out);
}
}  // namespace

std::vector<std::string> atom_names(const FormulaPtr& f, FKind kind) {
  std::set<std::string> s;
  collect_atoms(f, kind, s);
  return {s.begin(), s.end()};
}

std::vector<std::string> prop_vars(const FormulaPtr& f) { return atom_names(f, FKind::Var); }

}  // namespace wb
