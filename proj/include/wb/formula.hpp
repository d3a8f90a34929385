#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace wb {

// Object languages, ordered by inclusion where applicable.
//   SI   : propositional variables, top, bot, &, |, ->          (strict implication)
//   Prod : propositional variables, top, bot, *                 (product fragment)
//   LC   : SI plus * and <-                                     (Lambek connectives)
//   LCX  : LC plus nominals and conominals
enum class Lang { SI, Prod, LC, LCX };

enum class FKind { Var, Nom, Conom, Top, Bot, And, Or, Imp, Prod, Coimp };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable tree with structural equality. Shared subterms are fine; nothing
// ever mutates a node after construction.
struct Formula {
  FKind kind;
  std::string name;  // Var/Nom/Conom only
  FormulaPtr left, right;

  bool is_atom() const {
    return kind == FKind::Var || kind == FKind::Nom || kind == FKind::Conom ||
           kind == FKind::Top || kind == FKind::Bot;
  }
  bool binary() const { return !is_atom(); }
};

FormulaPtr f_var(const std::string& name);
FormulaPtr f_nom(const std::string& name);
FormulaPtr f_conom(const std::string& name);
FormulaPtr f_top();
FormulaPtr f_bot();
FormulaPtr f_and(FormulaPtr a, FormulaPtr b);
FormulaPtr f_or(FormulaPtr a, FormulaPtr b);
FormulaPtr f_imp(FormulaPtr a, FormulaPtr b);
FormulaPtr f_prod(FormulaPtr a, FormulaPtr b);
FormulaPtr f_coimp(FormulaPtr a, FormulaPtr b);

bool equal(const FormulaPtr& a, const FormulaPtr& b);
int formula_size(const FormulaPtr& f);

// Canonical ASCII rendering. Compound subterms are always parenthesized, so
// print/parse round-trips exactly. `bare_names` prints nominals/conominals
// without their j:/m: prefixes (used inside quantified quasi-inequalities
// where the namespaces are declared up front).
std::string print(const FormulaPtr& f, bool bare_names = false);

bool in_lang(const FormulaPtr& f, Lang lang);
// Smallest language containing f.
Lang lang_of(const FormulaPtr& f);
const char* lang_name(Lang lang);

// Uniform replacement of propositional variables. Keys are Var names.
FormulaPtr substitute(const FormulaPtr& f, const std::map<std::string, FormulaPtr>& binding);

enum class Polarity { Positive, Negative, Both, Absent };

// Occurrence polarity of variable v in +f. The first argument of -> (and of <-
// via its second argument) flips the sign.
Polarity polarity(const FormulaPtr& f, const std::string& v);
bool positive_in(const FormulaPtr& f, const std::string& v);  // Positive or Absent
bool negative_in(const FormulaPtr& f, const std::string& v);  // Negative or Absent
bool occurs(const FormulaPtr& f, const std::string& v, FKind kind = FKind::Var);

std::vector<std::string> prop_vars(const FormulaPtr& f);   // sorted, unique
std::vector<std::string> atom_names(const FormulaPtr& f, FKind kind);

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct LangError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses the ASCII grammar:
//   atom      = [a-z][a-z0-9_]* | "top" | "bot" | "j:"id | "m:"id
//   precedence: & , |  bind tighter than  *  which binds tighter than -> , <-
//   equal precedence associates to the left; parentheses override.
// Rejects formulas outside `lang`.
FormulaPtr parse_formula(const std::string& text, Lang lang = Lang::LCX);

}  // namespace wb
