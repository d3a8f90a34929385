#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wb/formula.hpp"

namespace wb {

// phi |- psi, interchangeably read as the inequality phi <= psi.
struct Inequality {
  FormulaPtr lhs, rhs;
};

bool equal(const Inequality& a, const Inequality& b);
std::string print(const Inequality& s, bool bare_names = false);
std::vector<std::string> prop_vars(const Inequality& s);
bool occurs(const Inequality& s, const std::string& v, FKind kind = FKind::Var);
Inequality substitute(const Inequality& s, const std::map<std::string, FormulaPtr>& binding);

// antecedent_1 ; ... ; antecedent_n => consequent
struct QuasiInequality {
  std::vector<Inequality> antecedent;
  Inequality consequent;
};

// Pure: no propositional variable occurs anywhere in it.
bool is_pure(const QuasiInequality& q);
std::string print(const QuasiInequality& q, bool bare_names = false);

// Proof structures: formula leaves combined with the structural product `o`
// and the structural meet `^`. Hole appears only inside contexts.
enum class SKind { Leaf, SProd, SMeet, Hole };

struct Structure;
using StructurePtr = std::shared_ptr<const Structure>;

struct Structure {
  SKind kind;
  FormulaPtr formula;  // Leaf only
  StructurePtr left, right;
};

StructurePtr s_leaf(FormulaPtr f);
StructurePtr s_prod(StructurePtr a, StructurePtr b);
StructurePtr s_meet(StructurePtr a, StructurePtr b);
StructurePtr s_hole();

bool equal(const StructurePtr& a, const StructurePtr& b);
std::string print(const StructurePtr& s);
int structure_size(const StructurePtr& s);
int count_holes(const StructurePtr& s);

// A context is a structure with exactly one hole.
struct Context {
  StructurePtr shape;
  explicit Context(StructurePtr s);
  StructurePtr fill(const StructurePtr& s) const;
  StructurePtr fill(const FormulaPtr& f) const { return fill(s_leaf(f)); }
};

// Replaces every hole (used by the mix rule, where several holes are allowed).
StructurePtr fill_holes(const StructurePtr& shape, const StructurePtr& s);

// tau maps structures to formulas: o becomes *, ^ becomes &.
FormulaPtr tau(const StructurePtr& s);

// Gamma |- phi with Gamma a structure and phi an LC formula.
struct ConsecutionSequent {
  StructurePtr antecedent;
  FormulaPtr succedent;
};

bool equal(const ConsecutionSequent& a, const ConsecutionSequent& b);
std::string print(const ConsecutionSequent& s);

// Parsers for the ASCII grammar (see formula.hpp). Sequent separator is "|-"
// (or "<="); antecedents of a quasi-inequality are joined with ";" and the
// consequent follows "=>". A leading "forall n1 n2 ...:" header declares
// nominal/conominal names (names starting with m, n or o are conominals).
Inequality parse_inequality(const std::string& text, Lang lang = Lang::LCX);
QuasiInequality parse_quasi(const std::string& text);
StructurePtr parse_structure(const std::string& text);
ConsecutionSequent parse_consecution(const std::string& text);

}  // namespace wb
