#pragma once

#include "wb/sequent.hpp"

namespace wb {

// Renames nominals to i, j, k, ... and conominals to m, n, o, ..., sorts the
// antecedents by printed form, and among all admissible renamings picks the
// one with the lexicographically least printed form. Two quasi-inequalities
// that differ only by (co)nominal names and antecedent order canonicalize to
// the same value.
QuasiInequality canonical_names(const QuasiInequality& q);

// Canonical text: "forall <noms> <conoms>: a1 ; a2 => goal" (header omitted
// when no nominals or conominals occur; "=>" omitted when no antecedents).
std::string canonical_print(const QuasiInequality& q);

// Renames propositional variables in first-occurrence order to p, q, r, ...
Inequality canonical_prop_vars(const Inequality& s);

FormulaPtr rename_atoms(const FormulaPtr& f, FKind kind, const std::map<std::string, std::string>& renaming);

}  // namespace wb
