#pragma once

#include <cstdint>

#include "wb/algebra.hpp"
#include "wb/sequent.hpp"

namespace wb {

// Binary frame on up to 4 worlds; bit u*n+v of rel set means u R v.
struct BinaryFrame {
  int n = 0;
  uint16_t rel = 0;
  bool has(int u, int v) const { return rel >> (u * n + v) & 1; }
};

// Ternary frame on up to 3 worlds; bit (a*n+b)*n+c set means S a b c.
struct TernaryFrame {
  int n = 0;
  uint32_t rel = 0;
  bool has(int a, int b, int c) const { return rel >> ((a * n + b) * n + c) & 1; }
};

enum class Semantics { Binary, Ternary };

// Extensions are world subsets, encoded as bitmasks over 0..n-1.
using WorldSet = uint16_t;

// Evaluates an lc+ formula to an extension under the given valuation.
// Valuation maps atom names (variables, nominals, conominals alike) to sets.
using Valuation = std::map<std::string, WorldSet>;
WorldSet eval_on(const BinaryFrame& f, const FormulaPtr& phi, const Valuation& val);
WorldSet eval_on(const TernaryFrame& f, const FormulaPtr& phi, const Valuation& val);

// Powerset algebras of frames. Carrier element k is the extension with mask k.
FiniteBDRG dual_algebra_binary(const BinaryFrame& f);
FiniteBDRG dual_algebra_ternary(const TernaryFrame& f);

// Validity of a pure quasi-inequality: nominals range over singletons and
// conominals over complements of singletons; the antecedent inclusions must
// force the consequent for every such assignment.
bool validate_quasi(const BinaryFrame& f, const QuasiInequality& q);
bool validate_quasi(const TernaryFrame& f, const QuasiInequality& q);

// Validity of a mixed system (propositional variables range over arbitrary
// subsets): forall assignments, the antecedents force the goal. Used to check
// that rewriting steps preserve frame validity.
bool system_valid(const BinaryFrame& f, const std::vector<Inequality>& antecedents, const Inequality& goal);

// First-order frame conditions for the named axioms, one hard-coded predicate
// per axiom and semantics. Throws on an unknown tag.
bool fo_correspondent(const std::string& axiom, const BinaryFrame& f);
bool fo_correspondent(const std::string& axiom, const TernaryFrame& f);

// Exhaustive enumeration (binary n<=4, ternary n<=2) and seeded sampling.
std::vector<BinaryFrame> enumerate_binary(int n);
std::vector<TernaryFrame> enumerate_ternary(int n);
std::vector<BinaryFrame> sample_binary(int n, int count, uint64_t seed);
std::vector<TernaryFrame> sample_ternary(int n, int count, uint64_t seed);

}  // namespace wb
