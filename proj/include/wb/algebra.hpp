#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wb/sequent.hpp"

namespace wb {

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A finite bounded distributive lattice with a residuated product. All laws
// (lattice structure, distributivity, the residuation triple, and the meet/
// join preservation identities of the implication) are checked exhaustively
// at construction.
class FiniteBDRG {
 public:
  // `le` is row-major n*n; `prod` likewise. Residuals are derived from the
  // product unless provided explicitly.
  static FiniteBDRG build(std::string name, int n, std::vector<uint8_t> le, std::vector<uint8_t> prod);
  static FiniteBDRG build_explicit(std::string name, int n, std::vector<uint8_t> le, std::vector<uint8_t> prod,
                                   std::vector<uint8_t> imp, std::vector<uint8_t> coimp);

  const std::string& name() const { return name_; }
  int size() const { return n_; }
  bool le(int a, int b) const { return le_[a * n_ + b] != 0; }
  int meet(int a, int b) const { return meet_[a * n_ + b]; }
  int join(int a, int b) const { return join_[a * n_ + b]; }
  int prod(int a, int b) const { return prod_[a * n_ + b]; }
  int imp(int a, int b) const { return imp_[a * n_ + b]; }
  int coimp(int a, int b) const { return coimp_[a * n_ + b]; }
  int bot() const { return bot_; }
  int top() const { return top_; }

  int eval(const FormulaPtr& f, const std::vector<int>& env, const std::vector<std::string>& vars) const;

 private:
  void verify() const;

  std::string name_;
  int n_ = 0;
  int bot_ = -1, top_ = -1;
  std::vector<uint8_t> le_, meet_, join_, prod_, imp_, coimp_;
};

// Exhaustive validity: lhs <= rhs under every assignment of carrier elements
// to the propositional variables. Throws BudgetError when carrier^vars
// exceeds `budget`.
bool validate(const FiniteBDRG& alg, const Inequality& s, uint64_t budget = uint64_t{1} << 24);
bool validate_all(const FiniteBDRG& alg, const std::vector<Inequality>& seqs);

// Hand-built algebras used to separate axiom classes. Every entry passes the
// construction checks.
const std::vector<FiniteBDRG>& catalog();

// JSON (de)serialization of operation tables for the oracle CLI.
FiniteBDRG algebra_from_json(const std::string& json_text);
std::string algebra_to_json(const FiniteBDRG& alg);

}  // namespace wb
