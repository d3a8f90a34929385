#pragma once

#include <optional>
#include <set>

#include "wb/sequent.hpp"

namespace wb {

// Supersequent: a set of assumption sequents constraining a goal sequent.
// Assumptions keep insertion order so scripts can address them by index.
struct AlcState {
  std::vector<Inequality> assumptions;
  Inequality goal;
  std::set<std::string> used_names;  // every variable seen so far in the derivation

  static AlcState initial(const Inequality& goal);
};

bool equal(const AlcState& a, const AlcState& b);
std::string print(const AlcState& s);

struct AlcError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One rule application. Rules are invertible; `up` applies a rule from
// conclusion to premise. `operand` addresses an assumption, or is -1 for
// rules acting on the goal. `arg` carries the fresh variable of an
// approximation rule or the variable eliminated by an Ackermann rule.
//
// Rule ids: ands, ors, rl1, rl2, rr1, rr2, ap1, ap2, impap1..impap4,
// prodap1..prodap4, andap5, andap6, orap1, orap2, rack, lack.
struct AlcStep {
  std::string rule;
  int operand = -1;
  std::string arg;
  bool up = false;
};

AlcState alc_apply(const AlcState& state, const AlcStep& step);

struct AlcDerivation {
  Inequality input;
  std::vector<AlcStep> steps;
  std::vector<AlcState> states;  // states[0] is initial; states[i+1] after steps[i]
  const AlcState& final_state() const { return states.back(); }
};

// Replays every step; false (with a reason) on the first illegal one.
bool check_derivation(const AlcDerivation& d, std::string* why = nullptr);

// Line-oriented scripts:
//   INPUT <sequent>
//   RULE <name>[^] <index|goal> [arg]
AlcDerivation parse_script(const std::string& text);
AlcDerivation replay_script(const std::string& text);  // parse + apply, throwing on errors

// Searches for a product-language correspondent of a strict implication
// sequent: approximate the goal, split and residuate the assumptions, then
// eliminate variables, peeling implication subterms out of the goal between
// rounds. Falls back to bounded iterative deepening; absence means "no
// correspondent found within bounds".
std::optional<AlcDerivation> run_alc(const Inequality& ineq, int max_depth = 25);

}  // namespace wb
