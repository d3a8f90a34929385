#pragma once

#include <optional>

#include "wb/classifier.hpp"
#include "wb/sequent.hpp"

namespace wb {

// One rewriting step, with the full system after the step so that traces can
// be replayed and semantically spot-checked.
struct AlbaStep {
  std::string rule;
  std::string detail;
  std::vector<Inequality> inequalities;
  Inequality goal;
};

struct AlbaState {
  std::vector<Inequality> inequalities;  // system over lc+, insertion ordered
  Inequality goal;                       // nominal <= conominal, fixed at first approximation
  int fresh_noms = 0, fresh_conoms = 0;
  std::vector<std::string> forbidden;  // atom names that may not be reused
  std::vector<AlbaStep> trace;
};

struct AlbaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Stage 1: distribution over lattice skeletons, splitting, and the guarded
// monotone/antitone variable eliminations. Elimination fires only when the
// variable occurs on both sides with the required joint polarities.
std::vector<Inequality> preprocess(const Inequality& ineq);

// Applies the approximation rule once, against fresh goal atoms.
AlbaState first_approximation(const Inequality& ineq);

// Named second-stage rules, applied to the inequality at `operand`:
//   "split-meet"        x <= a & b        becomes x <= a, x <= b
//   "split-join"        a | b <= x        becomes a <= x, b <= x
//   "residuation"       x <= a -> b       becomes a * x <= b
//   "approx-imp-left"   a -> b <= m       becomes i <= a, i -> b <= m   (fresh i)
//   "approx-imp-right"  a -> b <= m       becomes b <= n, a -> n <= m   (fresh n)
//   "approx-prod-left"  i <= a * b        becomes j <= a, i <= j * b    (fresh j)
//   "approx-prod-right" i <= a * b        becomes j <= b, i <= a * j    (fresh j)
//   "rar" / "lar"       Ackermann elimination of the variable named by `arg`
// Throws AlbaError on pattern mismatch, polarity or freshness violations.
AlbaState apply_rule(const AlbaState& state, const std::string& rule, size_t operand, const std::string& arg = "");

struct AlbaRun {
  Inequality input;            // the preprocessed inequality this run solved
  QuasiInequality raw;         // pure system as produced by the rules
  QuasiInequality result;      // after normalize_result
  std::vector<AlbaStep> trace;
};

struct AlbaResult {
  bool success = false;
  std::vector<Inequality> preprocessed;
  std::vector<AlbaRun> runs;        // one per preprocessed inequality (on success)
  std::optional<AlbaState> stuck;   // first stuck system (on failure)
};

// Runs the full procedure. With a certificate (given or found), variables are
// eliminated along the dependency order; otherwise eliminations are attempted
// in name order and the run fails if no variable can be removed within
// `max_steps` rule applications.
AlbaResult run_alba(const Inequality& ineq, std::optional<InductiveCertificate> cert = std::nullopt,
                    int max_steps = 30);

// Discharges goal-side bounds that hold for every (co)nominal instance,
// residuates the goal, collapses unconstrained goal atoms to lattice bounds,
// and canonically renames. The identity on already-normal systems.
QuasiInequality normalize_result(const QuasiInequality& q);

}  // namespace wb
