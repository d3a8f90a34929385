#pragma once

#include "wb/frames.hpp"

namespace wb {

// Frame sweeps are embarrassingly parallel; every kernel exists in a serial
// reference form and an OpenMP form computing identical results.
enum class ExecMode { Serial, Parallel };

struct AgreementReport {
  long frames = 0;
  long holds = 0;          // frames satisfying the first-order condition
  long disagreements = 0;  // frames where the condition and the quasi-inequality differ
};

// Compares the hard-coded first-order correspondent of `axiom` against the
// validity of the pure quasi-inequality on every frame.
AgreementReport agreement_sweep(const std::string& axiom, const QuasiInequality& q,
                                const std::vector<BinaryFrame>& frames, ExecMode mode = ExecMode::Parallel);
AgreementReport agreement_sweep(const std::string& axiom, const QuasiInequality& q,
                                const std::vector<TernaryFrame>& frames, ExecMode mode = ExecMode::Parallel);

struct EquivalenceReport {
  long algebras = 0;
  long mismatches = 0;  // algebras where exactly one of the two sequents holds
};

// Equivalidity of two sequents over the dual algebras of the frames.
EquivalenceReport equivalence_sweep(const Inequality& a, const Inequality& b,
                                    const std::vector<BinaryFrame>& frames, ExecMode mode = ExecMode::Parallel);
EquivalenceReport equivalence_sweep(const Inequality& a, const Inequality& b,
                                    const std::vector<TernaryFrame>& frames, ExecMode mode = ExecMode::Parallel);

// Frame validity of a mixed system (antecedents => goal) over binary frames;
// used to spot-check that every recorded rewriting step preserves meaning.
long count_system_violations(const std::vector<Inequality>& before_antecedents, const Inequality& before_goal,
                             const std::vector<Inequality>& after_antecedents, const Inequality& after_goal,
                             const std::vector<BinaryFrame>& frames, ExecMode mode = ExecMode::Parallel);

// Milliseconds allowed for one sweep, from WORKBENCH_BUDGET_MS (0 = no cap).
long sweep_budget_ms();

}  // namespace wb
