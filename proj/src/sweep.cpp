#include "wb/sweep.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>

namespace wb {

long sweep_budget_ms() {
  const char* v = std::getenv("WORKBENCH_BUDGET_MS");
  if (!v || !*v) return 0;
  return std::atol(v);
}

namespace {

class Budget {
 public:
  Budget() : cap_ms_(sweep_budget_ms()), start_(std::chrono::steady_clock::now()) {}
  void check(long i) const {
    if (cap_ms_ <= 0 || (i & 1023) != 0) return;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
                  .count();
    if (ms > cap_ms_) throw BudgetError("sweep exceeded WORKBENCH_BUDGET_MS");
  }

 private:
  long cap_ms_;
  std::chrono::steady_clock::time_point start_;
};

template <typename Frame>
AgreementReport agreement_impl(const std::string& axiom, const QuasiInequality& q,
                               const std::vector<Frame>& frames, ExecMode mode) {
  AgreementReport rep;
  rep.frames = static_cast<long>(frames.size());
  long holds = 0, disagreements = 0;
  Budget budget;
  const long n = rep.frames;
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for reduction(+ : holds, disagreements) schedule(dynamic, 64)
    for (long i = 0; i < n; ++i) {
      bool fo = fo_correspondent(axiom, frames[i]);
      bool qv = validate_quasi(frames[i], q);
      holds += fo;
      disagreements += fo != qv;
    }
  } else {
    for (long i = 0; i < n; ++i) {
      budget.check(i);
      bool fo = fo_correspondent(axiom, frames[i]);
      bool qv = validate_quasi(frames[i], q);
      holds += fo;
      disagreements += fo != qv;
    }
  }
  rep.holds = holds;
  rep.disagreements = disagreements;
  return rep;
}

template <typename Frame>
FiniteBDRG dual_of(const Frame& f);
template <>
FiniteBDRG dual_of(const BinaryFrame& f) { return dual_algebra_binary(f); }
template <>
FiniteBDRG dual_of(const TernaryFrame& f) { return dual_algebra_ternary(f); }

template <typename Frame>
EquivalenceReport equivalence_impl(const Inequality& a, const Inequality& b, const std::vector<Frame>& frames,
                                   ExecMode mode) {
  EquivalenceReport rep;
  rep.algebras = static_cast<long>(frames.size());
  long mismatches = 0;
  Budget budget;
  const long n = rep.algebras;
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for reduction(+ : mismatches) schedule(dynamic, 16)
    for (long i = 0; i < n; ++i) {
      FiniteBDRG alg = dual_of(frames[i]);
      mismatches += validate(alg, a) != validate(alg, b);
    }
  } else {
    for (long i = 0; i < n; ++i) {
      budget.check(i);
      FiniteBDRG alg = dual_of(frames[i]);
      mismatches += validate(alg, a) != validate(alg, b);
    }
  }
  rep.mismatches = mismatches;
  return rep;
}

}  // namespace

AgreementReport agreement_sweep(const std::string& axiom, const QuasiInequality& q,
                                const std::vector<BinaryFrame>& frames, ExecMode mode) {
  return agreement_impl(axiom, q, frames, mode);
}
AgreementReport agreement_sweep(const std::string& axiom, const QuasiInequality& q,
                                const std::vector<TernaryFrame>& frames, ExecMode mode) {
  return agreement_impl(axiom, q, frames, mode);
}

EquivalenceReport equivalence_sweep(const Inequality& a, const Inequality& b,
                                    const std::vector<BinaryFrame>& frames, ExecMode mode) {
  return equivalence_impl(a, b, frames, mode);
}
EquivalenceReport equivalence_sweep(const Inequality& a, const Inequality& b,
                                    const std::vector<TernaryFrame>& frames, ExecMode mode) {
  return equivalence_impl(a, b, frames, mode);
}

long count_system_violations(const std::vector<Inequality>& before_antecedents, const Inequality& before_goal,
                             const std::vector<Inequality>& after_antecedents, const Inequality& after_goal,
                             const std::vector<BinaryFrame>& frames, ExecMode mode) {
  long bad = 0;
  const long n = static_cast<long>(frames.size());
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for reduction(+ : bad) schedule(dynamic, 8)
    for (long i = 0; i < n; ++i) {
      bool before = system_valid(frames[i], before_antecedents, before_goal);
      bool after = system_valid(frames[i], after_antecedents, after_goal);
      bad += before != after;
    }
  } else {
    for (long i = 0; i < n; ++i) {
      bool before = system_valid(frames[i], before_antecedents, before_goal);
      bool after = system_valid(frames[i], after_antecedents, after_goal);
      bad += before != after;
    }
  }
  return bad;
}

}  // namespace wb
