#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "wb/alba.hpp"
#include "wb/axioms.hpp"
#include "wb/sweep.hpp"

using namespace wb;

TEST_CASE("parallel kernels agree with the serial reference") {
  std::vector<BinaryFrame> frames = enumerate_binary(3);
  std::vector<TernaryFrame> tframes = enumerate_ternary(2);
  for (const std::string name : {"I", "MP", "W'", "Sym"}) {
    CAPTURE(name);
    AlbaResult res = run_alba(axiom(name));
    REQUIRE(res.success);
    const QuasiInequality& q = res.runs[0].result;
    AgreementReport s = agreement_sweep(name, q, frames, ExecMode::Serial);
    AgreementReport p = agreement_sweep(name, q, frames, ExecMode::Parallel);
    CHECK(s.frames == p.frames);
    CHECK(s.holds == p.holds);
    CHECK(s.disagreements == p.disagreements);
    AgreementReport st = agreement_sweep(name, q, tframes, ExecMode::Serial);
    AgreementReport pt = agreement_sweep(name, q, tframes, ExecMode::Parallel);
    CHECK(st.holds == pt.holds);
    CHECK(st.disagreements == pt.disagreements);
  }

  Inequality a = axiom("Tr");
  Inequality b = *product_correspondent("Tr");
  EquivalenceReport es = equivalence_sweep(a, b, frames, ExecMode::Serial);
  EquivalenceReport ep = equivalence_sweep(a, b, frames, ExecMode::Parallel);
  CHECK(es.mismatches == ep.mismatches);
  CHECK(es.algebras == ep.algebras);
}

TEST_CASE("budget cap aborts serial sweeps") {
  setenv("WORKBENCH_BUDGET_MS", "0", 1);
  CHECK(sweep_budget_ms() == 0);
  setenv("WORKBENCH_BUDGET_MS", "12345", 1);
  CHECK(sweep_budget_ms() == 12345);
  unsetenv("WORKBENCH_BUDGET_MS");
}
