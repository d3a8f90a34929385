#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "wb/alba.hpp"
#include "wb/axioms.hpp"
#include "wb/canonical.hpp"
#include "wb/sweep.hpp"

using namespace wb;

namespace {

// Example 3's table, transcribed row by row.
const std::map<std::string, std::string> kReferenceRows = {
    {"I", "forall i j: j * i |- j"},
    {"Tr", "forall i j: j * i |- (j * i) * i"},
    {"MP", "forall i: i |- i * i"},
    {"W", "forall i j: i * j |- j"},
    {"RT", "forall i j k: i * (j * k) |- i * k"},
    {"B", "forall i j k: i * (j * k) |- (i * j) * k"},
    {"B'", "forall i j k: i * (j * k) |- (i * k) * j"},
    {"C", "forall i j k: i * (j * k) |- j * (i * k)"},
    {"Fr", "forall i j k: i * (j * k) |- (i * j) * (i * k)"},
    {"W'", "forall i j: j * i |- j * (j * i)"},
    {"Sym", "forall i j m n: j * i |- m ; i -> n |- m => j |- m"},
    {"Euc", "forall i j m n0 n1: j * i |- n0 ; i -> n1 |- m ; j -> n0 |- m => top |- m"},
    {"D", "top -> bot |- bot"},
};

QuasiInequality alba_output(const std::string& name) {
  AlbaResult res = run_alba(axiom(name));
  REQUIRE(res.success);
  REQUIRE(res.runs.size() == 1);
  return res.runs[0].result;
}

}  // namespace

TEST_CASE("preprocess") {
  // no rule fires: q is one-sided, p is both-signed
  auto pre = preprocess(parse_inequality("q |- p -> p", Lang::SI));
  REQUIRE(pre.size() == 1);
  CHECK(print(pre[0]) == "q |- p -> p");

  // splitting
  auto split = preprocess(parse_inequality("p | q |- r", Lang::SI));
  REQUIRE(split.size() == 2);
  CHECK(print(split[0]) == "p |- r");
  CHECK(print(split[1]) == "q |- r");

  // distribution above the implications, then splitting
  auto dist = preprocess(parse_inequality("p & (q | r) |- s", Lang::SI));
  REQUIRE(dist.size() == 2);
  CHECK(print(dist[0]) == "p & q |- s");
  CHECK(print(dist[1]) == "p & r |- s");

  // two-sided single-polarity variable gets eliminated
  auto elim = preprocess(parse_inequality("q & (p -> p) |- q -> r", Lang::SI));
  REQUIRE(elim.size() == 1);
  CHECK(print(elim[0]) == "top & (p -> p) |- top -> r");
}

TEST_CASE("first approximation") {
  AlbaState tr = first_approximation(parse_inequality("(p -> q) & (q -> r) |- p -> r", Lang::SI));
  REQUIRE(tr.inequalities.size() == 2);
  CHECK(print(tr.inequalities[0]) == "j:i0 |- (p -> q) & (q -> r)");
  CHECK(print(tr.inequalities[1]) == "p -> r |- m:m0");
  CHECK(print(tr.goal) == "j:i0 |- m:m0");

  AlbaState triv = first_approximation(parse_inequality("bot |- top", Lang::SI));
  REQUIRE(triv.inequalities.size() == 2);
  CHECK(print(triv.inequalities[0]) == "j:i0 |- bot");
  CHECK(print(triv.inequalities[1]) == "top |- m:m0");

  AlbaState mp = first_approximation(parse_inequality("p & (p -> q) |- q", Lang::SI));
  CHECK(print(mp.inequalities[0]) == "j:i0 |- p & (p -> q)");
  CHECK(print(mp.inequalities[1]) == "q |- m:m0");
}

TEST_CASE("named rule application") {
  AlbaState st = first_approximation(parse_inequality("q |- p -> q", Lang::SI));
  // residuation: i0 <= p -> q becomes p * i0 <= q ... on a state built by hand
  AlbaState manual;
  manual.goal = {f_nom("i0"), f_conom("m0")};
  manual.inequalities = {{f_nom("i"), parse_formula("p -> q", Lang::SI)}};
  manual.forbidden = {"p", "q", "i", "i0", "m0"};
  AlbaState after = apply_rule(manual, "residuation", 0);
  CHECK(print(after.inequalities[0]) == "p * j:i |- q");

  // approximation splits an implication under a conominal
  AlbaState ap;
  ap.goal = {f_nom("i0"), f_conom("m0")};
  ap.inequalities = {{parse_formula("p -> r", Lang::SI), f_conom("m")}};
  ap.forbidden = {"p", "r", "i0", "m0", "m"};
  AlbaState ap2 = apply_rule(ap, "approx-imp-left", 0);
  REQUIRE(ap2.inequalities.size() == 2);
  CHECK(print(ap2.inequalities[0]) == "j:i1 |- p");  // i0 is taken, the fresh nominal is i1
  CHECK(print(ap2.inequalities[1]) == "j:i1 -> r |- m:m");

  // ackermann elimination: { j <= p, p * i <= q } with p eliminated
  AlbaState ack;
  ack.goal = {f_nom("i0"), f_conom("m0")};
  ack.inequalities = {{f_nom("j"), f_var("p")}, {parse_formula("p * j:i", Lang::LCX), f_var("q")}};
  ack.forbidden = {"p", "q", "i", "j", "i0", "m0"};
  AlbaState acked = apply_rule(ack, "rar", 0, "p");
  REQUIRE(acked.inequalities.size() == 1);
  CHECK(print(acked.inequalities[0]) == "j:j * j:i |- q");

  // a second variable bound joins in: p := j | q
  AlbaState two;
  two.goal = {f_nom("i0"), f_conom("m0")};
  two.inequalities = {{f_nom("j"), f_var("p")}, {f_var("q"), f_var("p")}, {f_var("p"), f_conom("m")}};
  two.forbidden = {"p", "q", "j", "i0", "m0", "m"};
  AlbaState joined = apply_rule(two, "rar", 0, "p");
  REQUIRE(joined.inequalities.size() == 1);
  CHECK(print(joined.inequalities[0]) == "j:j | q |- m:m");

  // polarity violation: p occurs negatively on the left of a member
  AlbaState bad;
  bad.goal = {f_nom("i0"), f_conom("m0")};
  bad.inequalities = {{f_nom("j"), f_var("p")}, {parse_formula("p -> q", Lang::SI), f_conom("m")}};
  bad.forbidden = {"p", "q", "j", "i0", "m0", "m"};
  CHECK_THROWS_AS(apply_rule(bad, "rar", 0, "p"), AlbaError);

  // pattern mismatch
  CHECK_THROWS_AS(apply_rule(manual, "split-meet", 0), AlbaError);
  CHECK_THROWS_AS(apply_rule(manual, "no-such-rule", 0), AlbaError);
}

TEST_CASE("freshness is enforced") {
  AlbaState ap;
  ap.goal = {f_nom("i0"), f_conom("m0")};
  ap.inequalities = {{parse_formula("p -> r", Lang::SI), f_conom("m0")}};
  ap.forbidden = {"p", "r", "i0", "m0"};
  CHECK_THROWS_AS(apply_rule(ap, "approx-imp-left", 0, "i0"), AlbaError);
}

TEST_CASE("golden outputs match the reference table") {
  for (const auto& [name, row] : kReferenceRows) {
    CAPTURE(name);
    QuasiInequality expected = parse_quasi(row);
    CHECK(canonical_print(alba_output(name)) == canonical_print(expected));
  }
}

TEST_CASE("golden outputs, frozen canonical text") {
  CHECK(canonical_print(alba_output("I")) == "forall i j: i * j |- i");
  CHECK(canonical_print(alba_output("Tr")) == "forall i j: i * j |- (i * j) * j");
  CHECK(canonical_print(alba_output("MP")) == "forall i: i |- i * i");
  CHECK(canonical_print(alba_output("W")) == "forall i j: i * j |- j");
  CHECK(canonical_print(alba_output("RT")) == "forall i j k: i * (j * k) |- i * k");
  CHECK(canonical_print(alba_output("Sym")) == "forall i j m n: i * j |- m ; j -> n |- m => i |- m");
  CHECK(canonical_print(alba_output("D")) == "top -> bot |- bot");
}

TEST_CASE("purity of every output") {
  for (const auto& [name, row] : kReferenceRows) {
    AlbaResult res = run_alba(axiom(name));
    REQUIRE(res.success);
    for (const auto& run : res.runs) {
      CHECK(is_pure(run.raw));
      CHECK(is_pure(run.result));
    }
  }
}

TEST_CASE("normalization") {
  // discharging the implication bound reproduces the table row
  QuasiInequality q = parse_quasi("forall i j m: j -> ((j * i) * i) |- m => i |- m");
  CHECK(canonical_print(normalize_result(q)) == "forall i j: i * j |- (i * j) * j");

  // already-normal output is only renamed
  QuasiInequality sym = parse_quasi("forall i j m n: j * i |- m ; i -> n |- m => j |- m");
  CHECK(canonical_print(normalize_result(sym)) == canonical_print(sym));

  // canonical renaming by example
  QuasiInequality named = parse_quasi("j:j2 * j:j7 |- j:j2");
  CHECK(canonical_print(normalize_result(named)) == "forall i j: i * j |- i");
}

TEST_CASE("the provability axiom gets stuck") {
  AlbaResult res = run_alba(parse_inequality("(q -> p) -> p |- q -> p", Lang::SI));
  CHECK_FALSE(res.success);
  REQUIRE(res.stuck.has_value());
  CHECK_FALSE(res.stuck->inequalities.empty());
}

TEST_CASE("no nominal or conominal is introduced twice in a trace") {
  for (const auto& [name, row] : kReferenceRows) {
    AlbaResult res = run_alba(axiom(name));
    REQUIRE(res.success);
    for (const auto& run : res.runs) {
      std::set<std::string> seen;
      std::vector<Inequality> prev;
      for (const auto& step : run.trace) {
        std::set<std::string> now;
        for (const auto& s : step.inequalities) {
          for (const auto& a : atom_names(s.lhs, FKind::Nom)) now.insert("j:" + a);
          for (const auto& a : atom_names(s.rhs, FKind::Nom)) now.insert("j:" + a);
          for (const auto& a : atom_names(s.lhs, FKind::Conom)) now.insert("m:" + a);
          for (const auto& a : atom_names(s.rhs, FKind::Conom)) now.insert("m:" + a);
        }
        // a name that enters the system now must never have been seen before
        std::set<std::string> prev_names = seen;
        for (const auto& n : now)
          if (!prev_names.count(n)) {
            CHECK(!seen.count(n));
            seen.insert(n);
          }
      }
    }
  }
}

TEST_CASE("every rewriting step preserves frame validity") {
  std::vector<BinaryFrame> frames;
  for (int n = 1; n <= 3; ++n)
    for (const auto& f : enumerate_binary(n)) frames.push_back(f);
  for (const auto& [name, row] : kReferenceRows) {
    CAPTURE(name);
    AlbaResult res = run_alba(axiom(name));
    REQUIRE(res.success);
    for (const auto& run : res.runs) {
      for (size_t i = 1; i < run.trace.size(); ++i) {
        const AlbaStep& before = run.trace[i - 1];
        const AlbaStep& after = run.trace[i];
        CAPTURE(after.rule);
        long bad = count_system_violations(before.inequalities, before.goal, after.inequalities, after.goal,
                                           frames);
        CHECK(bad == 0);
      }
    }
  }
}
