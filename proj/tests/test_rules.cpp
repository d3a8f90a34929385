#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gen.hpp"
#include "wb/algebra.hpp"
#include "wb/axioms.hpp"
#include "wb/structural_rules.hpp"

using namespace wb;

TEST_CASE("goodness") {
  CHECK(is_good(parse_inequality("p * s |- (p * s) * s", Lang::Prod)));
  CHECK_FALSE(is_good(parse_inequality("(p * s) * s |- p * s", Lang::Prod)));
  CHECK(is_good(parse_inequality("p |- p * p", Lang::Prod)));
  CHECK_THROWS_AS(is_good(parse_inequality("p -> q |- p", Lang::LC)), LangError);
}

TEST_CASE("subformula preservation") {
  CHECK(preserves_subformula(parse_inequality("p * s |- (p * s) * s", Lang::Prod)));
  CHECK_FALSE(preserves_subformula(parse_inequality("p |- p * q", Lang::Prod)));
  CHECK(preserves_subformula(*product_correspondent("Fr")));
  for (const auto& info : axiom_table()) {
    if (info.product.empty()) continue;
    CAPTURE(info.name);
    CHECK(is_good(parse_inequality(info.product, Lang::Prod)));
    CHECK(preserves_subformula(parse_inequality(info.product, Lang::Prod)));
  }
}

TEST_CASE("synthesized rules rewrite contexts") {
  // transitivity: conclusion L o D rewrites to premise (L o D) o D
  StructuralRule tr = synthesize_rule("tr", product_sequent("tr"));
  StructurePtr lam = parse_structure("a"), del = parse_structure("b ^ c");
  StructurePtr conclusion_part = s_prod(lam, del);
  std::map<std::string, StructurePtr> binding;
  REQUIRE(match_pattern(tr.conclusion_pattern(), conclusion_part, binding));
  StructurePtr premise_part = instantiate_pattern(tr.premise_pattern(), binding);
  CHECK(print(premise_part) == "(a o (b ^ c)) o (b ^ c)");

  // weakening: premise D, conclusion D o S
  StructuralRule wl = synthesize_rule("wl", product_sequent("wl"));
  binding.clear();
  REQUIRE(match_pattern(wl.conclusion_pattern(), parse_structure("x o y"), binding));
  CHECK(print(instantiate_pattern(wl.premise_pattern(), binding)) == "x");

  // contraction: premise D o D, conclusion D
  StructuralRule ct = synthesize_rule("ct", product_sequent("ct"));
  binding.clear();
  REQUIRE(match_pattern(ct.conclusion_pattern(), parse_structure("x ^ y"), binding));
  CHECK(print(instantiate_pattern(ct.premise_pattern(), binding)) == "(x ^ y) o (x ^ y)");
}

TEST_CASE("repeated metavariables need structurally equal parts") {
  Inequality nonlinear = parse_inequality("(p * s) * s |- p * s", Lang::Prod);
  StructuralRule r = synthesize_rule("untr", nonlinear);
  std::map<std::string, StructurePtr> binding;
  CHECK(match_pattern(r.conclusion_pattern(), parse_structure("(a o b) o b"), binding));
  binding.clear();
  CHECK_FALSE(match_pattern(r.conclusion_pattern(), parse_structure("(a o b) o c"), binding));
}

TEST_CASE("json round trip") {
  std::vector<StructuralRule> rules = {synthesize_rule("tr", product_sequent("tr")),
                                       synthesize_rule("wl", product_sequent("wl"))};
  std::vector<StructuralRule> back = rules_from_json(rules_to_json(rules));
  REQUIRE(back.size() == 2);
  CHECK(back[0].name == "tr");
  CHECK(equal(back[0].sigma, rules[0].sigma));
}

TEST_CASE("rule instances preserve validity downward on validating algebras") {
  std::mt19937_64 rng(23);
  for (const auto& info : axiom_table()) {
    if (info.product.empty()) continue;
    Inequality sigma = parse_inequality(info.product, Lang::Prod);
    if (!is_good(sigma)) continue;
    StructuralRule rule = synthesize_rule(info.product_name, sigma);
    std::vector<std::string> vars = prop_vars(sigma.lhs);

    for (int round = 0; round < 12; ++round) {
      // random instantiation of the metavariables and a random context
      std::map<std::string, StructurePtr> binding;
      for (const auto& v : vars) binding[v] = wbtest::random_structure(rng, 1 + int(rng() % 2), 2, Lang::LC);
      StructurePtr conclusion_part = instantiate_pattern(rule.conclusion_pattern(), binding);
      StructurePtr premise_part = instantiate_pattern(rule.premise_pattern(), binding);
      StructurePtr g = rng() % 2 ? s_prod(s_hole(), s_leaf(f_var("z"))) : s_hole();
      FormulaPtr phi = wbtest::random_formula(rng, 2, Lang::LC);
      Inequality premise{tau(fill_holes(g, premise_part)), phi};
      Inequality conclusion{tau(fill_holes(g, conclusion_part)), phi};

      for (const auto& alg : catalog()) {
        if (!validate(alg, sigma)) continue;
        if (validate(alg, premise)) {
          CAPTURE(info.name);
          CAPTURE(print(premise));
          CAPTURE(print(conclusion));
          CHECK(validate(alg, conclusion));
        }
      }
    }
  }
}
