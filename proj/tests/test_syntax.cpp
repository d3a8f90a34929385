#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gen.hpp"
#include "wb/canonical.hpp"
#include "wb/sequent.hpp"

using namespace wb;

TEST_CASE("grammar cases") {
  FormulaPtr f = parse_formula("p -> p", Lang::SI);
  CHECK(f->kind == FKind::Imp);
  CHECK(print(f) == "p -> p");

  FormulaPtr g = parse_formula("(p * s) * s", Lang::Prod);
  CHECK(g->kind == FKind::Prod);
  CHECK(g->left->kind == FKind::Prod);
  CHECK(print(g) == "(p * s) * s");

  // namespaces: nominal/conominal literals live outside si
  CHECK_THROWS_AS(parse_formula("j:i -> m:n", Lang::SI), ParseError);
  FormulaPtr h = parse_formula("j:i -> m:n", Lang::LCX);
  CHECK(h->left->kind == FKind::Nom);
  CHECK(h->right->kind == FKind::Conom);
  CHECK(print(h) == "j:i -> m:n");
}

TEST_CASE("precedence and parentheses") {
  // lattice binds tighter than product, product tighter than implications
  FormulaPtr f = parse_formula("p & q * r -> s");
  CHECK(f->kind == FKind::Imp);
  CHECK(f->left->kind == FKind::Prod);
  CHECK(f->left->left->kind == FKind::And);
  CHECK(print(parse_formula(print(f))) == print(f));

  CHECK(print(parse_formula("p -> (q -> r)")) == "p -> (q -> r)");
  // left association at equal precedence
  CHECK(print(parse_formula("p -> q -> r")) == "(p -> q) -> r");
  CHECK(print(parse_formula("p * q * r")) == "(p * q) * r");
}

TEST_CASE("language classification") {
  CHECK(lang_of(parse_formula("p -> q & r")) == Lang::SI);
  CHECK(lang_of(parse_formula("p * q")) == Lang::Prod);
  CHECK(lang_of(parse_formula("(p * q) -> r")) == Lang::LC);
  CHECK(lang_of(parse_formula("j:i * q")) == Lang::LCX);
  CHECK_THROWS_AS(parse_formula("p * q", Lang::SI), ParseError);
}

TEST_CASE("substitution") {
  FormulaPtr f = parse_formula("p -> q");
  CHECK(print(substitute(f, {{"p", f_top()}})) == "top -> q");
  FormulaPtr g = parse_formula("p & p");
  CHECK(print(substitute(g, {{"p", parse_formula("q | r")}})) == "(q | r) & (q | r)");
  FormulaPtr h = parse_formula("q");
  CHECK(print(substitute(h, {{"p", f_bot()}})) == "q");
  // simultaneous replacement does not cascade
  FormulaPtr k = parse_formula("p * q");
  CHECK(print(substitute(k, {{"p", f_var("q")}, {"q", f_var("p")}})) == "q * p");
}

TEST_CASE("polarity") {
  CHECK(polarity(parse_formula("p -> q"), "p") == Polarity::Negative);
  CHECK(polarity(parse_formula("p -> q"), "q") == Polarity::Positive);
  CHECK(polarity(parse_formula("(p -> q) -> r"), "p") == Polarity::Positive);
  CHECK(polarity(parse_formula("(p -> q) -> r"), "q") == Polarity::Negative);
  CHECK(polarity(parse_formula("p & (p -> q)"), "p") == Polarity::Both);
  CHECK(polarity(parse_formula("p -> q"), "r") == Polarity::Absent);
  // the second coordinate of <- is contravariant
  CHECK(polarity(parse_formula("p <- q"), "q") == Polarity::Negative);
}

TEST_CASE("tau") {
  CHECK(print(tau(parse_structure("p"))) == "p");
  CHECK(print(tau(parse_structure("p o (q ^ r)"))) == "p * (q & r)");
  // no lattice simplification
  CHECK(print(tau(parse_structure("p ^ p"))) == "p & p");
  CHECK_THROWS(tau(s_hole()));
}

TEST_CASE("structures and consecutions") {
  StructurePtr s = parse_structure("(p -> q) o (r ^ s)");
  CHECK(s->kind == SKind::SProd);
  CHECK(s->left->kind == SKind::Leaf);
  CHECK(print(s) == "(p -> q) o (r ^ s)");
  ConsecutionSequent seq = parse_consecution("p o q |- p * q");
  CHECK(print(seq) == "p o q |- p * q");
  CHECK_THROWS_AS(parse_consecution("j:i |- p"), ParseError);
  // structure leaves must be lc
  CHECK_THROWS_AS(s_leaf(f_nom("i")), LangError);
}

TEST_CASE("context fill") {
  Context ctx(parse_structure("p o ([-] ^ q)"));
  CHECK(print(ctx.fill(parse_structure("r o r"))) == "p o ((r o r) ^ q)");
  CHECK_THROWS(Context(parse_structure("p o q")));
  CHECK_THROWS(Context(s_meet(s_hole(), s_hole())));
}

TEST_CASE("quasi-inequality parsing and purity") {
  QuasiInequality q = parse_quasi("forall i j m n: i * j |- m ; j -> n |- m => i |- m");
  CHECK(q.antecedent.size() == 2);
  CHECK(is_pure(q));
  CHECK(print(q, true) == "i * j |- m ; j -> n |- m => i |- m");

  QuasiInequality plain = parse_quasi("top -> bot |- bot");
  CHECK(plain.antecedent.empty());
  CHECK(is_pure(plain));

  QuasiInequality mixed = parse_quasi("forall i: i |- p => i |- q");
  CHECK_FALSE(is_pure(mixed));
}

TEST_CASE("canonical renaming is invariant under renaming") {
  QuasiInequality a = parse_quasi("forall i j m n: i * j |- m ; j -> n |- m => i |- m");
  QuasiInequality b = parse_quasi("forall i j m n: j * i |- m ; i -> n |- m => j |- m");
  CHECK(canonical_print(a) == canonical_print(b));
  QuasiInequality c = parse_quasi("forall i j: j * i |- j");
  CHECK(canonical_print(c) == "forall i j: i * j |- i");
}

TEST_CASE("canonical propositional renaming") {
  Inequality s = parse_inequality("q * p |- p");
  CHECK(print(canonical_prop_vars(s)) == "p * q |- q");
}

TEST_CASE("round trip on random formulas") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 500; ++i) {
    FormulaPtr f = wbtest::random_formula(rng, 1 + int(rng() % 12), Lang::LCX);
    CAPTURE(print(f));
    CHECK(equal(parse_formula(print(f)), f));
  }
  for (int i = 0; i < 200; ++i) {
    StructurePtr s = wbtest::random_structure(rng, 1 + int(rng() % 5), 4, Lang::LC);
    CAPTURE(print(s));
    CHECK(equal(parse_structure(print(s)), s));
  }
}

TEST_CASE("tau is a homomorphism on random structures") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    StructurePtr a = wbtest::random_structure(rng, 1 + int(rng() % 4), 3, Lang::LC);
    StructurePtr b = wbtest::random_structure(rng, 1 + int(rng() % 4), 3, Lang::LC);
    CHECK(equal(tau(s_prod(a, b)), f_prod(tau(a), tau(b))));
    CHECK(equal(tau(s_meet(a, b)), f_and(tau(a), tau(b))));
  }
}
