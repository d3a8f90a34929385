#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wb/algebra.hpp"
#include "wb/axioms.hpp"

using namespace wb;

namespace {

const FiniteBDRG& by_name(const std::string& name) {
  for (const auto& a : catalog())
    if (a.name() == name) return a;
  REQUIRE(false);
  throw 0;
}

}  // namespace

TEST_CASE("catalog passes construction checks and has enough entries") {
  CHECK(catalog().size() >= 5);
  for (const auto& a : catalog()) {
    CAPTURE(a.name());
    CHECK(a.size() >= 1);
    CHECK(a.le(a.bot(), a.top()));
  }
}

TEST_CASE("one-element algebra validates everything") {
  const FiniteBDRG& one = by_name("one");
  for (const auto& info : axiom_table()) CHECK(validate(one, axiom(info.name)));
}

TEST_CASE("two-chain with classical implication") {
  const FiniteBDRG& alg = by_name("chain2-heyting");
  CHECK(validate(alg, axiom("MP")));
  CHECK(validate(alg, axiom("I")));
  CHECK(validate(alg, axiom("W")));
}

TEST_CASE("two-chain with constant-bottom product refutes modus ponens") {
  const FiniteBDRG& alg = by_name("chain2-zero");
  // residuation forces a constantly-top implication
  CHECK(alg.imp(1, 0) == 1);
  CHECK_FALSE(validate(alg, axiom("MP")));
  CHECK(validate(alg, axiom("I")));
}

TEST_CASE("catalog separates axiom classes") {
  // weakening holds on the three-chain but transitivity-as-product fails
  const FiniteBDRG& luk = by_name("chain3-lukasiewicz");
  CHECK(validate(luk, product_sequent("wl")));
  CHECK_FALSE(validate(luk, product_sequent("tr")));
  CHECK_FALSE(validate(luk, product_sequent("ct")));

  // the left-action square is noncommutative: exchange fails, contraction holds
  const FiniteBDRG& sq = by_name("square-left-action");
  CHECK(sq.prod(1, 2) != sq.prod(2, 1));
  CHECK_FALSE(validate(sq, product_sequent("c")));
  CHECK(validate(sq, product_sequent("ct")));
  CHECK(validate(sq, product_sequent("wl")));
}

TEST_CASE("lattice laws are actually verified") {
  // a three-element "order" with a cycle must be rejected
  std::vector<uint8_t> bad_le = {1, 1, 0, 0, 1, 1, 1, 0, 1};
  CHECK_THROWS_AS(FiniteBDRG::build("cyclic", 3, bad_le, std::vector<uint8_t>(9, 0)),
                  AlgebraError);
  // a product with no residual must be rejected: on the 2-chain let 0*1 = 1
  std::vector<uint8_t> le2 = {1, 1, 0, 1};
  CHECK_THROWS_AS(FiniteBDRG::build("nores", 2, le2, {0, 1, 1, 1}), AlgebraError);
}

TEST_CASE("validate enumerates assignments exhaustively") {
  const FiniteBDRG& alg = by_name("chain2-heyting");
  CHECK(validate(alg, parse_inequality("p |- p")));
  CHECK_FALSE(validate(alg, parse_inequality("p |- q")));
  CHECK(validate(alg, parse_inequality("p & q |- q | r")));
  CHECK_THROWS_AS(validate(alg, parse_inequality("p |- q"), 1), BudgetError);
}

TEST_CASE("json round trip") {
  const FiniteBDRG& alg = by_name("square-left-action");
  FiniteBDRG back = algebra_from_json(algebra_to_json(alg));
  CHECK(back.size() == alg.size());
  for (int a = 0; a < alg.size(); ++a)
    for (int b = 0; b < alg.size(); ++b) {
      CHECK(back.prod(a, b) == alg.prod(a, b));
      CHECK(back.imp(a, b) == alg.imp(a, b));
    }
}
