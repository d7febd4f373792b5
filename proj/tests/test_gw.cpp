#include "doctest.h"
#include "hurwitz/gw.hpp"

using namespace hurwitz;

TEST_CASE("table evaluation") {
  CHECK(gw_eval(0, {1, 1, 1}) == 1);
  CHECK(gw_eval(0, {2, 2, 2}) == 0);
  CHECK(gw_eval(1, {5}) == make_rat(11, 24));
  CHECK(gw_eval(1, {2}) == 0);
  // two odd entries: (sum of squares - 2)/4
  CHECK(gw_eval(0, {1, 1, 2, 2}) == 2);
  CHECK(gw_eval(0, {2, 2, 2, 2}) == 4);
  CHECK(gw_eval(1, {1, 1}) == 0);  // (2-6)(2-2)/384
  CHECK(gw_eval(1, {3, 1}) == make_rat(4 * 8, 384));
  CHECK(gw_eval(2, {5}) == make_rat(1, 192));
  SUBCASE("zero arguments are allowed for the relations") {
    CHECK(gw_eval(0, {0, 1, 1, 2}) == 1);
    CHECK(gw_eval(1, {0, 2}) == make_rat(-1, 24));
  }
  SUBCASE("vanishing off parity") {
    for (int g : {0, 1}) {
      // |mu| and n must agree mod 2 for a nonzero value
      if (g == 0) {
        CHECK(gw_eval(0, {1, 1, 2}) == 0);
        CHECK(gw_eval(0, {1, 2, 2, 2}) == 0);
      } else {
        CHECK(gw_eval(1, {4}) == 0);
        CHECK(gw_eval(1, {1, 2}) == 0);
      }
    }
  }
  CHECK_THROWS_AS(gw_eval(3, {1}), UnsupportedError);
  CHECK_THROWS_AS(gw_eval(0, {1, 1, 1, 1, 1}), UnsupportedError);
}

TEST_CASE("string-type relations") {
  CHECK(gw_relations_check(0, {1, 1, 2}, GwRelation::Zero) ==
        CheckStatus::True);
  CHECK(gw_relations_check(0, {1, 1, 1}, GwRelation::One) == CheckStatus::True);
  CHECK(gw_relations_check(1, {3}, GwRelation::One) == CheckStatus::True);
  SUBCASE("parity-inconsistent instances are skipped, not judged") {
    CHECK(gw_relations_check(0, {1, 1, 1}, GwRelation::Zero) ==
          CheckStatus::Skipped);
    CHECK(gw_relations_check(1, {3}, GwRelation::Zero) == CheckStatus::Skipped);
  }
  SUBCASE("pairs outside the table are unsupported") {
    CHECK_THROWS_AS(gw_relations_check(0, {1, 1, 1, 1}, GwRelation::Zero),
                    UnsupportedError);
    CHECK_THROWS_AS(gw_relations_check(2, {1}, GwRelation::One),
                    UnsupportedError);
  }
}

TEST_CASE("comparison with the cycle count") {
  CHECK(compare_N_P({2, 2, 1}).equal);
  CHECK(compare_N_P({2, 2, 1}).gw == 1);
  CHECK(compare_N_P({3, 3, 1}).equal);
  SUBCASE("fails exactly off the triangle region") {
    NPComparison c = compare_N_P({5, 1, 1});
    CHECK_FALSE(c.equal);
    CHECK(c.gw == 1);
    CHECK(c.cycle == 0);
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(compare_N_P({2, 2, 2}), DomainError);
    CHECK_THROWS_AS(compare_N_P({1, 1}), DomainError);
  }
}
