#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sublat/error.hpp"
#include "sublat/group.hpp"
#include "sublat/recipes.hpp"

using namespace sublat;

namespace {

void check_table_invariants(const GroupTable& t) {
  for (int i = 0; i < t.order(); ++i) {
    CHECK(t.product(i, t.inverse(i)) == 0);
    CHECK(t.product(t.inverse(i), i) == 0);
    CHECK(t.product(i, 0) == i);
    CHECK(t.product(0, i) == i);
  }
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, t.order() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    int a = pick(rng), b = pick(rng), c = pick(rng);
    CHECK(t.product(t.product(a, b), c) == t.product(a, t.product(b, c)));
  }
}

}  // namespace

TEST_CASE("cyclic generator closure") {
  GroupTable t = generate_elements({parse_cycles("(1,2,3,4,5,6,7,8)", 8)});
  CHECK(t.order() == 8);
  CHECK(t.element(0) == Perm::identity(8));
  check_table_invariants(t);
}

TEST_CASE("two generators close to the symmetric group") {
  GroupTable t =
      generate_elements({parse_cycles("(1,2)", 4), parse_cycles("(1,2,3,4)", 4)});
  CHECK(t.order() == 24);
  check_table_invariants(t);
}

TEST_CASE("element orders") {
  GroupTable s4 =
      generate_elements({parse_cycles("(1,2)", 4), parse_cycles("(1,2,3,4)", 4)});
  CHECK(s4.element_order(0) == 1);
  int three_cycle = s4.index_of(parse_cycles("(1,2,3)", 4));
  REQUIRE(three_cycle >= 0);
  CHECK(s4.element_order(three_cycle) == 3);

  GroupTable c8 = generate_elements({parse_cycles("(1,2,3,4,5,6,7,8)", 8)});
  int g = c8.index_of(parse_cycles("(1,2,3,4,5,6,7,8)", 8));
  CHECK(c8.element_order(g) == 8);
}

TEST_CASE("closure order divides degree factorial and is divisible by generator orders") {
  GroupTable t = generate_elements({parse_cycles("(1,2,3)", 5), parse_cycles("(4,5)", 5)});
  long long fact = 1;
  for (int i = 2; i <= t.degree(); ++i) fact *= i;
  CHECK(fact % t.order() == 0);
  for (int g : t.generators()) CHECK(t.order() % t.element_order(g) == 0);
}

TEST_CASE("regeneration from the full element list is idempotent") {
  GroupTable t = generate_elements({parse_cycles("(1,2)", 4), parse_cycles("(1,2,3,4)", 4)});
  GroupTable again = generate_elements(t.elements());
  CHECK(again.order() == t.order());
}

TEST_CASE("element cap is enforced") {
  CHECK_THROWS_AS(
      generate_elements({parse_cycles("(1,2)", 7), parse_cycles("(1,2,3,4,5,6,7)", 7)}, 1000),
      BudgetError);
}

TEST_CASE("empty and mismatched generator lists are rejected") {
  CHECK_THROWS_AS(generate_elements({}), Error);
  CHECK_THROWS_AS(generate_elements({Perm::identity(3), Perm::identity(4)}), Error);
}

TEST_CASE("trivial group from the identity generator") {
  GroupTable t = generate_elements({Perm::identity(1)});
  CHECK(t.order() == 1);
  CHECK(t.product(0, 0) == 0);
}

TEST_CASE("products work above the full-table threshold") {
  GroupTable t = psl2(27);  // order 9828, on-demand products
  CHECK(t.order() == 9828);
  check_table_invariants(t);
  CHECK(t.index_of(t.element(100)) == 100);
}
