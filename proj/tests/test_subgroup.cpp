#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sublat/error.hpp"
#include "sublat/recipes.hpp"
#include "sublat/subgroup.hpp"

using namespace sublat;

namespace {

GroupTable make_s4() { return symmetric_group(4); }

SubgroupSet by_cycles(const GroupTable& t, const std::vector<std::string>& gens) {
  std::vector<int> seed;
  for (const auto& s : gens) {
    int idx = t.index_of(parse_cycles(s, t.degree()));
    REQUIRE(idx >= 0);
    seed.push_back(idx);
  }
  return closure(t, seed);
}

}  // namespace

TEST_CASE("closure and join basics") {
  GroupTable s3 = symmetric_group(3);
  SubgroupSet a = by_cycles(s3, {"(1,2)"});
  SubgroupSet b = by_cycles(s3, {"(2,3)"});
  CHECK(a.order == 2);
  CHECK(join(s3, a, a) == a);
  CHECK(join(s3, trivial_subgroup(s3), a) == a);
  CHECK(join(s3, a, b).order == 6);  // two transpositions generate S3
}

TEST_CASE("meet is the intersection") {
  GroupTable s4 = make_s4();
  SubgroupSet s3 = by_cycles(s4, {"(1,2)", "(1,2,3)"});
  SubgroupSet d8 = by_cycles(s4, {"(1,2)", "(3,4)", "(1,3)(2,4)"});
  CHECK(s3.order == 6);
  CHECK(d8.order == 8);
  SubgroupSet m = meet(s3, d8);
  CHECK(m.order == 2);
  CHECK(m == by_cycles(s4, {"(1,2)"}));
  CHECK(meet(s3, full_subgroup(s4)) == s3);
}

TEST_CASE("product sets") {
  GroupTable s4 = make_s4();
  SubgroupSet v4 = by_cycles(s4, {"(1,2)(3,4)", "(1,3)(2,4)"});
  SubgroupSet c2 = by_cycles(s4, {"(1,2)"});
  ProductSet ps = product_set(s4, v4, c2);
  CHECK(ps.size == 8);
  CHECK(ps.is_subgroup);  // V4 is normal
  // product of two point stabilizers is not closed
  SubgroupSet s3a = by_cycles(s4, {"(1,2)", "(1,2,3)"});
  SubgroupSet s3b = by_cycles(s4, {"(1,2)", "(1,2,4)"});
  ProductSet ps2 = product_set(s4, s3a, s3b);
  CHECK(ps2.size == 18);
  CHECK(!ps2.is_subgroup);
}

TEST_CASE("cores against brute-force conjugate intersection") {
  GroupTable s4 = make_s4();
  auto brute_core = [&](const SubgroupSet& h) {
    Mask m = h.bits;
    for (int g = 0; g < s4.order(); ++g) m = mask_and(m, conjugate_subgroup(s4, h, g).bits);
    return subgroup_from_mask(m);
  };
  SubgroupSet a4 = by_cycles(s4, {"(1,2,3)", "(1,2)(3,4)"});
  SubgroupSet s3 = by_cycles(s4, {"(1,2)", "(1,2,3)"});
  SubgroupSet d8 = by_cycles(s4, {"(1,2)", "(3,4)", "(1,3)(2,4)"});
  CHECK(a4.order == 12);
  CHECK(core(s4, a4) == a4);
  CHECK(core(s4, s3).order == 1);
  CHECK(core(s4, d8).order == 4);
  for (const SubgroupSet& h : {a4, s3, d8}) CHECK(core(s4, h) == brute_core(h));
}

TEST_CASE("normalizer and centralizer") {
  GroupTable s3 = symmetric_group(3);
  SubgroupSet c3 = by_cycles(s3, {"(1,2,3)"});
  CHECK(normalizer(s3, c3).order == 6);  // normal Sylow

  GroupTable s4 = make_s4();
  int r = s4.index_of(parse_cycles("(1,2,3)", 4));
  CHECK(centralizer(s4, {r}).order == 3);
  CHECK(normalizer(s4, full_subgroup(s4)).order == 24);
  // H is always normal in its normalizer
  SubgroupSet c2 = by_cycles(s4, {"(1,2)"});
  SubgroupSet n = normalizer(s4, c2);
  for (int g : elements_of(n))
    CHECK(conjugate_subgroup(s4, c2, g) == c2);
}

TEST_CASE("quotients") {
  GroupTable s4 = make_s4();
  SubgroupSet v4 = by_cycles(s4, {"(1,2)(3,4)", "(1,3)(2,4)"});
  Quotient q = quotient(s4, v4);
  CHECK(q.table.order() == 6);
  bool abelian = true;
  for (int a = 0; a < 6 && abelian; ++a)
    for (int b = 0; b < 6; ++b)
      if (q.table.product(a, b) != q.table.product(b, a)) {
        abelian = false;
        break;
      }
  CHECK(!abelian);  // S4/V4 is S3

  // projection is a homomorphism
  for (int a = 0; a < s4.order(); a += 5)
    for (int b = 0; b < s4.order(); b += 7)
      CHECK(q.projection[s4.product(a, b)] == q.table.product(q.projection[a], q.projection[b]));

  CHECK(quotient(s4, full_subgroup(s4)).table.order() == 1);
  CHECK(quotient(s4, trivial_subgroup(s4)).table.order() == 24);

  SubgroupSet s3 = by_cycles(s4, {"(1,2)", "(1,2,3)"});
  CHECK_THROWS_AS(quotient(s4, s3), Error);  // not normal
}

TEST_CASE("small canonical generating sets regenerate the subgroup") {
  GroupTable s4 = make_s4();
  for (const auto& gens : {std::vector<std::string>{"(1,2)", "(1,2,3)"},
                           std::vector<std::string>{"(1,2)(3,4)", "(1,3)(2,4)"},
                           std::vector<std::string>{"(1,2,3,4)"}}) {
    SubgroupSet h = by_cycles(s4, gens);
    CHECK(closure(s4, small_generators(s4, h)) == h);
  }
}

TEST_CASE("normal closure") {
  GroupTable s4 = make_s4();
  int t12 = s4.index_of(parse_cycles("(1,2)", 4));
  CHECK(normal_closure(s4, {t12}, s4.generators()).order == 24);
  int dbl = s4.index_of(parse_cycles("(1,2)(3,4)", 4));
  CHECK(normal_closure(s4, {dbl}, s4.generators()).order == 4);
  int r3 = s4.index_of(parse_cycles("(1,2,3)", 4));
  CHECK(normal_closure(s4, {r3}, s4.generators()).order == 12);
}

TEST_CASE("is_closed detects non-subgroups") {
  GroupTable s4 = make_s4();
  SubgroupSet bad;
  bad.bits.assign(mask_words(s4.order()), 0);
  mask_set(bad.bits, 0);
  mask_set(bad.bits, s4.index_of(parse_cycles("(1,2,3,4)", 4)));
  bad.order = 2;
  CHECK(!is_closed(s4, bad));
  CHECK(is_closed(s4, by_cycles(s4, {"(1,2)"})));
}

TEST_CASE("first element of order") {
  GroupTable s4 = make_s4();
  int e = first_element_of_order(s4, 4);
  REQUIRE(e >= 0);
  CHECK(s4.element_order(e) == 4);
  CHECK(first_element_of_order(s4, 5) == -1);
}
