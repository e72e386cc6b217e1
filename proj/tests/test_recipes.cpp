#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "sublat/error.hpp"
#include "sublat/lattice.hpp"
#include "sublat/recipes.hpp"
#include "sublat/structure.hpp"
#include "sublat/subgroup.hpp"

using namespace sublat;

TEST_CASE("psl2 orders match q(q^2-1)/gcd(2,q-1)") {
  for (int q : {4, 5, 7, 8, 9, 11, 13, 17}) {
    GroupTable t = psl2(q);
    long long expected =
        static_cast<long long>(q) * (q - 1) * (q + 1) / (q % 2 == 0 ? 1 : 2);
    CHECK(t.order() == expected);
    CHECK(t.degree() == q + 1);
  }
}

TEST_CASE("psl2(8) has order 504 on 9 points") {
  GroupTable t = psl2(8);
  CHECK(t.order() == 504);
  CHECK(t.degree() == 9);
}

TEST_CASE("psl2(27) has order 9828 on 28 points") {
  GroupTable t = psl2(27);
  CHECK(t.order() == 9828);
  CHECK(t.degree() == 28);
}

TEST_CASE("psl2 acts 2-transitively") {
  for (int q : {4, 5, 7, 8, 9, 11, 13, 17}) {
    GroupTable t = psl2(q);
    const int deg = t.degree();
    std::vector<std::vector<char>> hit(deg, std::vector<char>(deg, 0));
    for (int e = 0; e < t.order(); ++e) {
      const Perm& p = t.element(e);
      hit[p(0)][p(1)] = 1;
    }
    for (int a = 0; a < deg; ++a)
      for (int b = 0; b < deg; ++b)
        if (a != b) CHECK(hit[a][b]);
  }
}

TEST_CASE("psl2 rejects unsupported q") {
  CHECK_THROWS_AS(psl2(6), ParseError);
  CHECK_THROWS_AS(psl2(19), ParseError);
}

TEST_CASE("affine groups") {
  CHECK(affine(2).order() == 2);
  CHECK(affine(5).order() == 20);
  GroupTable t = affine(9);
  CHECK(t.order() == 72);
  // abelianization has order 8: the derived subgroup is the translation part
  SubgroupSet d = derived_subgroup(t);
  CHECK(d.order == 9);
  CHECK(is_normal(t, d));
  // normal Sylow 3-subgroup: all nine 3-elements (plus identity) form it
  int three_elements = 0;
  for (int e = 0; e < t.order(); ++e) {
    int o = t.element_order(e);
    if (o == 1 || o == 3) ++three_elements;
  }
  CHECK(three_elements == 9);
}

TEST_CASE("affine rejects non-prime-powers") {
  CHECK_THROWS_AS(affine(6), ParseError);
  CHECK_THROWS_AS(affine(1000), ParseError);
}

TEST_CASE("affine groups have a regular normal elementary abelian subgroup") {
  for (int q : {4, 5, 7, 8, 9}) {
    GroupTable t = affine(q);
    ClassedLattice lat = all_subgroups(t);
    int p = prime_divisors(q)[0];
    bool found = false;
    for (std::size_t c = 0; c < lat.classes.size() && !found; ++c) {
      if (lat.classes[c].size() != 1) continue;  // must be normal
      int i = lat.classes[c].front();
      if (lat.order_of(i) != q) continue;
      bool elem_abelian = true;
      std::vector<char> moved(q, 0);
      for (int e : elements_of(lat.subgroups[i])) {
        if (e != 0 && t.element_order(e) != p) elem_abelian = false;
        moved[t.element(e)(0)] = 1;  // orbit of point 0
      }
      bool regular = std::count(moved.begin(), moved.end(), 1) == q;
      found = elem_abelian && regular && subgroup_is_abelian(t, lat.subgroups[i]);
    }
    CHECK(found);
  }
}

namespace {

using Mat = std::vector<int>;

Mat mat_mul3(const Mat& a, const Mat& b) {
  Mat c(4, 0);
  for (int i = 0; i < 2; ++i)
    for (int l = 0; l < 2; ++l)
      for (int j = 0; j < 2; ++j) c[i * 2 + j] = (c[i * 2 + j] + a[i * 2 + l] * b[l * 2 + j]) % 3;
  return c;
}

int mat_order3(const Mat& m) {
  const Mat id{1, 0, 0, 1};
  Mat acc = m;
  int n = 1;
  while (acc != id) {
    acc = mat_mul3(acc, m);
    ++n;
    REQUIRE(n <= 48);
  }
  return n;
}

}  // namespace

TEST_CASE("the quaternion generator matrices satisfy i^2 = j^2 = (ij)^2 of order 4") {
  const Mat i{0, 2, 1, 0};
  const Mat j{1, 1, 1, 2};
  const Mat minus_id{2, 0, 0, 2};
  CHECK(mat_mul3(i, i) == minus_id);
  CHECK(mat_mul3(j, j) == minus_id);
  Mat ij = mat_mul3(i, j);
  CHECK(mat_mul3(ij, ij) == minus_id);
  CHECK(mat_order3(i) == 4);
  CHECK(mat_order3(j) == 4);
}

TEST_CASE("matrix semidirect products") {
  GroupTable u32 = build(u3_2_recipe());
  CHECK(u32.order() == 72);

  GroupTable c2 = matrix_semidirect(2, 1, {});
  CHECK(c2.order() == 2);

  // alternative model with a single order-8 matrix (verified by squaring)
  const Mat m{0, 1, 1, 1};
  CHECK(mat_order3(m) == 8);
  GroupTable t = matrix_semidirect(3, 2, {m});
  CHECK(t.order() == 72);

  CHECK_THROWS_AS(matrix_semidirect(3, 2, {{1, 1, 1, 1}}), ParseError);  // singular
}

TEST_CASE("named families") {
  CHECK(alternating_group(6).order() == 360);
  CHECK(alternating_group(5).order() == 60);
  CHECK(dihedral_group(14).order() == 14);
  CHECK(dihedral_group(4).order() == 4);
  CHECK(cyclic_group(1).order() == 1);
  CHECK(symmetric_group(5).order() == 120);
  CHECK(elementary_abelian_group(3, 2).order() == 9);
  GroupTable q8 = quaternion8_group();
  CHECK(q8.order() == 8);
  int involutions = 0;
  for (int e = 0; e < 8; ++e)
    if (q8.element_order(e) == 2) ++involutions;
  CHECK(involutions == 1);
}

TEST_CASE("direct products") {
  GroupTable t = direct_product(cyclic_group(3), cyclic_group(3));
  CHECK(t.order() == 9);
  CHECK(is_abelian(t));
}

TEST_CASE("recipe identifiers") {
  CHECK(build(parse_recipe_id("psl2_8")).order() == 504);
  CHECK(build(parse_recipe_id("cyclic_12")).order() == 12);
  CHECK(build(parse_recipe_id("elementary_abelian_3_2")).order() == 9);
  CHECK(build(parse_recipe_id("quaternion8")).order() == 8);
  CHECK(build(parse_recipe_id("u3_2")).order() == 72);
  CHECK(build(parse_recipe_id("cyclic_3xcyclic_3")).order() == 9);
  CHECK_THROWS_AS(parse_recipe_id("nosuch_5"), ParseError);
  CHECK_THROWS_AS(parse_recipe_id("cyclic_"), ParseError);
  CHECK_THROWS_AS(parse_recipe_id("cyclic_a"), ParseError);
  CHECK_THROWS_AS(parse_recipe_id(""), ParseError);
}
