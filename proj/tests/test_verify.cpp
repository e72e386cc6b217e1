#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "sublat/report.hpp"
#include "sublat/verify.hpp"

using namespace sublat;

namespace {

struct Prepared {
  std::string name;
  std::unique_ptr<GroupTable> table_ptr;  // stable address for the lattice
  ClassedLattice lattice;
  const GroupTable& table() const { return *table_ptr; }
};

Prepared prep(const std::string& id) {
  Prepared p;
  p.name = id;
  p.table_ptr = std::make_unique<GroupTable>(build(parse_recipe_id(id)));
  p.lattice = all_subgroups(*p.table_ptr);
  return p;
}

}  // namespace

TEST_CASE("lemma1 checker") {
  {
    Prepared p = prep("cyclic_5");
    auto r = check_lemma1(p.name, p.table(), p.lattice);
    CHECK(r.outcome == VerdictReport::Outcome::NotApplicable);
    CHECK(r.instances == 0);
  }
  {
    Prepared p = prep("cyclic_1");
    CHECK(check_lemma1(p.name, p.table(), p.lattice).outcome ==
          VerdictReport::Outcome::NotApplicable);
  }
  for (const char* id : {"symmetric_4", "affine_9", "alternating_5", "quaternion8"}) {
    Prepared p = prep(id);
    auto r = check_lemma1(p.name, p.table(), p.lattice);
    CHECK(r.outcome == VerdictReport::Outcome::Pass);
    CHECK(r.instances > 0);
  }
}

TEST_CASE("lemma2 checker") {
  {
    Prepared p = prep("dihedral_8");
    auto r = check_lemma2(p.name, p.table(), p.lattice);
    CHECK(r.outcome == VerdictReport::Outcome::Pass);
    CHECK(r.instances > 0);  // prime-prime chains plus the supersoluble clause
  }
  {
    Prepared p = prep("symmetric_4");
    auto r = check_lemma2(p.name, p.table(), p.lattice);
    CHECK(r.outcome == VerdictReport::Outcome::Pass);
  }
  {
    // no prime-index maximal subgroups and not supersoluble: vacuous
    Prepared p = prep("psl2_8");
    auto r = check_lemma2(p.name, p.table(), p.lattice);
    CHECK(r.outcome == VerdictReport::Outcome::NotApplicable);
  }
}

TEST_CASE("lemma3 checker") {
  {
    Prepared p = prep("symmetric_4");
    auto r2 = check_lemma3(p.name, p.table(), p.lattice, 2);
    CHECK(r2.outcome == VerdictReport::Outcome::Pass);
    auto r3 = check_lemma3(p.name, p.table(), p.lattice, 3);
    CHECK(r3.outcome == VerdictReport::Outcome::Pass);
  }
  {
    Prepared p = prep("symmetric_3");
    auto r = check_lemma3(p.name, p.table(), p.lattice, 3);
    CHECK(r.outcome == VerdictReport::Outcome::Pass);
    CHECK(r.instances == 1);
  }
  {
    Prepared p = prep("psl2_8");
    for (int prime : {2, 3, 7})
      CHECK(check_lemma3(p.name, p.table(), p.lattice, prime).outcome ==
            VerdictReport::Outcome::NotApplicable);
  }
}

TEST_CASE("theorem1 checker finds instances in S4 and psl2(8)") {
  {
    Prepared p = prep("symmetric_4");
    auto r = check_theorem1(p.name, p.table(), p.lattice);
    CHECK(r.outcome == VerdictReport::Outcome::Pass);
    CHECK(r.instances >= 2);  // K=<(1,2)> with two covering S3s and H=D8
  }
  {
    Prepared p = prep("psl2_8");
    auto r = check_theorem1(p.name, p.table(), p.lattice);
    CHECK(r.outcome == VerdictReport::Outcome::Pass);
    CHECK(r.instances > 0);
  }
  {
    // every 2-maximal subgroup is strictly 2-maximal here, so no triples
    Prepared p = prep("affine_9");
    auto r = check_theorem1(p.name, p.table(), p.lattice);
    CHECK(r.outcome == VerdictReport::Outcome::NotApplicable);
  }
}

TEST_CASE("theorem1 checker in interval scope") {
  GroupTable t = build(parse_recipe_id("psl2_8"));
  int e = first_element_of_order(t, 2);
  ClassedLattice inter = overgroups(t, closure(t, {e}));
  auto r = check_theorem1("psl2_8", t, inter);
  CHECK(r.outcome == VerdictReport::Outcome::Pass);
  CHECK(r.instances > 0);
}

TEST_CASE("corollary checkers") {
  {
    Prepared p = prep("alternating_4");
    auto rs = check_corollaries(p.name, p.table(), p.lattice);
    REQUIRE(rs.size() == 4);
    CHECK(rs[0].checker == "corollary1.1");
    CHECK(rs[0].outcome == VerdictReport::Outcome::Pass);
    // 1.4 fires here: K = 1 is subnormal, maximal in C3, not maximal in V4
    CHECK(rs[3].checker == "corollary1.4");
    CHECK(rs[3].outcome == VerdictReport::Outcome::Pass);
    CHECK(rs[3].instances >= 1);
  }
  {
    Prepared p = prep("symmetric_4");
    auto rs = check_corollaries(p.name, p.table(), p.lattice);
    CHECK(rs[0].outcome == VerdictReport::Outcome::Pass);
    CHECK(rs[1].outcome == VerdictReport::Outcome::Pass);
    CHECK(rs[1].instances == 1);  // only the transposition class is non-strict
    CHECK(rs[2].outcome == VerdictReport::Outcome::Pass);
  }
  {
    // insoluble: 1.2 does not apply; no normal maximal subgroups for 1.1
    Prepared p = prep("alternating_6");
    auto rs = check_corollaries(p.name, p.table(), p.lattice);
    CHECK(rs[0].outcome == VerdictReport::Outcome::NotApplicable);
    CHECK(rs[1].outcome == VerdictReport::Outcome::NotApplicable);
  }
}

TEST_CASE("corpus runner") {
  std::vector<CorpusEntry> corpus;
  for (const char* id : {"cyclic_6", "symmetric_4", "alternating_4", "quaternion8"})
    corpus.push_back({id, parse_recipe_id(id), false, 2});

  auto reports = run_corpus(corpus);
  CHECK(!reports.empty());
  CHECK(!any_failures(reports));

  // deterministic: a second run serializes identically
  auto again = run_corpus(corpus);
  CHECK(reports_to_json(reports) == reports_to_json(again));

  CHECK(run_corpus({}).empty());
}

TEST_CASE("per-group errors become reports instead of aborting") {
  Limits limits;
  limits.lattice_budget = 100;
  std::vector<CorpusEntry> corpus{{"psl2_8", parse_recipe_id("psl2_8"), false, 2},
                                  {"cyclic_6", parse_recipe_id("cyclic_6"), false, 2}};
  auto reports = run_corpus(corpus, limits);
  REQUIRE(!reports.empty());
  CHECK(reports.front().checker == "build");
  CHECK(reports.front().outcome == VerdictReport::Outcome::Fail);
  // the in-budget group still ran
  bool saw_cyclic = false;
  for (const auto& r : reports) saw_cyclic |= r.group == "cyclic_6";
  CHECK(saw_cyclic);
}

TEST_CASE("prime-order corpus groups are vacuous") {
  std::vector<CorpusEntry> corpus{{"cyclic_7", parse_recipe_id("cyclic_7"), false, 2}};
  for (const auto& r : run_corpus(corpus))
    CHECK(r.outcome != VerdictReport::Outcome::Fail);
}

TEST_CASE("default corpus shape") {
  auto corpus = default_corpus();
  CHECK(corpus.size() > 70);
  bool has_interval = false;
  for (const auto& e : corpus)
    if (e.name == "psl2_27") has_interval = e.interval_only;
  CHECK(has_interval);
}
