#include "sublat/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "sublat/error.hpp"
#include "sublat/structure.hpp"

namespace sublat {

const char* outcome_name(VerdictReport::Outcome o) {
  switch (o) {
    case VerdictReport::Outcome::Pass:
      return "pass";
    case VerdictReport::Outcome::Fail:
      return "fail";
    case VerdictReport::Outcome::NotApplicable:
      return "not_applicable";
  }
  return "?";
}

namespace {

constexpr std::size_t kMaxWitnesses = 25;

Witness chain_witness(const GroupTable& t, const ClassedLattice& lat,
                      const std::vector<int>& chain) {
  Witness w;
  for (int i : chain) {
    w.orders.push_back(lat.order_of(i));
    std::vector<std::string> gens;
    for (int e : lat.generator_sets[i]) gens.push_back(format_cycles(t.element(e)));
    if (gens.empty()) gens.push_back("()");
    w.generators.push_back(std::move(gens));
  }
  return w;
}

// Collects instances and failures for one checker run.
struct Check {
  Check(std::string checker, std::string group) {
    r.checker = std::move(checker);
    r.group = std::move(group);
  }
  void instance() { ++r.instances; }
  void expect(bool ok, const GroupTable& t, const ClassedLattice& lat,
              const std::vector<int>& chain) {
    if (!ok && r.witnesses.size() < kMaxWitnesses) r.witnesses.push_back(chain_witness(t, lat, chain));
    failed |= !ok;
  }
  VerdictReport done() {
    r.outcome = failed ? VerdictReport::Outcome::Fail
                       : (r.instances ? VerdictReport::Outcome::Pass
                                      : VerdictReport::Outcome::NotApplicable);
    return std::move(r);
  }
  VerdictReport r;
  bool failed = false;
};

// Per-run cache of subgroup cores, keyed by lattice index.
struct CoreCache {
  const GroupTable& t;
  const ClassedLattice& lat;
  std::map<int, SubgroupSet> cache;
  const SubgroupSet& of(int i) {
    auto it = cache.find(i);
    if (it == cache.end()) it = cache.emplace(i, core(t, lat.subgroups[i])).first;
    return it->second;
  }
};

// 2-maximal subgroup indices to quantify over: conjugacy-class
// representatives in full scope (every checked property is invariant under
// conjugation, so class representatives suffice), or the interval base.
std::vector<int> two_max_candidates(const ClassedLattice& lat) {
  if (lat.scope == ClassedLattice::Scope::Interval) {
    if (lat.bottom == lat.top) return {};
    return {lat.bottom};
  }
  return max2_sets(lat).max2_class_reps;
}

}  // namespace

VerdictReport check_lemma1(const std::string& group, const GroupTable& t,
                           const ClassedLattice& lat) {
  Check c("lemma1", group);
  const long long n = t.order();
  auto ps = prime_divisors(n);
  if (n == 1 || (ps.size() == 1 && n == ps[0])) return c.done();  // hypothesis empty

  auto m2 = max2_sets(lat);
  if (m2.max2_class_reps.empty()) {
    c.instance();
    c.expect(false, t, lat, {lat.top});  // nonprime order must yield 2-maximals
    return c.done();
  }
  int best_order = 0;
  for (int r : m2.max2_class_reps) best_order = std::max(best_order, lat.order_of(r));
  for (int r : m2.max2_class_reps) {
    if (lat.order_of(r) != best_order) continue;  // only least-index 2-maximals
    c.instance();
    c.expect(is_strictly_2maximal(lat, r).value, t, lat, {r});
  }
  return c.done();
}

VerdictReport check_lemma2(const std::string& group, const GroupTable& t,
                           const ClassedLattice& lat) {
  Check c("lemma2", group);
  const long long n = t.order();
  auto is_prime = [](long long v) {
    auto ps = prime_divisors(v);
    return ps.size() == 1 && v == ps[0];
  };
  // Maximal class representatives suffice: indices and strictness are
  // conjugation-invariant.
  for (int m : lat.maximal_indices()) {
    if (lat.class_rep(lat.class_of[m]) != m) continue;
    if (!is_prime(n / lat.order_of(m))) continue;
    for (int k : lat.covers_down[m]) {
      if (!is_prime(static_cast<long long>(lat.order_of(m)) / lat.order_of(k))) continue;
      c.instance();
      c.expect(is_strictly_2maximal(lat, k).value, t, lat, {k, m, lat.top});
    }
  }
  if (is_supersoluble(t)) {
    auto m2 = max2_sets(lat);
    c.instance();
    bool all_strict = m2.strict_class_reps.size() == m2.max2_class_reps.size();
    c.expect(all_strict, t, lat, {lat.top});
  }
  return c.done();
}

VerdictReport check_lemma3(const std::string& group, const GroupTable& t,
                           const ClassedLattice& lat, int p) {
  Check c("lemma3[p=" + std::to_string(p) + "]", group);
  if (t.order() % p != 0) return c.done();
  if (!is_p_soluble(t, p)) return c.done();
  const int target = t.order() / p;
  for (std::size_t cls = 0; cls < lat.classes.size(); ++cls) {
    int h = lat.class_rep(static_cast<int>(cls));
    if (lat.order_of(h) != target) continue;
    c.instance();
    SubgroupSet hg = core(t, lat.subgroups[h]);
    c.expect(is_supersoluble(quotient(t, hg).table), t, lat, {h, lat.top});
  }
  return c.done();
}

VerdictReport check_theorem1(const std::string& group, const GroupTable& t,
                             const ClassedLattice& lat) {
  Check c("theorem1", group);
  CoreCache cores{t, lat, {}};
  const bool soluble = is_soluble(t);

  for (int k : two_max_candidates(lat)) {
    auto maximals = max_over(lat, k);
    std::vector<int> covered, non_covered;
    for (int m : maximals)
      (lat.is_cover(k, m) ? covered : non_covered).push_back(m);
    if (covered.empty() || non_covered.empty()) continue;

    const SubgroupSet& kg = cores.of(k);
    for (int m : covered) {
      const SubgroupSet& mg = cores.of(m);
      for (int h : non_covered) {
        c.instance();
        const SubgroupSet& hg = cores.of(h);
        // (1) K = M n H
        c.expect(mask_and(lat.subgroups[m].bits, lat.subgroups[h].bits) == lat.subgroups[k].bits,
                 t, lat, {k, m, lat.top});
        // (2) K_G = M_G < M (proper)
        c.expect(kg.bits == mg.bits && mg.order < lat.order_of(m), t, lat, {k, m, lat.top});
        // (3) K_G = H_G or K H_G = H
        bool same_core = kg.bits == hg.bits;
        if (!same_core) {
          ProductSet khg = product_set(t, lat.subgroups[k], hg);
          c.expect(khg.is_subgroup && khg.bits == lat.subgroups[h].bits, t, lat,
                   {k, h, lat.top});
        }
      }
    }
    if (soluble) {
      // (4) the maximal overgroup in which K is not maximal is unique,
      // K_G = M_G < H_G strictly, and K H_G = H.
      c.instance();
      c.expect(non_covered.size() == 1, t, lat, {k, lat.top});
      if (non_covered.size() == 1) {
        int h = non_covered.front();
        const SubgroupSet& hg = cores.of(h);
        c.expect(mask_subset(kg.bits, hg.bits) && kg.order < hg.order, t, lat,
                 {k, h, lat.top});
        ProductSet khg = product_set(t, lat.subgroups[k], hg);
        c.expect(khg.is_subgroup && khg.bits == lat.subgroups[h].bits, t, lat, {k, h, lat.top});
      }
    }
  }
  return c.done();
}

std::vector<VerdictReport> check_corollaries(const std::string& group, const GroupTable& t,
                                             const ClassedLattice& lat) {
  std::vector<VerdictReport> out;
  CoreCache cores{t, lat, {}};
  const bool soluble = is_soluble(t);
  auto m2 = max2_sets(lat);

  {  // 1.1: K < M < G with K_G != M_G makes K strictly 2-maximal; if M is a
     // normal maximal subgroup, every maximal subgroup of M qualifies.
    Check c("corollary1.1", group);
    for (int m : lat.maximal_indices()) {
      if (lat.class_rep(lat.class_of[m]) != m) continue;  // class reps suffice
      for (int k : lat.covers_down[m]) {
        if (cores.of(k).bits != cores.of(m).bits) {
          c.instance();
          c.expect(is_strictly_2maximal(lat, k).value, t, lat, {k, m, lat.top});
        }
      }
      if (lat.classes[lat.class_of[m]].size() == 1) {  // normal maximal subgroup
        for (int k : lat.covers_down[m]) {
          c.instance();
          c.expect(is_strictly_2maximal(lat, k).value, t, lat, {k, m, lat.top});
        }
      }
    }
    out.push_back(c.done());
  }

  {  // 1.2: in a soluble group a 2-maximal, non-strictly-2-maximal K has a
     // unique maximal overgroup that does not cover it.
    Check c("corollary1.2", group);
    if (soluble) {
      for (int k : m2.max2_class_reps) {
        if (is_strictly_2maximal(lat, k).value) continue;
        c.instance();
        int non_covering = 0;
        for (int m : max_over(lat, k))
          if (!lat.is_cover(k, m)) ++non_covering;
        c.expect(non_covering == 1, t, lat, {k, lat.top});
      }
    }
    out.push_back(c.done());
  }

  {  // 1.3: in a p-soluble group, below a maximal subgroup of prime index p
     // every maximal subgroup is strictly 2-maximal.
    Check c("corollary1.3", group);
    for (int p : prime_divisors(t.order())) {
      if (static_cast<long long>(t.order()) % p != 0) continue;
      if (!is_p_soluble(t, p)) continue;
      for (int m : lat.maximal_indices()) {
        if (lat.class_rep(lat.class_of[m]) != m) continue;
        if (static_cast<long long>(t.order()) / lat.order_of(m) != p) continue;
        for (int k : lat.covers_down[m]) {
          c.instance();
          c.expect(is_strictly_2maximal(lat, k).value, t, lat, {k, m, lat.top});
        }
      }
    }
    out.push_back(c.done());
  }

  {  // 1.4: a subnormal K maximal in a maximal M and non-maximal in a maximal
     // H equals core(M), and G/K is nonprimary, nonsupersoluble, with all
     // proper subgroups primary.
    Check c("corollary1.4", group);
    for (int k : m2.max2_class_reps) {
      auto maximals = max_over(lat, k);
      std::vector<int> covered, non_covered;
      for (int m : maximals)
        (lat.is_cover(k, m) ? covered : non_covered).push_back(m);
      if (covered.empty() || non_covered.empty()) continue;
      if (!is_subnormal(t, lat.subgroups[k])) continue;
      c.instance();
      for (int m : covered)
        c.expect(cores.of(m).bits == lat.subgroups[k].bits, t, lat, {k, m, lat.top});
      Quotient q = quotient(t, lat.subgroups[k]);
      c.expect(!is_primary(q.table), t, lat, {k, lat.top});
      c.expect(!is_supersoluble(q.table), t, lat, {k, lat.top});
      ClassedLattice qlat = all_subgroups(q.table, std::max(kDefaultLatticeBudget, q.table.order()));
      bool all_primary = true;
      for (int i = 0; i < qlat.size(); ++i)
        if (i != qlat.top && !is_prime_power(qlat.order_of(i))) all_primary = false;
      c.expect(all_primary, t, lat, {k, lat.top});
    }
    out.push_back(c.done());
  }

  return out;
}

std::vector<CorpusEntry> default_corpus() {
  std::vector<CorpusEntry> corpus;
  auto add = [&corpus](const std::string& id) {
    corpus.push_back({id, parse_recipe_id(id), false, 2});
  };
  for (int n = 1; n <= 32; ++n) add("cyclic_" + std::to_string(n));
  for (int n = 4; n <= 40; n += 2) add("dihedral_" + std::to_string(n));
  for (int n = 2; n <= 5; ++n) add("symmetric_" + std::to_string(n));
  for (int n = 3; n <= 6; ++n) add("alternating_" + std::to_string(n));
  add("quaternion8");
  for (auto [p, k] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}})
    add("elementary_abelian_" + std::to_string(p) + "_" + std::to_string(k));
  for (int q : {4, 5, 7, 8, 9, 16, 25}) add("affine_" + std::to_string(q));
  add("u3_2");
  for (int q : {4, 5, 7, 8, 11, 13, 17}) add("psl2_" + std::to_string(q));
  corpus.push_back({"psl2_27", parse_recipe_id("psl2_27"), true, 2});
  return corpus;
}

namespace {

std::vector<VerdictReport> run_one(const CorpusEntry& e, const Limits& limits) {
  std::vector<VerdictReport> reports;
  try {
    GroupTable t = build(e.recipe, limits.element_cap);
    if (e.interval_only) {
      int seed = first_element_of_order(t, e.interval_element_order);
      if (seed < 0) throw Error("corpus: no element of the requested order");
      ClassedLattice lat = overgroups(t, closure(t, {seed}));
      reports.push_back(check_theorem1(e.name, t, lat));
      return reports;
    }
    ClassedLattice lat = all_subgroups(t, limits.lattice_budget);
    reports.push_back(check_lemma1(e.name, t, lat));
    reports.push_back(check_lemma2(e.name, t, lat));
    for (int p : prime_divisors(t.order()))
      reports.push_back(check_lemma3(e.name, t, lat, p));
    reports.push_back(check_theorem1(e.name, t, lat));
    for (auto& r : check_corollaries(e.name, t, lat)) reports.push_back(std::move(r));
  } catch (const std::exception& ex) {
    VerdictReport r;
    r.checker = "build";
    r.group = e.name;
    r.instances = 1;
    r.outcome = VerdictReport::Outcome::Fail;
    Witness w;
    w.orders = {};
    w.generators = {{std::string("error: ") + ex.what()}};
    r.witnesses.push_back(std::move(w));
    reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace

std::vector<VerdictReport> run_corpus(const std::vector<CorpusEntry>& corpus,
                                      const Limits& limits) {
  std::vector<std::vector<VerdictReport>> slots(corpus.size());
  unsigned n_threads = limits.threads > 0 ? static_cast<unsigned>(limits.threads)
                                          : std::thread::hardware_concurrency();
  n_threads = std::clamp<unsigned>(n_threads, 1, 16);
  n_threads = std::min<unsigned>(n_threads, std::max<std::size_t>(corpus.size(), 1));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= corpus.size()) break;
      slots[i] = run_one(corpus[i], limits);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 0; i + 1 < n_threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::vector<VerdictReport> out;
  for (auto& s : slots)
    for (auto& r : s) out.push_back(std::move(r));
  return out;
}

bool any_failures(const std::vector<VerdictReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const VerdictReport& r) {
    return r.outcome == VerdictReport::Outcome::Fail;
  });
}

}  // namespace sublat
