#include "sublat/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "sublat/error.hpp"

namespace sublat {

int ClassedLattice::find_mask(const Mask& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

bool ClassedLattice::is_cover(int a, int b) const {
  for (int u : covers_up[a])
    if (u == b) return true;
  return false;
}

std::vector<int> ClassedLattice::subgroups_containing(int i) const {
  std::vector<int> out;
  for (int j = 0; j < size(); ++j)
    if (subgroups[i].order <= subgroups[j].order &&
        mask_subset(subgroups[i].bits, subgroups[j].bits))
      out.push_back(j);
  return out;
}

std::vector<int> ClassedLattice::class_reps() const {
  std::vector<int> out;
  out.reserve(classes.size());
  for (const auto& c : classes) out.push_back(c.front());
  return out;
}

namespace {

struct Entry {
  SubgroupSet set;
  std::vector<int> gens;
};

struct Atom {
  SubgroupSet set;
  int gen = 0;  // an element generating the cyclic subgroup
};

std::vector<Atom> atoms_with_generators(const GroupTable& t) {
  std::unordered_map<Mask, int, MaskHash> seen;
  std::vector<Atom> atoms;
  const int words = mask_words(t.order());
  for (int g = 0; g < t.order(); ++g) {
    Mask bits(words, 0);
    int cur = 0;
    do {
      mask_set(bits, cur);
      cur = t.product(cur, g);
    } while (cur != 0);
    if (seen.emplace(bits, static_cast<int>(atoms.size())).second)
      atoms.push_back({subgroup_from_mask(std::move(bits)), g});
  }
  std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
    return a.set.order != b.set.order ? a.set.order < b.set.order : a.set.bits < b.set.bits;
  });
  return atoms;
}

}  // namespace

class LatticeBuilder {
 public:
  explicit LatticeBuilder(const GroupTable& t) : t_(t) {}

  int add(SubgroupSet s, std::vector<int> gens) {
    auto [it, fresh] = index_.emplace(s.bits, static_cast<int>(entries_.size()));
    if (!fresh) return it->second;
    entries_.push_back({std::move(s), std::move(gens)});
    return static_cast<int>(entries_.size()) - 1;
  }

  bool contains(const Mask& m) const { return index_.count(m) != 0; }
  int count() const { return static_cast<int>(entries_.size()); }
  const Entry& entry(int i) const { return entries_[i]; }

  // Registers the whole conjugation orbit of `s`; returns the id of `s`.
  int add_class(SubgroupSet s, std::vector<int> gens) {
    int id = add(std::move(s), std::move(gens));
    std::vector<int> queue{id};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int cur = queue[qi];
      for (int g : t_.generators()) {
        SubgroupSet conj = conjugate_subgroup(t_, entries_[cur].set, g);
        if (contains(conj.bits)) continue;
        std::vector<int> cgens;
        cgens.reserve(entries_[cur].gens.size());
        for (int e : entries_[cur].gens) cgens.push_back(t_.conjugate(e, g));
        queue.push_back(add(std::move(conj), std::move(cgens)));
      }
    }
    return id;
  }

  ClassedLattice finalize(ClassedLattice::Scope scope, const Mask& bottom_mask) {
    ClassedLattice lat;
    lat.host = &t_;
    lat.scope = scope;

    const int n = count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
      const auto& sa = entries_[a].set;
      const auto& sb = entries_[b].set;
      return sa.order != sb.order ? sa.order < sb.order : sa.bits < sb.bits;
    });

    lat.subgroups.reserve(n);
    for (int i = 0; i < n; ++i) lat.subgroups.push_back(std::move(entries_[perm[i]].set));
    lat.index_.clear();
    for (int i = 0; i < n; ++i) lat.index_.emplace(lat.subgroups[i].bits, i);

    lat.generator_sets.resize(n);
    for (int i = 0; i < n; ++i) lat.generator_sets[i] = small_generators(t_, lat.subgroups[i]);

    compute_classes(lat);
    compute_covers(lat);

    lat.bottom = lat.find_mask(bottom_mask);
    lat.top = n - 1;  // G has the unique largest order
    return lat;
  }

 private:
  void compute_classes(ClassedLattice& lat) const {
    const int n = lat.size();
    lat.class_of.assign(n, -1);
    for (int i = 0; i < n; ++i) {
      if (lat.class_of[i] >= 0) continue;
      const int cls = static_cast<int>(lat.classes.size());
      lat.classes.emplace_back();
      // Orbit of the mask under generator conjugation. In interval scope the
      // orbit can leave the stored list; absent masks are still traversed so
      // that in-scope members of one class end up together.
      std::unordered_set<Mask, MaskHash> seen;
      std::vector<SubgroupSet> queue{lat.subgroups[i]};
      seen.insert(lat.subgroups[i].bits);
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        SubgroupSet cur = queue[qi];
        int idx = lat.find_mask(cur.bits);
        if (idx >= 0) {
          lat.class_of[idx] = cls;
          lat.classes[cls].push_back(idx);
        }
        for (int g : t_.generators()) {
          SubgroupSet conj = conjugate_subgroup(t_, cur, g);
          if (seen.insert(conj.bits).second) queue.push_back(std::move(conj));
        }
      }
      std::sort(lat.classes[cls].begin(), lat.classes[cls].end());
    }
  }

  void compute_covers(ClassedLattice& lat) const {
    const int n = lat.size();
    lat.covers_up.assign(n, {});
    lat.covers_down.assign(n, {});
    std::vector<int> contained;
    for (int b = 0; b < n; ++b) {
      contained.clear();
      const int ob = lat.order_of(b);
      for (int a = 0; a < n; ++a) {
        if (a == b) continue;
        const int oa = lat.order_of(a);
        if (oa >= ob || ob % oa != 0) continue;
        if (mask_subset(lat.subgroups[a].bits, lat.subgroups[b].bits)) contained.push_back(a);
      }
      // contained is ascending by (order, mask); a is maximal in b unless some
      // strictly larger c in between contains it.
      for (int a : contained) {
        const int oa = lat.order_of(a);
        bool maximal = true;
        for (int c : contained) {
          const int oc = lat.order_of(c);
          if (oc <= oa || oc % oa != 0) continue;
          if (mask_subset(lat.subgroups[a].bits, lat.subgroups[c].bits)) {
            maximal = false;
            break;
          }
        }
        if (maximal) {
          lat.covers.emplace_back(a, b);
          lat.covers_up[a].push_back(b);
          lat.covers_down[b].push_back(a);
        }
      }
    }
    std::sort(lat.covers.begin(), lat.covers.end());
  }

  const GroupTable& t_;
  std::vector<Entry> entries_;
  std::unordered_map<Mask, int, MaskHash> index_;
};

std::vector<SubgroupSet> cyclic_atoms(const GroupTable& t) {
  std::vector<SubgroupSet> out;
  for (auto& a : atoms_with_generators(t)) out.push_back(std::move(a.set));
  return out;
}

ClassedLattice all_subgroups(const GroupTable& t, int budget) {
  if (t.order() > budget)
    throw BudgetError("all_subgroups: group order " + std::to_string(t.order()) +
                      " exceeds lattice budget " + std::to_string(budget) +
                      "; use interval mode (overgroups)");

  LatticeBuilder reg(t);
  auto atoms = atoms_with_generators(t);

  std::vector<int> queue{reg.add_class(trivial_subgroup(t), {})};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    // Copy: the entry vector may reallocate while we expand.
    const SubgroupSet rep = reg.entry(queue[qi]).set;
    const std::vector<int> rep_gens = reg.entry(queue[qi]).gens;
    const std::vector<int> rep_elems = elements_of(rep);
    for (const Atom& a : atoms) {
      if (mask_subset(a.set.bits, rep.bits)) continue;
      GrowingSubgroup grow;
      grow.set = rep;
      grow.elems = rep_elems;
      grow.gens = rep_gens;
      grow.add(t, a.gen);
      if (!reg.contains(grow.set.bits))
        queue.push_back(reg.add_class(std::move(grow.set), std::move(grow.gens)));
    }
  }

  return reg.finalize(ClassedLattice::Scope::Full, trivial_subgroup(t).bits);
}

ClassedLattice overgroups(const GroupTable& t, const SubgroupSet& base) {
  if (!is_closed(t, base)) throw Error("overgroups: base is not a subgroup");

  LatticeBuilder reg(t);
  const Mask base_mask = base.bits;
  std::vector<int> queue{reg.add(base, small_generators(t, base))};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const SubgroupSet k = reg.entry(queue[qi]).set;
    const std::vector<int> k_gens = reg.entry(queue[qi]).gens;
    const std::vector<int> k_elems = elements_of(k);
    if (k.order == t.order()) continue;
    // One adjunction per double coset K g K: <K, g> = <K, k1 g k2>.
    Mask marked = k.bits;
    for (int g = 0; g < t.order(); ++g) {
      if (mask_test(marked, g)) continue;
      for (int k1 : k_elems) {
        int k1g = t.product(k1, g);
        for (int k2 : k_elems) mask_set(marked, t.product(k1g, k2));
      }
      GrowingSubgroup grow;
      grow.set = k;
      grow.elems = k_elems;
      grow.gens = k_gens;
      grow.add(t, g);
      if (!reg.contains(grow.set.bits)) {
        queue.push_back(reg.add(std::move(grow.set), std::move(grow.gens)));
        if (reg.count() > kIntervalMemberCap)
          throw BudgetError("overgroups: interval member cap exceeded");
      }
    }
  }

  return reg.finalize(ClassedLattice::Scope::Interval, base_mask);
}

}  // namespace sublat
