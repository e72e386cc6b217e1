#include "sublat/subgroup.hpp"

#include <algorithm>
#include <bit>

#include "sublat/error.hpp"

namespace sublat {

bool mask_subset(const Mask& a, const Mask& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

Mask mask_and(const Mask& a, const Mask& b) {
  Mask out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
  return out;
}

Mask mask_or(const Mask& a, const Mask& b) {
  Mask out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] | b[i];
  return out;
}

int mask_popcount(const Mask& m) {
  int n = 0;
  for (std::uint64_t w : m) n += std::popcount(w);
  return n;
}

SubgroupSet trivial_subgroup(const GroupTable& t) {
  SubgroupSet s;
  s.bits.assign(mask_words(t.order()), 0);
  mask_set(s.bits, 0);
  s.order = 1;
  return s;
}

SubgroupSet full_subgroup(const GroupTable& t) {
  SubgroupSet s;
  s.bits.assign(mask_words(t.order()), ~std::uint64_t{0});
  const int rem = t.order() & 63;
  if (rem) s.bits.back() = (std::uint64_t{1} << rem) - 1;
  s.order = t.order();
  return s;
}

SubgroupSet subgroup_from_mask(Mask bits) {
  SubgroupSet s;
  s.order = mask_popcount(bits);
  s.bits = std::move(bits);
  return s;
}

std::vector<int> elements_of(const SubgroupSet& s) {
  std::vector<int> out;
  out.reserve(s.order);
  for (std::size_t w = 0; w < s.bits.size(); ++w) {
    std::uint64_t v = s.bits[w];
    while (v) {
      out.push_back(static_cast<int>(w * 64) + std::countr_zero(v));
      v &= v - 1;
    }
  }
  return out;
}

bool is_closed(const GroupTable& t, const SubgroupSet& s) {
  if (!s.contains(0)) return false;
  auto elems = elements_of(s);
  for (int a : elems)
    for (int b : elems)
      if (!s.contains(t.product(a, b))) return false;
  return true;
}

GrowingSubgroup GrowingSubgroup::trivial(const GroupTable& t) {
  GrowingSubgroup g;
  g.set = trivial_subgroup(t);
  g.elems = {0};
  return g;
}

GrowingSubgroup GrowingSubgroup::from(const GroupTable& t, const SubgroupSet& s,
                                      std::vector<int> gens) {
  (void)t;
  GrowingSubgroup g;
  g.set = s;
  g.elems = elements_of(s);
  g.gens = std::move(gens);
  return g;
}

void GrowingSubgroup::add(const GroupTable& t, int g) {
  if (set.contains(g)) return;
  gens.push_back(g);
  const std::size_t base = elems.size();  // the previous subgroup H
  auto add_coset = [&](int rep) {         // append H * rep
    for (std::size_t i = 0; i < base; ++i) {
      int e = t.product(elems[i], rep);
      if (!set.contains(e)) {
        mask_set(set.bits, e);
        elems.push_back(e);
      }
    }
  };
  std::vector<int> reps{g};
  add_coset(g);
  for (std::size_t r = 0; r < reps.size(); ++r)
    for (int s : gens) {
      int u = t.product(reps[r], s);
      if (!set.contains(u)) {
        reps.push_back(u);
        add_coset(u);
      }
    }
  set.order = static_cast<int>(elems.size());
}

SubgroupSet closure(const GroupTable& t, const std::vector<int>& seed) {
  GrowingSubgroup g = GrowingSubgroup::trivial(t);
  for (int e : seed) g.add(t, e);
  return g.set;
}

std::vector<int> small_generators(const GroupTable& t, const SubgroupSet& s) {
  GrowingSubgroup g = GrowingSubgroup::trivial(t);
  for (int e : elements_of(s)) g.add(t, e);
  return g.gens;
}

SubgroupSet join(const GroupTable& t, const SubgroupSet& a, const SubgroupSet& b) {
  const SubgroupSet& base = a.order >= b.order ? a : b;
  const SubgroupSet& ext = a.order >= b.order ? b : a;
  GrowingSubgroup g = GrowingSubgroup::from(t, base, small_generators(t, base));
  for (int e : elements_of(ext)) g.add(t, e);
  return g.set;
}

SubgroupSet meet(const SubgroupSet& a, const SubgroupSet& b) {
  return subgroup_from_mask(mask_and(a.bits, b.bits));
}

ProductSet product_set(const GroupTable& t, const SubgroupSet& a, const SubgroupSet& b) {
  ProductSet out;
  out.bits.assign(a.bits.size(), 0);
  auto ea = elements_of(a);
  auto eb = elements_of(b);
  for (int x : ea)
    for (int y : eb) mask_set(out.bits, t.product(x, y));
  out.size = mask_popcount(out.bits);
  auto all = elements_of(subgroup_from_mask(out.bits));
  out.is_subgroup = true;
  for (int x : all) {
    for (int y : all)
      if (!mask_test(out.bits, t.product(x, y))) {
        out.is_subgroup = false;
        break;
      }
    if (!out.is_subgroup) break;
  }
  return out;
}

SubgroupSet conjugate_subgroup(const GroupTable& t, const SubgroupSet& s, int g) {
  SubgroupSet out;
  out.bits.assign(s.bits.size(), 0);
  out.order = s.order;
  const int gi = t.inverse(g);
  for (int e : elements_of(s)) mask_set(out.bits, t.product(t.product(gi, e), g));
  return out;
}

bool is_normal(const GroupTable& t, const SubgroupSet& s) {
  for (int g : t.generators())
    for (int e : elements_of(s))
      if (!s.contains(t.conjugate(e, g))) return false;
  return true;
}

SubgroupSet core(const GroupTable& t, const SubgroupSet& h) {
  // Shrink to the generator-conjugation fixpoint; the result is the largest
  // normal subgroup of G inside H.
  SubgroupSet cur = h;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int g : t.generators()) {
      SubgroupSet conj = conjugate_subgroup(t, cur, g);
      Mask inter = mask_and(cur.bits, conj.bits);
      if (inter != cur.bits) {
        cur = subgroup_from_mask(std::move(inter));
        changed = true;
      }
    }
  }
  return cur;
}

SubgroupSet normalizer(const GroupTable& t, const SubgroupSet& h) {
  SubgroupSet out;
  out.bits.assign(h.bits.size(), 0);
  auto elems = elements_of(h);
  for (int g = 0; g < t.order(); ++g) {
    bool ok = true;
    for (int e : elems)
      if (!h.contains(t.conjugate(e, g))) {
        ok = false;
        break;
      }
    if (ok) mask_set(out.bits, g);
  }
  out.order = mask_popcount(out.bits);
  return out;
}

SubgroupSet centralizer(const GroupTable& t, const std::vector<int>& elems) {
  SubgroupSet out;
  out.bits.assign(mask_words(t.order()), 0);
  for (int g = 0; g < t.order(); ++g) {
    bool ok = true;
    for (int e : elems)
      if (t.product(g, e) != t.product(e, g)) {
        ok = false;
        break;
      }
    if (ok) mask_set(out.bits, g);
  }
  out.order = mask_popcount(out.bits);
  return out;
}

SubgroupSet normal_closure(const GroupTable& t, const std::vector<int>& seed,
                           const std::vector<int>& conjugators) {
  GrowingSubgroup g = GrowingSubgroup::trivial(t);
  for (int e : seed) g.add(t, e);
  for (std::size_t i = 0; i < g.gens.size(); ++i)  // gens grows as we add
    for (int c : conjugators) g.add(t, t.conjugate(g.gens[i], c));
  return g.set;
}

Quotient quotient(const GroupTable& t, const SubgroupSet& n) {
  if (!is_closed(t, n)) throw Error("quotient: N is not a subgroup");
  if (!is_normal(t, n)) throw Error("quotient: N is not normal");
  const int order = t.order();
  std::vector<int> coset_of(order, -1), reps;
  auto n_elems = elements_of(n);
  for (int e = 0; e < order; ++e) {
    if (coset_of[e] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(e);
    for (int h : n_elems) coset_of[t.product(h, e)] = c;
  }
  const int m = static_cast<int>(reps.size());

  // g sends the coset of x to the coset of g*x; with N normal this is
  // well-defined and matches the compose-right-first product convention,
  // making the projection a homomorphism.
  auto coset_perm = [&](int g) {
    std::vector<Point> img(m);
    for (int c = 0; c < m; ++c) img[c] = static_cast<Point>(coset_of[t.product(g, reps[c])]);
    return Perm(std::move(img));
  };

  std::vector<Perm> gens;
  for (int g : t.generators()) gens.push_back(coset_perm(g));
  if (gens.empty()) gens.push_back(Perm::identity(m));

  Quotient q{generate_elements(gens, std::max(order, 1)), {}};
  if (q.table.order() != order / n.order) throw Error("quotient: order mismatch");
  q.projection.resize(order);
  for (int e = 0; e < order; ++e) q.projection[e] = q.table.index_of(coset_perm(e));
  return q;
}

int first_element_of_order(const GroupTable& t, int k) {
  for (int i = 0; i < t.order(); ++i)
    if (t.element_order(i) == k) return i;
  return -1;
}

}  // namespace sublat
