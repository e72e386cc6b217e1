#include "sublat/structure.hpp"

#include <algorithm>

#include "sublat/error.hpp"

namespace sublat {

std::vector<int> prime_divisors(long long n) {
  std::vector<int> out;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(static_cast<int>(p));
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(static_cast<int>(n));
  return out;
}

bool is_prime_power(long long n) {
  if (n < 1) return false;
  return prime_divisors(n).size() <= 1;
}

bool is_abelian(const GroupTable& t) {
  for (int a : t.generators())
    for (int b : t.generators())
      if (t.product(a, b) != t.product(b, a)) return false;
  return true;
}

bool is_primary(const GroupTable& t) { return is_prime_power(t.order()); }

SubgroupSet derived_subgroup(const GroupTable& t) {
  std::vector<int> comms;
  for (int a : t.generators())
    for (int b : t.generators())
      comms.push_back(t.product(t.product(t.inverse(a), t.inverse(b)), t.product(a, b)));
  return normal_closure(t, comms, t.generators());
}

namespace {

// Derived subgroup of a subgroup given by a generating set; the commutator
// subgroup is the normal closure of generator commutators inside the subgroup.
SubgroupSet derived_of(const GroupTable& t, const std::vector<int>& gens) {
  std::vector<int> comms;
  for (int a : gens)
    for (int b : gens)
      comms.push_back(t.product(t.product(t.inverse(a), t.inverse(b)), t.product(a, b)));
  return normal_closure(t, comms, gens);
}

}  // namespace

bool is_soluble(const GroupTable& t) {
  std::vector<int> gens = t.generators();
  int order = t.order();
  while (order > 1) {
    SubgroupSet d = derived_of(t, gens);
    if (d.order == order) return false;  // series stalled above 1
    order = d.order;
    gens = small_generators(t, d);
  }
  return true;
}

std::vector<long long> chief_factor_orders(const GroupTable& t) {
  std::vector<long long> factors;
  // Work down through quotients; each step peels one minimal normal subgroup.
  GroupTable cur = t;
  while (cur.order() > 1) {
    // Element conjugacy class representatives.
    std::vector<char> seen(cur.order(), 0);
    std::vector<int> reps;
    for (int e = 1; e < cur.order(); ++e) {
      if (seen[e]) continue;
      reps.push_back(e);
      std::vector<int> orbit{e};
      seen[e] = 1;
      for (std::size_t qi = 0; qi < orbit.size(); ++qi)
        for (int g : cur.generators()) {
          int c = cur.conjugate(orbit[qi], g);
          if (!seen[c]) {
            seen[c] = 1;
            orbit.push_back(c);
          }
        }
    }
    // A minimal normal subgroup is a least-order normal closure of a single
    // nonidentity element (ties broken by mask).
    SubgroupSet best;
    for (int e : reps) {
      SubgroupSet n = normal_closure(cur, {e}, cur.generators());
      if (best.order == 0 || n.order < best.order ||
          (n.order == best.order && n.bits < best.bits))
        best = std::move(n);
    }
    factors.push_back(best.order);
    cur = quotient(cur, best).table;
  }
  return factors;
}

bool is_supersoluble(const GroupTable& t) {
  for (long long f : chief_factor_orders(t)) {
    auto ps = prime_divisors(f);
    if (ps.size() != 1 || f != ps[0]) return false;  // factor not of prime order
  }
  return true;
}

bool is_p_soluble(const GroupTable& t, int p) {
  for (long long f : chief_factor_orders(t)) {
    long long v = f;
    while (v % p == 0) v /= p;
    if (v != 1 && f % p == 0) return false;  // factor neither a p- nor a p'-group
  }
  return true;
}

namespace {

long long p_part(long long n, int p) {
  long long v = 1;
  while (n % p == 0) {
    v *= p;
    n /= p;
  }
  return v;
}

int count_p_elements(const GroupTable& t, const SubgroupSet& s, int p) {
  int c = 0;
  for (int e : elements_of(s)) {
    int o = t.element_order(e);
    while (o % p == 0) o /= p;
    if (o == 1) ++c;
  }
  return c;
}

}  // namespace

bool is_nilpotent(const GroupTable& t) {
  return subgroup_is_nilpotent(t, full_subgroup(t));
}

bool subgroup_is_abelian(const GroupTable& t, const SubgroupSet& s) {
  auto gens = small_generators(t, s);
  for (int a : gens)
    for (int b : gens)
      if (t.product(a, b) != t.product(b, a)) return false;
  return true;
}

bool subgroup_is_nilpotent(const GroupTable& t, const SubgroupSet& s) {
  // Nilpotent iff every Sylow subgroup is normal iff, for each prime p,
  // the p-elements all sit in one Sylow p-subgroup.
  for (int p : prime_divisors(s.order))
    if (count_p_elements(t, s, p) != p_part(s.order, p)) return false;
  return true;
}

bool is_subnormal(const GroupTable& t, const SubgroupSet& k) {
  SubgroupSet cur = full_subgroup(t);
  auto k_elems = elements_of(k);
  while (true) {
    if (cur.bits == k.bits) return true;
    SubgroupSet next = normal_closure(t, k_elems, small_generators(t, cur));
    if (next.order == cur.order) return next.bits == k.bits;
    cur = std::move(next);
  }
}

std::vector<int> normal_indices(const ClassedLattice& lat) {
  std::vector<int> out;
  for (std::size_t c = 0; c < lat.classes.size(); ++c)
    if (lat.classes[c].size() == 1) out.push_back(lat.classes[c].front());
  std::sort(out.begin(), out.end());
  return out;
}

int frattini(const ClassedLattice& lat) {
  Mask m = lat.subgroups[lat.top].bits;
  for (int i : lat.maximal_indices()) m = mask_and(m, lat.subgroups[i].bits);
  int idx = lat.find_mask(m);
  if (idx < 0) throw Error("frattini: intersection not in lattice");
  return idx;
}

int o_p(const ClassedLattice& lat, int p) {
  int best = -1;
  for (int i : normal_indices(lat)) {
    long long o = lat.order_of(i);
    if (o != p_part(o, p)) continue;
    if (best < 0 || lat.order_of(i) > lat.order_of(best)) best = i;
  }
  return best;  // at least the trivial subgroup qualifies
}

int o_p_prime(const ClassedLattice& lat, int p) {
  int best = -1;
  for (int i : normal_indices(lat)) {
    if (lat.order_of(i) % p == 0) continue;
    if (best < 0 || lat.order_of(i) > lat.order_of(best)) best = i;
  }
  return best;
}

int fitting(const ClassedLattice& lat) {
  const GroupTable& t = *lat.host;
  SubgroupSet acc = trivial_subgroup(t);
  for (int p : prime_divisors(t.order())) {
    int i = o_p(lat, p);
    if (i >= 0) acc = join(t, acc, lat.subgroups[i]);
  }
  int idx = lat.find_mask(acc.bits);
  if (idx < 0) throw Error("fitting: join not in lattice");
  return idx;
}

std::vector<int> minimal_normals(const ClassedLattice& lat) {
  auto normals = normal_indices(lat);
  std::vector<int> out;
  for (int i : normals) {
    if (lat.order_of(i) == 1) continue;
    bool minimal = true;
    for (int j : normals) {
      if (j == i || lat.order_of(j) == 1 || lat.order_of(j) >= lat.order_of(i)) continue;
      if (mask_subset(lat.subgroups[j].bits, lat.subgroups[i].bits)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(i);
  }
  return out;
}

int sylow(const ClassedLattice& lat, int p) {
  const long long target = p_part(lat.host->order(), p);
  for (int i = 0; i < lat.size(); ++i)
    if (lat.order_of(i) == target) return i;
  throw Error("sylow: no subgroup of full p-power order found");
}

std::string structure_hint(const GroupTable& t, const SubgroupSet& s) {
  const int n = s.order;
  auto elems = elements_of(s);
  int max_order = 1;
  int involutions = 0;
  for (int e : elems) {
    max_order = std::max(max_order, t.element_order(e));
    if (t.element_order(e) == 2) ++involutions;
  }
  if (max_order == n) return "C" + std::to_string(n);
  auto ps = prime_divisors(n);
  if (ps.size() == 1 && max_order == ps[0]) {
    int k = 0;
    long long v = n;
    while (v > 1) {
      v /= ps[0];
      ++k;
    }
    return std::to_string(ps[0]) + "^" + std::to_string(k);
  }
  if (n == 8 && involutions == 1) return "quaternion";
  if (n >= 6 && n % 2 == 0 && max_order == n / 2 && (involutions == n / 2 || involutions == n / 2 + 1)) {
    // dihedral: a cyclic half plus involutions everywhere outside it
    for (int e : elems)
      if (t.element_order(e) == n / 2) {
        SubgroupSet half = closure(t, {e});
        bool dihedral = true;
        for (int x : elems)
          if (!half.contains(x) && t.element_order(x) != 2) {
            dihedral = false;
            break;
          }
        if (dihedral) return "dihedral";
        break;
      }
  }
  if (subgroup_is_abelian(t, s)) return "abelian";
  return "order-" + std::to_string(n);
}

}  // namespace sublat
