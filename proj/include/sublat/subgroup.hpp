#pragma once

// Subgroups of a fixed GroupTable as element-index bitmasks, plus the
// subgroup-level primitives: closure, join, meet, set products, conjugation,
// core, normalizer, centralizer and quotient groups.

#include <cstdint>
#include <vector>

#include "sublat/group.hpp"

namespace sublat {

using Mask = std::vector<std::uint64_t>;

inline int mask_words(int n) { return (n + 63) >> 6; }
inline bool mask_test(const Mask& m, int i) { return (m[i >> 6] >> (i & 63)) & 1; }
inline void mask_set(Mask& m, int i) { m[i >> 6] |= std::uint64_t{1} << (i & 63); }
bool mask_subset(const Mask& a, const Mask& b);
Mask mask_and(const Mask& a, const Mask& b);
Mask mask_or(const Mask& a, const Mask& b);
int mask_popcount(const Mask& m);

struct MaskHash {
  std::size_t operator()(const Mask& m) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t w : m) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct SubgroupSet {
  Mask bits;
  int order = 0;

  bool contains(int i) const { return mask_test(bits, i); }
  friend bool operator==(const SubgroupSet& a, const SubgroupSet& b) { return a.bits == b.bits; }
};

SubgroupSet trivial_subgroup(const GroupTable& t);
SubgroupSet full_subgroup(const GroupTable& t);
SubgroupSet subgroup_from_mask(Mask bits);
std::vector<int> elements_of(const SubgroupSet& s);
bool is_closed(const GroupTable& t, const SubgroupSet& s);

// A subgroup under construction. `gens` always generates the current set;
// add() extends by one generator with a coset-by-coset closure step.
struct GrowingSubgroup {
  SubgroupSet set;
  std::vector<int> elems;
  std::vector<int> gens;

  static GrowingSubgroup trivial(const GroupTable& t);
  static GrowingSubgroup from(const GroupTable& t, const SubgroupSet& s, std::vector<int> gens);
  void add(const GroupTable& t, int g);
};

// Subgroup generated by a set of element indices.
SubgroupSet closure(const GroupTable& t, const std::vector<int>& seed);
// Canonical small generating set: greedy over ascending element indices.
std::vector<int> small_generators(const GroupTable& t, const SubgroupSet& s);

SubgroupSet join(const GroupTable& t, const SubgroupSet& a, const SubgroupSet& b);
SubgroupSet meet(const SubgroupSet& a, const SubgroupSet& b);

struct ProductSet {
  Mask bits;
  int size = 0;
  bool is_subgroup = false;
};
// The element set {ab : a in A, b in B}, flagged as a subgroup iff closed.
ProductSet product_set(const GroupTable& t, const SubgroupSet& a, const SubgroupSet& b);

SubgroupSet conjugate_subgroup(const GroupTable& t, const SubgroupSet& s, int g);
bool is_normal(const GroupTable& t, const SubgroupSet& s);
// Largest normal subgroup of G contained in H (intersection of all conjugates).
SubgroupSet core(const GroupTable& t, const SubgroupSet& h);
SubgroupSet normalizer(const GroupTable& t, const SubgroupSet& h);
SubgroupSet centralizer(const GroupTable& t, const std::vector<int>& elems);
// Normal closure of `seed` under conjugation by `conjugators`.
SubgroupSet normal_closure(const GroupTable& t, const std::vector<int>& seed,
                           const std::vector<int>& conjugators);

struct Quotient {
  GroupTable table;  // the coset space of N acted on by G; degree = |G:N|
  std::vector<int> projection;  // element index in G -> element index in table
};
Quotient quotient(const GroupTable& t, const SubgroupSet& n);

int first_element_of_order(const GroupTable& t, int k);  // -1 when absent

}  // namespace sublat
