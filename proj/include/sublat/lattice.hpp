#pragma once

// Subgroup lattice enumeration: the full lattice via a join-closure worklist
// over cyclic atoms (expanding one conjugacy-class representative at a time),
// and intervals [H, G] via double-coset-pruned element adjunction for groups
// above the full-lattice budget. Produces the covering relation and the
// partition into conjugacy classes.

#include <unordered_map>
#include <utility>
#include <vector>

#include "sublat/subgroup.hpp"

namespace sublat {

inline constexpr int kDefaultLatticeBudget = 2600;
inline constexpr int kIntervalMemberCap = 200000;

class ClassedLattice {
 public:
  enum class Scope { Full, Interval };

  // Non-owning; the group table must outlive the lattice.
  const GroupTable* host = nullptr;
  Scope scope = Scope::Full;
  std::vector<SubgroupSet> subgroups;           // sorted by (order, mask)
  std::vector<std::vector<int>> generator_sets;  // canonical small generators
  std::vector<int> class_of;
  std::vector<std::vector<int>> classes;  // members, ascending; class 0 has the least rep
  std::vector<std::pair<int, int>> covers;  // (a, b): a is maximal in b; sorted
  std::vector<std::vector<int>> covers_up, covers_down;
  int bottom = 0;  // trivial subgroup (full scope) or the interval base
  int top = 0;     // index of G

  int size() const { return static_cast<int>(subgroups.size()); }
  int order_of(int i) const { return subgroups[i].order; }
  int class_rep(int c) const { return classes[c].front(); }
  int find_mask(const Mask& m) const;  // -1 when absent
  bool is_cover(int a, int b) const;
  // Subgroups of G that are maximal in G (covers of the top).
  const std::vector<int>& maximal_indices() const { return covers_down[top]; }
  std::vector<int> subgroups_containing(int i) const;
  std::vector<int> class_reps() const;

 private:
  friend class LatticeBuilder;
  std::unordered_map<Mask, int, MaskHash> index_;
};

// All distinct cyclic subgroups <g>, deduplicated, sorted by (order, mask);
// includes the trivial subgroup.
std::vector<SubgroupSet> cyclic_atoms(const GroupTable& t);

// Full subgroup lattice. Throws BudgetError when |G| exceeds the budget.
ClassedLattice all_subgroups(const GroupTable& t, int budget = kDefaultLatticeBudget);

// The interval [base, G]: exactly the subgroups containing `base`.
ClassedLattice overgroups(const GroupTable& t, const SubgroupSet& base);

}  // namespace sublat
