#pragma once

// Fully enumerated finite permutation groups: ordered element table with
// product, inverse and element-order lookups. Element 0 is the identity and
// the element ordering is the breadth-first closure order from the identity,
// so downstream bitmask state is reproducible across runs.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "sublat/perm.hpp"

namespace sublat {

inline constexpr int kDefaultElementCap = 20000;

class GroupTable {
 public:
  int degree() const { return deg_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const Perm& element(int i) const { return elements_[i]; }
  const std::vector<Perm>& elements() const { return elements_; }
  // Indices of the (deduplicated) input generators.
  const std::vector<int>& generators() const { return gen_idx_; }

  // Group product: product(a, b) is the element acting as "apply b, then a".
  int product(int a, int b) const {
    if (!prod_.empty()) return prod_[static_cast<std::size_t>(a) * order() + b];
    return lookup_product(a, b);
  }
  int inverse(int a) const { return inv_[a]; }
  int conjugate(int x, int g) const { return product(product(inv_[g], x), g); }
  int element_order(int i) const { return ord_[i]; }
  int power(int a, int e) const;

  // Index of a permutation in the element table, or -1 when absent.
  int index_of(const Perm& p) const;

 private:
  friend GroupTable generate_elements(const std::vector<Perm>&, int);
  GroupTable() = default;
  void build_tables();
  int lookup_product(int a, int b) const;
  bool base_key(const Perm& p, std::uint64_t& key) const;

  int deg_ = 0;
  std::vector<Perm> elements_;
  std::vector<int> gen_idx_;
  std::vector<int> inv_;
  std::vector<int> ord_;
  std::vector<std::uint16_t> prod_;  // full Cayley table for orders <= 4096
  std::vector<int> base_;            // points whose images identify an element
  std::unordered_map<std::uint64_t, int> key_index_;
  std::unordered_map<Perm, int, PermHash> full_index_;  // fallback when base does not pack
  bool exact_keys_ = false;
};

// Breadth-first closure of a non-empty, uniform-degree generator list.
// Throws BudgetError if the closure exceeds element_cap.
GroupTable generate_elements(const std::vector<Perm>& generators,
                             int element_cap = kDefaultElementCap);

}  // namespace sublat
