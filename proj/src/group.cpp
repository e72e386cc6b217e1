#include "sublat/group.hpp"

#include <algorithm>

#include "sublat/error.hpp"

namespace sublat {

namespace {
constexpr int kProductTableLimit = 4096;
}

bool GroupTable::base_key(const Perm& p, std::uint64_t& key) const {
  key = 0;
  for (std::size_t i = 0; i < base_.size(); ++i)
    key |= static_cast<std::uint64_t>(p(static_cast<Point>(base_[i]))) << (16 * i);
  return true;
}

int GroupTable::index_of(const Perm& p) const {
  if (p.degree() != deg_) return -1;
  if (exact_keys_) {
    std::uint64_t key;
    base_key(p, key);
    auto it = key_index_.find(key);
    return it == key_index_.end() ? -1 : it->second;
  }
  auto it = full_index_.find(p);
  return it == full_index_.end() ? -1 : it->second;
}

int GroupTable::lookup_product(int a, int b) const {
  const Perm& pa = elements_[a];
  const Perm& pb = elements_[b];
  if (exact_keys_) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < base_.size(); ++i)
      key |= static_cast<std::uint64_t>(pa(pb(static_cast<Point>(base_[i])))) << (16 * i);
    return key_index_.at(key);
  }
  return full_index_.at(compose(pa, pb));
}

int GroupTable::power(int a, int e) const {
  int acc = 0;
  for (int i = 0; i < e; ++i) acc = product(acc, a);
  return acc;
}

void GroupTable::build_tables() {
  const int n = order();

  // Pick a base: a point sequence whose pointwise stabilizer is trivial.
  {
    std::vector<int> candidates(n);
    for (int i = 0; i < n; ++i) candidates[i] = i;
    while (candidates.size() > 1) {
      int mover = -1;
      int pt = -1;
      for (int c : candidates) {
        if (c == 0) continue;
        for (int x = 0; x < deg_; ++x)
          if (elements_[c](static_cast<Point>(x)) != x) {
            mover = c;
            pt = x;
            break;
          }
        if (mover >= 0) break;
      }
      if (mover < 0) break;  // only duplicates of the identity, impossible
      base_.push_back(pt);
      std::vector<int> next;
      for (int c : candidates)
        if (elements_[c](static_cast<Point>(pt)) == pt) next.push_back(c);
      candidates.swap(next);
    }
  }

  exact_keys_ = base_.size() <= 4;
  if (exact_keys_) {
    key_index_.reserve(2 * n);
    for (int i = 0; i < n; ++i) {
      std::uint64_t key;
      base_key(elements_[i], key);
      key_index_.emplace(key, i);
    }
  } else {
    full_index_.reserve(2 * n);
    for (int i = 0; i < n; ++i) full_index_.emplace(elements_[i], i);
  }

  inv_.resize(n);
  for (int i = 0; i < n; ++i) inv_[i] = index_of(sublat::inverse(elements_[i]));

  if (n <= kProductTableLimit) {
    // Fill generator columns by lookup, then chain the rest through the
    // BFS parent decomposition j = parent * gen.
    prod_.assign(static_cast<std::size_t>(n) * n, 0);
    std::vector<std::pair<int, int>> parent(n, {-1, -1});  // j -> (j', gen)
    {
      // recover BFS parents: redo the closure walk over the final index space
      std::vector<char> seen(n, 0);
      seen[0] = 1;
      std::vector<int> queue{0};
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int e = queue[qi];
        for (int g : gen_idx_) {
          int f = index_of(compose(elements_[e], elements_[g]));
          if (!seen[f]) {
            seen[f] = 1;
            parent[f] = {e, g};
            queue.push_back(f);
          }
        }
      }
    }
    for (int i = 0; i < n; ++i) prod_[static_cast<std::size_t>(i) * n] = static_cast<std::uint16_t>(i);
    for (int g : gen_idx_)
      for (int i = 0; i < n; ++i)
        prod_[static_cast<std::size_t>(i) * n + g] =
            static_cast<std::uint16_t>(lookup_product(i, g));
    for (int j = 1; j < n; ++j) {
      auto [jp, g] = parent[j];
      if (jp < 0) continue;  // j is a generator column, already filled
      for (int i = 0; i < n; ++i) {
        int ij = prod_[static_cast<std::size_t>(i) * n + jp];
        prod_[static_cast<std::size_t>(i) * n + j] =
            prod_[static_cast<std::size_t>(ij) * n + g];
      }
    }
  }

  ord_.resize(n);
  ord_[0] = 1;
  for (int i = 1; i < n; ++i) {
    int k = 1;
    int acc = i;
    while (acc != 0) {
      acc = product(acc, i);
      ++k;
    }
    ord_[i] = k;
  }
}

GroupTable generate_elements(const std::vector<Perm>& generators, int element_cap) {
  if (generators.empty()) throw Error("generate_elements: empty generator list");
  const int deg = generators.front().degree();
  for (const Perm& g : generators)
    if (g.degree() != deg) throw Error("generate_elements: generator degree mismatch");

  GroupTable t;
  t.deg_ = deg;
  t.elements_.push_back(Perm::identity(deg));
  std::unordered_map<Perm, int, PermHash> index;
  index.emplace(t.elements_[0], 0);

  std::vector<Perm> gens;
  for (const Perm& g : generators)
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);

  for (std::size_t qi = 0; qi < t.elements_.size(); ++qi) {
    for (const Perm& g : gens) {
      Perm f = compose(t.elements_[qi], g);
      if (index.emplace(f, static_cast<int>(t.elements_.size())).second) {
        t.elements_.push_back(std::move(f));
        if (static_cast<int>(t.elements_.size()) > element_cap)
          throw BudgetError("generate_elements: element cap exceeded (" +
                            std::to_string(element_cap) + ")");
      }
    }
  }

  for (const Perm& g : gens) t.gen_idx_.push_back(index.at(g));
  t.build_tables();
  return t;
}

}  // namespace sublat
