#include "sublat/classify.hpp"

#include <algorithm>

#include "sublat/error.hpp"

namespace sublat {

std::vector<int> max_over(const ClassedLattice& lat, int h) {
  std::vector<int> out;
  if (h == lat.top) return out;
  for (int m : lat.maximal_indices())
    if (mask_subset(lat.subgroups[h].bits, lat.subgroups[m].bits)) out.push_back(m);
  std::sort(out.begin(), out.end());
  return out;
}

FlagWitness is_2maximal(const ClassedLattice& lat, int h) {
  if (h == lat.top) throw Error("is_2maximal: undefined for G itself");
  for (int m : max_over(lat, h))
    if (lat.is_cover(h, m)) return {true, m};
  return {false, -1};
}

FlagWitness is_strictly_2maximal(const ClassedLattice& lat, int h) {
  if (!is_2maximal(lat, h).value)
    throw Error("is_strictly_2maximal: defined on 2-maximal subgroups only");
  for (int m : max_over(lat, h))
    if (!lat.is_cover(h, m)) return {false, m};
  return {true, -1};
}

bool DegreeResult::contains(int n) const {
  return std::find(degrees.begin(), degrees.end(), n) != degrees.end();
}

DegreeResult maximality_degrees(const ClassedLattice& lat, int h) {
  if (h == lat.top) throw Error("maximality_degrees: undefined for G itself");
  const int n = lat.size();
  std::vector<char> in_scope(n, 0);
  for (int i = 0; i < n; ++i)
    in_scope[i] = mask_subset(lat.subgroups[h].bits, lat.subgroups[i].bits);
  if (!in_scope[h]) throw Error("maximality_degrees: subgroup not in scope");

  // lengths[i]: bitmask of cover-chain lengths from i up to the top.
  std::vector<std::uint64_t> lengths(n, 0);
  std::vector<char> done(n, 0);
  auto dfs = [&](auto&& self, int i) -> std::uint64_t {
    if (done[i]) return lengths[i];
    done[i] = 1;
    std::uint64_t acc = i == lat.top ? 1 : 0;
    for (int u : lat.covers_up[i])
      if (in_scope[u]) acc |= self(self, u) << 1;
    lengths[i] = acc;
    return acc;
  };
  dfs(dfs, h);

  DegreeResult out;
  for (int d = 1; d < 64; ++d)
    if (lengths[h] >> d & 1) out.degrees.push_back(d);

  for (int d : out.degrees) {
    ChainCertificate cert;
    int cur = h;
    int remaining = d;
    cert.subgroup_indices.push_back(cur);
    cert.orders.push_back(lat.order_of(cur));
    while (cur != lat.top) {
      bool advanced = false;
      for (int u : lat.covers_up[cur]) {
        if (!in_scope[u] || !done[u]) continue;
        if (remaining >= 1 && (lengths[u] >> (remaining - 1) & 1)) {
          cur = u;
          --remaining;
          cert.subgroup_indices.push_back(cur);
          cert.orders.push_back(lat.order_of(cur));
          advanced = true;
          break;
        }
      }
      if (!advanced) throw Error("maximality_degrees: certificate walk failed");
    }
    out.certificate.emplace(d, std::move(cert));
  }
  return out;
}

Max2Sets max2_sets(const ClassedLattice& lat) {
  if (lat.scope != ClassedLattice::Scope::Full)
    throw Error("max2_sets: requires a full-scope lattice");
  Max2Sets out;
  std::vector<char> two_max(lat.size(), 0);
  for (int m : lat.maximal_indices())
    for (int a : lat.covers_down[m]) two_max[a] = 1;

  std::vector<char> cls_seen(lat.classes.size(), 0);
  for (int i = 0; i < lat.size(); ++i) {
    if (!two_max[i]) continue;
    ++out.max2_subgroup_count;
    if (!cls_seen[lat.class_of[i]]) cls_seen[lat.class_of[i]] = 1;
  }
  for (std::size_t c = 0; c < lat.classes.size(); ++c) {
    if (!cls_seen[c]) continue;
    int rep = lat.class_rep(static_cast<int>(c));
    out.max2_class_reps.push_back(rep);
    if (is_strictly_2maximal(lat, rep).value) {
      out.strict_class_reps.push_back(rep);
      out.strict_subgroup_count += static_cast<long long>(lat.classes[c].size());
    }
  }
  return out;
}

MaximalityProfile maximality_profile(const ClassedLattice& lat, int h) {
  MaximalityProfile p;
  p.subject = h;
  p.max_over = max_over(lat, h);
  p.is_2max = is_2maximal(lat, h).value;
  p.is_strictly_2max = p.is_2max && is_strictly_2maximal(lat, h).value;
  p.degrees = maximality_degrees(lat, h);
  return p;
}

}  // namespace sublat
