#pragma once

// Maximality classification over a ClassedLattice: Max(G,H), 2-maximal and
// strictly 2-maximal predicates, achievable maximality degrees with chain
// certificates, and the Max2 / Max2* class tables.

#include <cstdint>
#include <map>
#include <vector>

#include "sublat/lattice.hpp"

namespace sublat {

// A chain H = S0 < S1 < ... < Sn = G in which every step is a covering step;
// witnesses that H is n-maximal.
struct ChainCertificate {
  std::vector<int> subgroup_indices;  // bottom to top
  std::vector<long long> orders;
};

// Indices of the maximal subgroups of G containing subgroup `h`;
// empty exactly when h is G itself.
std::vector<int> max_over(const ClassedLattice& lat, int h);

struct FlagWitness {
  bool value = false;
  int witness = -1;  // covering maximal when true / non-covering maximal when false
};

// True iff some maximal subgroup of G covers h. Throws for h = G.
FlagWitness is_2maximal(const ClassedLattice& lat, int h);
// True iff every maximal subgroup of G containing h covers h; defined on
// 2-maximal subgroups only (throws otherwise). On false the witness is a
// maximal overgroup in which h is not maximal.
FlagWitness is_strictly_2maximal(const ClassedLattice& lat, int h);

struct DegreeResult {
  std::vector<int> degrees;  // ascending
  std::map<int, ChainCertificate> certificate;
  bool contains(int n) const;
};

// Lengths of maximal chains from h to G within the interval above h,
// with one certificate per achieved length. Throws for h = G.
DegreeResult maximality_degrees(const ClassedLattice& lat, int h);

struct Max2Sets {
  std::vector<int> max2_class_reps;    // one representative per class
  std::vector<int> strict_class_reps;  // the strictly 2-maximal subset
  long long max2_subgroup_count = 0;   // raw counts over all conjugates
  long long strict_subgroup_count = 0;
};

// Requires full scope.
Max2Sets max2_sets(const ClassedLattice& lat);

struct MaximalityProfile {
  int subject = -1;
  std::vector<int> max_over;
  bool is_2max = false;
  bool is_strictly_2max = false;
  DegreeResult degrees;
};

MaximalityProfile maximality_profile(const ClassedLattice& lat, int h);

}  // namespace sublat
