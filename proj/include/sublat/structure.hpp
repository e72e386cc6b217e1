#pragma once

// Structural predicates (soluble, supersoluble, p-soluble, nilpotent,
// primary), chief factor orders, distinguished subgroups (Frattini, Fitting,
// p-cores, minimal normals, Sylow) and heuristic structure labels.

#include <string>
#include <vector>

#include "sublat/lattice.hpp"

namespace sublat {

std::vector<int> prime_divisors(long long n);
bool is_prime_power(long long n);  // 1 counts as a prime power

bool is_abelian(const GroupTable& t);
bool is_primary(const GroupTable& t);
bool is_soluble(const GroupTable& t);
// Chief factor orders of G, a Jordan-Hoelder invariant; deterministic
// construction through quotients by minimal normal subgroups.
std::vector<long long> chief_factor_orders(const GroupTable& t);
bool is_supersoluble(const GroupTable& t);
bool is_p_soluble(const GroupTable& t, int p);
bool is_nilpotent(const GroupTable& t);

SubgroupSet derived_subgroup(const GroupTable& t);

// Subgroup-level variants working on element masks.
bool subgroup_is_abelian(const GroupTable& t, const SubgroupSet& s);
bool subgroup_is_nilpotent(const GroupTable& t, const SubgroupSet& s);

// Normal-closure series test: G >= K^G >= K^(K^G) >= ... reaches K.
bool is_subnormal(const GroupTable& t, const SubgroupSet& k);

// Distinguished subgroups, as indices into a full-scope lattice.
int frattini(const ClassedLattice& lat);
int fitting(const ClassedLattice& lat);
int o_p(const ClassedLattice& lat, int p);
int o_p_prime(const ClassedLattice& lat, int p);
std::vector<int> minimal_normals(const ClassedLattice& lat);
int sylow(const ClassedLattice& lat, int p);
std::vector<int> normal_indices(const ClassedLattice& lat);

// Heuristic label for reports and graph exports: "C12", "2^3", "dihedral",
// "quaternion", "abelian" or "order-N". Not an isomorphism certificate.
std::string structure_hint(const GroupTable& t, const SubgroupSet& s);

}  // namespace sublat
