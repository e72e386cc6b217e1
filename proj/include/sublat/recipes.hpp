#pragma once

// Named builders for the group corpus: cyclic, dihedral, symmetric,
// alternating, elementary abelian, quaternion, PSL(2,q) on the projective
// line, one-dimensional affine groups, vector-space semidirect products
// with a matrix group, direct products and explicit generator lists.

#include <string>
#include <vector>

#include "sublat/group.hpp"

namespace sublat {

struct GroupRecipe {
  enum class Family {
    Cyclic,
    Dihedral,
    Symmetric,
    Alternating,
    ElementaryAbelian,
    Quaternion8,
    Psl2,
    Affine,
    MatrixSemidirect,
    DirectProduct,
    ExplicitGenerators,
  };

  Family family = Family::Cyclic;
  std::vector<int> params;                      // family parameters
  std::vector<std::vector<int>> matrices;       // MatrixSemidirect: k*k row-major
  int degree = 0;                               // ExplicitGenerators
  std::vector<std::string> generator_text;      // ExplicitGenerators
  std::vector<GroupRecipe> factors;             // DirectProduct
  std::string name;
};

GroupTable build(const GroupRecipe& recipe, int element_cap = kDefaultElementCap);

// Individual builders. Each checks the expected order of the result.
GroupTable cyclic_group(int n, int cap = kDefaultElementCap);
// Convention: dihedral(n) is the dihedral group of order n (n even).
GroupTable dihedral_group(int n, int cap = kDefaultElementCap);
GroupTable symmetric_group(int n, int cap = kDefaultElementCap);
GroupTable alternating_group(int n, int cap = kDefaultElementCap);
GroupTable elementary_abelian_group(int p, int k, int cap = kDefaultElementCap);
GroupTable quaternion8_group(int cap = kDefaultElementCap);
// PSL(2,q) acting on the q+1 points of the projective line; supported
// q in {4,5,7,8,9,11,13,17,27}.
GroupTable psl2(int q, int cap = kDefaultElementCap);
// All maps x -> ax+b, a != 0, on GF(q); order q(q-1).
GroupTable affine(int q, int cap = kDefaultElementCap);
// <translations of GF(p)^k> : <matrix generators>, acting on the p^k vectors.
GroupTable matrix_semidirect(int p, int k, const std::vector<std::vector<int>>& matrix_generators,
                             int cap = kDefaultElementCap);
GroupTable direct_product(const GroupTable& a, const GroupTable& b, int cap = kDefaultElementCap);

// The C3^2 : Q8 model of U3(2).
GroupRecipe u3_2_recipe();

// CLI identifiers: "cyclic_12", "dihedral_14", "symmetric_4", "alternating_6",
// "elementary_abelian_3_2", "quaternion8", "psl2_17", "affine_9", "u3_2",
// and 'x'-joined direct products such as "cyclic_3xcyclic_3".
GroupRecipe parse_recipe_id(const std::string& id);

}  // namespace sublat
