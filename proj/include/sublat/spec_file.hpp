#pragma once

// Line-oriented group spec files:
//
//   name: my_group
//   degree: 9
//   gens: (1,2,3)(4,5,6)(7,8,9), (2,4,3,7)(5,6,9,8)
//
// or, instead of degree/gens:
//
//   recipe: psl2 8
//
// '#' starts a comment. Exactly one of gens / recipe must be present.

#include <iosfwd>
#include <string>

#include "sublat/group.hpp"
#include "sublat/recipes.hpp"

namespace sublat {

struct GroupSpecFile {
  std::string name;
  int degree = 0;
  std::vector<std::string> generators;
  bool has_recipe = false;
  GroupRecipe recipe;
};

GroupSpecFile parse_spec(std::istream& in);
GroupSpecFile parse_spec_file(const std::string& path);

struct LoadedGroup {
  std::string name;
  GroupTable table;
};
LoadedGroup load_spec(const std::string& path, int element_cap = kDefaultElementCap);

// Writes a reloadable spec file from a group's generators.
void write_spec(std::ostream& out, const std::string& name, const GroupTable& t);

}  // namespace sublat
