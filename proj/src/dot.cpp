#include "sublat/dot.hpp"

#include <set>
#include <sstream>

#include "sublat/structure.hpp"

namespace sublat {

std::string export_dot(const ClassedLattice& lat) {
  std::ostringstream out;
  out << "digraph subgroup_lattice {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (std::size_t c = 0; c < lat.classes.size(); ++c) {
    int rep = lat.class_rep(static_cast<int>(c));
    out << "  c" << c << " [label=\"order=" << lat.order_of(rep) << " ["
        << structure_hint(*lat.host, lat.subgroups[rep]) << "]";
    if (lat.classes[c].size() > 1) out << " x" << lat.classes[c].size();
    out << "\"];\n";
  }
  std::set<std::pair<int, int>> edges;
  for (auto [a, b] : lat.covers) edges.emplace(lat.class_of[a], lat.class_of[b]);
  for (auto [a, b] : edges) out << "  c" << a << " -> c" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace sublat
