#pragma once

// DOT export of the conjugacy-class graph of a lattice: one vertex per class
// labeled with order and a structure hint, one edge per covering class pair,
// pointing upward. Output is byte-identical across runs.

#include <string>

#include "sublat/lattice.hpp"

namespace sublat {

std::string export_dot(const ClassedLattice& lat);

}  // namespace sublat
