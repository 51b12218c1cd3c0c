#pragma once

#include <cstddef>
#include <string>

#include "skewpair/system.hpp"

namespace skewpair::construct {

/// Builds a skew Bollobas system with |A_i| <= a and |B_i| <= b attaining all
/// four extremal values at once:
///   pairs        m            = C(a+b, a)
///   |union A_i|               = C(a+b+1, a)   - 1
///   |union B_i|               = C(a+b+1, a+1) - 1
///   ground size               = C(a+b+2, a+1) - C(a+b, a) - 1
///
/// Recursive scheme: the (a-1, b) system's pairs gain a shared fresh point x
/// in their A-sets and come first; the (a, b-1) system's pairs gain x in
/// their B-sets and follow.  Cross pairs then intersect in x.  Base cases are
/// the single pairs ({}, {0..b-1}) and ({0..a-1}, {}).  The left block keeps
/// labels 0..n1-1, the right block is shifted by n1, and x = n1 + n2.
SetPairSystem extremal_system(unsigned a, unsigned b);

/// Human-readable recursion tree of extremal_system: one line per node,
/// leaves marked, internal nodes annotated with the fresh point's label in
/// the final system.  Throws size_error if the tree exceeds node_limit nodes
/// (the tree has 2*C(a+b, a) - 1 of them).
std::string construction_trace(unsigned a, unsigned b, std::size_t node_limit = 65536);

} // namespace skewpair::construct
