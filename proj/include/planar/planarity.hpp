#pragma once

// Planarity predicates.
//
// is_planar() runs the Boyer-Myrvold test from Boost.Graph on the 2-core of
// the input; is_planar_kuratowski() is an independent, deliberately naive
// search for a subdivided K5 or K3,3 used only to cross-check the fast path.

#include "planar/graph.hpp"

namespace planar {

// Drop loops and cap multiplicities at one.
SimpleGraph simplify(const LabeledMultigraph& g);

bool is_planar(const SimpleGraph& g);
bool is_planar_multi(const LabeledMultigraph& g);

// Exhaustive subdivision search after degree <= 2 reductions.  Exponential;
// refuses graphs with more than 16 vertices.
bool is_planar_kuratowski(const SimpleGraph& g);

} // namespace planar
