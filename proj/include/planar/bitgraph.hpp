#pragma once

// Bit-packed simple graphs on at most 11 vertices: bit i of the mask is the
// i-th pair in lexicographic order (0,1), (0,2), ..., (n-2,n-1).  Used by the
// exhaustive oracles and by small-n samplers, where per-graph allocation
// would dominate the run time.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "planar/graph.hpp"

namespace planar::small {

using Mask = std::uint64_t;
using Rows = std::array<std::uint16_t, 16>;

constexpr int max_vertices = 11;

int pair_count(int n);
std::pair<int, int> pair_at(int n, int index);
int pair_index(int n, int u, int v);

Rows rows(int n, Mask m);
Mask mask_of(const SimpleGraph& g);
SimpleGraph to_graph(int n, Mask m);

// Mask of the 2-core (pendant trees peeled away).
Mask core_mask(int n, Mask m);

// Exact planarity; memoised on the 2-core for n <= 8.
bool is_planar(int n, Mask m);

struct Component
{
	std::uint16_t vertices = 0;
	int size = 0;
	int edges = 0;
	int excess() const { return edges - size; }
};

std::vector<Component> components(int n, Mask m);

// Kernel deficiency of the graph (sum over kernel vertices of core degree - 3).
int deficiency(int n, Mask m);

struct Shape
{
	int largest = 0;         // L1
	int second = 0;          // L2
	int complex_size = 0;    // vertices in components of excess >= 1
	int complex_excess = 0;  // summed excess of those components
	bool largest_is_tree = false;
	bool all_complex = false;
	bool no_complex = false;
	bool connected = false;
};

Shape shape(int n, Mask m);

} // namespace planar::small
