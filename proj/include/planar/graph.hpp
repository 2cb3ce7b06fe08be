#pragma once

// Labeled graphs and multigraphs, plus the core / kernel machinery.
//
// Vertices are 0-based inside the library; every JSON form is 1-based
// (labels 1..n) so that files line up with the usual mathematical notation.

#include <cstdint>
#include <utility>
#include <vector>

#include "planar/exact.hpp"

namespace planar {

struct MultiEdge
{
	int u = 0; // u < v
	int v = 0;
	int mult = 0;

	bool operator==(const MultiEdge&) const = default;
};

class LabeledMultigraph
{
public:
	LabeledMultigraph() = default;
	explicit LabeledMultigraph(int n);

	// Sorts and merges; loops are pairs with u == v.
	static LabeledMultigraph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

	void add_edge(int u, int v, int count = 1);

	int n() const { return n_; }
	int loops(int v) const { return loops_[v]; }
	const std::vector<int>& loop_counts() const { return loops_; }
	const std::vector<MultiEdge>& edges() const { return edges_; }
	int multiplicity(int u, int v) const;
	int degree(int v) const;
	std::vector<int> degrees() const;
	long edge_count() const;
	long loop_total() const;
	bool is_simple() const;

	// Adjacency with repetition: neighbour v appears mult(u,v) times, loops are skipped.
	std::vector<std::vector<int>> neighbours() const;

	bool operator==(const LabeledMultigraph&) const = default;

private:
	int n_ = 0;
	std::vector<int> loops_;
	std::vector<MultiEdge> edges_; // sorted by (u, v), mult >= 1
};

class SimpleGraph
{
public:
	SimpleGraph() = default;
	explicit SimpleGraph(int n) : n_(n) {}
	// Throws std::invalid_argument on loops, repeated pairs or labels out of range.
	SimpleGraph(int n, std::vector<std::pair<int, int>> edges);

	int n() const { return n_; }
	const std::vector<std::pair<int, int>>& edges() const { return edges_; }
	long edge_count() const { return static_cast<long>(edges_.size()); }
	bool has_edge(int u, int v) const;
	std::vector<std::vector<int>> adjacency() const;

	LabeledMultigraph to_multigraph() const;

	bool operator==(const SimpleGraph&) const = default;

private:
	int n_ = 0;
	std::vector<std::pair<int, int>> edges_; // sorted, u < v
};

std::vector<std::vector<int>> components(const LabeledMultigraph& g);
std::vector<std::vector<int>> components(const SimpleGraph& g);

long excess(const LabeledMultigraph& g);
long excess(const SimpleGraph& g);

// Every component has excess >= 1 (vacuously true for the empty graph).
bool is_complex(const LabeledMultigraph& g);

// Vertices surviving repeated deletion of degree <= 1 vertices.
std::vector<int> core_vertices(const LabeledMultigraph& g);

// Induced subgraph on core_vertices(g), relabelled in increasing order.
LabeledMultigraph core(const LabeledMultigraph& g);

LabeledMultigraph induced_subgraph(const LabeledMultigraph& g, const std::vector<int>& vertices);

struct KernelPath
{
	int a = 0; // endpoints in original labels, a <= b; a == b for a kernel loop
	int b = 0;
	std::vector<int> interior; // degree-2 core vertices from a to b
};

struct KernelDecomposition
{
	int n = 0;
	std::vector<int> core_vertices;   // original labels, sorted
	std::vector<int> kernel_vertices; // original labels, sorted; kernel vertex i is kernel_vertices[i]
	LabeledMultigraph kernel;
	std::vector<KernelPath> edge_paths; // one entry per kernel edge (multiplicities expanded)
	std::vector<std::vector<int>> isolated_cycles;
	std::vector<int> forest_parent; // parent towards the core; -1 for core vertices and tree roots
};

KernelDecomposition kernelize(const LabeledMultigraph& g);
LabeledMultigraph reassemble(const KernelDecomposition& kd);

// Sum of kernel degrees minus 3 per kernel vertex; 0 for an empty kernel.
long deficiency(const KernelDecomposition& kd);
long deficiency(const LabeledMultigraph& g);

// 2^-loops style weight: k parallel loops at a vertex give 2^-k / k!,
// a pair of multiplicity m gives 1/m!.
Rational weight(const LabeledMultigraph& g);

json to_json(const LabeledMultigraph& g);
LabeledMultigraph multigraph_from_json(const json& j);
json to_json(const SimpleGraph& g);

} // namespace planar
