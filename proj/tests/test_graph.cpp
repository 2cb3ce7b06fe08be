#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "planar/graph.hpp"
#include "planar/montecarlo.hpp"

using namespace planar;

namespace {

LabeledMultigraph random_multigraph(int n, int edges, CounterRng& rng)
{
	std::vector<std::pair<int, int>> pairs;
	for (int i = 0; i < edges; ++i)
		pairs.push_back({int(rng.below(n)), int(rng.below(n))});
	return LabeledMultigraph::from_pairs(n, pairs);
}

} // namespace

TEST_CASE("simple graph validation")
{
	CHECK_THROWS_AS(SimpleGraph(3, {{0, 0}}), std::invalid_argument);
	CHECK_THROWS_AS(SimpleGraph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
	CHECK_THROWS(SimpleGraph(3, {{0, 3}}));
	SimpleGraph g(4, {{2, 1}, {0, 3}});
	CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 3}, {1, 2}});
	CHECK(g.has_edge(2, 1));
	CHECK_FALSE(g.has_edge(0, 1));
}

TEST_CASE("multigraph bookkeeping")
{
	auto g = LabeledMultigraph::from_pairs(3, {{0, 1}, {1, 0}, {2, 2}, {0, 2}});
	CHECK(g.multiplicity(0, 1) == 2);
	CHECK(g.loops(2) == 1);
	CHECK(g.degree(2) == 3); // a loop adds two
	CHECK(g.edge_count() == 4);
	CHECK_FALSE(g.is_simple());
	// 1/2! for the double edge, 1/2 for the loop.
	CHECK(weight(g) == Rational(1, 4));
}

TEST_CASE("weight of repeated loops")
{
	auto g = LabeledMultigraph::from_pairs(1, {{0, 0}, {0, 0}});
	CHECK(weight(g) == Rational(1, 8));
}

TEST_CASE("excess and complexity")
{
	// K4 has 6 edges on 4 vertices.
	auto k4 = SimpleGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}).to_multigraph();
	CHECK(excess(k4) == 2);
	CHECK(is_complex(k4));
	auto cycle = SimpleGraph(3, {{0, 1}, {1, 2}, {0, 2}}).to_multigraph();
	CHECK(excess(cycle) == 0);
	CHECK_FALSE(is_complex(cycle));
	CHECK(is_complex(LabeledMultigraph(0)));
}

TEST_CASE("kernel of a theta graph with a pendant tree")
{
	// Two vertices joined by three paths of length 2, plus a pendant path.
	auto g = SimpleGraph(7, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}, {4, 5}, {5, 6}}).to_multigraph();
	auto kd = kernelize(g);
	// Vertex 4 loses its pendant path in the core and becomes a path vertex.
	CHECK(kd.kernel_vertices == std::vector<int>{0, 1});
	CHECK(kd.core_vertices == std::vector<int>{0, 1, 2, 3, 4});
	CHECK(kd.kernel.edge_count() == 3);
	CHECK(kd.kernel.multiplicity(0, 1) == 3);
	CHECK(deficiency(kd) == 0);
	CHECK(kd.forest_parent[6] == 5);
	CHECK(reassemble(kd) == g);
}

TEST_CASE("deficiency of K5 minus an edge")
{
	std::vector<std::pair<int, int>> e;
	for (int u = 0; u < 5; ++u)
		for (int v = u + 1; v < 5; ++v)
			if (!(u == 0 && v == 1))
				e.push_back({u, v});
	auto g = SimpleGraph(5, e).to_multigraph();
	// Degrees 3, 3, 4, 4, 4.
	CHECK(deficiency(g) == 3);
}

TEST_CASE("property: kernelize then reassemble is the identity")
{
	CounterRng rng(11, 0);
	for (int trial = 0; trial < 400; ++trial) {
		int n = 1 + int(rng.below(12));
		int m = int(rng.below(2 * n + 2));
		auto g = random_multigraph(n, m, rng);
		auto kd = kernelize(g);
		CHECK(reassemble(kd) == g);
		for (int v : kd.kernel_vertices)
			CHECK(std::binary_search(kd.core_vertices.begin(), kd.core_vertices.end(), v));
		for (int v = 0; v < kd.kernel.n(); ++v)
			CHECK(kd.kernel.degree(v) >= 3);
		CHECK(deficiency(kd) >= 0);
	}
}

TEST_CASE("property: components partition the vertex set")
{
	CounterRng rng(12, 0);
	for (int trial = 0; trial < 200; ++trial) {
		int n = 1 + int(rng.below(30));
		auto g = sample_gnm(n, long(rng.below(std::uint64_t(n) * (n - 1) / 2 + 1)), rng);
		auto cs = components(g);
		std::vector<int> all;
		for (const auto& c : cs)
			all.insert(all.end(), c.begin(), c.end());
		std::sort(all.begin(), all.end());
		std::vector<int> expect(n);
		std::iota(expect.begin(), expect.end(), 0);
		CHECK(all == expect);
		// Excess is additive over components.
		CHECK(excess(g) == g.edge_count() - n);
	}
}

TEST_CASE("json uses 1-based labels and round-trips")
{
	auto g = LabeledMultigraph::from_pairs(3, {{0, 1}, {0, 1}, {2, 2}});
	auto j = to_json(g);
	CHECK(multigraph_from_json(j) == g);
	CHECK(j["edges"][0] == json::array({1, 2, 2}));
}
