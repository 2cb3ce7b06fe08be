#include "doctest.h"

#include <algorithm>

#include "planar/bitgraph.hpp"
#include "planar/montecarlo.hpp"
#include "planar/planarity.hpp"

using namespace planar;

namespace {

SimpleGraph complete(int n)
{
	std::vector<std::pair<int, int>> e;
	for (int u = 0; u < n; ++u)
		for (int v = u + 1; v < n; ++v)
			e.push_back({u, v});
	return SimpleGraph(n, e);
}

SimpleGraph k33()
{
	std::vector<std::pair<int, int>> e;
	for (int u = 0; u < 3; ++u)
		for (int v = 3; v < 6; ++v)
			e.push_back({u, v});
	return SimpleGraph(6, e);
}

} // namespace

TEST_CASE("Kuratowski graphs are not planar")
{
	CHECK(is_planar(complete(4)));
	CHECK_FALSE(is_planar(complete(5)));
	CHECK_FALSE(is_planar(k33()));
	CHECK_FALSE(is_planar_kuratowski(complete(5)));
	CHECK_FALSE(is_planar_kuratowski(k33()));
	CHECK(is_planar_kuratowski(complete(4)));
}

TEST_CASE("a subdivided K3,3 is not planar")
{
	auto g = k33();
	std::vector<std::pair<int, int>> e;
	int next = 6;
	for (auto [u, v] : g.edges()) {
		e.push_back({u, next});
		e.push_back({v, next});
		++next;
	}
	SimpleGraph s(next, e);
	CHECK_FALSE(is_planar(s));
	CHECK_FALSE(is_planar_kuratowski(s));
}

TEST_CASE("the Petersen graph is not planar")
{
	SimpleGraph p(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
	                   {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
	CHECK_FALSE(is_planar(p));
	CHECK_FALSE(is_planar_kuratowski(p));
}

TEST_CASE("multigraph planarity ignores loops and multiplicities")
{
	auto g = LabeledMultigraph::from_pairs(3, {{0, 1}, {0, 1}, {1, 1}, {1, 2}});
	CHECK(is_planar_multi(g));
	CHECK(simplify(g).edge_count() == 2);
}

TEST_CASE("property: Boyer-Myrvold agrees with the Kuratowski search")
{
	CounterRng rng(21, 0);
	int nonplanar = 0;
	for (int trial = 0; trial < 300; ++trial) {
		int n = 5 + int(rng.below(5));
		long maxM = long(n) * (n - 1) / 2;
		long M = std::min(maxM, long(n + 2 + rng.below(2 * n)));
		auto g = sample_gnm(n, M, rng);
		bool fast = is_planar(g);
		CHECK(fast == is_planar_kuratowski(g));
		nonplanar += !fast;
	}
	CHECK(nonplanar > 20); // the sample exercises both answers
}

TEST_CASE("property: the bit-mask test agrees with the graph test")
{
	CounterRng rng(22, 0);
	for (int trial = 0; trial < 2000; ++trial) {
		int n = 4 + int(rng.below(small::max_vertices - 3));
		long M = long(rng.below(std::uint64_t(3 * n)));
		M = std::min<long>(M, long(n) * (n - 1) / 2);
		auto g = sample_gnm(n, M, rng);
		auto mask = small::mask_of(g);
		CHECK(small::to_graph(n, mask) == g);
		CHECK(small::is_planar(n, mask) == is_planar(g));
	}
}

TEST_CASE("property: edge-maximal planar graphs have 3n - 6 edges")
{
	// Greedily add random pairs while planarity holds.
	CounterRng rng(23, 0);
	for (int n : {5, 8, 12, 20}) {
		std::vector<std::pair<int, int>> e;
		std::vector<std::pair<int, int>> pairs;
		for (int u = 0; u < n; ++u)
			for (int v = u + 1; v < n; ++v)
				pairs.push_back({u, v});
		std::shuffle(pairs.begin(), pairs.end(), rng);
		for (auto p : pairs) {
			e.push_back(p);
			if (!is_planar(SimpleGraph(n, e)))
				e.pop_back();
		}
		CHECK(long(e.size()) == 3L * n - 6);
	}
}
