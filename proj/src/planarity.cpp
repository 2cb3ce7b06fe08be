#include "planar/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace planar {

SimpleGraph simplify(const LabeledMultigraph& g)
{
	std::vector<std::pair<int, int>> edges;
	edges.reserve(g.edges().size());
	for (const auto& e : g.edges())
		edges.emplace_back(e.u, e.v);
	return SimpleGraph(g.n(), std::move(edges));
}

bool is_planar(const SimpleGraph& g)
{
	// Fewer than nine edges cannot hold a subdivided K5 or K3,3.
	if (g.n() < 5 || g.edge_count() < 9)
		return true;

	// Pendant trees never matter, so hand only the 2-core to the tester.
	const int n = g.n();
	auto adj = g.adjacency();
	std::vector<int> deg(n);
	std::vector<char> removed(n, 0);
	std::vector<int> stack;
	for (int v = 0; v < n; ++v) {
		deg[v] = static_cast<int>(adj[v].size());
		if (deg[v] <= 1)
			stack.push_back(v);
	}
	while (!stack.empty()) {
		int v = stack.back();
		stack.pop_back();
		if (removed[v])
			continue;
		removed[v] = 1;
		for (int w : adj[v])
			if (!removed[w] && --deg[w] == 1)
				stack.push_back(w);
	}
	std::vector<int> index(n, -1);
	int nc = 0;
	for (int v = 0; v < n; ++v)
		if (!removed[v])
			index[v] = nc++;
	long mc = 0;
	for (auto [u, v] : g.edges())
		if (index[u] >= 0 && index[v] >= 0)
			++mc;
	if (nc < 5 || mc < 9)
		return true;
	if (mc > 3L * nc - 6)
		return false;

	using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
	Graph bg(nc);
	for (auto [u, v] : g.edges())
		if (index[u] >= 0 && index[v] >= 0)
			boost::add_edge(index[u], index[v], bg);
	return boost::boyer_myrvold_planarity_test(bg);
}

bool is_planar_multi(const LabeledMultigraph& g) { return is_planar(simplify(g)); }

namespace {

using Row = std::uint32_t;

struct KuratowskiSearch
{
	int n = 0;
	std::array<Row, 16> adj{};
	std::vector<std::pair<int, int>> pairs;
	Row branch = 0;

	// Route pairs[k..] as internally disjoint paths avoiding `used`.
	bool route(std::size_t k, Row used)
	{
		if (k == pairs.size())
			return true;
		auto [a, b] = pairs[k];
		return extend(k, a, b, used);
	}

	bool extend(std::size_t k, int x, int b, Row used)
	{
		Row next = adj[x];
		while (next) {
			int y = std::countr_zero(next);
			next &= next - 1;
			if (y == b) {
				if (route(k + 1, used))
					return true;
				continue;
			}
			Row bit = Row(1) << y;
			if ((used & bit) || (branch & bit))
				continue;
			if (extend(k, y, b, used | bit))
				return true;
		}
		return false;
	}
};

// Remove degree <= 1 vertices and smooth degree-2 vertices until stable.
// Both operations preserve planarity of a simple graph.
void reduce(std::array<Row, 16>& adj, int n, Row& alive)
{
	bool changed = true;
	while (changed) {
		changed = false;
		for (int v = 0; v < n; ++v) {
			Row bit = Row(1) << v;
			if (!(alive & bit))
				continue;
			int d = std::popcount(adj[v]);
			if (d <= 1) {
				for (int w = 0; w < n; ++w)
					adj[w] &= ~bit;
				adj[v] = 0;
				alive &= ~bit;
				changed = true;
			} else if (d == 2) {
				int a = std::countr_zero(adj[v]);
				int b = std::countr_zero(adj[v] & (adj[v] - 1));
				adj[a] &= ~bit;
				adj[b] &= ~bit;
				adj[v] = 0;
				alive &= ~bit;
				// if a and b are already adjacent the path collapses onto that edge
				adj[a] |= Row(1) << b;
				adj[b] |= Row(1) << a;
				changed = true;
			}
		}
	}
}

} // namespace

bool is_planar_kuratowski(const SimpleGraph& g)
{
	const int n = g.n();
	if (n > 16)
		throw std::invalid_argument("Kuratowski oracle is limited to 16 vertices");
	KuratowskiSearch s;
	s.n = n;
	for (auto [u, v] : g.edges()) {
		s.adj[u] |= Row(1) << v;
		s.adj[v] |= Row(1) << u;
	}
	Row alive = n == 0 ? 0 : static_cast<Row>((std::uint64_t(1) << n) - 1);
	reduce(s.adj, n, alive);

	std::vector<int> deg3, deg4;
	for (int v = 0; v < n; ++v) {
		if (!(alive >> v & 1))
			continue;
		int d = std::popcount(s.adj[v]);
		if (d >= 3)
			deg3.push_back(v);
		if (d >= 4)
			deg4.push_back(v);
	}

	// K5 subdivisions: five branch vertices of degree >= 4.
	const int m4 = static_cast<int>(deg4.size());
	if (m4 >= 5) {
		std::vector<int> pick(5);
		for (int a = 0; a < m4; ++a)
			for (int b = a + 1; b < m4; ++b)
				for (int c = b + 1; c < m4; ++c)
					for (int d = c + 1; d < m4; ++d)
						for (int e = d + 1; e < m4; ++e) {
							pick = {deg4[a], deg4[b], deg4[c], deg4[d], deg4[e]};
							s.branch = 0;
							s.pairs.clear();
							for (int i = 0; i < 5; ++i) {
								s.branch |= Row(1) << pick[i];
								for (int j = i + 1; j < 5; ++j)
									s.pairs.emplace_back(pick[i], pick[j]);
							}
							if (s.route(0, 0))
								return false;
						}
	}

	// K3,3 subdivisions: six branch vertices of degree >= 3, split 3 + 3.
	const int m3 = static_cast<int>(deg3.size());
	if (m3 >= 6) {
		std::vector<int> idx(6);
		std::vector<int> six(6);
		for (idx[0] = 0; idx[0] < m3; ++idx[0])
			for (idx[1] = idx[0] + 1; idx[1] < m3; ++idx[1])
				for (idx[2] = idx[1] + 1; idx[2] < m3; ++idx[2])
					for (idx[3] = idx[2] + 1; idx[3] < m3; ++idx[3])
						for (idx[4] = idx[3] + 1; idx[4] < m3; ++idx[4])
							for (idx[5] = idx[4] + 1; idx[5] < m3; ++idx[5]) {
								for (int i = 0; i < 6; ++i)
									six[i] = deg3[idx[i]];
								s.branch = 0;
								for (int v : six)
									s.branch |= Row(1) << v;
								// side A always contains six[0]: 10 splits
								for (int p = 1; p < 6; ++p)
									for (int q = p + 1; q < 6; ++q) {
										std::vector<int> A{six[0], six[p], six[q]}, B;
										for (int i = 1; i < 6; ++i)
											if (i != p && i != q)
												B.push_back(six[i]);
										s.pairs.clear();
										for (int x : A)
											for (int y : B)
												s.pairs.emplace_back(x, y);
										if (s.route(0, 0))
											return false;
									}
							}
	}
	return true;
}

} // namespace planar
