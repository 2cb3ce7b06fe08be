#include "planar/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace planar {

namespace {

void check_vertex(int v, int n)
{
	if (v < 0 || v >= n)
		throw std::out_of_range("vertex label out of range");
}

struct UnionFind
{
	std::vector<int> parent;
	explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
	int find(int x)
	{
		while (parent[x] != x) {
			parent[x] = parent[parent[x]];
			x = parent[x];
		}
		return x;
	}
	void unite(int a, int b)
	{
		a = find(a);
		b = find(b);
		if (a != b)
			parent[std::max(a, b)] = std::min(a, b);
	}
};

std::vector<std::vector<int>> group_components(UnionFind& uf, int n)
{
	std::vector<int> index(n, -1);
	std::vector<std::vector<int>> out;
	for (int v = 0; v < n; ++v) {
		int r = uf.find(v);
		if (index[r] < 0) {
			index[r] = static_cast<int>(out.size());
			out.emplace_back();
		}
		out[index[r]].push_back(v);
	}
	return out;
}

} // namespace

LabeledMultigraph::LabeledMultigraph(int n) : n_(n), loops_(n, 0)
{
	if (n < 0)
		throw std::invalid_argument("negative vertex count");
}

LabeledMultigraph LabeledMultigraph::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs)
{
	LabeledMultigraph g(n);
	std::vector<std::pair<int, int>> sorted;
	sorted.reserve(pairs.size());
	for (auto [u, v] : pairs) {
		check_vertex(u, n);
		check_vertex(v, n);
		if (u == v)
			++g.loops_[u];
		else
			sorted.emplace_back(std::min(u, v), std::max(u, v));
	}
	std::sort(sorted.begin(), sorted.end());
	for (auto [u, v] : sorted) {
		if (!g.edges_.empty() && g.edges_.back().u == u && g.edges_.back().v == v)
			++g.edges_.back().mult;
		else
			g.edges_.push_back({u, v, 1});
	}
	return g;
}

void LabeledMultigraph::add_edge(int u, int v, int count)
{
	check_vertex(u, n_);
	check_vertex(v, n_);
	if (count < 0)
		throw std::invalid_argument("negative multiplicity");
	if (count == 0)
		return;
	if (u == v) {
		loops_[u] += count;
		return;
	}
	if (u > v)
		std::swap(u, v);
	auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v),
	                           [](const MultiEdge& e, const std::pair<int, int>& p) {
		                           return std::make_pair(e.u, e.v) < p;
	                           });
	if (it != edges_.end() && it->u == u && it->v == v)
		it->mult += count;
	else
		edges_.insert(it, MultiEdge{u, v, count});
}

int LabeledMultigraph::multiplicity(int u, int v) const
{
	if (u == v)
		return loops_[u];
	if (u > v)
		std::swap(u, v);
	auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v),
	                           [](const MultiEdge& e, const std::pair<int, int>& p) {
		                           return std::make_pair(e.u, e.v) < p;
	                           });
	return (it != edges_.end() && it->u == u && it->v == v) ? it->mult : 0;
}

std::vector<int> LabeledMultigraph::degrees() const
{
	std::vector<int> d(n_, 0);
	for (int v = 0; v < n_; ++v)
		d[v] = 2 * loops_[v];
	for (const auto& e : edges_) {
		d[e.u] += e.mult;
		d[e.v] += e.mult;
	}
	return d;
}

int LabeledMultigraph::degree(int v) const
{
	check_vertex(v, n_);
	int d = 2 * loops_[v];
	for (const auto& e : edges_)
		if (e.u == v || e.v == v)
			d += e.mult;
	return d;
}

long LabeledMultigraph::edge_count() const
{
	long m = loop_total();
	for (const auto& e : edges_)
		m += e.mult;
	return m;
}

long LabeledMultigraph::loop_total() const { return std::accumulate(loops_.begin(), loops_.end(), 0L); }

bool LabeledMultigraph::is_simple() const
{
	if (loop_total() != 0)
		return false;
	return std::all_of(edges_.begin(), edges_.end(), [](const MultiEdge& e) { return e.mult <= 1; });
}

std::vector<std::vector<int>> LabeledMultigraph::neighbours() const
{
	std::vector<std::vector<int>> nb(n_);
	for (const auto& e : edges_)
		for (int i = 0; i < e.mult; ++i) {
			nb[e.u].push_back(e.v);
			nb[e.v].push_back(e.u);
		}
	return nb;
}

SimpleGraph::SimpleGraph(int n, std::vector<std::pair<int, int>> edges) : n_(n), edges_(std::move(edges))
{
	for (auto& [u, v] : edges_) {
		check_vertex(u, n);
		check_vertex(v, n);
		if (u == v)
			throw std::invalid_argument("simple graph cannot have loops");
		if (u > v)
			std::swap(u, v);
	}
	std::sort(edges_.begin(), edges_.end());
	if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
		throw std::invalid_argument("simple graph cannot have repeated edges");
}

bool SimpleGraph::has_edge(int u, int v) const
{
	if (u > v)
		std::swap(u, v);
	return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

std::vector<std::vector<int>> SimpleGraph::adjacency() const
{
	std::vector<std::vector<int>> adj(n_);
	for (auto [u, v] : edges_) {
		adj[u].push_back(v);
		adj[v].push_back(u);
	}
	return adj;
}

LabeledMultigraph SimpleGraph::to_multigraph() const { return LabeledMultigraph::from_pairs(n_, edges_); }

std::vector<std::vector<int>> components(const LabeledMultigraph& g)
{
	UnionFind uf(g.n());
	for (const auto& e : g.edges())
		uf.unite(e.u, e.v);
	return group_components(uf, g.n());
}

std::vector<std::vector<int>> components(const SimpleGraph& g)
{
	UnionFind uf(g.n());
	for (auto [u, v] : g.edges())
		uf.unite(u, v);
	return group_components(uf, g.n());
}

long excess(const LabeledMultigraph& g) { return g.edge_count() - g.n(); }
long excess(const SimpleGraph& g) { return g.edge_count() - g.n(); }

bool is_complex(const LabeledMultigraph& g)
{
	UnionFind uf(g.n());
	for (const auto& e : g.edges())
		uf.unite(e.u, e.v);
	std::vector<long> ex(g.n(), 0);
	for (int v = 0; v < g.n(); ++v)
		ex[uf.find(v)] += g.loops(v) - 1;
	for (const auto& e : g.edges())
		ex[uf.find(e.u)] += e.mult;
	for (int v = 0; v < g.n(); ++v)
		if (uf.find(v) == v && ex[v] < 1)
			return false;
	return true;
}

namespace {

// Leaf peeling shared by core() and kernelize(); fills parent pointers.
std::vector<char> peel(const LabeledMultigraph& g, std::vector<int>& deg, std::vector<int>* parent)
{
	const int n = g.n();
	deg = g.degrees();
	auto nb = g.neighbours();
	std::vector<char> removed(n, 0);
	std::vector<int> stack;
	for (int v = 0; v < n; ++v)
		if (deg[v] <= 1)
			stack.push_back(v);
	while (!stack.empty()) {
		int v = stack.back();
		stack.pop_back();
		if (removed[v])
			continue;
		removed[v] = 1;
		for (int w : nb[v]) {
			if (removed[w])
				continue;
			if (parent)
				(*parent)[v] = w;
			if (--deg[w] == 1)
				stack.push_back(w);
		}
	}
	return removed;
}

} // namespace

std::vector<int> core_vertices(const LabeledMultigraph& g)
{
	std::vector<int> deg;
	auto removed = peel(g, deg, nullptr);
	std::vector<int> out;
	for (int v = 0; v < g.n(); ++v)
		if (!removed[v])
			out.push_back(v);
	return out;
}

LabeledMultigraph induced_subgraph(const LabeledMultigraph& g, const std::vector<int>& vertices)
{
	std::vector<int> index(g.n(), -1);
	for (std::size_t i = 0; i < vertices.size(); ++i)
		index[vertices[i]] = static_cast<int>(i);
	std::vector<std::pair<int, int>> pairs;
	for (int v : vertices)
		for (int i = 0; i < g.loops(v); ++i)
			pairs.emplace_back(index[v], index[v]);
	for (const auto& e : g.edges())
		if (index[e.u] >= 0 && index[e.v] >= 0)
			for (int i = 0; i < e.mult; ++i)
				pairs.emplace_back(index[e.u], index[e.v]);
	return LabeledMultigraph::from_pairs(static_cast<int>(vertices.size()), pairs);
}

LabeledMultigraph core(const LabeledMultigraph& g) { return induced_subgraph(g, core_vertices(g)); }

KernelDecomposition kernelize(const LabeledMultigraph& g)
{
	const int n = g.n();
	KernelDecomposition kd;
	kd.n = n;
	kd.forest_parent.assign(n, -1);
	std::vector<int> deg;
	auto removed = peel(g, deg, &kd.forest_parent);

	std::vector<char> is_kernel(n, 0);
	for (int v = 0; v < n; ++v) {
		if (removed[v])
			continue;
		kd.core_vertices.push_back(v);
		if (deg[v] >= 3) {
			is_kernel[v] = 1;
			kd.kernel_vertices.push_back(v);
		}
	}

	// Expand the core into individual edge copies so parallel edges can be walked separately.
	std::vector<std::pair<int, int>> copies;
	std::vector<std::vector<int>> incident(n);
	auto add_copy = [&](int a, int b) {
		int id = static_cast<int>(copies.size());
		copies.emplace_back(a, b);
		incident[a].push_back(id);
		incident[b].push_back(id); // a loop is listed twice
	};
	for (int v : kd.core_vertices)
		for (int i = 0; i < g.loops(v); ++i)
			add_copy(v, v);
	for (const auto& e : g.edges())
		if (!removed[e.u] && !removed[e.v])
			for (int i = 0; i < e.mult; ++i)
				add_copy(e.u, e.v);

	std::vector<char> used(copies.size(), 0);
	auto other = [&](int id, int x) { return copies[id].first == x ? copies[id].second : copies[id].first; };
	auto next_edge = [&](int w, int came) {
		for (int id : incident[w])
			if (id != came)
				return id;
		return came;
	};

	std::vector<int> kindex(n, -1);
	for (std::size_t i = 0; i < kd.kernel_vertices.size(); ++i)
		kindex[kd.kernel_vertices[i]] = static_cast<int>(i);
	std::vector<std::pair<int, int>> kernel_pairs;

	for (int a : kd.kernel_vertices) {
		for (int start : incident[a]) {
			if (used[start])
				continue;
			used[start] = 1;
			KernelPath path;
			int cur = start;
			int w = other(start, a);
			while (!is_kernel[w]) {
				path.interior.push_back(w);
				cur = next_edge(w, cur);
				used[cur] = 1;
				w = other(cur, w);
			}
			path.a = a;
			path.b = w;
			if (path.a > path.b) {
				std::swap(path.a, path.b);
				std::reverse(path.interior.begin(), path.interior.end());
			}
			kernel_pairs.emplace_back(kindex[path.a], kindex[path.b]);
			kd.edge_paths.push_back(std::move(path));
		}
	}
	kd.kernel = LabeledMultigraph::from_pairs(static_cast<int>(kd.kernel_vertices.size()), kernel_pairs);

	// Whatever is left of the core consists of cycles avoiding the kernel.
	for (int v : kd.core_vertices) {
		for (int start : incident[v]) {
			if (used[start])
				continue;
			std::vector<int> cycle{v};
			used[start] = 1;
			int cur = start;
			int w = other(start, v);
			while (w != v) {
				cycle.push_back(w);
				cur = next_edge(w, cur);
				used[cur] = 1;
				w = other(cur, w);
			}
			kd.isolated_cycles.push_back(std::move(cycle));
		}
	}
	return kd;
}

LabeledMultigraph reassemble(const KernelDecomposition& kd)
{
	std::vector<std::pair<int, int>> pairs;
	for (int v = 0; v < kd.n; ++v)
		if (kd.forest_parent[v] >= 0)
			pairs.emplace_back(v, kd.forest_parent[v]);
	for (const auto& p : kd.edge_paths) {
		int prev = p.a;
		for (int w : p.interior) {
			pairs.emplace_back(prev, w);
			prev = w;
		}
		pairs.emplace_back(prev, p.b);
	}
	for (const auto& c : kd.isolated_cycles)
		for (std::size_t i = 0; i < c.size(); ++i)
			pairs.emplace_back(c[i], c[(i + 1) % c.size()]);
	return LabeledMultigraph::from_pairs(kd.n, pairs);
}

long deficiency(const KernelDecomposition& kd)
{
	long sum = 0;
	for (int d : kd.kernel.degrees())
		sum += d - 3;
	return sum;
}

long deficiency(const LabeledMultigraph& g) { return deficiency(kernelize(g)); }

Rational weight(const LabeledMultigraph& g)
{
	BigInt den = 1;
	for (int k : g.loop_counts())
		if (k > 0)
			den *= factorial(k) * power(BigInt(2), static_cast<unsigned long>(k));
	for (const auto& e : g.edges())
		if (e.mult > 1)
			den *= factorial(e.mult);
	return make_rational(1, den);
}

json to_json(const LabeledMultigraph& g)
{
	json edges = json::array();
	for (const auto& e : g.edges())
		edges.push_back({e.u + 1, e.v + 1, e.mult});
	return json{{"n", g.n()}, {"loops", g.loop_counts()}, {"edges", edges}};
}

LabeledMultigraph multigraph_from_json(const json& j)
{
	int n = j.at("n").get<int>();
	LabeledMultigraph g(n);
	if (j.contains("loops")) {
		auto loops = j.at("loops").get<std::vector<int>>();
		if (static_cast<int>(loops.size()) != n)
			throw std::invalid_argument("loops array length must equal n");
		for (int v = 0; v < n; ++v)
			g.add_edge(v, v, loops[v]);
	}
	for (const auto& e : j.at("edges")) {
		int u = e.at(0).get<int>() - 1, v = e.at(1).get<int>() - 1;
		int m = e.size() > 2 ? e.at(2).get<int>() : 1;
		g.add_edge(u, v, m);
	}
	return g;
}

json to_json(const SimpleGraph& g) { return to_json(g.to_multigraph()); }

} // namespace planar
