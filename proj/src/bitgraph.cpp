#include "planar/bitgraph.hpp"

#include "planar/planarity.hpp"

#include <atomic>
#include <bit>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace planar::small {

namespace {

struct PairTable
{
	std::vector<std::pair<int, int>> pairs;
	int index[16][16];
};

const PairTable& table(int n)
{
	static const auto tables = [] {
		std::array<PairTable, max_vertices + 1> t;
		for (int k = 0; k <= max_vertices; ++k) {
			for (int u = 0; u < 16; ++u)
				for (int v = 0; v < 16; ++v)
					t[k].index[u][v] = -1;
			for (int u = 0; u < k; ++u)
				for (int v = u + 1; v < k; ++v) {
					t[k].index[u][v] = t[k].index[v][u] = static_cast<int>(t[k].pairs.size());
					t[k].pairs.emplace_back(u, v);
				}
		}
		return t;
	}();
	if (n < 0 || n > max_vertices)
		throw std::invalid_argument("bit graphs support at most 11 vertices");
	return tables[n];
}

// Two bits per 2-core mask: known, planar.
struct Memo
{
	std::unique_ptr<std::atomic<std::uint64_t>[]> words;
	std::once_flag once;
};

Memo& memo(int n)
{
	static std::array<Memo, 9> memos;
	Memo& m = memos[n];
	std::call_once(m.once, [&] {
		std::size_t bits = std::size_t(1) << pair_count(n);
		std::size_t nwords = (2 * bits + 63) / 64;
		m.words.reset(new std::atomic<std::uint64_t>[nwords]);
		for (std::size_t i = 0; i < nwords; ++i)
			m.words[i].store(0, std::memory_order_relaxed);
	});
	return m;
}

} // namespace

int pair_count(int n) { return n * (n - 1) / 2; }

std::pair<int, int> pair_at(int n, int index) { return table(n).pairs.at(index); }

int pair_index(int n, int u, int v) { return table(n).index[u][v]; }

Rows rows(int n, Mask m)
{
	const auto& t = table(n);
	Rows r{};
	while (m) {
		int i = std::countr_zero(m);
		m &= m - 1;
		auto [u, v] = t.pairs[i];
		r[u] |= std::uint16_t(1u << v);
		r[v] |= std::uint16_t(1u << u);
	}
	return r;
}

Mask mask_of(const SimpleGraph& g)
{
	const auto& t = table(g.n());
	Mask m = 0;
	for (auto [u, v] : g.edges())
		m |= Mask(1) << t.index[u][v];
	return m;
}

SimpleGraph to_graph(int n, Mask m)
{
	const auto& t = table(n);
	std::vector<std::pair<int, int>> edges;
	while (m) {
		int i = std::countr_zero(m);
		m &= m - 1;
		edges.push_back(t.pairs[i]);
	}
	return SimpleGraph(n, std::move(edges));
}

Mask core_mask(int n, Mask m)
{
	const auto& t = table(n);
	Rows r = rows(n, m);
	bool changed = true;
	while (changed) {
		changed = false;
		for (int v = 0; v < n; ++v) {
			int d = std::popcount(r[v]);
			if (d == 1) {
				int w = std::countr_zero(r[v]);
				r[v] = 0;
				r[w] &= std::uint16_t(~(1u << v));
				m &= ~(Mask(1) << t.index[v][w]);
				changed = true;
			}
		}
	}
	return m;
}

bool is_planar(int n, Mask m)
{
	if (std::popcount(m) < 9)
		return true;
	Mask c = core_mask(n, m);
	if (std::popcount(c) < 9)
		return true;
	if (n > 8)
		return planar::is_planar(to_graph(n, c));
	Memo& mm = memo(n);
	std::size_t word = (2 * c) / 64, shift = (2 * c) % 64;
	std::uint64_t w = mm.words[word].load(std::memory_order_relaxed);
	if (w >> shift & 1)
		return (w >> (shift + 1)) & 1;
	bool p = planar::is_planar(to_graph(n, c));
	mm.words[word].fetch_or((std::uint64_t(1) | (std::uint64_t(p) << 1)) << shift, std::memory_order_relaxed);
	return p;
}

std::vector<Component> components(int n, Mask m)
{
	Rows r = rows(n, m);
	std::vector<Component> out;
	std::uint16_t seen = 0;
	for (int v = 0; v < n; ++v) {
		if (seen >> v & 1)
			continue;
		std::uint16_t comp = std::uint16_t(1u << v), frontier = comp;
		while (frontier) {
			int x = std::countr_zero(frontier);
			frontier &= std::uint16_t(frontier - 1);
			std::uint16_t fresh = std::uint16_t(r[x] & ~comp);
			comp |= fresh;
			frontier |= fresh;
		}
		seen |= comp;
		Component c;
		c.vertices = comp;
		c.size = std::popcount(comp);
		int degsum = 0;
		for (std::uint16_t s = comp; s; s &= std::uint16_t(s - 1))
			degsum += std::popcount(r[std::countr_zero(s)]);
		c.edges = degsum / 2;
		out.push_back(c);
	}
	return out;
}

int deficiency(int n, Mask m)
{
	Rows r = rows(n, core_mask(n, m));
	int d = 0;
	for (int v = 0; v < n; ++v) {
		int deg = std::popcount(r[v]);
		if (deg >= 3)
			d += deg - 3;
	}
	return d;
}

Shape shape(int n, Mask m)
{
	Shape s;
	auto comps = components(n, m);
	s.all_complex = true;
	s.no_complex = true;
	s.connected = comps.size() == 1;
	int best = -1;
	for (std::size_t i = 0; i < comps.size(); ++i) {
		const auto& c = comps[i];
		if (c.excess() >= 1) {
			s.complex_size += c.size;
			s.complex_excess += c.excess();
			s.no_complex = false;
		} else {
			s.all_complex = false;
		}
		if (c.size > s.largest) {
			s.second = s.largest;
			s.largest = c.size;
			best = static_cast<int>(i);
		} else if (c.size > s.second) {
			s.second = c.size;
		}
	}
	s.largest_is_tree = best >= 0 && comps[best].excess() == -1;
	return s;
}

} // namespace planar::small
