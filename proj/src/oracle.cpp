#include "planar/oracle.hpp"

#include "planar/planarity.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>

namespace planar {

namespace {

void guard(bool ok, bool override_guard, const std::string& what)
{
	if (!ok && !override_guard)
		throw GuardError(what);
}

// Run body(w) for w in [0, workers) and return the per-worker results in order.
template<class T, class Body>
std::vector<T> run_workers(int workers, Body body)
{
	workers = std::max(1, workers);
	std::vector<T> out(workers);
	if (workers == 1) {
		out[0] = body(0);
		return out;
	}
	std::vector<std::thread> threads;
	for (int w = 0; w < workers; ++w)
		threads.emplace_back([&, w] { out[w] = body(w); });
	for (auto& t : threads)
		t.join();
	return out;
}

BigInt big(long long x) { return BigInt(std::to_string(x)); }

std::vector<BigInt> sum_rows(const std::vector<std::vector<long long>>& parts)
{
	std::vector<long long> total(parts.front().size(), 0);
	for (const auto& p : parts)
		for (std::size_t i = 0; i < p.size(); ++i)
			total[i] += p[i];
	std::vector<BigInt> out;
	for (auto x : total)
		out.push_back(big(x));
	return out;
}

void combinations(int pairs, int M, int start, int depth, small::Mask mask, int worker, int workers,
                  const std::function<void(small::Mask)>& visit)
{
	if (depth == M) {
		visit(mask);
		return;
	}
	for (int i = start; i <= pairs - (M - depth); ++i) {
		if (depth == 0 && i % workers != worker)
			continue;
		combinations(pairs, M, i + 1, depth + 1, mask | (small::Mask(1) << i), worker, workers, visit);
	}
}

} // namespace

void enum_graph_masks(int n, int M, const std::function<void(small::Mask)>& visit, int worker, int workers)
{
	int P = small::pair_count(n);
	if (M < 0 || M > P)
		return;
	if (M == 0) {
		if (worker == 0)
			visit(0);
		return;
	}
	combinations(P, M, 0, 0, 0, worker, std::max(1, workers), visit);
}

void enum_graphs(int n, int M, const std::function<void(const SimpleGraph&)>& visit, bool override_guard)
{
	guard(n <= simple_stream_guard, override_guard, "enum_graphs: n exceeds guard " + std::to_string(simple_stream_guard));
	if (n > small::max_vertices)
		throw GuardError("enum_graphs: bit-packed enumeration is limited to 11 vertices");
	enum_graph_masks(n, M, [&](small::Mask m) { visit(small::to_graph(n, m)); });
}

std::vector<BigInt> pl_brute_row(int n, const OracleOptions& opt)
{
	guard(n <= simple_sweep_guard, opt.override_guard, "pl_brute: n exceeds guard " + std::to_string(simple_sweep_guard));
	if (n > small::max_vertices)
		throw GuardError("pl_brute: bit-packed enumeration is limited to 11 vertices");
	const int P = small::pair_count(n);
	const small::Mask total = small::Mask(1) << P;
	auto parts = run_workers<std::vector<long long>>(opt.workers, [&](int w) {
		std::vector<long long> row(P + 1, 0);
		int W = std::max(1, opt.workers);
		for (small::Mask m = w; m < total; m += W)
			if (small::is_planar(n, m))
				++row[std::popcount(m)];
		return row;
	});
	return sum_rows(parts);
}

BigInt pl_brute(int n, int M, const OracleOptions& opt)
{
	guard(n <= simple_sweep_guard, opt.override_guard, "pl_brute: n exceeds guard " + std::to_string(simple_sweep_guard));
	if (M < 0 || M > small::pair_count(n))
		return 0;
	auto parts = run_workers<long long>(opt.workers, [&](int w) {
		long long c = 0;
		enum_graph_masks(n, M, [&](small::Mask m) { c += small::is_planar(n, m); }, w, opt.workers);
		return c;
	});
	long long c = 0;
	for (auto x : parts)
		c += x;
	return big(c);
}

BigInt u_brute(int n, int M, const OracleOptions& opt)
{
	guard(n <= simple_sweep_guard, opt.override_guard, "u_brute: n exceeds guard " + std::to_string(simple_sweep_guard));
	if (M < 0 || M > n || M > small::pair_count(n))
		return 0;
	auto parts = run_workers<long long>(opt.workers, [&](int w) {
		long long c = 0;
		enum_graph_masks(n, M, [&](small::Mask m) { c += small::shape(n, m).no_complex; }, w, opt.workers);
		return c;
	});
	long long c = 0;
	for (auto x : parts)
		c += x;
	return big(c);
}

std::vector<BigInt> u_brute_row(int n, const OracleOptions& opt)
{
	std::vector<BigInt> row;
	for (int M = 0; M <= small::pair_count(n); ++M)
		row.push_back(u_brute(n, M, opt));
	return row;
}

ComplexCounts complex_brute(int k, int l, const OracleOptions& opt)
{
	guard(k <= simple_sweep_guard, opt.override_guard, "complex_brute: k exceeds guard " + std::to_string(simple_sweep_guard));
	if (l < 1)
		throw std::invalid_argument("complex graphs need excess l >= 1");
	ComplexCounts out;
	out.k = k;
	out.l = l;
	out.by_deficiency.assign(2 * l + 1, 0);
	const int M = k + l;
	struct Part
	{
		long long total = 0, connected = 0;
		std::vector<long long> by_d;
	};
	auto parts = run_workers<Part>(opt.workers, [&](int w) {
		Part p;
		p.by_d.assign(2 * l + 1, 0);
		enum_graph_masks(
		    k, M,
		    [&](small::Mask m) {
			    auto s = small::shape(k, m);
			    if (!s.all_complex || !small::is_planar(k, m))
				    return;
			    ++p.total;
			    if (s.connected)
				    ++p.connected;
			    ++p.by_d[small::deficiency(k, m)];
		    },
		    w, opt.workers);
		return p;
	});
	long long total = 0, connected = 0;
	std::vector<long long> by_d(2 * l + 1, 0);
	for (const auto& p : parts) {
		total += p.total;
		connected += p.connected;
		for (int d = 0; d <= 2 * l; ++d)
			by_d[d] += p.by_d[d];
	}
	out.total = big(total);
	out.connected = big(connected);
	for (int d = 0; d <= 2 * l; ++d)
		out.by_deficiency[d] = big(by_d[d]);
	return out;
}

BigInt c_brute(int k, int l, const OracleOptions& opt) { return complex_brute(k, l, opt).total; }

BigInt cd_brute(int k, int l, int d, const OracleOptions& opt)
{
	auto c = complex_brute(k, l, opt);
	if (d < 0 || d >= static_cast<int>(c.by_deficiency.size()))
		return 0;
	return c.by_deficiency[d];
}

BigInt c_conn_brute(int k, int l, const OracleOptions& opt) { return complex_brute(k, l, opt).connected; }

std::vector<BigInt> c_brute_row(int k, const OracleOptions& opt)
{
	guard(k <= simple_sweep_guard, opt.override_guard, "c_brute_row: k exceeds guard " + std::to_string(simple_sweep_guard));
	const int P = small::pair_count(k);
	const small::Mask total = small::Mask(1) << P;
	const int rowlen = std::max(1, P - k + 1);
	auto parts = run_workers<std::vector<long long>>(opt.workers, [&](int w) {
		std::vector<long long> row(rowlen, 0);
		int W = std::max(1, opt.workers);
		for (small::Mask m = w; m < total; m += W) {
			int l = std::popcount(m) - k;
			if (l < 1)
				continue;
			if (small::shape(k, m).all_complex && small::is_planar(k, m))
				++row[l];
		}
		return row;
	});
	return sum_rows(parts);
}

// ---------------------------------------------------------------------------
// Multigraphs of minimum degree three.

namespace {

struct MultiEnumerator
{
	int n;
	int edges;
	int max_degree;
	std::vector<std::pair<int, int>> slots; // (v, v) loop slots and (u, v) pair slots, row by row
	std::vector<int> row_end;               // slot index after which vertex v's degree is final
	std::vector<int> mult;
	std::vector<int> deg;
	const std::function<void(const LabeledMultigraph&)>& visit;

	MultiEnumerator(int n_, int e_, const std::function<void(const LabeledMultigraph&)>& f)
	    : n(n_), edges(e_), max_degree(2 * e_ - 3 * (n_ - 1)), deg(n_, 0), visit(f)
	{
		row_end.assign(n, -1);
		for (int v = 0; v < n; ++v) {
			slots.emplace_back(v, v);
			for (int w = v + 1; w < n; ++w)
				slots.emplace_back(v, w);
			row_end[v] = static_cast<int>(slots.size()) - 1;
		}
		mult.assign(slots.size(), 0);
	}

	void emit()
	{
		LabeledMultigraph g(n);
		for (std::size_t i = 0; i < slots.size(); ++i)
			if (mult[i])
				g.add_edge(slots[i].first, slots[i].second, mult[i]);
		visit(g);
	}

	void run(std::size_t i, int budget)
	{
		if (i == slots.size()) {
			if (budget == 0)
				emit();
			return;
		}
		auto [u, v] = slots[i];
		int step = (u == v) ? 2 : 1;
		int cap = budget;
		cap = std::min(cap, (max_degree - deg[u]) / step);
		if (u != v)
			cap = std::min(cap, max_degree - deg[v]);
		for (int m = 0; m <= cap; ++m) {
			deg[u] += m * step;
			if (u != v)
				deg[v] += m;
			mult[i] = m;
			bool ok = true;
			if (static_cast<int>(i) == row_end[u]) {
				ok = deg[u] >= 3;
				// the remaining vertices still need degree >= 3 from the leftover budget
				int need = 0;
				for (int w = u + 1; w < n; ++w)
					need += std::max(0, 3 - deg[w]);
				ok = ok && need <= 2 * (budget - m);
			}
			if (ok)
				run(i + 1, budget - m);
			deg[u] -= m * step;
			if (u != v)
				deg[v] -= m;
		}
		mult[i] = 0;
	}
};

} // namespace

void enum_min_deg3_multigraphs(int n, int edges, const std::function<void(const LabeledMultigraph&)>& visit,
                               bool override_guard)
{
	guard(n <= multigraph_guard, override_guard, "multigraph enumeration: n exceeds guard " + std::to_string(multigraph_guard));
	if (n <= 0 || 2 * edges < 3 * n)
		return;
	MultiEnumerator e(n, edges, visit);
	e.run(0, edges);
}

namespace {

Rational q_sum(int n, int d, bool connected_only, bool override_guard)
{
	if ((3 * n + d) % 2 != 0 || n <= 0)
		return 0;
	guard(n <= multigraph_guard, override_guard, "q_brute: n exceeds guard " + std::to_string(multigraph_guard));
	// weights are 1/den; tally denominators and sum once at the end
	std::map<long long, long long> tally;
	enum_min_deg3_multigraphs(
	    n, (3 * n + d) / 2,
	    [&](const LabeledMultigraph& g) {
		    if (connected_only && components(g).size() != 1)
			    return;
		    if (!small::is_planar(n, small::mask_of(simplify(g))))
			    return;
		    long long den = 1;
		    for (int k : g.loop_counts())
			    for (int i = 1; i <= k; ++i)
				    den *= 2 * i;
		    for (const auto& e : g.edges())
			    for (int i = 2; i <= e.mult; ++i)
				    den *= i;
		    ++tally[den];
	    },
	    true);
	Rational sum = 0;
	for (auto [den, count] : tally)
		sum += make_rational(BigInt(std::to_string(count)), BigInt(std::to_string(den)));
	return sum;
}

} // namespace

Rational q_brute(int n, int d, bool override_guard) { return q_sum(n, d, false, override_guard); }
Rational q_conn_brute(int n, int d, bool override_guard) { return q_sum(n, d, true, override_guard); }

int KernelClass::required_insertions() const
{
	int r = 2 * loops;
	for (int j : parallel)
		r += j - 1;
	return r;
}

KernelClass kernel_class(const LabeledMultigraph& kernel)
{
	KernelClass c;
	c.loops = static_cast<int>(kernel.loop_total());
	for (const auto& e : kernel.edges())
		if (e.mult >= 2)
			c.parallel.push_back(e.mult);
	std::sort(c.parallel.begin(), c.parallel.end());
	return c;
}

std::map<int, Rational> KernelCensus::by_insertions() const
{
	std::map<int, Rational> out;
	for (const auto& [cls, w] : classes)
		out[cls.required_insertions()] += w;
	return out;
}

KernelCensus kernel_census_brute(int l, int d, bool override_guard)
{
	KernelCensus census;
	census.vertices = 2 * l - d;
	census.edges = 3 * l - d;
	census.deficiency = d;
	if (l < 1 || d < 0 || census.vertices < 1)
		return census;
	guard(census.vertices <= multigraph_guard, override_guard,
	      "kernel census: kernel size exceeds guard " + std::to_string(multigraph_guard));
	enum_min_deg3_multigraphs(
	    census.vertices, census.edges,
	    [&](const LabeledMultigraph& g) {
		    if (is_planar_multi(g))
			    census.classes[kernel_class(g)] += weight(g);
	    },
	    true);
	return census;
}

json to_json(const KernelCensus& c)
{
	json classes = json::array();
	for (const auto& [cls, w] : c.classes)
		classes.push_back({{"loops", cls.loops},
		                   {"parallel", cls.parallel},
		                   {"requiredInsertions", cls.required_insertions()},
		                   {"weight", to_json(w)}});
	json by_r = json::array();
	for (const auto& [r, w] : c.by_insertions())
		by_r.push_back({{"r", r}, {"weight", to_json(w)}});
	return json{{"kernelVertices", c.vertices},
	            {"kernelEdges", c.edges},
	            {"deficiency", c.deficiency},
	            {"classes", classes},
	            {"byRequiredInsertions", by_r}};
}

} // namespace planar
