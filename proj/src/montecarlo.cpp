#include "planar/montecarlo.hpp"

#include "planar/bitgraph.hpp"
#include "planar/oracle.hpp"
#include "planar/planarity.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace planar {

namespace {

std::uint64_t mix64(std::uint64_t z)
{
	z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
	z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
	return z ^ (z >> 31);
}

constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ULL;

std::uint64_t pair_key(int u, int v)
{
	if (u > v)
		std::swap(u, v);
	return (std::uint64_t(u) << 32) | std::uint32_t(v);
}

std::uint64_t pair_total(int n)
{
	return std::uint64_t(n) * (n - 1) / 2;
}

long max_planar_edges(int n)
{
	if (n <= 2)
		return long(pair_total(n));
	return 3L * n - 6;
}

void relabel_shuffle(std::vector<int>& perm, CounterRng& rng)
{
	for (std::size_t i = perm.size(); i > 1; --i)
		std::swap(perm[i - 1], perm[rng.below(i)]);
}

// Planarity of a connected simple graph given by adjacency lists: peel the
// pendant trees, suppress degree-2 paths, and test the (simplified) kernel.
bool reduced_planar(const std::vector<std::vector<int>>& adj)
{
	const int k = int(adj.size());
	std::vector<int> deg(k);
	std::vector<char> removed(k, 0);
	std::vector<int> stack;
	for (int v = 0; v < k; ++v) {
		deg[v] = int(adj[v].size());
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
	std::vector<int> kid(k, -1);
	int nk = 0;
	for (int v = 0; v < k; ++v)
		if (!removed[v] && deg[v] >= 3)
			kid[v] = nk++;
	if (nk < 5)
		return true;
	std::vector<std::pair<int, int>> edges;
	for (int a = 0; a < k; ++a) {
		if (kid[a] < 0)
			continue;
		for (int w : adj[a]) {
			if (removed[w])
				continue;
			int prev = a, cur = w;
			while (kid[cur] < 0) {
				int next = -1;
				for (int y : adj[cur])
					if (!removed[y] && y != prev) {
						next = y;
						break;
					}
				prev = cur;
				cur = next;
			}
			if (cur != a && kid[a] < kid[cur])
				edges.emplace_back(kid[a], kid[cur]);
		}
	}
	std::sort(edges.begin(), edges.end());
	edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
	return is_planar(SimpleGraph(nk, std::move(edges)));
}

} // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(mix64(seed + golden) ^ (stream * 0xD1B54A32D192ED03ULL + 1)))
{
}

CounterRng::result_type CounterRng::operator()()
{
	++counter_;
	return mix64(key_ + counter_ * golden);
}

std::uint64_t CounterRng::below(std::uint64_t bound)
{
	// Lemire's multiply-and-reject
	unsigned __int128 m = (unsigned __int128)(*this)() * bound;
	std::uint64_t low = std::uint64_t(m);
	if (low < bound) {
		std::uint64_t threshold = (0 - bound) % bound;
		while (low < threshold) {
			m = (unsigned __int128)(*this)() * bound;
			low = std::uint64_t(m);
		}
	}
	return std::uint64_t(m >> 64);
}

double CounterRng::uniform()
{
	return double((*this)() >> 11) * 0x1.0p-53;
}

std::pair<int, int> pair_from_index(int n, std::uint64_t index)
{
	// row u starts at offset(u) = u (2n - u - 1) / 2
	auto offset = [n](long long u) { return std::uint64_t(u * (2LL * n - u - 1) / 2); };
	long double b = 2.0L * n - 1;
	long long u = (long long)std::floor((b - std::sqrt(b * b - 8.0L * index)) / 2);
	u = std::clamp<long long>(u, 0, n - 2);
	while (u > 0 && offset(u) > index)
		--u;
	while (u + 1 <= n - 2 && offset(u + 1) <= index)
		++u;
	return {int(u), int(index - offset(u) + u + 1)};
}

SimpleGraph sample_gnm(int n, long M, CounterRng& rng)
{
	std::uint64_t P = pair_total(n);
	if (M < 0 || std::uint64_t(M) > P)
		throw std::invalid_argument("sample_gnm: M out of range");
	// Partial Fisher-Yates over the pair slots; only touched slots are stored.
	std::unordered_map<std::uint64_t, std::uint64_t> moved;
	auto at = [&](std::uint64_t i) {
		auto it = moved.find(i);
		return it == moved.end() ? i : it->second;
	};
	std::vector<std::pair<int, int>> edges;
	edges.reserve(M);
	for (long i = 0; i < M; ++i) {
		std::uint64_t j = i + rng.below(P - i);
		std::uint64_t pick = at(j);
		moved[j] = at(i);
		edges.push_back(pair_from_index(n, pick));
	}
	return SimpleGraph(n, std::move(edges));
}

RejectionSample sample_pnm_rejection(int n, long M, CounterRng& rng, long max_tries)
{
	if (M > max_planar_edges(n))
		throw RegimeInfeasible("no planar graph has " + std::to_string(n) + " vertices and " + std::to_string(M) +
		                           " edges (estimated acceptance 0)",
		                       0.0);
	for (long tries = 1; tries <= max_tries; ++tries) {
		auto g = sample_gnm(n, M, rng);
		if (is_planar(g))
			return {std::move(g), tries, 1.0 / tries};
	}
	double est = 1.0 / max_tries;
	std::ostringstream msg;
	msg << "rejection sampling found no planar graph in " << max_tries << " draws for (n, M) = (" << n << ", " << M
	    << "); estimated acceptance probability below " << est;
	throw RegimeInfeasible(msg.str(), est);
}

SimpleGraph planar_seed(int n, long M, CounterRng& rng)
{
	if (M < 0 || M > max_planar_edges(n))
		throw RegimeInfeasible("no planar seed with " + std::to_string(M) + " edges on " + std::to_string(n) +
		                           " vertices",
		                       0.0);
	// Triangulation: 0 and 1 joined to everything, plus the path 2-3-...-(n-1).
	// Listed Hamiltonian path first so that short prefixes are trees.
	std::vector<std::pair<int, int>> order;
	if (n == 2)
		order.emplace_back(0, 1);
	if (n >= 3) {
		order.emplace_back(0, 2);
		for (int i = 2; i + 1 <= n - 1; ++i)
			order.emplace_back(i, i + 1);
		order.emplace_back(n - 1, 1);
		order.emplace_back(0, 1);
		for (int i = 3; i <= n - 1; ++i)
			order.emplace_back(0, i);
		for (int i = 2; i <= n - 2; ++i)
			order.emplace_back(1, i);
	}
	std::vector<int> perm(n);
	for (int i = 0; i < n; ++i)
		perm[i] = i;
	relabel_shuffle(perm, rng);
	std::vector<std::pair<int, int>> edges;
	for (long i = 0; i < M; ++i)
		edges.emplace_back(perm[order[i].first], perm[order[i].second]);
	return SimpleGraph(n, std::move(edges));
}

PlanarChain::PlanarChain(int n, long M, CounterRng& rng)
    : n_(n), rng_(&rng), small_(n <= small::max_vertices), adj_(small_ ? 0 : n)
{
	if (!small_) {
		stamp_.assign(n, 0);
		local_.assign(n, 0);
	}
	auto seed = planar_seed(n, M, rng);
	for (auto e : seed.edges())
		add_edge(e);
}

bool PlanarChain::has_edge(int u, int v) const
{
	if (small_)
		return (mask_ >> small::pair_index(n_, std::min(u, v), std::max(u, v))) & 1;
	return edge_set_.count(pair_key(u, v)) > 0;
}

void PlanarChain::add_edge(std::pair<int, int> e)
{
	if (e.first > e.second)
		std::swap(e.first, e.second);
	edge_list_.push_back(e);
	if (small_) {
		mask_ |= small::Mask(1) << small::pair_index(n_, e.first, e.second);
		return;
	}
	adj_[e.first].push_back(e.second);
	adj_[e.second].push_back(e.first);
	edge_set_.insert(pair_key(e.first, e.second));
}

void PlanarChain::remove_edge(int slot)
{
	auto e = edge_list_[slot];
	edge_list_[slot] = edge_list_.back();
	edge_list_.pop_back();
	if (small_) {
		mask_ &= ~(small::Mask(1) << small::pair_index(n_, e.first, e.second));
		return;
	}
	auto drop = [](std::vector<int>& xs, int x) {
		auto it = std::find(xs.begin(), xs.end(), x);
		*it = xs.back();
		xs.pop_back();
	};
	drop(adj_[e.first], e.second);
	drop(adj_[e.second], e.first);
	edge_set_.erase(pair_key(e.first, e.second));
}

bool PlanarChain::planar_after_swap(std::pair<int, int> out, std::pair<int, int> in)
{
	if (small_) {
		small::Mask m = mask_;
		m &= ~(small::Mask(1) << small::pair_index(n_, out.first, out.second));
		m |= small::Mask(1) << small::pair_index(n_, in.first, in.second);
		return small::is_planar(n_, m);
	}
	// G - out is planar.  Adding `in` can only break planarity inside the
	// component that contains both of its endpoints.
	auto is_out = [&](int x, int y) {
		return (x == out.first && y == out.second) || (x == out.second && y == out.first);
	};
	if (++epoch_ == 0) {
		std::fill(stamp_.begin(), stamp_.end(), 0);
		epoch_ = 1;
	}
	std::vector<int> stack{in.first}, verts{in.first};
	stamp_[in.first] = epoch_;
	local_[in.first] = 0;
	long half_edges = 0;
	while (!stack.empty()) {
		int x = stack.back();
		stack.pop_back();
		for (int y : adj_[x]) {
			if (is_out(x, y))
				continue;
			++half_edges;
			if (stamp_[y] != epoch_) {
				stamp_[y] = epoch_;
				local_[y] = int(verts.size());
				verts.push_back(y);
				stack.push_back(y);
			}
		}
	}
	if (stamp_[in.second] != epoch_)
		return true; // the new edge is a bridge
	if (half_edges / 2 + 1 - long(verts.size()) <= 2)
		return true; // too few independent cycles for a Kuratowski subdivision
	std::vector<std::vector<int>> local(verts.size());
	for (int x : verts)
		for (int y : adj_[x])
			if (!is_out(x, y))
				local[local_[x]].push_back(local_[y]);
	local[local_[in.first]].push_back(local_[in.second]);
	local[local_[in.second]].push_back(local_[in.first]);
	return reduced_planar(local);
}

void PlanarChain::step(long proposals)
{
	const std::uint64_t P = pair_total(n_);
	const long M = edges();
	if (M == 0 || std::uint64_t(M) >= P) {
		proposals_ += proposals;
		return;
	}
	for (long k = 0; k < proposals; ++k) {
		++proposals_;
		int slot = int(rng_->below(M));
		std::pair<int, int> in;
		do
			in = pair_from_index(n_, rng_->below(P));
		while (has_edge(in.first, in.second));
		auto out = edge_list_[slot];
		if (planar_after_swap(out, in)) {
			remove_edge(slot);
			add_edge(in);
			++accepted_;
		}
	}
}

SimpleGraph PlanarChain::graph() const
{
	return SimpleGraph(n_, edge_list_);
}

std::uint64_t PlanarChain::mask() const
{
	if (small_)
		return mask_;
	throw std::logic_error("mask view needs n <= 11");
}

SimpleGraph mcmc_planar_chain(int n, long M, long steps, CounterRng& rng)
{
	PlanarChain chain(n, M, rng);
	chain.step(steps);
	return chain.graph();
}

void mcmc_samples(int n, long M, long samples, long burn_in, long thin, CounterRng& rng,
                  const std::function<void(const PlanarChain&)>& visit)
{
	PlanarChain chain(n, M, rng);
	chain.step(burn_in);
	for (long i = 0; i < samples; ++i) {
		chain.step(thin);
		visit(chain);
	}
}

namespace {

const std::vector<small::Mask>& planar_list(int n, int M)
{
	static std::mutex mu;
	static std::map<std::pair<int, int>, std::vector<small::Mask>> cache;
	if (n > exhaustive_sampler_guard)
		throw GuardError("exhaustive sampler needs n <= " + std::to_string(exhaustive_sampler_guard));
	std::lock_guard lock(mu);
	auto key = std::make_pair(n, M);
	auto it = cache.find(key);
	if (it == cache.end()) {
		std::vector<small::Mask> list;
		enum_graph_masks(n, M, [&](small::Mask m) {
			if (small::is_planar(n, m))
				list.push_back(m);
		});
		it = cache.emplace(key, std::move(list)).first;
	}
	return it->second;
}

} // namespace

std::size_t exhaustive_count(int n, int M)
{
	return planar_list(n, M).size();
}

std::size_t exhaustive_sample_index(int n, int M, CounterRng& rng)
{
	const auto& list = planar_list(n, M);
	if (list.empty())
		throw RegimeInfeasible("no planar graph with (n, M) = (" + std::to_string(n) + ", " + std::to_string(M) + ")",
		                       0.0);
	return std::size_t(rng.below(list.size()));
}

SimpleGraph exhaustive_sample(int n, int M, CounterRng& rng)
{
	std::size_t i = exhaustive_sample_index(n, M, rng);
	return small::to_graph(n, planar_list(n, M)[i]);
}

std::string to_string(SamplerMode m)
{
	switch (m) {
	case SamplerMode::gnm: return "gnm";
	case SamplerMode::rejection: return "rejection";
	case SamplerMode::mcmc: return "mcmc";
	case SamplerMode::exhaustive: return "exhaustive";
	}
	return "?";
}

SamplerMode sampler_mode_from_string(const std::string& s)
{
	for (auto m : {SamplerMode::gnm, SamplerMode::rejection, SamplerMode::mcmc, SamplerMode::exhaustive})
		if (to_string(m) == s)
			return m;
	throw std::invalid_argument("unknown sampler mode '" + s + "'");
}

json to_json(const ExperimentConfig& c)
{
	return {{"n", c.n},
	        {"m", c.M},
	        {"mode", to_string(c.mode)},
	        {"trials", c.trials},
	        {"seed", c.seed},
	        {"mcmcBurnIn", c.burn_in()},
	        {"mcmcThin", c.thin()},
	        {"maxTries", c.max_tries},
	        {"workers", c.workers},
	        {"rng", CounterRng::algorithm}};
}

ExperimentConfig experiment_config_from_json(const json& j)
{
	ExperimentConfig c;
	c.n = j.at("n").get<int>();
	c.M = j.at("m").get<long>();
	if (j.contains("mode"))
		c.mode = sampler_mode_from_string(j["mode"].get<std::string>());
	if (j.contains("trials"))
		c.trials = j["trials"].get<int>();
	if (j.contains("seed"))
		c.seed = j["seed"].get<std::uint64_t>();
	if (j.contains("mcmcBurnIn"))
		c.mcmc_burn_in = j["mcmcBurnIn"].get<long>();
	if (j.contains("mcmcThin"))
		c.mcmc_thin = j["mcmcThin"].get<long>();
	if (j.contains("maxTries"))
		c.max_tries = j["maxTries"].get<long>();
	if (j.contains("workers"))
		c.workers = j["workers"].get<int>();
	return c;
}

bool contains_k4(const SimpleGraph& g)
{
	auto kd = kernelize(g.to_multigraph());
	std::vector<char> in_kernel(g.n(), 0);
	for (int v : kd.kernel_vertices)
		in_kernel[v] = 1;
	auto adj = g.adjacency();
	std::vector<std::vector<int>> kadj(g.n());
	for (int v : kd.kernel_vertices) {
		for (int w : adj[v])
			if (in_kernel[w])
				kadj[v].push_back(w);
		std::sort(kadj[v].begin(), kadj[v].end());
	}
	auto linked = [&](int x, int y) { return std::binary_search(kadj[x].begin(), kadj[x].end(), y); };
	for (int a : kd.kernel_vertices)
		for (int b : kadj[a]) {
			if (b <= a)
				continue;
			std::vector<int> common;
			std::set_intersection(kadj[a].begin(), kadj[a].end(), kadj[b].begin(), kadj[b].end(),
			                      std::back_inserter(common));
			for (std::size_t i = 0; i < common.size(); ++i)
				for (std::size_t j = i + 1; j < common.size(); ++j)
					if (linked(common[i], common[j]))
						return true;
		}
	return false;
}

TrialRecord measure(const SimpleGraph& g)
{
	TrialRecord r;
	auto comps = components(g);
	auto adj = g.adjacency();
	std::vector<int> comp_of(g.n(), -1);
	int largest = -1;
	long largest_excess = 0;
	for (std::size_t c = 0; c < comps.size(); ++c) {
		long size = long(comps[c].size()), deg = 0;
		for (int v : comps[c]) {
			comp_of[v] = int(c);
			deg += long(adj[v].size());
		}
		long ex = deg / 2 - size;
		if (ex >= 1) {
			r.complex_size += size;
			r.complex_excess += ex;
		}
		if (size > r.L1) {
			r.L2 = r.L1;
			r.L1 = size;
			largest = int(c);
			largest_excess = ex;
		} else if (size > r.L2) {
			r.L2 = size;
		}
	}
	r.largest_is_tree = largest >= 0 && largest_excess == -1;
	auto kd = kernelize(g.to_multigraph());
	for (int v : kd.core_vertices)
		if (comp_of[v] == largest)
			++r.core_size;
	r.deficiency = deficiency(kd);
	r.contains_k4 = contains_k4(g);
	r.planar = is_planar(g);
	return r;
}

Summary summarize(const std::vector<double>& xs, std::uint64_t seed, std::uint64_t stream, int resamples)
{
	Summary s;
	if (xs.empty())
		return s;
	std::vector<double> sorted = xs;
	std::sort(sorted.begin(), sorted.end());
	const double n = double(xs.size());
	double sum = 0;
	for (double x : xs)
		sum += x;
	s.mean = sum / n;
	double ss = 0;
	for (double x : xs)
		ss += (x - s.mean) * (x - s.mean);
	s.sd = xs.size() > 1 ? std::sqrt(ss / (n - 1)) : 0.0;
	auto quantile = [&](double p) {
		double h = (n - 1) * p;
		std::size_t lo = std::size_t(std::floor(h));
		std::size_t hi = std::min(lo + 1, sorted.size() - 1);
		return sorted[lo] + (h - double(lo)) * (sorted[hi] - sorted[lo]);
	};
	s.q05 = quantile(0.05);
	s.q25 = quantile(0.25);
	s.median = quantile(0.5);
	s.q75 = quantile(0.75);
	s.q95 = quantile(0.95);

	CounterRng rng(seed, stream);
	std::vector<double> means(resamples);
	for (int b = 0; b < resamples; ++b) {
		double acc = 0;
		for (std::size_t i = 0; i < xs.size(); ++i)
			acc += xs[rng.below(xs.size())];
		means[b] = acc / n;
	}
	std::sort(means.begin(), means.end());
	if (resamples > 0) {
		s.ci_low = means[std::size_t(0.025 * (resamples - 1))];
		s.ci_high = means[std::size_t(std::ceil(0.975 * (resamples - 1)))];
	}
	return s;
}

SampleStats run_experiment(const ExperimentConfig& cfg)
{
	if (cfg.trials < 0)
		throw std::invalid_argument("trials must be non-negative");
	SampleStats stats;
	stats.config = cfg;
	stats.trials.resize(cfg.trials);

	auto run_trial = [&](int t) {
		CounterRng rng(cfg.seed, std::uint64_t(t));
		SimpleGraph g;
		long tries = 1;
		switch (cfg.mode) {
		case SamplerMode::gnm: g = sample_gnm(cfg.n, cfg.M, rng); break;
		case SamplerMode::rejection: {
			auto s = sample_pnm_rejection(cfg.n, cfg.M, rng, cfg.max_tries);
			g = std::move(s.graph);
			tries = s.tries;
			break;
		}
		case SamplerMode::mcmc: g = mcmc_planar_chain(cfg.n, cfg.M, cfg.burn_in(), rng); break;
		case SamplerMode::exhaustive: g = exhaustive_sample(cfg.n, int(cfg.M), rng); break;
		}
		auto rec = measure(g);
		rec.tries = tries;
		stats.trials[t] = rec;
	};

	int workers = std::max(1, std::min(cfg.workers, std::max(1, cfg.trials)));
	std::vector<std::exception_ptr> errors(workers);
	auto body = [&](int w) {
		try {
			for (int t = w; t < cfg.trials; t += workers)
				run_trial(t);
		} catch (...) {
			errors[w] = std::current_exception();
		}
	};
	if (workers == 1) {
		body(0);
	} else {
		std::vector<std::thread> threads;
		for (int w = 0; w < workers; ++w)
			threads.emplace_back(body, w);
		for (auto& th : threads)
			th.join();
	}
	for (auto& e : errors)
		if (e)
			std::rethrow_exception(e);

	struct Column
	{
		const char* name;
		double (*get)(const TrialRecord&);
	};
	static const Column columns[] = {
	    {"L1", [](const TrialRecord& r) { return double(r.L1); }},
	    {"L2", [](const TrialRecord& r) { return double(r.L2); }},
	    {"complexSize", [](const TrialRecord& r) { return double(r.complex_size); }},
	    {"complexExcess", [](const TrialRecord& r) { return double(r.complex_excess); }},
	    {"coreSize", [](const TrialRecord& r) { return double(r.core_size); }},
	    {"deficiency", [](const TrialRecord& r) { return double(r.deficiency); }},
	    {"largestIsTree", [](const TrialRecord& r) { return double(r.largest_is_tree); }},
	    {"containsK4", [](const TrialRecord& r) { return double(r.contains_k4); }},
	    {"tries", [](const TrialRecord& r) { return double(r.tries); }},
	};
	std::uint64_t stream = 1ULL << 40; // clear of the per-trial streams
	for (const auto& col : columns) {
		std::vector<double> xs;
		for (const auto& r : stats.trials)
			xs.push_back(col.get(r));
		stats.summaries[col.name] = summarize(xs, cfg.seed, stream++);
	}
	long draws = 0, planar = 0;
	for (const auto& r : stats.trials) {
		draws += r.tries;
		planar += r.planar;
	}
	stats.acceptance_rate = draws > 0 ? double(cfg.trials) / double(draws) : 1.0;
	stats.planar_fraction = cfg.trials > 0 ? double(planar) / cfg.trials : 0.0;
	return stats;
}

json to_json(const TrialRecord& r)
{
	return {{"L1", r.L1},
	        {"L2", r.L2},
	        {"complexSize", r.complex_size},
	        {"complexExcess", r.complex_excess},
	        {"coreSize", r.core_size},
	        {"deficiency", r.deficiency},
	        {"largestIsTree", r.largest_is_tree},
	        {"containsK4", r.contains_k4},
	        {"planar", r.planar},
	        {"tries", r.tries}};
}

json to_json(const Summary& s)
{
	return {{"mean", s.mean},     {"sd", s.sd},         {"q05", s.q05},       {"q25", s.q25},
	        {"median", s.median}, {"q75", s.q75},       {"q95", s.q95},       {"ciLow", s.ci_low},
	        {"ciHigh", s.ci_high}};
}

json to_json(const SampleStats& s)
{
	json summaries = json::object();
	for (const auto& [k, v] : s.summaries)
		summaries[k] = to_json(v);
	return {{"config", to_json(s.config)},
	        {"acceptanceRate", s.acceptance_rate},
	        {"planarFraction", s.planar_fraction},
	        {"summaries", summaries},
	        {"provenance", s.config.mode == SamplerMode::mcmc ? "diagnostic" : "sampled"}};
}

std::string trials_csv(const SampleStats& s)
{
	std::ostringstream out;
	out << "trial,L1,L2,complexSize,complexExcess,coreSize,deficiency,largestIsTree,containsK4,planar,tries\n";
	for (std::size_t t = 0; t < s.trials.size(); ++t) {
		const auto& r = s.trials[t];
		out << t << ',' << r.L1 << ',' << r.L2 << ',' << r.complex_size << ',' << r.complex_excess << ','
		    << r.core_size << ',' << r.deficiency << ',' << r.largest_is_tree << ',' << r.contains_k4 << ','
		    << r.planar << ',' << r.tries << '\n';
	}
	return out.str();
}

} // namespace planar
