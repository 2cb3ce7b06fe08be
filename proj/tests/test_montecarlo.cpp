#include "doctest.h"

#include <cmath>
#include <set>

#include "planar/bitgraph.hpp"
#include "planar/montecarlo.hpp"
#include "planar/oracle.hpp"
#include "planar/planarity.hpp"

using namespace planar;

TEST_CASE("counter generator is a pure function of its key")
{
	CounterRng a(5, 3), b(5, 3), c(5, 4), d(6, 3);
	auto x = a();
	CHECK(x == b());
	CHECK(x != c());
	CHECK(x != d());
	CHECK(a.counter() == 1);
	// Frozen first outputs pin the algorithm.
	CounterRng e(1, 0);
	auto first = e();
	CounterRng f(1, 0);
	CHECK(f() == first);
	CHECK(std::string(CounterRng::algorithm) == "splitmix64-counter-v1");
}

TEST_CASE("property: bounded draws stay in range and cover it")
{
	CounterRng r(7, 0);
	for (std::uint64_t bound : {1ULL, 2ULL, 3ULL, 7ULL, 1000ULL}) {
		std::set<std::uint64_t> seen;
		for (int i = 0; i < 20000; ++i) {
			auto v = r.below(bound);
			CHECK(v < bound);
			seen.insert(v);
		}
		CHECK(seen.size() == std::min<std::uint64_t>(bound, 1000));
	}
	for (int i = 0; i < 1000; ++i) {
		double u = r.uniform();
		CHECK(u >= 0);
		CHECK(u < 1);
	}
}

TEST_CASE("property: pair indices enumerate pairs lexicographically")
{
	for (int n : {2, 5, 9, 40}) {
		std::pair<int, int> prev{-1, -1};
		std::uint64_t total = std::uint64_t(n) * (n - 1) / 2;
		for (std::uint64_t i = 0; i < total; ++i) {
			auto p = pair_from_index(n, i);
			CHECK(p.first < p.second);
			CHECK(p.second < n);
			CHECK(prev < p);
			prev = p;
			if (n <= small::max_vertices)
				CHECK(small::pair_index(n, p.first, p.second) == int(i));
		}
	}
}

TEST_CASE("G(n, M) samples")
{
	CounterRng r(1, 1);
	auto g = sample_gnm(1000, 700, r);
	CHECK(g.n() == 1000);
	CHECK(g.edge_count() == 700);
	CHECK_THROWS(sample_gnm(4, 7, r));
	CHECK(sample_gnm(4, 6, r).edge_count() == 6);
}

TEST_CASE("property: G(n, M) is uniform on a small space")
{
	// n = 4, M = 2: fifteen graphs.
	std::map<small::Mask, long> hits;
	CounterRng r(3, 0);
	const long draws = 30000;
	for (long i = 0; i < draws; ++i)
		++hits[small::mask_of(sample_gnm(4, 2, r))];
	CHECK(hits.size() == 15);
	for (auto& [m, h] : hits)
		CHECK(std::fabs(h - draws / 15.0) < 5 * std::sqrt(draws / 15.0));
}

TEST_CASE("rejection sampler")
{
	CounterRng r(2, 0);
	auto s = sample_pnm_rejection(200, 100, r);
	CHECK(is_planar(s.graph));
	CHECK(s.tries >= 1);
	CHECK_THROWS_AS(sample_pnm_rejection(10, 25, r), RegimeInfeasible);
	// K5 minus an edge is the only shape with nine edges on five vertices.
	auto k = sample_pnm_rejection(5, 9, r, 1000);
	CHECK(is_planar(k.graph));
	CHECK_THROWS_AS(sample_pnm_rejection(8, 18, r, 5), RegimeInfeasible);
}

TEST_CASE("planar seed")
{
	CounterRng r(4, 0);
	for (auto [n, M] : {std::pair{10, 24L}, std::pair{50, 40L}, std::pair{3, 3L}}) {
		auto g = planar_seed(n, M, r);
		CHECK(g.edge_count() == M);
		CHECK(is_planar(g));
	}
}

TEST_CASE("property: the edge-swap chain stays planar with fixed size")
{
	for (int n : {7, 30}) {
		CounterRng r(5, std::uint64_t(n));
		long M = 2 * n;
		PlanarChain ch(n, M, r);
		for (int i = 0; i < 50; ++i) {
			ch.step(20);
			auto g = ch.graph();
			CHECK(g.edge_count() == M);
			CHECK(is_planar(g));
		}
		CHECK(ch.proposals() == 1000);
		CHECK(ch.accepted() > 0);
	}
}

TEST_CASE("exhaustive sampler")
{
	CounterRng r(6, 0);
	CHECK(exhaustive_count(4, 6) == 1);
	CHECK(exhaustive_sample(4, 6, r).edge_count() == 6);
	CHECK(exhaustive_count(5, 9) == 10);
	CHECK(exhaustive_count(3, 2) == 3);
	CHECK(BigInt(long(exhaustive_count(6, 8))) == pl_brute(6, 8));
	CHECK_THROWS_AS(exhaustive_sample(9, 5, r), GuardError);
	std::vector<long> hits(3, 0);
	for (int i = 0; i < 30000; ++i)
		++hits[exhaustive_sample_index(3, 2, r)];
	for (long h : hits)
		CHECK(std::fabs(h - 10000.0) < 500);
}

TEST_CASE("structure measurement")
{
	// K4 plus a pendant vertex and an isolated edge.
	SimpleGraph g(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {5, 6}});
	auto r = measure(g);
	CHECK(r.L1 == 5);
	CHECK(r.L2 == 2);
	CHECK(r.complex_size == 5);
	CHECK(r.complex_excess == 2);
	CHECK(r.core_size == 4);
	CHECK(r.contains_k4);
	CHECK(r.planar);
	CHECK_FALSE(r.largest_is_tree);
	auto t = measure(SimpleGraph(4, {{0, 1}, {1, 2}}));
	CHECK(t.largest_is_tree);
	CHECK_FALSE(t.contains_k4);
	// A wheel has no K4 beyond the hub's triangles when the rim is long.
	SimpleGraph w(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
	CHECK_FALSE(contains_k4(w));
}

TEST_CASE("property: K4 detection agrees with a quadruple scan")
{
	CounterRng r(8, 0);
	for (int trial = 0; trial < 300; ++trial) {
		int n = 5 + int(r.below(6));
		long M = std::min<long>(long(n) * (n - 1) / 2, long(n + r.below(2 * n)));
		auto g = sample_gnm(n, M, r);
		bool expect = false;
		for (int a = 0; a < n && !expect; ++a)
			for (int b = a + 1; b < n && !expect; ++b)
				for (int c = b + 1; c < n && !expect; ++c)
					for (int d = c + 1; d < n && !expect; ++d)
						expect = g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(a, d) && g.has_edge(b, c) &&
						         g.has_edge(b, d) && g.has_edge(c, d);
		CHECK(contains_k4(g) == expect);
	}
}

TEST_CASE("summary statistics")
{
	std::vector<double> xs;
	for (int i = 1; i <= 101; ++i)
		xs.push_back(i);
	auto s = summarize(xs, 1, 0);
	CHECK(s.mean == doctest::Approx(51));
	CHECK(s.median == doctest::Approx(51));
	CHECK(s.q05 == doctest::Approx(6));
	CHECK(s.q95 == doctest::Approx(96));
	CHECK(s.ci_low < 51);
	CHECK(s.ci_high > 51);
	CHECK(s.sd == doctest::Approx(std::sqrt(101.0 * 102 / 12)).epsilon(1e-9));
}

TEST_CASE("property: experiments are deterministic across worker counts")
{
	ExperimentConfig c;
	c.n = 60;
	c.M = 40;
	c.trials = 12;
	c.seed = 17;
	for (auto mode : {SamplerMode::gnm, SamplerMode::rejection, SamplerMode::mcmc}) {
		c.mode = mode;
		c.mcmc_burn_in = 500;
		c.workers = 1;
		auto a = to_json(run_experiment(c));
		auto a2 = to_json(run_experiment(c));
		c.workers = 3;
		auto b = run_experiment(c);
		auto bj = to_json(b);
		bj["config"]["workers"] = 1;
		CHECK(a == a2);
		CHECK(a == bj);
		if (mode != SamplerMode::gnm)
			for (const auto& t : b.trials)
				CHECK(t.planar);
	}
}

TEST_CASE("experiment configuration json")
{
	ExperimentConfig c;
	c.n = 100;
	c.M = 80;
	c.mode = SamplerMode::mcmc;
	c.trials = 4;
	c.seed = 99;
	c.mcmc_burn_in = 1234;
	auto back = experiment_config_from_json(to_json(c));
	CHECK(back.n == 100);
	CHECK(back.M == 80);
	CHECK(back.mode == SamplerMode::mcmc);
	CHECK(back.burn_in() == 1234);
	CHECK(back.thin() == 100);
	CHECK(sampler_mode_from_string("exhaustive") == SamplerMode::exhaustive);
	CHECK_THROWS_AS(sampler_mode_from_string("boltzmann"), std::invalid_argument);
	CHECK_THROWS(experiment_config_from_json(json{{"n", 5}}));
}

TEST_CASE("csv rows")
{
	ExperimentConfig c;
	c.n = 20;
	c.M = 10;
	c.mode = SamplerMode::gnm;
	c.trials = 3;
	auto csv = trials_csv(run_experiment(c));
	CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}
