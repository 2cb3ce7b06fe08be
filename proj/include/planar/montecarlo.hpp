#pragma once

// Samplers for the uniform random graph G(n, M) and the uniform random
// planar graph P(n, M), plus per-trial structure statistics.

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "planar/exact.hpp"
#include "planar/graph.hpp"

namespace planar {

// Counter-based generator: output i of stream (seed, stream) is a fixed
// function of (seed, stream, i), so any trial can be reproduced in
// isolation and results do not depend on how trials are spread over threads.
class CounterRng
{
public:
	using result_type = std::uint64_t;
	static constexpr const char* algorithm = "splitmix64-counter-v1";

	CounterRng(std::uint64_t seed, std::uint64_t stream);

	static constexpr result_type min() { return 0; }
	static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
	result_type operator()();

	// Uniform in [0, bound) without modulo bias.
	std::uint64_t below(std::uint64_t bound);
	// Uniform in [0, 1).
	double uniform();

	std::uint64_t counter() const { return counter_; }

private:
	std::uint64_t key_;
	std::uint64_t counter_ = 0;
};

// The i-th unordered pair (u < v) of {0..n-1} in lexicographic order.
std::pair<int, int> pair_from_index(int n, std::uint64_t index);

SimpleGraph sample_gnm(int n, long M, CounterRng& rng);

struct RegimeInfeasible : std::runtime_error
{
	RegimeInfeasible(const std::string& what, double estimated_acceptance)
	    : std::runtime_error(what), estimated_acceptance(estimated_acceptance)
	{
	}
	double estimated_acceptance;
};

struct RejectionSample
{
	SimpleGraph graph;
	long tries = 0;
	double acceptance_rate = 0; // 1 / tries for this draw
};

RejectionSample sample_pnm_rejection(int n, long M, CounterRng& rng, long max_tries = 100000);

// Edge-swap chain on planar graphs with fixed (n, M): remove a uniform edge,
// insert a uniform absent pair, keep the move iff the result is planar.
class PlanarChain
{
public:
	// Starts from a relabelled prefix of a fixed triangulation.
	PlanarChain(int n, long M, CounterRng& rng);

	void step(long proposals);
	SimpleGraph graph() const;
	int n() const { return n_; }
	long edges() const { return static_cast<long>(edge_list_.size()); }
	long proposals() const { return proposals_; }
	long accepted() const { return accepted_; }

	// Bit-mask view for n <= 11 (pair order as in small::pair_index).
	std::uint64_t mask() const;

private:
	bool planar_after_swap(std::pair<int, int> out, std::pair<int, int> in);
	void remove_edge(int slot);
	void add_edge(std::pair<int, int> e);
	bool has_edge(int u, int v) const;

	int n_;
	CounterRng* rng_;
	bool small_;
	std::uint64_t mask_ = 0;
	std::vector<std::pair<int, int>> edge_list_;
	std::vector<std::vector<int>> adj_;
	std::unordered_set<std::uint64_t> edge_set_;
	std::vector<int> stamp_, local_; // BFS scratch
	int epoch_ = 0;
	long proposals_ = 0, accepted_ = 0;
};

// Seed graph: the first M edges of a triangulation, vertices relabelled at random.
SimpleGraph planar_seed(int n, long M, CounterRng& rng);

SimpleGraph mcmc_planar_chain(int n, long M, long steps, CounterRng& rng);

// One chain: burn_in proposals, then `samples` visits spaced `thin` proposals apart.
void mcmc_samples(int n, long M, long samples, long burn_in, long thin, CounterRng& rng,
                  const std::function<void(const PlanarChain&)>& visit);

constexpr int exhaustive_sampler_guard = 8;

// Uniform over the enumerated planar graphs with (n, M); the list is built
// once per (n, M) and cached.
SimpleGraph exhaustive_sample(int n, int M, CounterRng& rng);
// Index into the cached list (useful for uniformity tests).
std::size_t exhaustive_sample_index(int n, int M, CounterRng& rng);
std::size_t exhaustive_count(int n, int M);

enum class SamplerMode
{
	gnm, // plain G(n, M), no conditioning
	rejection,
	mcmc,
	exhaustive
};

std::string to_string(SamplerMode m);
SamplerMode sampler_mode_from_string(const std::string& s);

struct ExperimentConfig
{
	int n = 0;
	long M = 0;
	SamplerMode mode = SamplerMode::rejection;
	int trials = 1;
	std::uint64_t seed = 1;
	std::optional<long> mcmc_burn_in; // default 50 n M proposals
	std::optional<long> mcmc_thin;    // default n proposals
	long max_tries = 100000;
	int workers = 1;

	long burn_in() const { return mcmc_burn_in.value_or(50L * n * M); }
	long thin() const { return mcmc_thin.value_or(n); }
};

json to_json(const ExperimentConfig& c);
ExperimentConfig experiment_config_from_json(const json& j);

struct TrialRecord
{
	long L1 = 0;
	long L2 = 0;
	long complex_size = 0;   // vertices in complex components
	long complex_excess = 0; // total excess of complex components
	long core_size = 0;      // core of the largest component
	long deficiency = 0;
	bool largest_is_tree = false;
	bool contains_k4 = false;
	bool planar = false;
	long tries = 1; // rejection draws used
};

// Structure of a single graph.
TrialRecord measure(const SimpleGraph& g);
// K4 subgraph test; only kernel vertices can carry a K4.
bool contains_k4(const SimpleGraph& g);

struct Summary
{
	double mean = 0, sd = 0;
	double q05 = 0, q25 = 0, median = 0, q75 = 0, q95 = 0;
	double ci_low = 0, ci_high = 0; // bootstrap 95% interval for the mean
};

struct SampleStats
{
	ExperimentConfig config;
	std::vector<TrialRecord> trials;
	std::map<std::string, Summary> summaries;
	double acceptance_rate = 1; // rejection mode: trials / total draws
	double planar_fraction = 0;
};

// Summary of a numeric column; `stream` selects the bootstrap RNG stream.
Summary summarize(const std::vector<double>& xs, std::uint64_t seed, std::uint64_t stream, int resamples = 1000);

SampleStats run_experiment(const ExperimentConfig& cfg);

json to_json(const TrialRecord& r);
json to_json(const Summary& s);
json to_json(const SampleStats& s);
std::string trials_csv(const SampleStats& s);

} // namespace planar
