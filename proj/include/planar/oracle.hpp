#pragma once

// Exhaustive enumeration at small sizes.  Everything in here is slow on
// purpose and serves as ground truth for the series, the counting formulas
// and the samplers.

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "planar/bitgraph.hpp"
#include "planar/exact.hpp"
#include "planar/graph.hpp"

namespace planar {

// Thrown when a request exceeds the exhaustive-search guards.
struct GuardError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

constexpr int simple_sweep_guard = 8;  // full (n, M) sweeps of simple graphs
constexpr int simple_stream_guard = 10; // streaming enumGraphs
constexpr int multigraph_guard = 6;    // min-degree-3 multigraph families

struct OracleOptions
{
	bool override_guard = false;
	int workers = 1; // search space split by first edge; results are merged exactly
};

// Labeled graphs with n vertices and M edges, lexicographic in the sorted edge list.
void enum_graphs(int n, int M, const std::function<void(const SimpleGraph&)>& visit, bool override_guard = false);
void enum_graph_masks(int n, int M, const std::function<void(small::Mask)>& visit, int worker = 0, int workers = 1);

BigInt pl_brute(int n, int M, const OracleOptions& opt = {});
std::vector<BigInt> pl_brute_row(int n, const OracleOptions& opt = {}); // indexed by M
BigInt u_brute(int n, int M, const OracleOptions& opt = {});
std::vector<BigInt> u_brute_row(int n, const OracleOptions& opt = {});

struct ComplexCounts
{
	int k = 0;
	int l = 0;
	BigInt total;                    // complex planar graphs
	BigInt connected;                // connected ones
	std::vector<BigInt> by_deficiency; // index d = 0 .. 2l
};

ComplexCounts complex_brute(int k, int l, const OracleOptions& opt = {});
BigInt c_brute(int k, int l, const OracleOptions& opt = {});
BigInt cd_brute(int k, int l, int d, const OracleOptions& opt = {});
BigInt c_conn_brute(int k, int l, const OracleOptions& opt = {});
// C(k, k + l) for every l >= 1 from a single sweep; entry l (entry 0 unused).
std::vector<BigInt> c_brute_row(int k, const OracleOptions& opt = {});

// Labeled multigraphs (loops allowed) with minimum degree >= 3.
void enum_min_deg3_multigraphs(int n, int edges, const std::function<void(const LabeledMultigraph&)>& visit,
                               bool override_guard = false);

// Weighted count of planar members of Q(n; d): edges (3n + d) / 2; zero on odd parity.
Rational q_brute(int n, int d, bool override_guard = false);
Rational q_conn_brute(int n, int d, bool override_guard = false);

// Subdivision class of a kernel: loops and the sizes (>= 2) of its parallel classes.
struct KernelClass
{
	int loops = 0;
	std::vector<int> parallel; // sorted

	int required_insertions() const;
	auto operator<=>(const KernelClass&) const = default;
};

struct KernelCensus
{
	int vertices = 0;
	int edges = 0;
	int deficiency = 0;
	std::map<KernelClass, Rational> classes;

	bool empty() const { return classes.empty(); }
	// Aggregated view keyed by required insertions r.
	std::map<int, Rational> by_insertions() const;
};

KernelCensus kernel_census_brute(int l, int d, bool override_guard = false);
KernelClass kernel_class(const LabeledMultigraph& kernel);

json to_json(const KernelCensus& c);

} // namespace planar
