#pragma once

// Exact counting formulas: forests, graphs without complex components,
// complex planar graphs assembled from kernels, and the convolution that
// splits a planar graph into its complex part and the rest.

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "planar/exact.hpp"
#include "planar/oracle.hpp"

namespace planar {

// Labeled forests on a vertices with exactly t trees.
BigInt forest_count(int a, int t);
// Connected labeled graphs on k vertices with exactly one cycle.
BigInt unicyclic_count(int k);
// Labeled graphs on b vertices whose components are all unicyclic.
BigInt unicyclic_forest_count(int b);

// U(n, M): graphs with n vertices, M edges and no complex component.
BigInt u_exact(int n, int M);
std::vector<BigInt> u_exact_row(int n); // indexed by M = 0 .. n
Rational rho_exact(int n, int M);

// Floating-point path for large n.  Returns log rho(n, M) (-inf when
// U(n, M) = 0).  Works with probability-scaled convolutions in long double,
// so no intermediate quantity over- or underflows for n in the thousands.
double log_rho(int n, long M);
double rho_float(int n, long M);

// Number of complex planar graphs on k vertices with k + l edges and
// deficiency d, assembled from a census of planar kernels.  The census must
// describe kernels with 2l - d vertices and 3l - d edges.
BigInt cd_exact(int k, int l, int d, const KernelCensus& census);

// The coarser form that only looks at the number of required insertions per
// class (every kernel edge treated as independently subdividable beyond the
// forced minimum).  Disagrees with enumeration whenever the census contains
// loops or parallel classes (it can even be non-integral); kept to document
// the difference.
Rational cd_exact_by_insertions(int k, int l, int d, const KernelCensus& census);

// Sum over d of cd_exact.  `censuses[d]` must exist for every d with
// 0 <= d <= 2l - 1 (missing ones are treated as empty).
BigInt c_exact(int k, int l, const std::map<int, KernelCensus>& censuses);
// Same, with censuses from exhaustive enumeration (guarded).
BigInt c_exact(int k, int l, bool override_guard = false);

struct LogInterval
{
	double low = 0;
	double high = 0;

	bool contains(double x) const { return low <= x && x <= high; }
};

// Envelope for log C(k, k + l) with the correction parameter beta swept over
// [-14, 128]; the O(l^2/k) and O(1/l) terms are dropped.
LogInterval c_approx(int k, int l, double gamma, double g);

struct ProviderGap : std::runtime_error
{
	ProviderGap(const std::string& what_kind, int a, int b);
	int first, second;
};

// C(k, k + l) and U(n', M') sources for the convolution.  Returning nullopt
// means "not available" and aborts the convolution with ProviderGap.
using CProvider = std::function<std::optional<BigInt>(int k, int l)>;
using UProvider = std::function<std::optional<BigInt>(int n, int M)>;

CProvider brute_c_provider(const OracleOptions& opt = {});
// Census-based exact counts for l <= max_l (censuses enumerated once and cached).
CProvider census_c_provider(int max_l);
UProvider exact_u_provider();

// pl(n, M) = sum over the complex part (k vertices, k + l edges) of
// C(n, k) C(k, k + l) U(n - k, M - k - l); k = 0 contributes U(n, M).
BigInt pl_convolution(int n, int M, const CProvider& c, const UProvider& u);

// Exact table with its context, e.g. {"n": 7} -> values by M.
struct CountTable
{
	json context;
	std::map<long, BigInt> values;
};

json to_json(const CountTable& t);
std::string to_csv(const CountTable& t, const std::string& index_name);

} // namespace planar
