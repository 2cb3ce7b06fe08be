#include "planar/counting.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>

namespace planar {

namespace {

// Forest and unicyclic tables are shared by every caller and grown on demand.
struct Tables
{
	std::mutex mu;
	int size = -1;
	std::vector<std::vector<BigInt>> forest; // forest[a][t]
	std::vector<BigInt> unicyclic;           // by k
	std::vector<BigInt> unicyclic_forest;    // V(b)

	void ensure(int n)
	{
		if (n <= size)
			return;
		forest.assign(n + 1, {});
		for (int a = 0; a <= n; ++a)
			forest[a].assign(a + 1, 0);
		forest[0][0] = 1;
		std::vector<BigInt> trees(n + 1);
		for (int s = 1; s <= n; ++s)
			trees[s] = cayley(s);
		for (int a = 1; a <= n; ++a)
			for (int t = 1; t <= a; ++t) {
				// the tree containing the smallest label has s vertices
				BigInt acc = 0;
				for (int s = 1; s <= a - t + 1; ++s)
					acc += binomial(a - 1, s - 1) * trees[s] * forest[a - s][t - 1];
				forest[a][t] = acc;
			}

		unicyclic.assign(n + 1, 0);
		for (int k = 3; k <= n; ++k) {
			BigInt acc = 0;
			for (int j = 3; j <= k; ++j) {
				// cycle on j chosen vertices, then a rooted forest hanging the rest on it
				BigInt cycles = binomial(k, j) * factorial(j - 1) / 2;
				BigInt hang = j < k ? BigInt(j) * power(k, k - j - 1) : BigInt(1);
				acc += cycles * hang;
			}
			unicyclic[k] = acc;
		}

		unicyclic_forest.assign(n + 1, 0);
		unicyclic_forest[0] = 1;
		for (int b = 1; b <= n; ++b) {
			BigInt acc = 0;
			for (int k = 3; k <= b; ++k)
				acc += binomial(b - 1, k - 1) * unicyclic[k] * unicyclic_forest[b - k];
			unicyclic_forest[b] = acc;
		}
		size = n;
	}
};

Tables& tables(int n)
{
	static Tables t;
	std::lock_guard lock(t.mu);
	t.ensure(n);
	return t;
}

BigInt rooted_forest(int k, int i)
{
	// forests on k labeled vertices whose roots are a fixed set of i vertices
	if (i == k)
		return 1;
	return BigInt(i) * power(k, k - i - 1);
}

// Coefficients of prod over parallel classes of (j - (j - 1) y).
std::vector<BigInt> class_polynomial(const KernelClass& cls)
{
	std::vector<BigInt> q{1};
	for (int j : cls.parallel) {
		std::vector<BigInt> next(q.size() + 1, 0);
		for (std::size_t a = 0; a < q.size(); ++a) {
			next[a] += q[a] * j;
			next[a + 1] -= q[a] * (j - 1);
		}
		q = std::move(next);
	}
	return q;
}

// Ways to place m unlabeled subdivision vertices on e edges with at least
// r of them forced: [y^m] y^r Q(y) / (1 - y)^e.
BigInt placements(int m, int r, int e, const std::vector<BigInt>& q)
{
	BigInt acc = 0;
	for (std::size_t j = 0; j < q.size(); ++j) {
		long free = long(m) - r - long(j);
		if (free < 0)
			break;
		acc += q[j] * binomial(free + e - 1, e - 1);
	}
	return acc;
}

void check_census(int l, int d, const KernelCensus& census)
{
	if (census.vertices != 2 * l - d || census.edges != 3 * l - d || census.deficiency != d)
		throw std::invalid_argument("kernel census (v=" + std::to_string(census.vertices) + ", e=" +
		                            std::to_string(census.edges) + ", d=" + std::to_string(census.deficiency) +
		                            ") does not match l=" + std::to_string(l) + ", d=" + std::to_string(d));
}

} // namespace

BigInt forest_count(int a, int t)
{
	if (a < 0 || t < 0 || t > a)
		return 0;
	return tables(a).forest[a][t];
}

BigInt unicyclic_count(int k)
{
	if (k < 3)
		return 0;
	return tables(k).unicyclic[k];
}

BigInt unicyclic_forest_count(int b)
{
	if (b < 0)
		return 0;
	return tables(b).unicyclic_forest[b];
}

BigInt u_exact(int n, int M)
{
	if (n < 0 || M < 0 || M > n)
		return 0;
	auto& tb = tables(n);
	int t = n - M;
	BigInt acc = 0;
	for (int a = t; a <= n; ++a)
		acc += binomial(n, a) * tb.forest[a][t] * tb.unicyclic_forest[n - a];
	return acc;
}

std::vector<BigInt> u_exact_row(int n)
{
	std::vector<BigInt> row;
	for (int M = 0; M <= n; ++M)
		row.push_back(u_exact(n, M));
	return row;
}

Rational rho_exact(int n, int M)
{
	long pairs = long(n) * (n - 1) / 2;
	if (M < 0 || M > pairs)
		return 0;
	return make_rational(u_exact(n, M), binomial(pairs, M));
}

double log_rho(int n, long M)
{
	const double minus_inf = -std::numeric_limits<double>::infinity();
	long pairs = long(n) * (n - 1) / 2;
	if (M < 0 || M > n || M > pairs)
		return minus_inf;
	if (M <= 1)
		return 0.0;
	using real = long double;
	int t = n - int(M);

	// Tree-size law p_m = 2 m^(m-2) e^(-m) / m!; a forest with t trees on a
	// vertices is a! e^a 2^(-t) / t! times the t-fold convolution at a.
	std::vector<real> p(n + 1, 0);
	for (int m = 1; m <= n; ++m)
		p[m] = std::exp(std::log(real(2)) + (m - 2) * std::log(real(m)) - m - std::lgamma(real(m) + 1));

	auto convolve = [n](const std::vector<real>& a, const std::vector<real>& b) {
		std::vector<real> c(n + 1, 0);
		for (int i = 0; i <= n; ++i) {
			if (a[i] == 0)
				continue;
			for (int j = 0; i + j <= n; ++j)
				c[i + j] += a[i] * b[j];
		}
		return c;
	};
	std::vector<real> forest(n + 1, 0), base = p;
	forest[0] = 1;
	for (int e = t; e > 0; e >>= 1) {
		if (e & 1)
			forest = convolve(forest, base);
		if (e > 1)
			base = convolve(base, base);
	}

	// Unicyclic components scaled the same way: w_k = unicyclic(k) e^(-k) / k!.
	// Summing over the number i of tree vertices outside the cycle gives
	// w_k = P(Poisson(k) <= k - 3) / (2k).
	std::vector<real> w(n + 1, 0);
	for (int k = 3; k <= n; ++k)
		w[k] = boost::math::gamma_q(real(k - 2), real(k)) / (2 * real(k));
	std::vector<real> v(n + 1, 0);
	v[0] = 1;
	for (int b = 1; b <= n; ++b) {
		real acc = 0;
		for (int k = 3; k <= b; ++k)
			acc += k * w[k] * v[b - k];
		v[b] = acc / b;
	}

	real s = 0;
	for (int a = t; a <= n; ++a)
		s += forest[a] * v[n - a];
	if (s <= 0)
		return minus_inf;
	real log_u = std::lgamma(real(n) + 1) + n - t * std::log(real(2)) - std::lgamma(real(t) + 1) + std::log(s);
	real log_total =
	    std::lgamma(real(pairs) + 1) - std::lgamma(real(M) + 1) - std::lgamma(real(pairs - M) + 1);
	return double(log_u - log_total);
}

double rho_float(int n, long M)
{
	return std::exp(log_rho(n, M));
}

BigInt cd_exact(int k, int l, int d, const KernelCensus& census)
{
	if (census.empty())
		return 0;
	check_census(l, d, census);
	int v = 2 * l - d, e = 3 * l - d;
	Rational total = 0;
	for (const auto& [cls, w] : census.classes) {
		int r = cls.required_insertions();
		auto q = class_polynomial(cls);
		for (int i = v + r; i <= k; ++i) {
			int m = i - v;
			BigInt ways = binomial(k, i) * binomial(i, v) * rooted_forest(k, i) * factorial(m) * placements(m, r, e, q);
			total += Rational(ways) * w;
		}
	}
	total.canonicalize();
	if (total.get_den() != 1)
		throw std::logic_error("cd_exact: non-integral total " + to_string(total));
	return total.get_num();
}

Rational cd_exact_by_insertions(int k, int l, int d, const KernelCensus& census)
{
	if (census.empty())
		return 0;
	check_census(l, d, census);
	int v = 2 * l - d, e = 3 * l - d;
	Rational total = 0;
	for (const auto& [r, w] : census.by_insertions())
		for (int i = v + r; i <= k; ++i) {
			int m = i - v;
			BigInt ways = binomial(k, i) * binomial(i, v) * rooted_forest(k, i) * factorial(m) *
			              binomial(m - r + e - 1, e - 1);
			total += Rational(ways) * w;
		}
	total.canonicalize();
	return total;
}

BigInt c_exact(int k, int l, const std::map<int, KernelCensus>& censuses)
{
	BigInt total = 0;
	for (int d = 0; d <= 2 * l - 1; ++d) {
		auto it = censuses.find(d);
		if (it != censuses.end())
			total += cd_exact(k, l, d, it->second);
	}
	return total;
}

BigInt c_exact(int k, int l, bool override_guard)
{
	std::map<int, KernelCensus> censuses;
	for (int d = 0; d <= 2 * l - 1; ++d)
		censuses[d] = kernel_census_brute(l, d, override_guard);
	return c_exact(k, l, censuses);
}

LogInterval c_approx(int k, int l, double gamma, double g)
{
	double K = k, L = l;
	double base = -4 * std::log(2.0) + 0.5 * std::log(3.0) + std::log(g) + (K + 1.5 * L - 0.5) * std::log(K) +
	              L * (2 * std::log(gamma) + 1.5 - 1.5 * std::log(3.0)) + (-1.5 * L - 3) * std::log(L);
	double spread = std::sqrt(L * L * L / K);
	return {base - 14 * spread, base + 128 * spread};
}

ProviderGap::ProviderGap(const std::string& what_kind, int a, int b)
    : std::runtime_error("no " + what_kind + " value available for (" + std::to_string(a) + ", " +
                         std::to_string(b) + ")"),
      first(a), second(b)
{
}

CProvider brute_c_provider(const OracleOptions& opt)
{
	struct Cache
	{
		std::mutex mu;
		std::map<int, std::vector<BigInt>> rows;
	};
	auto cache = std::make_shared<Cache>();
	return [cache, opt](int k, int l) -> std::optional<BigInt> {
		std::lock_guard lock(cache->mu);
		auto it = cache->rows.find(k);
		if (it == cache->rows.end()) {
			try {
				it = cache->rows.emplace(k, c_brute_row(k, opt)).first;
			} catch (const GuardError&) {
				return std::nullopt;
			}
		}
		if (l < 1)
			return std::nullopt;
		if (std::size_t(l) >= it->second.size())
			return BigInt(0);
		return it->second[l];
	};
}

CProvider census_c_provider(int max_l)
{
	struct Cache
	{
		std::mutex mu;
		std::map<int, std::map<int, KernelCensus>> by_l;
	};
	auto cache = std::make_shared<Cache>();
	return [cache, max_l](int k, int l) -> std::optional<BigInt> {
		if (l < 1 || l > max_l)
			return std::nullopt;
		std::lock_guard lock(cache->mu);
		auto it = cache->by_l.find(l);
		if (it == cache->by_l.end()) {
			std::map<int, KernelCensus> censuses;
			try {
				for (int d = 0; d <= 2 * l - 1; ++d)
					censuses[d] = kernel_census_brute(l, d);
			} catch (const GuardError&) {
				return std::nullopt;
			}
			it = cache->by_l.emplace(l, std::move(censuses)).first;
		}
		return c_exact(k, l, it->second);
	};
}

UProvider exact_u_provider()
{
	return [](int n, int M) -> std::optional<BigInt> { return u_exact(n, M); };
}

BigInt pl_convolution(int n, int M, const CProvider& c, const UProvider& u)
{
	auto need_u = [&](int a, int b) {
		auto x = u(a, b);
		if (!x)
			throw ProviderGap("U", a, b);
		return *x;
	};
	BigInt total = need_u(n, M);
	for (int k = 4; k <= n; ++k)
		for (int l = 1; k + l <= M && k + l <= 3 * k - 6; ++l) {
			int rest = M - k - l;
			if (rest > n - k)
				continue; // no graph on n - k vertices without complex parts
			auto ck = c(k, l);
			if (!ck)
				throw ProviderGap("C", k, l);
			if (*ck == 0)
				continue;
			total += binomial(n, k) * *ck * need_u(n - k, rest);
		}
	return total;
}

json to_json(const CountTable& t)
{
	json values = json::object();
	for (const auto& [i, v] : t.values)
		values[std::to_string(i)] = to_string(v);
	return {{"context", t.context}, {"values", values}};
}

std::string to_csv(const CountTable& t, const std::string& index_name)
{
	std::ostringstream out;
	for (auto it = t.context.begin(); it != t.context.end(); ++it)
		out << it.key() << ',';
	out << index_name << ",count\n";
	for (const auto& [i, v] : t.values) {
		for (auto it = t.context.begin(); it != t.context.end(); ++it)
			out << it.value().dump() << ',';
		out << i << ',' << to_string(v) << '\n';
	}
	return out.str();
}

} // namespace planar
