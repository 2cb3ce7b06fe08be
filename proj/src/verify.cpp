#include "planar/verify.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "planar/asymptotics.hpp"
#include "planar/bitgraph.hpp"
#include "planar/counting.hpp"
#include "planar/montecarlo.hpp"
#include "planar/oracle.hpp"
#include "planar/series.hpp"

namespace planar {

namespace {

// Pinned tolerances and sizes.
constexpr int decomposition_max_n = 7;
constexpr double decomposition_limit = 600;

constexpr int series_check_order = 8;
constexpr double series_check_limit = 300;

constexpr int system_order = 200;
constexpr double residual_limit = 120;

constexpr double gamma_target = 3.38;
constexpr double gamma_tolerance = 0.02;
constexpr double gamma_limit = 300;

constexpr int construction_max_k = 8;
constexpr double construction_limit = 1800;

constexpr int deficiency_max_n = 5;
constexpr int deficiency_max_d = 3;

constexpr double nu_zero_tolerance = 1e-12;
constexpr double nu_grid_step = 0.1;
constexpr int rho_n = 4000;
constexpr double rho_relative_tolerance = 0.05;
constexpr double nu_limit = 1200;

constexpr int planarity_n = 10000;
constexpr long planarity_M = 5000;
constexpr int planarity_trials = 2000;
constexpr double planarity_low = 0.97;
constexpr double planarity_high = 1.0;
constexpr std::uint64_t planarity_seed = 8;
constexpr double planarity_limit = 600;

constexpr double chi2_alpha = 0.01;
constexpr long chi2_draws = 100000;
constexpr std::uint64_t chi2_seed = 9;
constexpr int tv_n = 7;
constexpr int tv_M_low = 6, tv_M_high = 15;
constexpr long tv_samples = 1000000;
constexpr double tv_tolerance = 0.02;
constexpr std::uint64_t tv_seed = 99;

constexpr int structure_n = 10000;
constexpr int structure_trials = 200;
constexpr double tree_fraction_min = 0.9;
constexpr double critical_low = 0.1, critical_high = 10;
constexpr int super_n = 3000;
constexpr int super_trials = 8;
// 50 n M proposals (the sampler default) is out of reach at n = 3000; the
// chain is run for a fixed budget instead, see the README.
constexpr long super_burn_in = 100000;
constexpr double super_low = 0.7, super_high = 1.4;
constexpr std::uint64_t structure_seed = 10;
constexpr double stirling_n = 1e8;
constexpr double stirling_tolerance = 0.01;
constexpr double b_root_tolerance = 1e-12;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
	return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double x)
{
	char buf[64];
	std::snprintf(buf, sizeof buf, f, x);
	return buf;
}

// Criterion 1: the complex-part convolution reproduces exhaustive counts.
void check_decomposition(CriterionResult& r, const VerifyOptions& opt)
{
	OracleOptions o;
	o.workers = opt.workers;
	auto c = brute_c_provider(o);
	auto u = exact_u_provider();
	long checked = 0, mismatches = 0;
	for (int n = 1; n <= decomposition_max_n; ++n) {
		auto row = pl_brute_row(n, o);
		for (int M = 0; M < int(row.size()); ++M) {
			++checked;
			if (pl_convolution(n, M, c, u) != row[M]) {
				++mismatches;
				r.details["firstMismatch"] = {{"n", n}, {"M", M}};
			}
		}
	}
	r.details["pairs"] = checked;
	r.details["mismatches"] = mismatches;
	r.pass = mismatches == 0;
}

// Criterion 2: series coefficients against weighted multigraph enumeration.
void check_series(CriterionResult& r, const VerifyOptions&)
{
	auto sol = solve_system(series_check_order);
	bool ok = sol.g0(2) == Rational(5, 12);
	r.details["g0(2)"] = to_string(sol.g0(2));
	for (int n : {2, 4, 6}) {
		Rational q = q_brute(n, 0), qc = q_conn_brute(n, 0);
		bool eq0 = sol.g0(n) == q, eq1 = sol.g1(n) == qc;
		r.details["n=" + std::to_string(n)] = {{"g0", to_string(sol.g0(n))},
		                                       {"brute", to_string(q)},
		                                       {"g1", to_string(sol.g1(n))},
		                                       {"bruteConnected", to_string(qc)}};
		ok = ok && eq0 && eq1;
	}
	r.pass = ok;
}

// Criterion 3: exact residuals of the nine equations.
void check_residuals(CriterionResult& r, const VerifyOptions&)
{
	auto sol = solve_system(system_order);
	int nonzero = 0;
	for (const auto& e : residuals(sol)) {
		bool zero = e.residual.is_zero();
		r.details[e.equation] = zero ? "0" : "nonzero from x^" + std::to_string(e.residual.valuation());
		nonzero += !zero;
	}
	r.details["order"] = system_order;
	r.pass = nonzero == 0;
}

// Criterion 4: growth constant from the coefficient sequence.
void check_gamma(CriterionResult& r, const VerifyOptions&)
{
	auto k = estimate_constants(system_order, CubicVariant::corrected);
	r.details["constants"] = to_json(k);
	r.details["target"] = {gamma_target - gamma_tolerance, gamma_target + gamma_tolerance};
	r.pass = std::fabs(k.gamma - gamma_target) <= gamma_tolerance;
	r.info.push_back("corrected system gamma = " + fmt("%.6f", k.gamma) + " (+- " + fmt("%.1e", k.gamma_err) + ")");
	auto lit = estimate_constants(system_order, CubicVariant::literal);
	r.details["literalConstants"] = to_json(lit);
	r.info.push_back("literal system gamma = " + fmt("%.6f", lit.gamma) +
	                 " (this reading disagrees with enumeration from 2 vertices on)");
}

// Criterion 5: construction formula against exhaustive complex-graph counts.
void check_construction(CriterionResult& r, const VerifyOptions& opt)
{
	OracleOptions o;
	o.workers = opt.workers;
	std::map<std::pair<int, int>, KernelCensus> census;
	long checked = 0, mismatches = 0, coarse_mismatches = 0;
	for (int l : {1, 2})
		for (int d = 0; d <= 2 * l - 1; ++d)
			census[{l, d}] = kernel_census_brute(l, d);
	for (int k = 1; k <= construction_max_k; ++k) {
		for (int l : {1, 2}) {
			if (k + l > k * (k - 1) / 2)
				continue;
			auto brute = complex_brute(k, l, o);
			for (int d = 0; d <= 2 * l - 1; ++d) {
				BigInt formula = cd_exact(k, l, d, census[{l, d}]);
				BigInt truth = d < int(brute.by_deficiency.size()) ? brute.by_deficiency[d] : BigInt(0);
				++checked;
				if (formula != truth) {
					++mismatches;
					r.details["firstMismatch"] = {{"k", k}, {"l", l}, {"d", d}, {"formula", to_string(formula)},
					                              {"brute", to_string(truth)}};
				}
				if (cd_exact_by_insertions(k, l, d, census[{l, d}]) != Rational(truth))
					++coarse_mismatches;
			}
		}
	}
	r.details["triples"] = checked;
	r.details["mismatches"] = mismatches;
	r.pass = mismatches == 0;
	r.info.push_back("insertion-count-only formula disagrees on " + std::to_string(coarse_mismatches) + " of " +
	                 std::to_string(checked) + " triples");
}

// Criterion 6: deficiency bounds on weighted minimum-degree-3 multigraphs.
void check_deficiency_bounds(CriterionResult& r, const VerifyOptions&)
{
	auto sol = solve_system(deficiency_max_n + deficiency_max_d);
	bool ok = true;
	json rows = json::array();
	for (int n = 1; n <= deficiency_max_n; ++n) {
		for (int d = 1; d <= std::min(n, deficiency_max_d); ++d) {
			if ((3 * n + d) % 2 != 0)
				continue;
			Rational q = q_brute(n, d);
			// q(n + d; 0) from the series; it is checked against enumeration
			// wherever the enumeration is within its guard.
			Rational q0 = sol.g0(n + d);
			if (n + d <= multigraph_guard && q_brute(n + d, 0) != q0)
				ok = false;
			Rational df = Rational(factorial(d));
			Rational low = q0 / (df * Rational(power(36, d)));
			Rational high = q0 * Rational(power(9, d)) / df;
			bool in = low <= q && q <= high;
			ok = ok && in;
			rows.push_back({{"n", n},
			                {"d", d},
			                {"q", to_string(q)},
			                {"low", to_string(low)},
			                {"high", to_string(high)},
			                {"within", in}});
		}
	}
	r.details["cases"] = rows;
	r.pass = ok;
}

// Criterion 7: nu(c) and the exact no-complex-part probability at n = 4000.
void check_nu(CriterionResult& r, const VerifyOptions&)
{
	double nu0 = nu(0);
	bool zero_ok = std::fabs(nu0 - std::sqrt(2.0 / 3.0)) <= nu_zero_tolerance;
	r.details["nu0"] = nu0;
	bool monotone = true;
	double prev = nu(-2);
	for (int i = 1; i <= int(std::lround(4 / nu_grid_step)); ++i) {
		double v = nu(-2 + i * nu_grid_step);
		if (!(v < prev))
			monotone = false;
		prev = v;
	}
	r.details["monotone"] = monotone;
	bool close = true;
	json rows = json::array();
	for (int c : {-1, 0, 1}) {
		long M = std::lround(rho_n / 2.0 + c * std::pow(double(rho_n), 2.0 / 3.0));
		double rho = rho_float(rho_n, M), target = nu(c);
		double rel = std::fabs(rho - target) / target;
		bool ok = rel <= rho_relative_tolerance;
		close = close && ok;
		rows.push_back({{"c", c}, {"M", M}, {"rho", rho}, {"nu", target}, {"relativeError", rel}, {"within", ok}});
		// Three-point extrapolation in n^(-1/3), the scale of the first correction.
		double ys[3], xs[3];
		int i = 0;
		for (int n : {1000, 2000, 4000}) {
			long m = std::lround(n / 2.0 + c * std::pow(double(n), 2.0 / 3.0));
			ys[i] = rho_float(n, m);
			xs[i] = std::pow(double(n), -1.0 / 3.0);
			++i;
		}
		// Quadratic through the three points, evaluated at 0.
		double l0 = xs[1] * xs[2] / ((xs[0] - xs[1]) * (xs[0] - xs[2]));
		double l1 = xs[0] * xs[2] / ((xs[1] - xs[0]) * (xs[1] - xs[2]));
		double l2 = xs[0] * xs[1] / ((xs[2] - xs[0]) * (xs[2] - xs[1]));
		double extrapolated = l0 * ys[0] + l1 * ys[1] + l2 * ys[2];
		r.info.push_back("c = " + fmt("%+.0f", c) + ": rho(4000) = " + fmt("%.6f", rho) + ", nu = " +
		                 fmt("%.6f", target) + ", n^(-1/3) extrapolation from n = 1000, 2000, 4000 gives " +
		                 fmt("%.6f", extrapolated));
	}
	r.details["rho"] = rows;
	r.pass = zero_ok && monotone && close;
}

// Criterion 8: planar fraction of G(n, n/2).
void check_planarity_rate(CriterionResult& r, const VerifyOptions& opt)
{
	ExperimentConfig cfg;
	cfg.n = planarity_n;
	cfg.M = planarity_M;
	cfg.mode = SamplerMode::gnm;
	cfg.trials = planarity_trials;
	cfg.seed = planarity_seed;
	cfg.workers = opt.workers;
	auto s = run_experiment(cfg);
	r.details["planarFraction"] = s.planar_fraction;
	r.details["window"] = {planarity_low, planarity_high};
	r.pass = planarity_low <= s.planar_fraction && s.planar_fraction <= planarity_high;
}

// Criterion 9: exact uniformity of the exhaustive sampler and MCMC agreement.
void check_samplers(CriterionResult& r, const VerifyOptions&)
{
	bool ok = true;
	json chi = json::array();
	for (auto [n, M] : {std::pair{5, 9}, std::pair{6, 8}}) {
		std::size_t K = exhaustive_count(n, M);
		std::vector<long> hits(K, 0);
		CounterRng rng(chi2_seed, std::uint64_t(n * 100 + M));
		for (long i = 0; i < chi2_draws; ++i)
			++hits[exhaustive_sample_index(n, M, rng)];
		double expected = double(chi2_draws) / double(K), stat = 0;
		for (long h : hits)
			stat += (h - expected) * (h - expected) / expected;
		double critical = K > 1 ? boost::math::quantile(boost::math::complement(
		                              boost::math::chi_squared_distribution<double>(double(K - 1)), chi2_alpha))
		                        : 0.0;
		bool pass = K == 1 || stat <= critical;
		ok = ok && pass;
		chi.push_back({{"n", n}, {"M", M}, {"classes", K}, {"statistic", stat}, {"critical", critical}, {"pass", pass}});
	}
	r.details["chiSquared"] = chi;

	json tv = json::array();
	for (int M = tv_M_low; M <= tv_M_high; ++M) {
		std::map<std::pair<int, int>, double> exact, empirical;
		long total = 0;
		enum_graph_masks(tv_n, M, [&](small::Mask m) {
			if (small::is_planar(tv_n, m)) {
				auto sh = small::shape(tv_n, m);
				exact[{sh.largest, sh.complex_excess}] += 1;
				++total;
			}
		});
		for (auto& [key, v] : exact)
			v /= double(total);
		CounterRng rng(tv_seed, std::uint64_t(M));
		long non_planar = 0;
		mcmc_samples(tv_n, M, tv_samples, 50L * tv_n * M, tv_n, rng, [&](const PlanarChain& ch) {
			if (!small::is_planar(tv_n, ch.mask()))
				++non_planar;
			auto sh = small::shape(tv_n, ch.mask());
			empirical[{sh.largest, sh.complex_excess}] += 1.0 / double(tv_samples);
		});
		std::map<std::pair<int, int>, int> keys;
		for (auto& [key, v] : exact)
			keys[key];
		for (auto& [key, v] : empirical)
			keys[key];
		double d = 0;
		for (auto& [key, unused] : keys)
			d += std::fabs(exact[key] - empirical[key]);
		d /= 2;
		bool pass = d <= tv_tolerance && non_planar == 0;
		ok = ok && pass;
		tv.push_back({{"M", M}, {"tv", d}, {"nonPlanarSamples", non_planar}, {"pass", pass}});
	}
	r.details["mcmcTotalVariation"] = tv;
	r.pass = ok;
}

// Criterion 10: structure statistics and transcription checks.
void check_structure(CriterionResult& r, const VerifyOptions& opt)
{
	bool ok = true;
	double n = structure_n, n23 = std::pow(n, 2.0 / 3.0);
	ExperimentConfig cfg;
	cfg.n = structure_n;
	cfg.mode = SamplerMode::rejection;
	cfg.trials = structure_trials;
	cfg.seed = structure_seed;
	cfg.workers = opt.workers;

	cfg.M = std::lround(n / 2 - 2 * n23);
	auto sub = run_experiment(cfg);
	double tree_fraction = sub.summaries["largestIsTree"].mean;
	bool sub_ok = tree_fraction >= tree_fraction_min;
	r.details["subcritical"] = {{"M", cfg.M}, {"treeFraction", tree_fraction}, {"pass", sub_ok}};

	cfg.M = std::lround(n / 2);
	auto crit = run_experiment(cfg);
	double scaled = crit.summaries["L1"].median / n23;
	bool crit_ok = critical_low <= scaled && scaled <= critical_high;
	r.details["critical"] = {{"M", cfg.M}, {"medianL1OverN23", scaled}, {"pass", crit_ok}};

	double sn = super_n;
	long sM = std::lround(sn / 2 + 6 * std::pow(sn, 2.0 / 3.0));
	double s = sM - sn / 2;
	ExperimentConfig mc;
	mc.n = super_n;
	mc.M = sM;
	mc.mode = SamplerMode::mcmc;
	mc.trials = super_trials;
	mc.seed = structure_seed;
	mc.mcmc_burn_in = super_burn_in;
	mc.workers = opt.workers;
	auto sup = run_experiment(mc);
	double ratio = sup.summaries["L1"].mean / (2 * s);
	bool sup_ok = super_low <= ratio && ratio <= super_high;
	r.info.push_back("largest component a tree in " + fmt("%.3f", tree_fraction) + " of subcritical trials; critical median L1 / n^(2/3) = " +
	                 fmt("%.3f", scaled) + "; supercritical mean L1 / (2s) = " + fmt("%.3f", ratio) + " after " +
	                 std::to_string(super_burn_in) + " proposals per chain");
	r.details["supercritical"] = {{"M", sM},
	                              {"burnIn", super_burn_in},
	                              {"meanL1Over2s", ratio},
	                              {"provenance", "diagnostic"},
	                              {"pass", sup_ok}};

	// Closed form against the Stirling binomial deep in the subcritical range.
	json stirling = json::array();
	bool stirling_ok = true;
	double N = stirling_n, N23 = std::pow(N, 2.0 / 3.0);
	// The gate sits just below the window; the deeper points are reported
	// only, since the closed form drops terms of order s^2 / n there.
	for (double sv : {-2 * N23, -std::pow(N, 0.75), -N / 4}) {
		double binom = log_binomial_stirling((long double)N * (N - 1) / 2, (long double)(N / 2 + sv));
		double diff = pl_subcritical(N, sv).log_pl - binom;
		bool gate = sv == -2 * N23;
		bool pass = std::fabs(diff) < stirling_tolerance;
		if (gate)
			stirling_ok = pass;
		stirling.push_back({{"s", sv}, {"difference", diff}, {"gating", gate}, {"pass", pass}});
		r.info.push_back("subcritical closed form at n = 1e8, s = " + fmt("%.4g", sv) + ": corrected difference " +
		                 fmt("%.4g", diff) + ", as printed " +
		                 fmt("%.4g", pl_subcritical(N, sv, SubcriticalForm::as_printed).log_pl - binom));
	}
	r.details["stirling"] = stirling;

	bool root_ok = true;
	double worst = 0;
	for (double c : {-3.0, -1.0, 0.0, 0.5, 1.0, 3.0})
		for (double gamma : {3.38, 3.605981}) {
			double b = second_range_b(c, gamma);
			double target = gamma * gamma / (2 * std::pow(3.0, 1.5));
			double res = std::fabs(std::pow(b, 1.5) * (b - c) - target) / target;
			worst = std::max(worst, res);
			if (!(res < b_root_tolerance) || !(b > std::max(c, 0.0)))
				root_ok = false;
		}
	r.details["bRootWorstRelativeResidual"] = worst;

	ok = sub_ok && crit_ok && sup_ok && stirling_ok && root_ok;
	r.diagnostic = true;
	r.pass = ok;
}

struct Criterion
{
	const char* name;
	double limit;
	void (*run)(CriterionResult&, const VerifyOptions&);
};

const Criterion criteria[] = {
    {"decomposition identity", decomposition_limit, check_decomposition},
    {"series vs enumeration", series_check_limit, check_series},
    {"system residuals", residual_limit, check_residuals},
    {"growth constant", gamma_limit, check_gamma},
    {"construction formula", construction_limit, check_construction},
    {"deficiency bounds", 0, check_deficiency_bounds},
    {"nu calibration", nu_limit, check_nu},
    {"planarity-rate window", planarity_limit, check_planarity_rate},
    {"sampler exactness", 0, check_samplers},
    {"structure reproduction", 0, check_structure},
};

} // namespace

int criterion_count()
{
	return int(std::size(criteria));
}

std::string criterion_name(int id)
{
	if (id < 1 || id > criterion_count())
		throw std::out_of_range("no criterion " + std::to_string(id));
	return criteria[id - 1].name;
}

CriterionResult run_criterion(int id, const VerifyOptions& opt)
{
	CriterionResult r;
	r.id = id;
	r.name = criterion_name(id);
	const Criterion& c = criteria[id - 1];
	r.limit_seconds = c.limit;
	r.diagnostic = id == 9;
	auto t0 = Clock::now();
	try {
		c.run(r, opt);
	} catch (const std::exception& e) {
		r.pass = false;
		r.details["error"] = e.what();
	}
	r.seconds = seconds_since(t0);
	if (c.limit > 0 && r.seconds > c.limit) {
		r.pass = false;
		r.details["overTime"] = true;
	}
	return r;
}

std::vector<CriterionResult> run_verification(const VerifyOptions& opt, const VerifyObserver& observer)
{
	std::vector<CriterionResult> out;
	for (int id = 1; id <= criterion_count(); ++id) {
		if (!opt.only.empty() && !opt.only.count(id))
			continue;
		out.push_back(run_criterion(id, opt));
		if (observer)
			observer(out.back());
	}
	return out;
}

std::string format_result(const CriterionResult& r)
{
	std::ostringstream os;
	os << (r.pass ? "PASS" : "FAIL") << ' ' << r.id << ' ' << r.name << " (" << fmt("%.1f", r.seconds) << " s";
	if (r.limit_seconds > 0)
		os << " of " << fmt("%.0f", r.limit_seconds) << " s";
	os << ')';
	if (r.diagnostic)
		os << " [diagnostic]";
	if (r.details.contains("error"))
		os << " error: " << r.details["error"].get<std::string>();
	for (const auto& line : r.info)
		os << "\n    info: " << line;
	return os.str();
}

json to_json(const CriterionResult& r)
{
	return {{"id", r.id},
	        {"name", r.name},
	        {"pass", r.pass},
	        {"provenance", r.diagnostic ? "diagnostic" : "exact"},
	        {"seconds", r.seconds},
	        {"limitSeconds", r.limit_seconds},
	        {"details", r.details},
	        {"info", r.info}};
}

} // namespace planar
