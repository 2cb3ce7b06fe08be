// Command-line front end: one subcommand per operation, a JSON result
// envelope on stdout, diagnostics on stderr.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"

#include "planar/asymptotics.hpp"
#include "planar/counting.hpp"
#include "planar/montecarlo.hpp"
#include "planar/oracle.hpp"
#include "planar/series.hpp"
#include "planar/verify.hpp"

using namespace planar;

namespace {

constexpr const char* version = "planar 1.0.0";

enum Exit
{
	exit_ok = 0,
	exit_failure = 1,
	exit_usage = 2,
	exit_guard = 3
};

struct Global
{
	int workers = int(std::max(1u, std::thread::hardware_concurrency()));
	bool csv = false;
	std::uint64_t seed = 1;
};

// What a subcommand hands back: the JSON payload, an optional CSV rendering
// of the same data, and the exit status.
struct Outcome
{
	json payload;
	std::optional<std::string> csv;
	int status = exit_ok;
};

json rational_list(const PowerSeries& s)
{
	json out = json::array();
	for (const auto& c : s.coeffs())
		out.push_back(to_string(c));
	return out;
}

const PowerSeries& pick_series(const CubicSystemSolution& sol, const std::string& name)
{
	if (name == "g0" || name == "G0")
		return sol.G0;
	if (name == "g1" || name == "G1")
		return sol.G1;
	if (name == "B")
		return sol.B;
	if (name == "C")
		return sol.C;
	if (name == "D")
		return sol.D;
	if (name == "S")
		return sol.S;
	if (name == "P")
		return sol.P;
	if (name == "H")
		return sol.H;
	if (name == "u")
		return sol.u;
	throw std::invalid_argument("unknown series '" + name + "'");
}

CountTable table_from_row(json context, const std::vector<BigInt>& row, int first = 0)
{
	CountTable t;
	t.context = std::move(context);
	for (int i = first; i < int(row.size()); ++i)
		t.values[i] = row[i];
	return t;
}

Outcome count_outcome(const CountTable& t, const std::string& index)
{
	Outcome o;
	o.payload = to_json(t);
	o.payload["provenance"] = "exact";
	o.csv = to_csv(t, index);
	return o;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"Exact counts, series, asymptotics and samplers for sparse random planar graphs"};
	app.set_version_flag("--version", version);
	app.require_subcommand(1);
	app.fallthrough();

	Global g;
	app.add_option("--workers", g.workers, "Worker threads (default: available parallelism)")->check(CLI::PositiveNumber);
	app.add_flag("--csv", g.csv, "Emit tabular payloads as CSV instead of JSON");
	app.add_option("--seed", g.seed, "RNG seed for sampling subcommands");

	json parameters = json::object();
	std::function<Outcome()> action;

	// series
	int order = 8;
	std::string coeff, variant = "corrected";
	bool constants = false;
	auto* series = app.add_subcommand("series", "Coefficients of the cubic planar multigraph series");
	series->add_option("--order", order, "Truncation order N")->check(CLI::Range(1, 100000));
	series->add_option("--coeff", coeff, "Series to print: g0, g1, B, C, D, S, P, H, u");
	series->add_option("--variant", variant, "corrected | literal");
	series->add_flag("--constants", constants, "Estimate gamma, rho, g and g_c from the coefficients");
	series->callback([&] {
		parameters = {{"order", order}, {"coeff", coeff}, {"variant", variant}, {"constants", constants}};
		action = [&] {
			auto sol = cached_solution(order, cubic_variant_from_string(variant));
			Outcome o;
			o.payload = {{"order", order}, {"variant", variant}, {"provenance", "exact"}};
			if (!coeff.empty()) {
				const auto& s = pick_series(sol, coeff);
				o.payload["series"] = coeff;
				o.payload["coefficients"] = rational_list(s);
				std::ostringstream csv;
				csv << "k,coefficient\n";
				for (int k = 0; k <= s.order(); ++k)
					csv << k << ',' << to_string(s[k]) << '\n';
				o.csv = csv.str();
			}
			if (constants || coeff.empty()) {
				o.payload["constants"] = to_json(estimate_constants(sol));
				o.payload["constants"]["provenance"] = "numerical";
			}
			return o;
		};
	});

	// count-brute
	int n = 0;
	std::optional<int> m;
	std::string kind = "pl";
	bool override_guard = false;
	auto* brute = app.add_subcommand("count-brute", "Exhaustive counts (small n only)");
	brute->add_option("--n", n, "Vertices (k for kind c)")->required();
	brute->add_option("--m", m, "Edges (k + l for kind c, deficiency d for kind q); omit for the full row");
	brute->add_option("--kind", kind, "pl | u | c | q | qconn");
	brute->add_flag("--override-guard", override_guard, "Allow sizes beyond the exhaustive-search guards");
	brute->callback([&] {
		parameters = {{"n", n}, {"kind", kind}, {"overrideGuard", override_guard}};
		if (m)
			parameters["m"] = *m;
		action = [&] {
			OracleOptions opt{override_guard, g.workers};
			if (kind == "pl" || kind == "u") {
				if (m) {
					BigInt v = kind == "pl" ? pl_brute(n, *m, opt) : u_brute(n, *m, opt);
					return Outcome{{{"kind", kind}, {"n", n}, {"M", *m}, {"count", to_string(v)}, {"provenance", "exact"}},
					               std::nullopt};
				}
				auto row = kind == "pl" ? pl_brute_row(n, opt) : u_brute_row(n, opt);
				return count_outcome(table_from_row({{"kind", kind}, {"n", n}}, row), "M");
			}
			if (kind == "c") {
				if (m) {
					auto c = complex_brute(n, *m - n, opt);
					json by_d = json::array();
					for (const auto& v : c.by_deficiency)
						by_d.push_back(to_string(v));
					return Outcome{{{"kind", kind},
					                {"k", n},
					                {"edges", *m},
					                {"count", to_string(c.total)},
					                {"connected", to_string(c.connected)},
					                {"byDeficiency", by_d},
					                {"provenance", "exact"}},
					               std::nullopt};
				}
				auto row = c_brute_row(n, opt);
				CountTable t = table_from_row({{"kind", kind}, {"k", n}}, row, 1);
				return count_outcome(t, "l");
			}
			if (kind == "q" || kind == "qconn") {
				int d = m.value_or(0);
				Rational v = kind == "q" ? q_brute(n, d, override_guard) : q_conn_brute(n, d, override_guard);
				return Outcome{{{"kind", kind}, {"n", n}, {"d", d}, {"weight", to_json(v)}, {"provenance", "exact"}},
				               std::nullopt};
			}
			throw std::invalid_argument("unknown kind '" + kind + "'");
		};
	});

	// count-u
	auto* cu = app.add_subcommand("count-u", "Graphs without complex components, by formula");
	cu->add_option("--n", n, "Vertices")->required()->check(CLI::NonNegativeNumber);
	cu->add_option("--m", m, "Edges; omit for the full row");
	cu->callback([&] {
		parameters = {{"n", n}};
		if (m)
			parameters["m"] = *m;
		action = [&] {
			if (m) {
				Outcome o;
				o.payload = {{"n", n},
				             {"M", *m},
				             {"count", to_string(u_exact(n, *m))},
				             {"rho", to_json(rho_exact(n, *m))},
				             {"provenance", "exact"}};
				return o;
			}
			return count_outcome(table_from_row({{"kind", "u"}, {"n", n}}, u_exact_row(n)), "M");
		};
	});

	// count-pl
	auto* cpl = app.add_subcommand("count-pl", "Planar graph counts through the complex-part convolution");
	cpl->add_option("--n", n, "Vertices")->required()->check(CLI::NonNegativeNumber);
	cpl->add_option("--m", m, "Edges; omit for the full row");
	cpl->add_flag("--override-guard", override_guard, "Allow complex-part enumeration beyond its guard");
	cpl->callback([&] {
		parameters = {{"n", n}, {"overrideGuard", override_guard}};
		if (m)
			parameters["m"] = *m;
		action = [&] {
			auto c = brute_c_provider(OracleOptions{override_guard, g.workers});
			auto u = exact_u_provider();
			if (m) {
				Outcome o;
				o.payload = {{"n", n}, {"M", *m}, {"count", to_string(pl_convolution(n, *m, c, u))}, {"provenance", "exact"}};
				return o;
			}
			std::vector<BigInt> row;
			for (int M = 0; M <= n * (n - 1) / 2; ++M)
				row.push_back(pl_convolution(n, M, c, u));
			return count_outcome(table_from_row({{"kind", "pl"}, {"n", n}}, row), "M");
		};
	});

	// census
	int l = 1, d = 0;
	auto* census = app.add_subcommand("census", "Weighted census of planar kernels by subdivision class");
	census->add_option("--l", l, "Excess of the complex part")->required()->check(CLI::PositiveNumber);
	census->add_option("--d", d, "Deficiency")->check(CLI::NonNegativeNumber);
	census->add_flag("--override-guard", override_guard, "Allow kernels beyond the multigraph guard");
	census->callback([&] {
		parameters = {{"l", l}, {"d", d}, {"overrideGuard", override_guard}};
		action = [&] {
			Outcome o;
			o.payload = to_json(kernel_census_brute(l, d, override_guard));
			o.payload["provenance"] = "exact";
			return o;
		};
	});

	// asympt
	double an = 0, am = 0;
	int asym_order = 200;
	auto* asympt = app.add_subcommand("asympt", "Regime, log pl(n, M) estimate and predicted structure");
	asympt->add_option("--n", an, "Vertices")->required()->check(CLI::PositiveNumber);
	asympt->add_option("--m", am, "Edges")->required()->check(CLI::NonNegativeNumber);
	asympt->add_option("--order", asym_order, "Series order used for the analytic constants");
	asympt->add_option("--variant", variant, "corrected | literal");
	asympt->callback([&] {
		parameters = {{"n", an}, {"m", am}, {"order", asym_order}, {"variant", variant}};
		action = [&] {
			auto k = estimate_constants(cached_solution(asym_order, cubic_variant_from_string(variant)));
			Outcome o;
			o.payload = to_json(estimate(an, am, k));
			o.payload["constants"] = to_json(k);
			return o;
		};
	});

	// nu
	double c = 0;
	auto* nucmd = app.add_subcommand("nu", "Limiting probability of no complex part in the critical window");
	nucmd->add_option("--c", c, "Window parameter c (M = n/2 + c n^(2/3))")->required();
	nucmd->callback([&] {
		parameters = {{"c", c}};
		action = [&] {
			auto v = nu_eval(c);
			Outcome o;
			o.payload = {{"c", c},
			             {"value", v.value},
			             {"isBound", v.is_bound},
			             {"terms", v.terms},
			             {"precisionBits", v.precision_bits},
			             {"provenance", v.is_bound ? "envelope" : "exact"}};
			return o;
		};
	});

	// sample
	ExperimentConfig cfg;
	std::string mode = "rejection";
	std::optional<long> burn_in, thin;
	auto* sample = app.add_subcommand("sample", "Sample graphs and report per-trial structure");
	sample->add_option("--mode", mode, "gnm | rejection | mcmc | exhaustive")->required();
	sample->add_option("--n", cfg.n, "Vertices")->required()->check(CLI::PositiveNumber);
	sample->add_option("--m", cfg.M, "Edges")->required()->check(CLI::NonNegativeNumber);
	sample->add_option("--trials", cfg.trials, "Trials")->check(CLI::NonNegativeNumber);
	sample->add_option("--burn-in", burn_in, "MCMC proposals before the sample (default 50 n M)");
	sample->add_option("--thin", thin, "MCMC thinning (default n)");
	sample->add_option("--max-tries", cfg.max_tries, "Rejection draws per trial before giving up");
	sample->callback([&] {
		cfg.mode = sampler_mode_from_string(mode);
		cfg.seed = g.seed;
		cfg.workers = g.workers;
		cfg.mcmc_burn_in = burn_in;
		cfg.mcmc_thin = thin;
		parameters = to_json(cfg);
		action = [&] {
			auto s = run_experiment(cfg);
			Outcome o;
			o.payload = to_json(s);
			o.payload["trials"] = json::array();
			for (const auto& t : s.trials)
				o.payload["trials"].push_back(to_json(t));
			o.csv = trials_csv(s);
			return o;
		};
	});

	// experiment
	std::string config_path;
	auto* experiment = app.add_subcommand("experiment", "Run an experiment described by a JSON config file");
	experiment->add_option("config", config_path, "ExperimentConfig JSON file")->required()->check(CLI::ExistingFile);
	experiment->callback([&] {
		action = [&] {
			std::ifstream in(config_path);
			json j;
			try {
				j = json::parse(in);
			} catch (const json::exception& e) {
				throw std::invalid_argument(std::string("config: ") + e.what());
			}
			cfg = experiment_config_from_json(j);
			if (!j.contains("workers"))
				cfg.workers = g.workers;
			parameters = to_json(cfg);
			auto s = run_experiment(cfg);
			Outcome o;
			o.payload = to_json(s);
			o.csv = trials_csv(s);
			return o;
		};
	});

	// verify
	std::vector<int> only;
	auto* verify = app.add_subcommand("verify", "Run the acceptance suite; exit 1 on any failure");
	verify->add_option("--only", only, "Criterion ids to run (default: all)")->delimiter(',')->check(CLI::Range(1, 10));
	verify->callback([&] {
		parameters = {{"only", only}};
		action = [&] {
			VerifyOptions opt;
			opt.workers = g.workers;
			opt.only.insert(only.begin(), only.end());
			Outcome o;
			o.payload = {{"criteria", json::array()}, {"provenance", "exact"}};
			bool all = true;
			run_verification(opt, [&](const CriterionResult& r) {
				std::cerr << format_result(r) << std::endl;
				o.payload["criteria"].push_back(to_json(r));
				all = all && r.pass;
			});
			o.payload["pass"] = all;
			o.status = all ? exit_ok : exit_failure;
			return o;
		};
	});

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch (const CLI::CallForAllHelp& e) {
		return app.exit(e);
	} catch (const CLI::CallForVersion& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		app.exit(e);
		return exit_usage;
	} catch (const std::invalid_argument& e) {
		std::cerr << "error: " << e.what() << '\n';
		return exit_usage;
	}

	std::string command = app.get_subcommands().front()->get_name();
	auto t0 = std::chrono::steady_clock::now();
	Outcome out;
	try {
		out = action();
	} catch (const GuardError& e) {
		std::cerr << "guard: " << e.what() << '\n';
		return exit_guard;
	} catch (const std::invalid_argument& e) {
		std::cerr << "error: " << e.what() << '\n';
		return exit_usage;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << '\n';
		return exit_failure;
	}
	double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

	if (g.csv && out.csv) {
		std::cout << *out.csv;
	} else {
		json result = {{"command", command},
		               {"parameters", parameters},
		               {"payload", out.payload},
		               {"wallTimeMs", ms},
		               {"version", version},
		               {"seed", g.seed}};
		std::cout << result.dump(2) << '\n';
	}
	return out.status;
}
