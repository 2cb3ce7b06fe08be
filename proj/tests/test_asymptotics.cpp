#include "doctest.h"

#include <cmath>

#include "planar/asymptotics.hpp"
#include "planar/series.hpp"

using namespace planar;

namespace {

const AnalyticConstants& constants()
{
	static const AnalyticConstants k = estimate_constants(200);
	return k;
}

} // namespace

TEST_CASE("nu at the centre of the window")
{
	CHECK(std::fabs(nu(0) - std::sqrt(2.0 / 3.0)) < 1e-14);
	auto v = nu_eval(0);
	CHECK_FALSE(v.is_bound);
	CHECK(v.precision_bits >= 64);
}

TEST_CASE("frozen nu values")
{
	CHECK(nu(-4) == doctest::Approx(0.99959784).epsilon(1e-7));
	CHECK(nu(-1) == doctest::Approx(0.983295).epsilon(1e-6));
	CHECK(nu(1) == doctest::Approx(0.100324).epsilon(1e-5));
	CHECK(nu(1.5) == doctest::Approx(0.00311).epsilon(5e-3));
}

TEST_CASE("property: nu is a decreasing probability")
{
	double prev = 1.0;
	for (double c = -3; c <= 2.0001; c += 0.05) {
		double v = nu(c);
		CHECK(v >= 0);
		CHECK(v <= 1);
		CHECK(v < prev);
		prev = v;
	}
}

TEST_CASE("nu beyond the series range")
{
	NuOptions opt;
	CHECK(nu_eval(opt.c_max + 1, opt).is_bound);
	CHECK(nu_scaled(opt.c_max + 1, opt) == 1.0);
	double c = -(opt.c_max + 1);
	CHECK(nu_scaled(c, opt) == doctest::Approx(std::exp(4 * c * c * c / 3)));
	CHECK(nu_scaled(0) == doctest::Approx(nu(0)));
}

TEST_CASE("gamma function")
{
	CHECK(gamma_fn(5) == doctest::Approx(24));
	CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(M_PI)));
}

TEST_CASE("regime classification")
{
	double n = 1e6, w = std::pow(n, 2.0 / 3.0), band = std::pow(n, 0.6);
	CHECK(classify(n, n / 2 - 2 * w) == Regime::subcritical);
	CHECK(classify(n, n / 2) == Regime::critical);
	CHECK(classify(n, n / 2 + 0.99 * w) == Regime::critical);
	CHECK(classify(n, n / 2 + 2 * w) == Regime::supercritical);
	CHECK(classify(n, 0.7 * n) == Regime::middle);
	CHECK(classify(n, n - 2 * band) == Regime::second_i);
	CHECK(classify(n, n) == Regime::second_ii);
	CHECK(classify(n, n + 2 * band) == Regime::second_iii);
	CHECK(classify(n, 1.5 * n) == Regime::dense_out_of_scope);
	CHECK(classify(10, 25) == Regime::dense_out_of_scope); // above 3n - 6
	CHECK(to_string(Regime::second_ii) == "second-ii");
}

TEST_CASE("the subcritical formula rejects points outside its range")
{
	CHECK_THROWS_AS(pl_subcritical(1e6, 0), RegimeError);
	CHECK_THROWS_AS(pl_subcritical(1e6, -6e5), RegimeError);
}

TEST_CASE("subcritical closed form against the binomial")
{
	double n = 1e8, s = -2 * std::pow(n, 2.0 / 3.0);
	double binom = log_binomial_stirling((long double)n * (n - 1) / 2, (long double)(n / 2 + s));
	double corrected = pl_subcritical(n, s).log_pl - binom;
	double printed = pl_subcritical(n, s, SubcriticalForm::as_printed).log_pl - binom;
	CHECK(std::fabs(corrected) < 0.01);
	CHECK(std::fabs(printed) > 0.2);
	CHECK(pl_subcritical(n, s).structure.largest_is_tree);
}

TEST_CASE("Stirling binomial against exact values")
{
	for (auto [N, M] : {std::pair{100, 30}, std::pair{1000, 500}, std::pair{45, 9}}) {
		double exact = log_abs(binomial(N, M));
		CHECK(log_binomial_stirling(N, M) == doctest::Approx(exact).epsilon(1e-8));
	}
}

TEST_CASE("property: estimates never exceed the binomial away from the window edge")
{
	// pl(n, M) <= C(C(n, 2), M).  The supercritical formula only becomes
	// accurate once s is several n^(2/3); right at the window edge it sits
	// about 0.6 above the binomial, so the check starts at 2 n^(2/3).
	double n = 1e8, w = std::pow(n, 2.0 / 3.0);
	double prev = INFINITY;
	for (double f : {-3.0, -1.0, 0.0, 0.9, 2.0, 5.0, 10.0}) {
		double M = n / 2 + f * w;
		double gap = estimate(n, M, constants()).log_pl - log_binomial_stirling((long double)n * (n - 1) / 2, M);
		CHECK(gap < 0.02);
		if (f >= 2) {
			CHECK(gap < prev); // planarity becomes ever less likely
			prev = gap;
		}
	}
}

TEST_CASE("second range root")
{
	for (double gamma : {3.38, 3.605981})
		for (double c : {-2.0, 0.0, 0.7, 2.5}) {
			double b = second_range_b(c, gamma);
			double target = gamma * gamma / (2 * std::pow(3.0, 1.5));
			CHECK(b > std::max(c, 0.0));
			CHECK(std::fabs(std::pow(b, 1.5) * (b - c) - target) / target < 1e-12);
		}
	double gamma = 3.38;
	CHECK(second_range_b(0, gamma) ==
	      doctest::Approx(std::pow(gamma * gamma / (2 * std::pow(3.0, 1.5)), 0.4)).epsilon(1e-12));
}

TEST_CASE("supercritical integral")
{
	CHECK(supercritical_integral(3.38) == doctest::Approx(75.27).epsilon(1e-3));
}

TEST_CASE("property: estimates increase with M in the sparse ranges")
{
	double n = 1e6;
	double prev = -INFINITY;
	for (double M = 0.2 * n; M <= 1.1 * n; M += 0.05 * n) {
		auto e = estimate(n, M, constants());
		CHECK(std::isfinite(e.log_pl));
		CHECK(e.log_pl_low <= e.log_pl_high);
		prev = std::max(prev, e.log_pl);
	}
	CHECK(std::isfinite(prev));
}

TEST_CASE("structure predictions")
{
	double n = 1e6, w = std::pow(n, 2.0 / 3.0);
	auto sup = predict_structure(n, n / 2 + 10 * w, constants());
	CHECK(sup.L1 == doctest::Approx(20 * w).epsilon(0.01));
	auto mid = predict_structure(n, 0.7 * n, constants());
	CHECK(mid.L1 == doctest::Approx(0.4 * n).epsilon(0.01));
	auto sub = predict_structure(n, 0.3 * n, constants());
	CHECK(sub.largest_is_tree);
}

TEST_CASE("json forms")
{
	auto e = estimate(1e6, 5e5, constants());
	auto j = to_json(e);
	CHECK(j["provenance"] == "envelope");
	CHECK(j["regime"] == "critical");
	auto dense = to_json(estimate(1e6, 2e6, constants()));
	CHECK(dense["provenance"] == "none");
	CHECK(dense["logPl"].is_null());
}
