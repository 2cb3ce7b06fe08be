#include "doctest.h"

#include <cmath>

#include "planar/oracle.hpp"
#include "planar/series.hpp"

using namespace planar;

TEST_CASE("power series arithmetic")
{
	auto x = PowerSeries::monomial(6, 1);
	auto one = PowerSeries::monomial(6, 0);
	auto geometric = (one - x).inverse();
	for (int k = 0; k <= 6; ++k)
		CHECK(geometric[k] == 1);
	auto e = x.exp();
	CHECK(e[3] == Rational(1, 6));
	CHECK(e.derivative().truncated(5) == e.truncated(5));
	CHECK((x * x).valuation() == 2);
	CHECK((x * x).shifted(-2)[0] == 1);
	CHECK(x.integral()[2] == Rational(1, 2));
}

TEST_CASE("property: inverse and exp identities")
{
	std::vector<Rational> c = {Rational(2), Rational(-1, 3), Rational(5, 7), Rational(0), Rational(1, 2)};
	PowerSeries f(4, c);
	auto prod = f * f.inverse();
	CHECK(prod == PowerSeries::monomial(4, 0));
	PowerSeries g(4, {0, 1, Rational(1, 2), 3, -1});
	// exp(g)' = g' exp(g)
	auto eg = g.exp();
	CHECK(eg.derivative().truncated(3) == (g.derivative() * eg).truncated(3));
	// exp(a + b) = exp(a) exp(b)
	PowerSeries h(4, {0, 2, 0, Rational(1, 5), 1});
	CHECK((g + h).exp() == g.exp() * h.exp());
}

TEST_CASE("frozen coefficients of G0")
{
	auto sol = solve_system(8);
	CHECK(sol.G0[0] == 1);
	CHECK(sol.G0[2] == Rational(5, 24));
	CHECK(sol.G0[4] == Rational(385, 1152));
	CHECK(sol.g0(2) == Rational(5, 12));
	CHECK(sol.g0(4) == Rational(385, 48));
	CHECK(sol.g0(6) == Rational(419665, 576));
	for (int k = 1; k <= 7; k += 2)
		CHECK(sol.G0[k] == 0);
}

TEST_CASE("series coefficients match enumeration")
{
	auto sol = solve_system(6);
	for (int n : {2, 4, 6}) {
		CHECK(sol.g0(n) == q_brute(n, 0));
		CHECK(sol.g1(n) == q_conn_brute(n, 0));
	}
}

TEST_CASE("the literal reading disagrees with enumeration")
{
	auto lit = solve_system(6, CubicVariant::literal);
	CHECK(lit.g0(2) == Rational(5, 72));
	CHECK(lit.g0(2) != q_brute(2, 0));
}

TEST_CASE("property: residuals vanish exactly")
{
	for (int N : {10, 40}) {
		auto sol = solve_system(N);
		auto res = residuals(sol);
		CHECK(res.size() == 9);
		for (const auto& r : res)
			CHECK_MESSAGE(r.residual.is_zero(), r.equation);
	}
}

TEST_CASE("property: G0 = exp(G1)")
{
	auto sol = solve_system(30);
	CHECK(sol.G0 == sol.G1.exp());
}

TEST_CASE("analytic constants")
{
	auto k = estimate_constants(200);
	CHECK(k.gamma == doctest::Approx(3.605981).epsilon(1e-6));
	CHECK(k.rho == doctest::Approx(1 / k.gamma).epsilon(1e-9));
	CHECK(k.gamma_err < 1e-5);
	// g_c / g = exp(-G1(rho))
	CHECK(k.g_c / k.g == doctest::Approx(std::exp(-k.G1_at_rho)).epsilon(1e-4));
	auto lit = estimate_constants(200, CubicVariant::literal);
	CHECK(lit.gamma == doctest::Approx(3.387206).epsilon(1e-6));
}

TEST_CASE("largest component distribution")
{
	auto sol = solve_system(20);
	Rational total = 0;
	for (int j = 0; 2 * j < 20; ++j) {
		auto p = cubic_largest_component_dist(sol, 20, j);
		CHECK(p >= 0);
		total += p;
	}
	// P(L1 > n/2); most of the mass sits on a giant component.
	CHECK(total <= 1);
	CHECK(total > Rational(9, 10));
	CHECK(cubic_largest_component_dist(sol, 20, 0) > Rational(1, 2));
}

TEST_CASE("solution json round trip")
{
	auto sol = solve_system(10);
	auto back = solution_from_json(to_json(sol));
	CHECK(back.G0 == sol.G0);
	CHECK(back.variant == sol.variant);
}
