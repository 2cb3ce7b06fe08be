#include "doctest.h"

#include <cmath>

#include "planar/counting.hpp"
#include "planar/oracle.hpp"

using namespace planar;

TEST_CASE("forest and unicyclic counts")
{
	for (int n = 1; n <= 8; ++n) {
		CHECK(forest_count(n, 1) == cayley(n));
		CHECK(forest_count(n, n) == 1);
	}
	CHECK(forest_count(4, 2) == 15);
	CHECK(forest_count(3, 2) == 3);
	CHECK(unicyclic_count(3) == 1);
	CHECK(unicyclic_count(4) == 15);
	CHECK(unicyclic_count(5) == 222);
	CHECK(unicyclic_forest_count(5) == 222);
	CHECK(unicyclic_forest_count(6) == unicyclic_count(6) + 10);
}

TEST_CASE("property: U(n, M) agrees with enumeration")
{
	for (int n = 1; n <= 7; ++n) {
		auto brute = u_brute_row(n);
		auto row = u_exact_row(n);
		for (int M = 0; M <= n; ++M) {
			CHECK(u_exact(n, M) == brute[M]);
			CHECK(row[M] == brute[M]);
		}
	}
	// No graph without a complex component has more edges than vertices.
	CHECK(u_exact(6, 7) == 0);
}

TEST_CASE("frozen U values")
{
	CHECK(u_exact(4, 3) == 20); // 16 spanning trees, 4 triangles plus an isolated vertex
	CHECK(u_exact(5, 5) == 222);
	CHECK(u_exact(5, 4) == 210);
	CHECK(rho_exact(4, 4) == 1);
	CHECK(rho_exact(5, 5) == Rational(37, 42)); // 222 / 252
}

TEST_CASE("property: the floating-point rho tracks the exact one")
{
	for (int n : {10, 40, 120})
		for (int M = 0; M <= n; M += std::max(1, n / 10)) {
			double exact = to_double(rho_exact(n, M));
			CHECK(rho_float(n, M) == doctest::Approx(exact).epsilon(1e-9));
		}
	CHECK(std::isinf(log_rho(10, 11)));
	CHECK(rho_float(10, 0) == doctest::Approx(1.0));
}

TEST_CASE("frozen large-n rho")
{
	CHECK(rho_float(4000, 2000) == doctest::Approx(0.860933).epsilon(1e-5));
}

TEST_CASE("construction formula matches enumeration by deficiency")
{
	for (int l : {1, 2})
		for (int d = 0; d <= 2 * l - 1; ++d) {
			auto census = kernel_census_brute(l, d);
			for (int k = 1; k <= 6; ++k)
				CHECK(cd_exact(k, l, d, census) == cd_brute(k, l, d));
		}
}

TEST_CASE("counting only required insertions misses parallel-class structure")
{
	auto census = kernel_census_brute(1, 0);
	CHECK(cd_brute(4, 1, 0) == 6);
	CHECK(cd_exact(4, 1, 0, census) == 6);
	CHECK(cd_exact_by_insertions(4, 1, 0, census) == 2);
	// With a double loop in the census the coarse form is not even integral.
	CHECK(cd_exact_by_insertions(5, 2, 2, kernel_census_brute(2, 2)) == Rational(5, 2));
	CHECK(cd_brute(5, 2, 2) == 10);
	// Without parallel classes both forms agree.
	CHECK(cd_exact_by_insertions(6, 1, 1, kernel_census_brute(1, 1)) == 630);
}

TEST_CASE("complex counts summed over deficiency")
{
	for (int k = 4; k <= 6; ++k)
		for (int l = 1; l <= 2; ++l)
			CHECK(c_exact(k, l) == c_brute(k, l));
	CHECK_THROWS_AS(c_exact(20, 5), GuardError);
}

TEST_CASE("property: the convolution reproduces planar counts")
{
	auto c = brute_c_provider();
	auto u = exact_u_provider();
	for (int n = 1; n <= 6; ++n) {
		auto row = pl_brute_row(n);
		for (int M = 0; M < int(row.size()); ++M)
			CHECK(pl_convolution(n, M, c, u) == row[M]);
	}
}

TEST_CASE("census-based complex counts agree with brute force")
{
	auto census = census_c_provider(2);
	for (int k = 4; k <= 7; ++k)
		for (int l = 1; l <= 2; ++l)
			CHECK(*census(k, l) == c_brute(k, l));
	CHECK_FALSE(census(7, 3).has_value());
}

TEST_CASE("a missing provider value is reported")
{
	CProvider none = [](int, int) { return std::optional<BigInt>(); };
	CHECK_THROWS_AS(pl_convolution(6, 9, none, exact_u_provider()), ProviderGap);
	// Below the first complex size the provider is never consulted.
	CHECK(pl_convolution(3, 2, none, exact_u_provider()) == 3);
}

TEST_CASE("approximate complex counts form an interval")
{
	auto iv = c_approx(1000, 10, 3.38, 0.13);
	CHECK(iv.low < iv.high);
	CHECK(std::isfinite(iv.low));
}

TEST_CASE("count table serialisation")
{
	CountTable t;
	t.context = {{"n", 3}};
	t.values[0] = 1;
	t.values[1] = 3;
	auto j = to_json(t);
	CHECK(j.dump().find("\"3\"") != std::string::npos);
	auto csv = to_csv(t, "M");
	CHECK(csv.find("M") != std::string::npos);
	CHECK(csv.find("3,1,3") != std::string::npos);
}
