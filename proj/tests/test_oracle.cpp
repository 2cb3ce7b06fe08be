#include "doctest.h"

#include <numeric>

#include "planar/oracle.hpp"

using namespace planar;

TEST_CASE("graph enumeration visits every labeled graph once")
{
	long count = 0;
	enum_graphs(5, 3, [&](const SimpleGraph& g) {
		CHECK(g.edge_count() == 3);
		++count;
	});
	CHECK(count == 120);
}

TEST_CASE("frozen planar counts for six and seven vertices")
{
	std::vector<long> six = {1, 15, 105, 455, 1365, 3003, 5005, 6435, 6435, 4995, 2937, 1125, 195, 0, 0, 0};
	auto row6 = pl_brute_row(6);
	REQUIRE(row6.size() == six.size());
	for (std::size_t M = 0; M < six.size(); ++M)
		CHECK(row6[M] == six[M]);
	auto row7 = pl_brute_row(7);
	CHECK(row7[10] == 351225);
	CHECK(row7[15] == 5712);
	CHECK(row7[16] == 0);
}

TEST_CASE("small planar counts")
{
	CHECK(pl_brute(4, 6) == 1);  // K4
	CHECK(pl_brute(5, 9) == 10); // K5 minus an edge
	CHECK(pl_brute(5, 10) == 0); // K5
	// Only K5 itself is non-planar on five vertices.
	auto row = pl_brute_row(5);
	CHECK(std::accumulate(row.begin(), row.end(), BigInt(0)) == 1023);
}

TEST_CASE("worker count does not change exhaustive results")
{
	OracleOptions one, three;
	three.workers = 3;
	CHECK(pl_brute_row(6, one) == pl_brute_row(6, three));
	CHECK(c_brute_row(6, one) == c_brute_row(6, three));
}

TEST_CASE("guards")
{
	CHECK_THROWS_AS(pl_brute_row(simple_sweep_guard + 1), GuardError);
	CHECK_THROWS_AS(q_brute(multigraph_guard + 1, 1), GuardError);
	CHECK_THROWS_AS(enum_graphs(simple_stream_guard + 1, 1, [](const SimpleGraph&) {}), GuardError);
}

TEST_CASE("complex planar graph counts")
{
	CHECK(c_brute(4, 2) == 1); // K4
	auto c = complex_brute(4, 1);
	CHECK(c.total == 6); // K4 minus an edge, six labelings
	CHECK(c.connected == 6);
	CHECK(c.by_deficiency[0] == 6);
	auto row = c_brute_row(5);
	CHECK(row[1] == 205);
	CHECK(row[2] == 120);
	CHECK(row[3] == 45);
	CHECK(row[4] == 10);
	CHECK(row[5] == 0);
}

TEST_CASE("frozen weighted multigraph counts")
{
	CHECK(q_brute(2, 0) == Rational(5, 12));
	CHECK(q_brute(4, 0) == Rational(385, 48));
	CHECK(q_brute(6, 0) == Rational(419665, 576));
	CHECK(q_brute(1, 1) == Rational(1, 8));
	CHECK(q_brute(1, 3) == Rational(1, 48));
	CHECK(q_brute(3, 1) == Rational(105, 32));
	CHECK(q_brute(2, 2) == Rational(91, 192));
	CHECK(q_brute(3, 0) == 0); // 3n + d odd
}

TEST_CASE("property: connected counts never exceed totals")
{
	for (int n : {2, 4})
		CHECK(q_conn_brute(n, 0) <= q_brute(n, 0));
	CHECK(q_conn_brute(2, 0) == q_brute(2, 0));
}

TEST_CASE("kernel census for one unit of excess")
{
	auto c = kernel_census_brute(1, 0);
	CHECK(c.vertices == 2);
	CHECK(c.edges == 3);
	REQUIRE(c.classes.size() == 2);
	CHECK(c.classes.at(KernelClass{0, {3}}) == Rational(1, 6)); // theta
	CHECK(c.classes.at(KernelClass{2, {}}) == Rational(1, 4));  // dumbbell
	auto r = c.by_insertions();
	CHECK(r.at(2) == Rational(1, 6));
	CHECK(r.at(4) == Rational(1, 4));
}

TEST_CASE("property: census weights add up to the weighted count")
{
	for (auto [l, d] : {std::pair{1, 0}, std::pair{1, 1}, std::pair{2, 0}, std::pair{2, 1}}) {
		auto c = kernel_census_brute(l, d);
		Rational total = 0;
		for (const auto& [cls, w] : c.classes)
			total += w;
		CHECK(total == q_brute(2 * l - d, d));
	}
}

TEST_CASE("required insertions")
{
	CHECK(KernelClass{0, {3}}.required_insertions() == 2);
	CHECK(KernelClass{2, {}}.required_insertions() == 4);
	CHECK(KernelClass{1, {2, 2}}.required_insertions() == 4);
}
