#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct Run
{
	int status = -1;
	std::string out;
};

// Runs the CLI with the given arguments; stderr is discarded.
Run run(const std::string& args)
{
	std::string cmd = std::string(PLANAR_CLI_PATH) + " " + args + " 2>/dev/null";
	Run r;
	FILE* p = popen(cmd.c_str(), "r");
	REQUIRE(p != nullptr);
	std::array<char, 4096> buf;
	std::size_t got;
	while ((got = fread(buf.data(), 1, buf.size(), p)) > 0)
		r.out.append(buf.data(), got);
	int st = pclose(p);
	r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
	return r;
}

nlohmann::json run_json(const std::string& args)
{
	auto r = run(args);
	REQUIRE(r.status == 0);
	return nlohmann::json::parse(r.out);
}

} // namespace

TEST_CASE("cli: nu at zero")
{
	auto j = run_json("nu --c 0");
	CHECK(j["command"] == "nu");
	CHECK(j["payload"]["value"].get<double>() == doctest::Approx(0.8164965809277260).epsilon(1e-14));
	CHECK(j["payload"]["provenance"] == "exact");
	CHECK(j.contains("wallTimeMs"));
	CHECK(j["version"].get<std::string>().rfind("planar ", 0) == 0);
}

TEST_CASE("cli: exhaustive count")
{
	auto j = run_json("count-brute --n 5 --m 9");
	CHECK(j["payload"]["count"] == "10");
	CHECK(j["payload"]["M"] == 9);
	auto q = run_json("count-brute --kind q --n 2 --m 0");
	CHECK(q["payload"]["weight"] == nlohmann::json({{"num", "5"}, {"den", "12"}}));
	auto pl = run_json("count-pl --n 6 --m 12");
	CHECK(pl["payload"]["count"] == "195");
}

TEST_CASE("cli: series coefficients")
{
	auto j = run_json("series --order 8 --coeff g0");
	auto c = j["payload"]["coefficients"];
	REQUIRE(c.size() == 9);
	CHECK(c[2] == "5/24");
	CHECK(c[4] == "385/1152");
}

TEST_CASE("cli: csv output")
{
	auto r = run("--csv count-u --n 4");
	CHECK(r.status == 0);
	CHECK(r.out.rfind("kind,n,M,count\n", 0) == 0);
	CHECK(r.out.find("\"u\",4,4,15") != std::string::npos);
}

TEST_CASE("cli: exit codes")
{
	CHECK(run("").status == 2);
	CHECK(run("frobnicate").status == 2);
	CHECK(run("nu").status == 2);
	CHECK(run("sample --mode boltzmann --n 5 --m 3").status == 2);
	CHECK(run("count-brute --n 12 --m 3").status == 3);
	CHECK(run("census --l 5 --d 0").status == 3);
}

TEST_CASE("cli: reruns are identical apart from timing")
{
	auto a = run_json("--seed 5 --workers 2 sample --mode rejection --n 50 --m 30 --trials 6");
	auto b = run_json("--seed 5 --workers 2 sample --mode rejection --n 50 --m 30 --trials 6");
	a.erase("wallTimeMs");
	b.erase("wallTimeMs");
	CHECK(a == b);
	CHECK(a["seed"] == 5);
	CHECK(a["payload"]["trials"].size() == 6);
	CHECK(a["payload"]["provenance"] == "sampled");
}

TEST_CASE("cli: experiment from a config file")
{
	std::string path = "cli_experiment_config.json";
	{
		std::ofstream f(path);
		f << R"({"n": 40, "m": 30, "mode": "mcmc", "trials": 3, "seed": 2, "mcmcBurnIn": 200})";
	}
	auto j = run_json("experiment " + path);
	CHECK(j["payload"]["provenance"] == "diagnostic");
	CHECK(j["payload"]["config"]["mcmcBurnIn"] == 200);
	std::remove(path.c_str());
}

TEST_CASE("cli: asymptotic estimate")
{
	auto j = run_json("asympt --n 1000000 --m 300000");
	CHECK(j["payload"]["regime"] == "subcritical");
	CHECK(j["payload"]["provenance"] == "asymptotic");
}

TEST_CASE("cli: verify a single criterion")
{
	auto r = run("verify --only 3");
	CHECK(r.status == 0);
	auto j = nlohmann::json::parse(r.out);
	CHECK(j["payload"]["pass"] == true);
	CHECK(j["payload"]["criteria"].size() == 1);
}
