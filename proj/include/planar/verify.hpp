#pragma once

// The acceptance suite: ten end-to-end identities and calibrations tying the
// exact oracles, the series, the counting formulas, the asymptotic estimates
// and the samplers together.  Every tolerance and seed is fixed here.

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "planar/exact.hpp"

namespace planar {

struct CriterionResult
{
	int id = 0;
	std::string name;
	bool pass = false;
	bool diagnostic = false; // rests on an unproven MCMC mixing assumption
	double seconds = 0;
	double limit_seconds = 0;
	json details = json::object();
	std::vector<std::string> info; // informational lines, never gating
};

struct VerifyOptions
{
	std::set<int> only; // empty: all criteria
	int workers = 1;
};

using VerifyObserver = std::function<void(const CriterionResult&)>;

int criterion_count();
std::string criterion_name(int id);

CriterionResult run_criterion(int id, const VerifyOptions& opt = {});
std::vector<CriterionResult> run_verification(const VerifyOptions& opt = {}, const VerifyObserver& observer = {});

// "PASS 3 system residuals (0.8 s)" followed by indented info lines.
std::string format_result(const CriterionResult& r);
json to_json(const CriterionResult& r);

} // namespace planar
