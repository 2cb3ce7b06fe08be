#pragma once

// Truncated power series with exact rational coefficients, the algebraic
// system for cubic planar weighted multigraphs, and numerical extraction of
// the analytic constants from its coefficients.

#include <optional>
#include <string>
#include <vector>

#include "planar/exact.hpp"

namespace planar {

class PowerSeries
{
public:
	PowerSeries() = default;
	explicit PowerSeries(int order);
	PowerSeries(int order, std::vector<Rational> coeffs);

	static PowerSeries monomial(int order, int k, const Rational& c = 1);

	int order() const { return order_; }
	const Rational& operator[](int i) const { return c_.at(i); }
	Rational& operator[](int i) { return c_.at(i); }
	const std::vector<Rational>& coeffs() const { return c_; }

	// Index of the first nonzero coefficient, order() + 1 for the zero series.
	int valuation() const;
	bool is_zero() const { return valuation() > order_; }

	PowerSeries truncated(int order) const;

	PowerSeries operator+(const PowerSeries& o) const;
	PowerSeries operator-(const PowerSeries& o) const;
	PowerSeries operator*(const PowerSeries& o) const;
	PowerSeries operator*(const Rational& s) const;
	PowerSeries operator-() const;

	// Multiply by x^k; negative k divides and requires valuation >= -k.
	PowerSeries shifted(int k) const;
	// 1 / f for a unit f (nonzero constant term).
	PowerSeries inverse() const;
	// exp(f) for f with zero constant term.
	PowerSeries exp() const;
	PowerSeries derivative() const;
	PowerSeries integral() const;

	bool operator==(const PowerSeries& o) const = default;

private:
	int order_ = 0;
	std::vector<Rational> c_;
};

// Product truncated at an explicit order (may exceed both operands' orders
// as long as the missing coefficients cannot contribute).
PowerSeries multiply(const PowerSeries& a, const PowerSeries& b, int order);

// Two readings of the cubic system.  `corrected` is the default: it agrees
// with exhaustive enumeration.  `literal` is the system exactly as printed
// in the source, kept for comparison (it fails the enumeration check).
enum class CubicVariant
{
	corrected,
	literal
};

std::string to_string(CubicVariant v);
CubicVariant cubic_variant_from_string(const std::string& s);

struct CubicSystemSolution
{
	int order = 0;
	CubicVariant variant = CubicVariant::corrected;
	PowerSeries B, C, D, S, P, H, u, G1, G0;

	// n! [x^n] G0 and n! [x^n] G1: weighted counts of all / connected graphs.
	Rational g0(int n) const;
	Rational g1(int n) const;
};

CubicSystemSolution solve_system(int N, CubicVariant variant = CubicVariant::corrected);

struct EquationResidual
{
	std::string equation;
	PowerSeries residual;
};

// Substitute the solution back into each of the nine equations (exact).
std::vector<EquationResidual> residuals(const CubicSystemSolution& sol);

struct AnalyticConstants
{
	int order = 0;
	double gamma = 0, gamma_err = 0;
	double rho = 0, rho_err = 0;
	double g = 0, g_err = 0;
	double g_c = 0, g_c_err = 0;
	double G1_at_rho = 0; // truncated series value, for the g_c / g = exp(-G1(rho)) consistency check
};

AnalyticConstants estimate_constants(const CubicSystemSolution& sol);
AnalyticConstants estimate_constants(int N, CubicVariant variant = CubicVariant::corrected);

// P(L1 = n - j) for the random cubic planar weighted multigraph on n vertices.
Rational cubic_largest_component_dist(const CubicSystemSolution& sol, int n, int j);

json to_json(const CubicSystemSolution& sol);
CubicSystemSolution solution_from_json(const json& j);

extern const char* const series_solver_version;

// Solve, or load from $PLANAR_CACHE_DIR (or `dir` if given) when a matching file exists.
CubicSystemSolution cached_solution(int N, CubicVariant variant = CubicVariant::corrected,
                                    std::optional<std::string> dir = std::nullopt);

json to_json(const AnalyticConstants& k);

} // namespace planar
