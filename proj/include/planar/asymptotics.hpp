#pragma once

// The limiting no-complex-part probability nu(c) and the closed-form
// estimates of pl(n, M) with the predicted component structure in each
// range of M.  Everything here is evaluated in log space.

#include <map>
#include <stdexcept>
#include <string>

#include "planar/exact.hpp"
#include "planar/series.hpp"

namespace planar {

struct RegimeError : std::invalid_argument
{
	using std::invalid_argument::invalid_argument;
};

struct QuadratureError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

double gamma_fn(double x);

struct NuOptions
{
	double precision = 1e-30; // absolute error target on nu
	double c_max = 6.0;
};

struct NuValue
{
	double value = 0;
	bool is_bound = false; // beyond c_max: the limiting envelope, not the series
	int terms = 0;
	long precision_bits = 0;
};

// nu(c) = sqrt(2/(3 pi)) e^(-4c^3/3) sum_r (-9c^3)^(r/3)/r! Gamma(2r/3 + 1/2) cos(pi r/3),
// with (-9c^3)^(1/3) read as the real cube root -9^(1/3) c.
NuValue nu_eval(double c, const NuOptions& opt = {});
double nu(double c, const NuOptions& opt = {});
// e^(4c^3/3) nu(c): the series without its exponential prefactor.  Beyond
// +c_max this is the bound 1, beyond -c_max the limit e^(4c^3/3).
double nu_scaled(double c, const NuOptions& opt = {});

enum class Regime
{
	subcritical,
	critical,
	supercritical,
	middle,
	second_i,
	second_ii,
	second_iii,
	dense_out_of_scope
};

std::string to_string(Regime r);

struct StructurePrediction
{
	double L1 = 0;
	double excess = 0;
	double core_size = 0;
	double complex_part = 0;
	bool largest_is_tree = false;
	// True when the sizes are orders of magnitude (Theta statements), not limits.
	bool order_only = false;
	std::map<std::string, double> aux; // s, t, a, c, w, z, b as applicable
};

struct AsymptoticEstimate
{
	Regime regime = Regime::dense_out_of_scope;
	double log_pl = 0;
	// Equal to log_pl unless an unknown bounded parameter is swept.
	double log_pl_low = 0;
	double log_pl_high = 0;
	// The formula holds up to a Theta(1) factor (constant set to 1).
	bool envelope = false;
	StructurePrediction structure;
};

// The exponent of e in the subcritical closed form.  `corrected` uses -3/4,
// which is what the binomial C(C(n,2), M) actually gives; `as_printed` keeps
// the -1/2 of the usual statement for comparison.
enum class SubcriticalForm
{
	corrected,
	as_printed
};

double log_binomial_stirling(long double N, long double M);

AsymptoticEstimate pl_subcritical(double n, double s, SubcriticalForm form = SubcriticalForm::corrected);
AsymptoticEstimate pl_critical_envelope(double n, double s, SubcriticalForm form = SubcriticalForm::corrected);
AsymptoticEstimate pl_supercritical(double n, double s, const AnalyticConstants& k);
AsymptoticEstimate pl_middle(double n, double a, const AnalyticConstants& k);
AsymptoticEstimate pl_second_range(double n, double t, const AnalyticConstants& k);

// Integral of exp(-x^3/6 + gamma^(4/3) x / 2) nu(-x/2) over the real line
// (adaptive Simpson on [-30, 30] plus the analytic left tail).
double supercritical_integral(double gamma);

// Root of b^(3/2) (b - c) = gamma^2 / (2 3^(3/2)) with b > max(c, 0).
double second_range_b(double c, double gamma);

// Regime boundaries used by the dispatcher.
struct RegimeBounds
{
	double critical_width = 1.0;    // |s| <= width * n^(2/3) is critical
	double super_limit = 0.625;     // M / n below this is supercritical
	double second_limit = 0.875;    // M / n at or above this enters the second range
	double dense_limit = 1.125;     // M / n above this is out of scope
	double second_width = 1.0;      // |t| <= width * n^(3/5) is second-ii
};

Regime classify(double n, double M, const RegimeBounds& b = {});
AsymptoticEstimate estimate(double n, double M, const AnalyticConstants& k, const RegimeBounds& b = {});
StructurePrediction predict_structure(double n, double M, const AnalyticConstants& k, const RegimeBounds& b = {});

json to_json(const StructurePrediction& s);
json to_json(const AsymptoticEstimate& e);

} // namespace planar
