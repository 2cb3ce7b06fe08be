#include "planar/asymptotics.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>

namespace planar {

namespace {

constexpr double pi = 3.14159265358979323846;

// Minimal owning wrapper; mpfr has no C++ interface of its own.
class Real
{
public:
	explicit Real(long bits) { mpfr_init2(v_, bits); }
	Real(const Real&) = delete;
	Real& operator=(const Real&) = delete;
	~Real() { mpfr_clear(v_); }

	mpfr_ptr get() { return v_; }
	double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

private:
	mpfr_t v_;
};

struct SeriesValue
{
	double scaled = 0; // sqrt(2/(3 pi)) * sum
	double nu = 0;     // scaled * e^(-4c^3/3)
	int terms = 0;
	long bits = 0;
};

// Natural log of |r-th term| / sqrt(pi) scale, for planning the evaluation.
double log_term(int r, double log_base)
{
	if (r == 0)
		return std::lgamma(0.5);
	return r * log_base - std::lgamma(r + 1.0) + std::lgamma(2.0 * r / 3.0 + 0.5);
}

SeriesValue series(double c, double precision)
{
	const double expo = 4.0 * c * c * c / 3.0;
	// Absolute target on the sum so that nu = sum * e^(-expo) meets `precision`.
	const double stop_log = std::log(precision) + std::min(0.0, expo) - std::log(10.0);
	const double base_abs = std::cbrt(9.0) * std::fabs(c);

	int last = 0;
	double lmax = log_term(0, 0);
	if (base_abs > 0) {
		const double lb = std::log(base_abs);
		double prev = log_term(0, lb);
		for (int r = 1;; ++r) {
			double lt = log_term(r, lb);
			lmax = std::max(lmax, lt);
			bool decreasing = lt < prev;
			prev = lt;
			if (decreasing && lt < stop_log && r > 3) {
				last = r;
				break;
			}
		}
	}

	long bits = 64 + long(std::ceil((std::max(lmax, 0.0) - stop_log) / std::log(2.0)));
	Real base(bits), pw(bits), term(bits), sum(bits), x(bits), t1(bits);
	Real g0(bits), g1(bits), g2(bits);
	Real* g[3] = {&g0, &g1, &g2};

	mpfr_set_ui(t1.get(), 9, MPFR_RNDN);
	mpfr_cbrt(base.get(), t1.get(), MPFR_RNDN);
	mpfr_mul_d(base.get(), base.get(), -c, MPFR_RNDN);

	// Gamma(2r/3 + 1/2) for r = 0, 1, 2; later ones follow by Gamma(x + 2) = x (x + 1) Gamma(x).
	for (int r = 0; r < 3; ++r) {
		mpfr_set_ui(x.get(), 4 * r + 3, MPFR_RNDN);
		mpfr_div_ui(x.get(), x.get(), 6, MPFR_RNDN);
		mpfr_gamma(g[r]->get(), x.get(), MPFR_RNDN);
	}

	static const double cos_table[6] = {1.0, 0.5, -0.5, -1.0, -0.5, 0.5};
	mpfr_set_ui(pw.get(), 1, MPFR_RNDN);
	mpfr_set_ui(sum.get(), 0, MPFR_RNDN);
	for (int r = 0; r <= last; ++r) {
		if (r > 0) {
			mpfr_mul(pw.get(), pw.get(), base.get(), MPFR_RNDN);
			mpfr_div_ui(pw.get(), pw.get(), r, MPFR_RNDN);
		}
		Real& gr = *g[r % 3];
		mpfr_mul(term.get(), pw.get(), gr.get(), MPFR_RNDN);
		mpfr_mul_d(term.get(), term.get(), cos_table[r % 6], MPFR_RNDN);
		mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);

		// advance this residue class: x = 2r/3 + 1/2 -> x + 2
		mpfr_set_ui(x.get(), 4 * r + 3, MPFR_RNDN);
		mpfr_div_ui(x.get(), x.get(), 6, MPFR_RNDN);
		mpfr_mul(gr.get(), gr.get(), x.get(), MPFR_RNDN);
		mpfr_add_ui(x.get(), x.get(), 1, MPFR_RNDN);
		mpfr_mul(gr.get(), gr.get(), x.get(), MPFR_RNDN);
	}

	// sqrt(2 / (3 pi))
	Real k(bits);
	mpfr_const_pi(k.get(), MPFR_RNDN);
	mpfr_mul_ui(k.get(), k.get(), 3, MPFR_RNDN);
	mpfr_ui_div(k.get(), 2, k.get(), MPFR_RNDN);
	mpfr_sqrt(k.get(), k.get(), MPFR_RNDN);
	mpfr_mul(sum.get(), sum.get(), k.get(), MPFR_RNDN);

	SeriesValue out;
	out.scaled = sum.to_double();
	mpfr_set_d(x.get(), -expo, MPFR_RNDN);
	mpfr_exp(x.get(), x.get(), MPFR_RNDN);
	mpfr_mul(sum.get(), sum.get(), x.get(), MPFR_RNDN);
	out.nu = sum.to_double();
	out.terms = last + 1;
	out.bits = bits;
	return out;
}

double simpson_step(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
                    double whole, double tol, int depth)
{
	double m = (a + b) / 2, lm = (a + m) / 2, rm = (m + b) / 2;
	double flm = f(lm), frm = f(rm);
	double left = (m - a) / 6 * (fa + 4 * flm + fm);
	double right = (b - m) / 6 * (fm + 4 * frm + fb);
	double diff = left + right - whole;
	if (std::fabs(diff) <= 15 * tol)
		return left + right + diff / 15;
	if (depth <= 0)
		throw QuadratureError("adaptive Simpson did not converge near x = " + std::to_string(m));
	return simpson_step(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
	       simpson_step(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol, int panels)
{
	double total = 0, h = (b - a) / panels;
	for (int i = 0; i < panels; ++i) {
		double lo = a + i * h, hi = lo + h, mid = (lo + hi) / 2;
		double flo = f(lo), fmid = f(mid), fhi = f(hi);
		double whole = h / 6 * (flo + 4 * fmid + fhi);
		total += simpson_step(f, lo, hi, flo, fmid, fhi, whole, tol / panels, 48);
	}
	return total;
}

double clamp_size(double x, double n)
{
	if (!std::isfinite(x))
		return x;
	return std::clamp(x, 0.0, n);
}

constexpr double beta_low = -14.0, beta_high = 128.0;

void set_interval(AsymptoticEstimate& e, double central, double beta_coefficient)
{
	e.log_pl = central;
	double a = central + beta_low * beta_coefficient, b = central + beta_high * beta_coefficient;
	e.log_pl_low = std::min(a, b);
	e.log_pl_high = std::max(a, b);
}

double log_closed_form(double n, double s, SubcriticalForm form)
{
	long double N = n, S = s, two_m = N + 2 * S;
	long double e0 = form == SubcriticalForm::corrected ? -0.75L : -0.5L;
	return double(two_m * std::log(N) + (two_m / 2 + e0) - 0.5L * std::log(static_cast<long double>(pi)) -
	              (two_m / 2 + 0.5L) * std::log(two_m));
}

} // namespace

double gamma_fn(double x)
{
	if (!(x > 0))
		throw std::domain_error("gamma_fn requires x > 0");
	return std::tgamma(x);
}

NuValue nu_eval(double c, const NuOptions& opt)
{
	if (c > opt.c_max)
		return {std::exp(-4.0 * c * c * c / 3.0), true, 0, 0};
	if (c < -opt.c_max)
		return {1.0, true, 0, 0};
	auto s = series(c, opt.precision);
	return {s.nu, false, s.terms, s.bits};
}

double nu(double c, const NuOptions& opt)
{
	return nu_eval(c, opt).value;
}

double nu_scaled(double c, const NuOptions& opt)
{
	if (c > opt.c_max)
		return 1.0;
	if (c < -opt.c_max)
		return std::exp(4.0 * c * c * c / 3.0);
	return series(c, opt.precision).scaled;
}

std::string to_string(Regime r)
{
	switch (r) {
	case Regime::subcritical: return "subcritical";
	case Regime::critical: return "critical";
	case Regime::supercritical: return "supercritical";
	case Regime::middle: return "middle";
	case Regime::second_i: return "second-i";
	case Regime::second_ii: return "second-ii";
	case Regime::second_iii: return "second-iii";
	case Regime::dense_out_of_scope: return "dense-out-of-scope";
	}
	return "?";
}

double log_binomial_stirling(long double N, long double M)
{
	auto log_fact = [](long double x) -> long double {
		if (x < 10)
			return std::lgamma(x + 1);
		return x * std::log(x) - x + 0.5L * std::log(2 * static_cast<long double>(pi) * x) + 1 / (12 * x);
	};
	if (M < 0 || M > N)
		return -std::numeric_limits<double>::infinity();
	long double rest = N - M;
	long double falling; // log N! - log (N - M)!
	if (rest < 10)
		falling = log_fact(N) - log_fact(rest);
	else
		falling = M * std::log(N) - (rest + 0.5L) * std::log1p(-M / N) - M + 1 / (12 * N) - 1 / (12 * rest);
	return double(falling - log_fact(M));
}

AsymptoticEstimate pl_subcritical(double n, double s, SubcriticalForm form)
{
	if (!(s < -std::pow(n, 2.0 / 3.0)) || !(n + 2 * s > 0))
		throw RegimeError("subcritical formula needs -n/2 < s < -n^(2/3)");
	AsymptoticEstimate e;
	e.regime = Regime::subcritical;
	e.log_pl = e.log_pl_low = e.log_pl_high = log_closed_form(n, s, form);
	auto& st = e.structure;
	st.L1 = clamp_size(n * n / (2 * s * s) * std::log(std::fabs(s * s * s) / (n * n)), n);
	st.largest_is_tree = true;
	st.aux["s"] = s;
	return e;
}

AsymptoticEstimate pl_critical_envelope(double n, double s, SubcriticalForm form)
{
	AsymptoticEstimate e;
	e.regime = Regime::critical;
	e.envelope = true;
	e.log_pl = e.log_pl_low = e.log_pl_high = log_closed_form(n, s, form);
	auto& st = e.structure;
	st.order_only = true;
	st.L1 = clamp_size(std::pow(n, 2.0 / 3.0), n);
	st.complex_part = st.L1;
	st.excess = 1;
	st.core_size = clamp_size(std::pow(n, 1.0 / 3.0), n);
	st.aux["s"] = s;
	st.aux["c"] = s * s * s / (n * n);
	st.aux["L1_exponent"] = 2.0 / 3.0;
	st.aux["core_exponent"] = 1.0 / 3.0;
	return e;
}

double supercritical_integral(double gamma)
{
	static std::mutex mu;
	static std::map<double, double> cache;
	{
		std::lock_guard lock(mu);
		if (auto it = cache.find(gamma); it != cache.end())
			return it->second;
	}
	const double g43 = std::pow(gamma, 4.0 / 3.0);
	NuOptions opt;
	opt.precision = 1e-14;
	auto f = [&](double x) { return std::exp(g43 * x / 2) * nu_scaled(-x / 2, opt); };
	double body = adaptive_simpson(f, -30, 30, 1e-8, 60);
	// Left of -30 nu_scaled is bounded by 1, so the tail is at most this.
	double tail = 2 / g43 * std::exp(-15 * g43);
	double value = body + tail;
	std::lock_guard lock(mu);
	cache[gamma] = value;
	return value;
}

AsymptoticEstimate pl_supercritical(double n, double s, const AnalyticConstants& k)
{
	if (!(s > 0) || !(2 * s < n))
		throw RegimeError("supercritical formula needs 0 < s < n/2");
	const double gamma = k.gamma, g43 = std::pow(gamma, 4.0 / 3.0);
	double lead = std::log(k.g) + 2.5 * std::log(3.0) - 7 * std::log(2.0) - 0.5 * std::log(pi) -
	              (10.0 / 3.0) * std::log(gamma) - 0.75;
	long double N = n, S = s;
	long double body = (N + 11.0L / 6) * std::log(N) - 3.5L * std::log(S) + (N / 2 - S) -
	                   (N / 2 - S) * std::log(N - 2 * S) + g43 * S / std::pow(N, 2.0L / 3);
	AsymptoticEstimate e;
	e.regime = Regime::supercritical;
	e.log_pl = e.log_pl_low = e.log_pl_high = lead + double(body) + std::log(supercritical_integral(gamma));
	auto& st = e.structure;
	st.L1 = clamp_size(2 * s, n);
	st.complex_part = st.L1;
	st.excess = clamp_size(2 * g43 / 3 * s / std::pow(n, 2.0 / 3.0), n);
	st.core_size = clamp_size(2 * std::pow(gamma, 2.0 / 3.0) * s / std::cbrt(n), n);
	st.aux["s"] = s;
	return e;
}

AsymptoticEstimate pl_middle(double n, double a, const AnalyticConstants& k)
{
	if (!(a > 0.5 && a < 1))
		throw RegimeError("middle formula needs 1/2 < a < 1");
	AsymptoticEstimate e;
	e.regime = Regime::middle;
	e.envelope = true;
	long double N = n, A = a;
	e.log_pl = double((A * N - 5.0L / 3) * std::log(N) + (N - A * N) * (1 - std::log(2 - 2 * A)) +
	                  std::pow(k.gamma, 4.0L / 3) * (A - 0.5L) * std::cbrt(N));
	e.log_pl_low = e.log_pl_high = e.log_pl;
	auto& st = e.structure;
	st.L1 = clamp_size((2 * a - 1) * n, n);
	st.complex_part = st.L1;
	st.excess = clamp_size(std::cbrt(n), n);
	st.core_size = clamp_size(std::pow(n, 2.0 / 3.0), n);
	st.order_only = true;
	st.aux["a"] = a;
	return e;
}

double second_range_b(double c, double gamma)
{
	const long double K = (long double)gamma * gamma / (2 * std::pow(3.0L, 1.5L));
	auto f = [&](long double b) { return std::pow(b, 1.5L) * (b - c) - K; };
	long double lo = std::max<long double>(c, 0), hi = lo + 1;
	while (f(hi) <= 0)
		hi = lo + 2 * (hi - lo);
	if (!(f(lo) < 0))
		throw std::runtime_error("second_range_b: root not bracketed");
	for (int it = 0; it < 200 && hi - lo > 0; ++it) {
		long double mid = (lo + hi) / 2;
		if (mid == lo || mid == hi)
			break;
		(f(mid) > 0 ? hi : lo) = mid;
	}
	return double((lo + hi) / 2);
}

AsymptoticEstimate pl_second_range(double n, double t, const AnalyticConstants& k)
{
	if (!(std::fabs(t) < n / 2))
		throw RegimeError("second-range formulas need |t| < n/2");
	const double gamma = k.gamma, K = gamma * gamma / (2 * std::pow(3.0, 1.5));
	const double n35 = std::pow(n, 0.6);
	const long double N = n, lnN = std::log(N);
	AsymptoticEstimate e;
	e.envelope = true;
	auto& st = e.structure;
	st.aux["t"] = t;

	if (t < -n35) {
		e.regime = Regime::second_i;
		long double T = -t, L = N - 2 * T;
		long double w = std::pow((long double)gamma, 4.0L / 3) * L / (3 * std::pow(2.0L, 2.0L / 3) * std::pow(T, 2.0L / 3));
		long double v = (N - 0.5L) * lnN + (t + 1.0L / 6) * std::log(2 * T + 2 * w) - 0.5L * std::log(3 * T + 5 * w) -
		                2.5L * std::log(w) + w * std::log(T / (T + w)) + 2.5L * w + T - 3 * w * w / L;
		set_interval(e, double(v), double(gamma * gamma / (std::pow(3.0, 1.5) * 2) * L / T));
		st.L1 = clamp_size(double(L), n);
		st.excess = clamp_size(double(w), n);
		st.core_size = clamp_size(double(std::pow(gamma, 2.0 / 3.0) / std::cbrt(2.0) * L / std::cbrt(T)), n);
		st.complex_part = st.L1;
		st.aux["w"] = double(w);
	} else if (t <= n35) {
		e.regime = Regime::second_ii;
		double c = t / n35;
		double b = second_range_b(c, gamma);
		long double B = b, C = c;
		long double v = (N - 0.5L) * lnN - 1.7L * lnN + t * std::log(2 * (B - C) * n35) + 2.5L * B * n35 - t -
		                3 * B * (B - C) * std::pow(N, 0.2L);
		set_interval(e, double(v), double(std::pow(B, 1.5L) * std::pow(N, 0.4L)));
		st.L1 = clamp_size(n - (2 * b - 2 * c) * n35, n);
		st.excess = clamp_size(b * n35, n);
		st.core_size = clamp_size(std::pow(n, 0.8), n);
		st.complex_part = st.L1;
		st.aux["c"] = c;
		st.aux["b"] = b;
	} else {
		e.regime = Regime::second_iii;
		long double T = t, z = K * std::pow(N / T, 1.5L);
		long double v = (N - 0.5L) * lnN + (T + 1.0L / 6) * std::log(2 * z) - 0.5L * std::log(2 * T + 5 * z) -
		                2.5L * std::log(T + z) + 1.5L * (T + z) * std::log(T / (T + z)) + 1.5L * T + 2.5L * z -
		                3 * z * (T + z) / N;
		set_interval(e, double(v), double(std::pow(T, 1.5L) / std::sqrt(N)));
		st.L1 = clamp_size(double(N - gamma * gamma / std::pow(3.0, 1.5) * std::pow(N / T, 1.5L)), n);
		st.excess = clamp_size(double(T + z), n);
		st.core_size = clamp_size(std::sqrt(n * t), n);
		st.complex_part = st.L1;
		st.aux["z"] = double(z);
	}
	return e;
}

Regime classify(double n, double M, const RegimeBounds& b)
{
	double s = M - n / 2, a = M / n, t = M - n;
	double window = b.critical_width * std::pow(n, 2.0 / 3.0);
	if (M > 3 * n - 6 || a > b.dense_limit)
		return Regime::dense_out_of_scope;
	if (s < -window)
		return Regime::subcritical;
	if (s <= window)
		return Regime::critical;
	if (a < b.super_limit)
		return Regime::supercritical;
	if (a < b.second_limit)
		return Regime::middle;
	double band = b.second_width * std::pow(n, 0.6);
	if (t < -band)
		return Regime::second_i;
	if (t <= band)
		return Regime::second_ii;
	return Regime::second_iii;
}

AsymptoticEstimate estimate(double n, double M, const AnalyticConstants& k, const RegimeBounds& b)
{
	double s = M - n / 2;
	switch (classify(n, M, b)) {
	case Regime::subcritical: {
		// a custom window can put points here that the formula's own check rejects
		if (s < -std::pow(n, 2.0 / 3.0))
			return pl_subcritical(n, s);
		AsymptoticEstimate e = pl_critical_envelope(n, s);
		e.regime = Regime::subcritical;
		return e;
	}
	case Regime::critical: return pl_critical_envelope(n, s);
	case Regime::supercritical: return pl_supercritical(n, s, k);
	case Regime::middle: return pl_middle(n, M / n, k);
	case Regime::second_i:
	case Regime::second_ii:
	case Regime::second_iii: return pl_second_range(n, M - n, k);
	case Regime::dense_out_of_scope: break;
	}
	AsymptoticEstimate e;
	e.regime = Regime::dense_out_of_scope;
	e.log_pl = e.log_pl_low = e.log_pl_high = std::numeric_limits<double>::quiet_NaN();
	e.structure.L1 = e.structure.excess = e.structure.core_size = std::numeric_limits<double>::quiet_NaN();
	return e;
}

StructurePrediction predict_structure(double n, double M, const AnalyticConstants& k, const RegimeBounds& b)
{
	return estimate(n, M, k, b).structure;
}

json to_json(const StructurePrediction& s)
{
	auto num = [](double x) -> json { return std::isfinite(x) ? json(x) : json(nullptr); };
	json aux = json::object();
	for (const auto& [key, v] : s.aux)
		aux[key] = num(v);
	return {{"L1", num(s.L1)},
	        {"excess", num(s.excess)},
	        {"coreSize", num(s.core_size)},
	        {"complexPart", num(s.complex_part)},
	        {"largestIsTree", s.largest_is_tree},
	        {"orderOnly", s.order_only},
	        {"auxiliary", aux}};
}

json to_json(const AsymptoticEstimate& e)
{
	json j = {{"regime", to_string(e.regime)},
	          {"provenance", e.regime == Regime::dense_out_of_scope ? "none" : (e.envelope ? "envelope" : "asymptotic")},
	          {"structure", to_json(e.structure)}};
	if (!std::isfinite(e.log_pl))
		j["logPl"] = nullptr;
	else if (e.log_pl_low != e.log_pl_high)
		j["logPl"] = {e.log_pl_low, e.log_pl_high};
	else
		j["logPl"] = e.log_pl;
	return j;
}

} // namespace planar
