#include "planar/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace planar {

BigInt factorial(long n)
{
	if (n < 0)
		throw std::invalid_argument("factorial of negative number");
	BigInt r;
	mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
	return r;
}

BigInt binomial(long n, long k)
{
	if (k < 0 || n < 0 || k > n)
		return 0;
	BigInt r;
	mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
	return r;
}

BigInt power(const BigInt& base, unsigned long e)
{
	BigInt r;
	mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
	return r;
}

BigInt cayley(long n)
{
	if (n <= 0)
		return 0;
	if (n <= 2)
		return 1;
	return power(BigInt(n), static_cast<unsigned long>(n - 2));
}

Rational make_rational(const BigInt& num, const BigInt& den)
{
	if (den == 0)
		throw std::domain_error("zero denominator");
	Rational q(num, den);
	q.canonicalize();
	return q;
}

std::string to_string(const BigInt& x) { return x.get_str(10); }

std::string to_string(const Rational& x)
{
	if (x.get_den() == 1)
		return x.get_num().get_str(10);
	return x.get_num().get_str(10) + "/" + x.get_den().get_str(10);
}

json to_json(const Rational& x)
{
	return json{{"num", x.get_num().get_str(10)}, {"den", x.get_den().get_str(10)}};
}

Rational rational_from_json(const json& j)
{
	if (j.is_array() && j.size() == 2)
		return make_rational(BigInt(j[0].get<std::string>()), BigInt(j[1].get<std::string>()));
	return make_rational(BigInt(j.at("num").get<std::string>()), BigInt(j.at("den").get<std::string>()));
}

double log_abs(const BigInt& x)
{
	if (x == 0)
		return -INFINITY;
	long e = 0;
	double m = mpz_get_d_2exp(&e, x.get_mpz_t());
	return std::log(std::fabs(m)) + static_cast<double>(e) * std::log(2.0);
}

double log_abs(const Rational& x) { return log_abs(x.get_num()) - log_abs(x.get_den()); }

double to_double(const Rational& x)
{
	// mpq_get_d truncates but handles huge num/den without overflow
	return mpq_get_d(x.get_mpq_t());
}

double log_factorial(double n) { return std::lgamma(n + 1.0); }

double log_binomial(double n, double k)
{
	if (k < 0 || k > n)
		return -INFINITY;
	return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

} // namespace planar
