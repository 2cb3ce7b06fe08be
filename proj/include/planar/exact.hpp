#pragma once

// Exact integer / rational arithmetic shared by every counting module.
// GMP (through its C++ wrapper) carries all big numbers.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace planar {

using BigInt = mpz_class;
using Rational = mpq_class;
using json = nlohmann::json;

BigInt factorial(long n);
BigInt binomial(long n, long k);
BigInt power(const BigInt& base, unsigned long e);

// n^(n-2) for n >= 1 (1 for n = 1, 2), the Cayley tree count.
BigInt cayley(long n);

Rational make_rational(const BigInt& num, const BigInt& den);

std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);

// {"num": "...", "den": "..."} with decimal strings, canonical form.
json to_json(const Rational& x);
Rational rational_from_json(const json& j);

// Natural log of a positive big integer / rational without overflow.
double log_abs(const BigInt& x);
double log_abs(const Rational& x);

double to_double(const Rational& x);

// log Gamma(n+1) with the Stirling series; exact-ish for large n.
double log_factorial(double n);
double log_binomial(double n, double k);

} // namespace planar
