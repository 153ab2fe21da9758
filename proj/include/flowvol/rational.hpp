#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace flowvol {

using Integer = mpz_class;
// gmpxx keeps arithmetic results canonical (den > 0, gcd = 1); values built
// from a raw numerator/denominator pair must go through make_rational.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p" or "p/q" with an optional sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer factorial(unsigned long n);

// C(n, k); zero when k > n.
Integer binomial(unsigned long n, unsigned long k);

// n (n-1) ... (n-k+1); zero when k > n.
Integer falling_factorial(unsigned long n, unsigned long k);

/// k-th coefficient of (1 - u)^{-m}, i.e. C(m - 1 + k, k). Requires m >= 1.
Rational binomial_series_coeff(unsigned long m, unsigned long k);

}  // namespace flowvol
