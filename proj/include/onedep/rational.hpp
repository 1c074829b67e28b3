#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace onedep {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Canonical "num/den" rendering; the denominator is always written.
std::string to_string(const Rational& r);

/// Accepts "num/den", "num", or a finite decimal such as "0.25".
/// Throws UsageError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Lossy; only used for opt-in decimal output.
double to_double(const Rational& r);

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

Rational power(const Rational& base, unsigned exponent);
Integer factorial(unsigned n);
Integer binomial(long n, long k);

}  // namespace onedep
