#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace mfal {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// "p/q" always, including q = 1.
std::string to_fraction_string(const Rational& r);
/// "p" when q = 1, else "p/q".
std::string to_string(const Rational& r);
/// Accepts "p", "-p" or "p/q".
Rational parse_rational(std::string_view text);

Integer numerator_of(const Rational& r);
Integer denominator_of(const Rational& r);
std::int64_t to_int64(const Integer& z);
/// Throws unless r is an integer.
std::int64_t to_int64(const Rational& r);

Rational floor(const Rational& r);
Rational ceil(const Rational& r);
Rational abs(const Rational& r);
double to_double(const Rational& r);

std::int64_t lcm64(std::int64_t a, std::int64_t b);
std::int64_t binomial64(int n, int k);
Integer factorial(int n);

}  // namespace mfal
