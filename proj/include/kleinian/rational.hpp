#pragma once

#include <gmpxx.h>

#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace kleinian {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses an exact fraction such as "-3/2", "7" or "+4/6" into canonical form.
/// Throws std::invalid_argument on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Comma-separated fractions; an empty string is the empty list.
std::vector<Rational> parse_rational_list(std::string_view text);

/// Comma-separated integers; an empty string is the empty list.
std::vector<long> parse_integer_list(std::string_view text);

std::string to_string(const Rational& value);

/// Floor of a/b for b > 0.
long floor_div(long a, long b);
/// Ceiling of a/b for b > 0.
long ceil_div(long a, long b);
/// Representative of a mod m in [0, m).
int mod(long a, int m);

/// Uniform random fraction p/q with 1 <= q <= max_den and |p/q| <= max_abs.
Rational random_rational(std::mt19937_64& rng, int max_den, int max_abs);

}  // namespace kleinian
