#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace fvinv {

// GMP keeps both types canonical: mpq values are always reduced with a
// positive denominator, so structural equality is value equality.
using Integer = boost::multiprecision::mpz_int;
using Coefficient = boost::multiprecision::mpq_rational;

/// Renders "p/q", or "p" when the denominator is 1.
std::string to_string(const Coefficient& c);
std::string to_string(const Integer& z);

/// Parses "p", "-p" or "p/q" (optional sign on p, q > 0). Throws
/// std::invalid_argument on anything else, including a zero denominator.
Coefficient parse_coefficient(std::string_view text);

Integer factorial(unsigned n);

} // namespace fvinv
