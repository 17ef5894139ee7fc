#ifndef POLYFLAG_RATIONAL_HPP
#define POLYFLAG_RATIONAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace polyflag {

// All coordinates in the engine are exact rationals; there is no floating
// point anywhere.  GMP-backed rationals are kept canonical (lowest terms,
// positive denominator) by every arithmetic operation.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

/// -1, 0 or +1.
int sgn(const Rational& r);

/// Serialize as "p/q", or just "p" when q = 1.
std::string rat_to_string(const Rational& r);

/// Parse "p" or "p/q" (optional sign, q > 0 after normalization).
/// Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

std::string vec_to_string(const RatVector& v);

}  // namespace polyflag

#endif
