#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace rotinv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(long n);

// n!! with (-1)!! = 0!! = 1; rejects n < -1.
BigInt double_factorial(long n);

// Zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

Rational rational_pow(const Rational& base, long exponent);

// n = square_root^2 * squarefree, n >= 1.
struct SquarefreeSplit {
    BigInt square_root;
    BigInt squarefree;
};
SquarefreeSplit squarefree_split(const BigInt& n);

// "p/q" with the denominator always written (round-trips bit-exactly).
std::string fraction_string(const Rational& r);

// Accepts "p" or "p/q" with optional leading '-'; throws std::invalid_argument on garbage.
Rational parse_fraction(std::string_view s);

}  // namespace rotinv
