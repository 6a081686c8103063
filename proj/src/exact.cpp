#include "rotinv/exact.hpp"

#include <cctype>
#include <stdexcept>

namespace rotinv {

BigInt factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt double_factorial(long n) {
    if (n < -1) throw std::invalid_argument("double_factorial: argument must be >= -1");
    BigInt r = 1;
    for (long i = n; i > 1; i -= 2) r *= i;
    return r;
}

BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r holds binomial(n-k+i, i)
    }
    return r;
}

Rational rational_pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base == 0) throw std::invalid_argument("rational_pow: zero to negative power");
        return 1 / rational_pow(base, -exponent);
    }
    Rational r = 1;
    Rational b = base;
    for (long e = exponent; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

SquarefreeSplit squarefree_split(const BigInt& n) {
    if (n < 1) throw std::invalid_argument("squarefree_split: argument must be >= 1");
    BigInt rest = n;
    BigInt s = 1, m = 1;
    for (BigInt d = 2; d * d <= rest; ++d) {
        if (rest % d != 0) continue;
        int e = 0;
        while (rest % d == 0) {
            rest /= d;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) s *= d;
        if (e % 2) m *= d;
    }
    m *= rest;  // leftover is 1 or a prime
    return {s, m};
}

std::string fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_fraction(std::string_view s) {
    auto bad = [&] { throw std::invalid_argument("parse_fraction: bad rational '" + std::string(s) + "'"); };
    std::size_t pos = 0;
    auto read_int = [&](bool allow_sign) -> BigInt {
        std::size_t start = pos;
        if (allow_sign && pos < s.size() && s[pos] == '-') ++pos;
        std::size_t digits = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            ++pos;
            ++digits;
        }
        if (digits == 0) bad();
        return BigInt(std::string(s.substr(start, pos - start)));
    };
    BigInt num = read_int(true);
    BigInt den = 1;
    if (pos < s.size()) {
        if (s[pos] != '/') bad();
        ++pos;
        den = read_int(false);
        if (den == 0) bad();
    }
    if (pos != s.size()) bad();
    return Rational(num, den);
}

}  // namespace rotinv
