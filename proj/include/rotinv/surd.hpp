#pragma once

#include "rotinv/exact.hpp"

#include <map>
#include <string>

namespace rotinv {

/// Finite sum of coef * sqrt(radicand) over positive squarefree radicands.
/// The representation is canonical: radicands squarefree, no zero coefficients,
/// so equal values compare equal with operator==.
class SurdSum {
  public:
    SurdSum() = default;  // zero
    SurdSum(const Rational& value);
    SurdSum(long value);

    // sqrt(x) for x >= 0, as sqrt(p*q)/q.
    static SurdSum sqrt_of(const Rational& x);

    // coef * sqrt(radicand); radicand >= 0, need not be squarefree.
    static SurdSum term(const Rational& coef, const BigInt& radicand);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    Rational rational_value() const;  // throws std::logic_error if irrational
    std::size_t term_count() const { return terms_.size(); }
    const std::map<BigInt, Rational>& terms() const { return terms_; }

    SurdSum& operator+=(const SurdSum& o);
    SurdSum& operator-=(const SurdSum& o);
    SurdSum& operator*=(const SurdSum& o);
    SurdSum& operator*=(const Rational& r);
    SurdSum operator-() const;

    friend SurdSum operator+(SurdSum a, const SurdSum& b) { return a += b; }
    friend SurdSum operator-(SurdSum a, const SurdSum& b) { return a -= b; }
    friend SurdSum operator*(const SurdSum& a, const SurdSum& b);
    friend SurdSum operator*(SurdSum a, const Rational& r) { return a *= r; }
    friend SurdSum operator*(const Rational& r, SurdSum a) { return a *= r; }
    friend bool operator==(const SurdSum& a, const SurdSum& b) = default;

    double to_double() const;

    // Canonical display, e.g. "1", "-2/3", "sqrt(2/15)", "1/sqrt(5)", "2 sqrt(1/7)",
    // multi-term sums joined with " + " / " - ".
    std::string str() const;

  private:
    void add_term(const BigInt& squarefree_radicand, const Rational& coef);

    std::map<BigInt, Rational> terms_;
};

struct ComplexSurd {
    SurdSum re, im;

    ComplexSurd() = default;
    ComplexSurd(SurdSum real) : re(std::move(real)) {}
    ComplexSurd(SurdSum real, SurdSum imag) : re(std::move(real)), im(std::move(imag)) {}
    ComplexSurd(const Rational& real) : re(real) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    ComplexSurd conjugate() const { return {re, -im}; }

    ComplexSurd& operator+=(const ComplexSurd& o);
    ComplexSurd& operator-=(const ComplexSurd& o);
    ComplexSurd& operator*=(const ComplexSurd& o);

    friend ComplexSurd operator+(ComplexSurd a, const ComplexSurd& b) { return a += b; }
    friend ComplexSurd operator-(ComplexSurd a, const ComplexSurd& b) { return a -= b; }
    friend ComplexSurd operator*(const ComplexSurd& a, const ComplexSurd& b);
    friend bool operator==(const ComplexSurd& a, const ComplexSurd& b) = default;

    ComplexSurd operator-() const { return {-re, -im}; }

    std::pair<double, double> to_complex_double() const { return {re.to_double(), im.to_double()}; }

    // "0", "1/sqrt(5)", "i/sqrt(6)", "-i sqrt(3/10)", "1/2 + i 3/4" style.
    std::string str() const;
};

}  // namespace rotinv
