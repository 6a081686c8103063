#include "rotinv/surd.hpp"

#include <cmath>
#include <stdexcept>

namespace rotinv {

SurdSum::SurdSum(const Rational& value) {
    add_term(1, value);
}

SurdSum::SurdSum(long value) : SurdSum(Rational(value)) {}

SurdSum SurdSum::sqrt_of(const Rational& x) {
    if (x < 0) throw std::invalid_argument("SurdSum::sqrt_of: negative argument");
    if (x == 0) return {};
    return term(Rational(1, denominator(x)), numerator(x) * denominator(x));
}

SurdSum SurdSum::term(const Rational& coef, const BigInt& radicand) {
    if (radicand < 0) throw std::invalid_argument("SurdSum::term: negative radicand");
    SurdSum s;
    if (coef == 0 || radicand == 0) return s;
    auto split = squarefree_split(radicand);
    s.add_term(split.squarefree, coef * Rational(split.square_root));
    return s;
}

void SurdSum::add_term(const BigInt& squarefree_radicand, const Rational& coef) {
    if (coef == 0) return;
    auto [it, inserted] = terms_.emplace(squarefree_radicand, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

bool SurdSum::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational SurdSum::rational_value() const {
    if (terms_.empty()) return 0;
    if (!is_rational()) throw std::logic_error("SurdSum::rational_value: value is irrational");
    return terms_.begin()->second;
}

SurdSum& SurdSum::operator+=(const SurdSum& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SurdSum& SurdSum::operator-=(const SurdSum& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SurdSum operator*(const SurdSum& a, const SurdSum& b) {
    SurdSum out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            // Both radicands squarefree: m_a*m_b = g^2 * (m_a/g)(m_b/g) with the
            // cofactors coprime, so the product radicand is already squarefree.
            BigInt g = gcd(ma, mb);
            out.add_term((ma / g) * (mb / g), ca * cb * Rational(g));
        }
    }
    return out;
}

SurdSum& SurdSum::operator*=(const SurdSum& o) {
    *this = *this * o;
    return *this;
}

SurdSum& SurdSum::operator*=(const Rational& r) {
    if (r == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= r;
    return *this;
}

SurdSum SurdSum::operator-() const {
    SurdSum s = *this;
    for (auto& [m, c] : s.terms_) c = -c;
    return s;
}

double SurdSum::to_double() const {
    double v = 0.0;
    for (const auto& [m, c] : terms_) v += c.convert_to<double>() * std::sqrt(m.convert_to<double>());
    return v;
}

namespace {

bool is_perfect_square(const BigInt& n, BigInt& root) {
    root = sqrt(n);
    return root * root == n;
}

std::string rational_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// |coef|*sqrt(m) as "2/3", "sqrt(2/15)", "1/sqrt(5)", "2 sqrt(1/7)".
std::string magnitude_str(const Rational& coef, const BigInt& m) {
    Rational sq = coef * coef * Rational(m);  // squared magnitude p/q
    BigInt a, b;
    BigInt p = numerator(sq), q = denominator(sq);
    auto ps = squarefree_split(p);
    auto qs = squarefree_split(q);
    Rational rat_part(ps.square_root, qs.square_root);
    BigInt su = ps.squarefree, sv = qs.squarefree;  // surd part sqrt(su/sv)
    if (su == 1 && sv == 1) return rational_str(rat_part);
    std::string surd;
    if (su == 1) {
        if (denominator(rat_part) == 1) return numerator(rat_part).str() + "/sqrt(" + sv.str() + ")";
        surd = "sqrt(1/" + sv.str() + ")";
    } else if (sv == 1) {
        surd = "sqrt(" + su.str() + ")";
    } else {
        surd = "sqrt(" + su.str() + "/" + sv.str() + ")";
    }
    if (rat_part == 1) return surd;
    return rational_str(rat_part) + " " + surd;
}

}  // namespace

std::string SurdSum::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool neg = c < 0;
        std::string mag = magnitude_str(neg ? Rational(-c) : c, m);
        if (first) {
            out = (neg ? "-" : "") + mag;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + mag;
        }
    }
    return out;
}

ComplexSurd& ComplexSurd::operator+=(const ComplexSurd& o) {
    re += o.re;
    im += o.im;
    return *this;
}

ComplexSurd& ComplexSurd::operator-=(const ComplexSurd& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

ComplexSurd operator*(const ComplexSurd& a, const ComplexSurd& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexSurd& ComplexSurd::operator*=(const ComplexSurd& o) {
    *this = *this * o;
    return *this;
}

namespace {

// "i", "i/sqrt(6)", "i sqrt(3/10)", "-i 2/3".
std::string imaginary_str(const SurdSum& im) {
    std::string s = im.str();
    bool neg = s.rfind('-', 0) == 0;
    if (neg) s = s.substr(1);
    if (s == "1") s = "i";
    else if (s.rfind("1/", 0) == 0) s = "i/" + s.substr(2);
    else s = "i " + s;
    return neg ? "-" + s : s;
}

}  // namespace

std::string ComplexSurd::str() const {
    if (is_zero()) return "0";
    if (im.is_zero()) return re.str();
    std::string imag = imaginary_str(im);
    if (re.is_zero()) return imag;
    if (imag.rfind('-', 0) == 0) return re.str() + " - " + imag.substr(1);
    return re.str() + " + " + imag;
}

}  // namespace rotinv
