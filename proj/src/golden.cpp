#include "rotinv/golden.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace rotinv {

namespace detail {
extern const char* golden_invariants_text;
}

const char* golden_invariants_text() {
    return detail::golden_invariants_text;
}

std::string GoldenEntry::label() const {
    return "I(" + std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l) + ")";
}

std::map<ScalarMonomial, ComplexSurd> GoldenEntry::coefficient_map() const {
    std::map<ScalarMonomial, ComplexSurd> out;
    for (const auto& [mono, coef] : poly) {
        ComplexSurd v = scalar;
        v.re *= coef;
        v.im *= coef;
        if (!v.is_zero()) out.emplace(mono, v);
    }
    return out;
}

namespace {

[[noreturn]] void fail(const std::string& line, const std::string& why) {
    throw std::runtime_error("golden table: " + why + " in line: " + line);
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

bool parse_unsigned_rational(std::string_view s, Rational& out) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!all_digits(s)) return false;
        out = Rational(BigInt(std::string(s)));
        return true;
    }
    auto num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return false;
    out = Rational(BigInt(std::string(num)), BigInt(std::string(den)));
    return true;
}

// Numeric factor tokens: "3", "-1/3", "sqrt(2/35)", "1/sqrt(5)", "sqrt(5)/3".
bool parse_numeric_factor(std::string_view tok, SurdSum& out) {
    bool neg = !tok.empty() && tok[0] == '-';
    if (neg) tok.remove_prefix(1);
    Rational r;
    SurdSum v;
    if (auto pos = tok.find("sqrt("); pos != std::string_view::npos) {
        auto close = tok.find(')', pos);
        if (close == std::string_view::npos) return false;
        Rational inside;
        if (!parse_unsigned_rational(tok.substr(pos + 5, close - pos - 5), inside)) return false;
        v = SurdSum::sqrt_of(inside);
        std::string_view head = tok.substr(0, pos);
        std::string_view tail = tok.substr(close + 1);
        if (!head.empty()) {  // "a/sqrt(b)"
            if (head.back() != '/' || !parse_unsigned_rational(head.substr(0, head.size() - 1), r)) return false;
            v = SurdSum(r) * SurdSum::sqrt_of(1 / inside);
        } else if (!tail.empty()) {  // "sqrt(a)/b"
            if (tail.front() != '/' || !parse_unsigned_rational(tail.substr(1), r)) return false;
            v *= Rational(1) / r;
        }
    } else {
        if (!parse_unsigned_rational(tok, r)) return false;
        v = SurdSum(r);
    }
    out = neg ? -v : v;
    return true;
}

// Monomial variable token "x2^3" or "h1".
bool parse_variable(std::string_view tok, int& index, int& power) {
    if (tok.size() < 2) return false;
    char kind = tok[0];
    if (kind != 'x' && kind != 'h') return false;
    if (tok[1] < '1' || tok[1] > '3') return false;
    index = (kind == 'x' ? 0 : 3) + (tok[1] - '1');
    power = 1;
    if (tok.size() == 2) return true;
    if (tok[2] != '^' || !all_digits(tok.substr(3))) return false;
    power = std::stoi(std::string(tok.substr(3)));
    return true;
}

ScalarPoly parse_group(const std::vector<std::string>& toks, std::size_t& pos, const std::string& line) {
    // "{ content [ term (+|- term)* ] }"
    Rational content;
    if (pos >= toks.size() || !parse_unsigned_rational(toks[pos], content)) fail(line, "expected group content");
    ++pos;
    if (pos >= toks.size() || toks[pos] != "[") fail(line, "expected '['");
    ++pos;

    ScalarPoly poly;
    int sign = 1;
    Rational coef = 0;  // zero marks "no explicit coefficient yet"
    ScalarMonomial mono{};
    bool have_term = false;
    auto flush = [&] {
        if (!have_term) fail(line, "empty polynomial term");
        Rational c = (coef == 0 ? Rational(1) : coef) * sign * content;
        auto [it, inserted] = poly.emplace(mono, c);
        if (!inserted) fail(line, "duplicate monomial");
        sign = 1;
        coef = 0;
        mono = ScalarMonomial{};
        have_term = false;
    };
    for (; pos < toks.size(); ++pos) {
        const std::string& t = toks[pos];
        if (t == "]") {
            flush();
            ++pos;
            if (pos >= toks.size() || toks[pos] != "}") fail(line, "expected '}'");
            ++pos;
            return poly;
        }
        if (t == "+" || t == "-") {
            flush();
            sign = (t == "-") ? -1 : 1;
            continue;
        }
        int index = 0, power = 0;
        if (parse_variable(t, index, power)) {
            mono[index] += power;
            have_term = true;
            continue;
        }
        Rational r;
        std::string_view tv = t;
        bool neg = !tv.empty() && tv[0] == '-';
        if (neg) tv.remove_prefix(1);
        if (!parse_unsigned_rational(tv, r)) fail(line, "unexpected token '" + t + "'");
        if (have_term) fail(line, "coefficient after variables in '" + t + "'");
        coef = neg ? -r : r;
        have_term = true;
    }
    fail(line, "unterminated group");
}

GoldenEntry parse_line(const std::string& line) {
    std::string body = line;
    GoldenEntry e;
    if (auto bar = body.find('|'); bar != std::string::npos) {
        std::istringstream tail(body.substr(bar + 1));
        std::string word;
        tail >> word;
        if (word != "waiver") fail(line, "expected 'waiver' after '|'");
        std::getline(tail, e.waiver_note);
        if (auto first = e.waiver_note.find_first_not_of(' '); first != std::string::npos)
            e.waiver_note = e.waiver_note.substr(first);
        e.waiver = true;
        body = body.substr(0, bar);
    }

    std::istringstream in(body);
    std::vector<std::string> toks;
    std::string tok;
    while (in >> tok)
        if (tok != "*") toks.push_back(tok);
    if (toks.size() < 5 || toks[0] != "I" || toks[4] != ":") fail(line, "expected 'I j k l :'");
    e.j = std::stol(toks[1]);
    e.k = std::stol(toks[2]);
    e.l = std::stol(toks[3]);

    e.scalar = ComplexSurd(SurdSum(1));
    e.poly = ScalarPoly{{ScalarMonomial{}, Rational(1)}};
    bool have_poly = false;

    std::size_t pos = 5;
    while (pos < toks.size()) {
        const std::string& t = toks[pos];
        if (t == "i" || t == "-i") {
            e.scalar *= ComplexSurd(SurdSum(), SurdSum(t == "i" ? 1 : -1));
            ++pos;
            continue;
        }
        if (t == "zeta") {
            e.zeta_power += 1;
            ++pos;
            continue;
        }
        if (t == "{") {
            if (have_poly) fail(line, "multiple groups");
            ++pos;
            e.poly = parse_group(toks, pos, line);
            have_poly = true;
            continue;
        }
        int index = 0, power = 0;
        if (parse_variable(t, index, power)) {
            if (have_poly) fail(line, "monomial after group");
            ScalarMonomial mono{};
            mono[index] = power;
            e.poly = ScalarPoly{{mono, Rational(1)}};
            have_poly = true;
            ++pos;
            continue;
        }
        SurdSum v;
        if (!parse_numeric_factor(t, v)) fail(line, "unexpected factor '" + t + "'");
        e.scalar *= ComplexSurd(v);
        ++pos;
    }
    if (e.zeta_power > 1) fail(line, "zeta power above 1");
    return e;
}

}  // namespace

std::vector<GoldenEntry> golden_entries() {
    std::vector<GoldenEntry> out;
    std::istringstream in(golden_invariants_text());
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        out.push_back(parse_line(line));
    }
    return out;
}

}  // namespace rotinv
