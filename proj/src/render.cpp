#include "rotinv/invariant.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace rotinv {

namespace {

struct SurdParts {
    bool negative = false;
    Rational rational_part;  // a/b > 0
    BigInt surd_num = 1;     // surd part sqrt(surd_num / surd_den), both squarefree
    BigInt surd_den = 1;
};

SurdParts split_single_surd(const SurdSum& s) {
    if (s.term_count() != 1) throw std::logic_error("split_single_surd: expected one surd term");
    const auto& [m, c] = *s.terms().begin();
    SurdParts parts;
    parts.negative = c < 0;
    Rational sq = c * c * Rational(m);
    auto ps = squarefree_split(numerator(sq));
    auto qs = squarefree_split(denominator(sq));
    parts.rational_part = Rational(ps.square_root, qs.square_root);
    parts.surd_num = ps.squarefree;
    parts.surd_den = qs.squarefree;
    return parts;
}

std::string plain_rational(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string surd_text(const SurdParts& p) {
    if (p.surd_num == 1 && p.surd_den == 1) return plain_rational(p.rational_part);
    std::string root;
    if (p.surd_num == 1) {
        if (denominator(p.rational_part) == 1)
            return numerator(p.rational_part).str() + "/sqrt(" + p.surd_den.str() + ")";
        root = "sqrt(1/" + p.surd_den.str() + ")";
    } else if (p.surd_den == 1) {
        root = "sqrt(" + p.surd_num.str() + ")";
    } else {
        root = "sqrt(" + p.surd_num.str() + "/" + p.surd_den.str() + ")";
    }
    if (p.rational_part == 1) return root;
    return plain_rational(p.rational_part) + " " + root;
}

std::string latex_rational(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return "\\frac{" + numerator(r).str() + "}{" + denominator(r).str() + "}";
}

std::string surd_latex(const SurdParts& p) {
    if (p.surd_num == 1 && p.surd_den == 1) return latex_rational(p.rational_part);
    std::string root;
    if (p.surd_num == 1) {
        if (denominator(p.rational_part) == 1)
            return "\\frac{" + numerator(p.rational_part).str() + "}{\\sqrt{" + p.surd_den.str() + "}}";
        root = "\\sqrt{\\frac{1}{" + p.surd_den.str() + "}}";
    } else if (p.surd_den == 1) {
        root = "\\sqrt{" + p.surd_num.str() + "}";
    } else {
        root = "\\sqrt{\\frac{" + p.surd_num.str() + "}{" + p.surd_den.str() + "}}";
    }
    if (p.rational_part == 1) return root;
    return latex_rational(p.rational_part) + root;
}

// Display order matching the published listings: the coefficient-table index
// (a, b, c) read off the exponents of xi1, eta3, xi2.
std::vector<std::pair<ScalarMonomial, Rational>> display_terms(const ScalarPoly& poly) {
    std::vector<std::pair<ScalarMonomial, Rational>> terms(poly.begin(), poly.end());
    auto key = [](const ScalarMonomial& m) {
        return std::array<int, 6>{m[0], m[5], m[1], m[2], m[3], m[4]};
    };
    std::sort(terms.begin(), terms.end(),
              [&](const auto& x, const auto& y) { return key(x.first) < key(y.first); });
    return terms;
}

bool is_constant(const ScalarMonomial& m) {
    return m == ScalarMonomial{};
}

std::string monomial_text(const ScalarMonomial& m) {
    static const char* names[6] = {"x1", "x2", "x3", "h1", "h2", "h3"};
    std::string out;
    for (int i = 0; i < 6; ++i) {
        if (!m[i]) continue;
        if (!out.empty()) out += " ";
        out += names[i];
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out;
}

std::string monomial_latex(const ScalarMonomial& m) {
    static const char* names[6] = {"\\xi_{1}", "\\xi_{2}", "\\xi_{3}", "\\eta_{1}", "\\eta_{2}", "\\eta_{3}"};
    std::string out;
    for (int i = 0; i < 6; ++i) {
        if (!m[i]) continue;
        out += names[i];
        if (m[i] > 1) out += "^{" + std::to_string(m[i]) + "}";
    }
    return out;
}

// Positive content c so that poly = c * (integer-coefficient polynomial).
Rational content_of(const ScalarPoly& poly) {
    BigInt num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : poly) {
        num_gcd = gcd(num_gcd, abs(numerator(c)));
        den_lcm = lcm(den_lcm, denominator(c));
    }
    if (num_gcd == 0) num_gcd = 1;
    return Rational(num_gcd, den_lcm);
}

std::string integer_poly(const ScalarPoly& poly, const Rational& content, bool latex) {
    std::string out;
    for (const auto& [mono, coef] : display_terms(poly)) {
        Rational scaled = coef / content;
        BigInt c = numerator(scaled);  // integral by construction of the content
        bool neg = c < 0;
        BigInt mag = abs(c);
        std::string mono_str = latex ? monomial_latex(mono) : monomial_text(mono);
        std::string body;
        if (mag != 1 || mono_str.empty()) {
            body = mag.str();
            if (!mono_str.empty()) body += latex ? mono_str : " " + mono_str;
        } else {
            body = mono_str;
        }
        if (out.empty()) out = (neg ? "-" : "") + body;
        else out += (neg ? (latex ? "-" : " - ") : (latex ? "+" : " + ")) + body;
    }
    return out;
}

std::string render_text(const InvariantPoly& inv) {
    SurdParts pre = split_single_surd(inv.prefactor);
    std::string head = pre.negative ? "-" : "";
    if (inv.imaginary) head += "i";
    if (inv.zeta_power) head += head.empty() || head == "-" ? "zeta" : " zeta";
    std::string mag = surd_text({false, pre.rational_part, pre.surd_num, pre.surd_den});

    bool trivial_poly = inv.poly.size() == 1 && is_constant(inv.poly.begin()->first) &&
                        inv.poly.begin()->second == 1;
    bool single_mono = inv.poly.size() == 1 && inv.poly.begin()->second == 1;

    std::string out = head;
    auto append = [&out](const std::string& tok) {
        if (tok.empty()) return;
        if (!out.empty() && out != "-") out += " ";
        out += tok;
    };
    if (mag != "1" || (trivial_poly && head.empty())) append(mag);
    if (trivial_poly) return out;
    if (single_mono) {
        append(monomial_text(inv.poly.begin()->first));
        return out;
    }
    Rational content = content_of(inv.poly);
    append("* { " + plain_rational(content) + " [ " + integer_poly(inv.poly, content, false) + " ] }");
    return out;
}

std::string render_latex(const InvariantPoly& inv) {
    SurdParts pre = split_single_surd(inv.prefactor);
    std::string out = pre.negative ? "-" : "";
    if (inv.imaginary) out += "{\\rm i}";
    if (inv.zeta_power) out += "\\zeta ";
    std::string mag = surd_latex({false, pre.rational_part, pre.surd_num, pre.surd_den});

    bool trivial_poly = inv.poly.size() == 1 && is_constant(inv.poly.begin()->first) &&
                        inv.poly.begin()->second == 1;
    bool single_mono = inv.poly.size() == 1 && inv.poly.begin()->second == 1;

    if (mag != "1" || trivial_poly) out += mag;
    if (trivial_poly) return out;
    if (single_mono) return out + "~" + monomial_latex(inv.poly.begin()->first);
    Rational content = content_of(inv.poly);
    out += "\\left\\{" + latex_rational(content) + "\\left[" + integer_poly(inv.poly, content, true) +
           "\\right]\\right\\}";
    return out;
}

std::string render_json(const InvariantPoly& inv) {
    nlohmann::ordered_json doc;
    doc["j"] = inv.spec.j;
    doc["k"] = inv.spec.k;
    doc["l"] = inv.spec.l;
    doc["parity"] = inv.spec.odd() ? "odd" : "even";
    const auto& [radicand, coef] = *inv.prefactor.terms().begin();
    nlohmann::ordered_json pre;
    pre["coef"] = fraction_string(coef);
    if (radicand <= BigInt(1) << 53) pre["radicand"] = radicand.convert_to<std::uint64_t>();
    else pre["radicand"] = radicand.str();
    doc["prefactor"] = pre;
    doc["imaginary"] = inv.imaginary;
    doc["zeta"] = inv.zeta_power;
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [mono, c] : inv.poly) {
        nlohmann::ordered_json t;
        t["xi"] = {mono[0], mono[1], mono[2]};
        t["eta"] = {mono[3], mono[4], mono[5]};
        t["coef"] = fraction_string(c);
        terms.push_back(t);
    }
    doc["terms"] = terms;
    return doc.dump();
}

}  // namespace

RenderFormat parse_render_format(const std::string& name) {
    if (name == "text") return RenderFormat::text;
    if (name == "latex") return RenderFormat::latex;
    if (name == "json") return RenderFormat::json;
    throw std::invalid_argument("unknown format '" + name + "' (expected text|latex|json)");
}

std::string render(const InvariantPoly& inv, RenderFormat format) {
    switch (format) {
        case RenderFormat::text: return render_text(inv);
        case RenderFormat::latex: return render_latex(inv);
        case RenderFormat::json: return render_json(inv);
    }
    throw std::invalid_argument("render: unknown format");
}

}  // namespace rotinv
