#include "hodgepoly/format.hpp"

#include <vector>

namespace hodgepoly {

namespace {

std::string power(const std::string& var, int e) {
    if (e == 0) return "";
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}

std::string latex_power(const std::string& var, int e) {
    if (e == 0) return "";
    if (e == 1) return var;
    if (e < 10) return var + "^" + std::to_string(e);
    return var + "^{" + std::to_string(e) + "}";
}

// magnitude of c as a LaTeX coefficient; empty when it is 1 and something follows
std::string latex_magnitude(const Rational& c, bool has_variables) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (has_variables && mag == Rational(1)) return "";
    return format_latex(mag);
}

// One polynomial in alpha, rendered with its own leading sign.
std::string latex_alpha_poly(const std::vector<std::pair<int, Rational>>& terms) {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& [e, c] = terms[i];
        if (i == 0)
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        out += latex_magnitude(c, e > 0) + latex_power("\\alpha", e);
    }
    return out;
}

}  // namespace

std::string format_text(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [exps, c] = *it;
        const auto [te, ae] = exps;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first)
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        first = false;

        std::vector<std::string> factors;
        if (!(mag == Rational(1)) || (te == 0 && ae == 0)) factors.push_back(mag.to_string());
        if (ae) factors.push_back(power("alpha", ae));
        if (te) factors.push_back(power("t", te));
        for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "*" : "") + factors[i];
    }
    return out;
}

std::string format_latex(const Rational& r) {
    if (r.is_integer()) return r.to_string();
    Rational mag = r.sign() < 0 ? -r : r;
    return std::string(r.sign() < 0 ? "-" : "") + "\\frac{" + mag.numerator().get_str() + "}{" +
           mag.denominator().get_str() + "}";
}

std::string format_latex(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int te = p.degree_t(); te >= 0; --te) {
        std::vector<std::pair<int, Rational>> group;
        const auto& terms = p.terms();
        for (auto it = terms.rbegin(); it != terms.rend(); ++it)
            if (it->first.first == te) group.emplace_back(it->first.second, it->second);
        if (group.empty()) continue;

        const bool leading = out.empty();
        const std::string tpart = latex_power("t", te);
        if (group.size() == 1) {
            const auto& [ae, c] = group.front();
            if (!leading) out += c.sign() < 0 ? " - " : " + ";
            else if (c.sign() < 0) out += "-";
            out += latex_magnitude(c, ae > 0 || te > 0) + latex_power("\\alpha", ae);
            if (ae == 1 && te > 0) out += ' ';  // keep "\alpha t" from reading as one command
            out += tpart;
        } else {
            if (!leading) out += " + ";
            out += "(" + latex_alpha_poly(group) + ")" + tpart;
        }
    }
    return out;
}

nlohmann::ordered_json to_json(const PPolynomial& p) {
    nlohmann::ordered_json j;
    j["a"] = p.a.entries;
    j["convention"] = std::string(to_string(p.convention));
    auto coeffs = nlohmann::ordered_json::array();
    for (auto it = p.poly.terms().rbegin(); it != p.poly.terms().rend(); ++it)
        coeffs.push_back({it->first.first, it->first.second, it->second.to_string()});
    j["coeffs"] = std::move(coeffs);
    return j;
}

}  // namespace hodgepoly
