#pragma once

#include <string>

#include <json.hpp>

#include "hodgepoly/poly.hpp"
#include "hodgepoly/series.hpp"

namespace hodgepoly {

// Expanded plain text, terms by descending t-degree then descending
// alpha-degree: "t^2 - 10*alpha*t + 240".
std::string format_text(const BiPoly& p);

// LaTeX grouped by powers of t: "t^3 + (-\frac{77}{3}\alpha - 28)t^2 + 280t + 6720".
std::string format_latex(const BiPoly& p);

std::string format_latex(const Rational& r);

// {"a": [...], "convention": "...", "coeffs": [[t_exp, alpha_exp, "p/q"], ...]}
// with coeffs in descending lexicographic order of (t_exp, alpha_exp).
nlohmann::ordered_json to_json(const PPolynomial& p);

}  // namespace hodgepoly
