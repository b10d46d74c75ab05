#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "hodgepoly/format.hpp"
#include "hodgepoly/series.hpp"
#include "oracles.hpp"

using namespace hodgepoly;

namespace {

SeriesEngine& engine() {
    static SeriesEngine e = [] {
        auto cache = std::make_shared<IntegralCache>();
        return SeriesEngine(std::make_shared<HodgeEngine>(std::make_shared<PsiEngine>(cache), cache));
    }();
    return e;
}

std::string shifted(const IndexVector& a) { return format_text(shift_convention(engine().assemble(a)).poly); }

}  // namespace

TEST_CASE("index vectors") {
    CHECK(IndexVector::parse("2,1").entries == std::vector<int>{2, 1});
    CHECK(IndexVector::parse("").size() == 0);
    CHECK(IndexVector::parse("0").entries == std::vector<int>{0});
    for (const char* bad : {"2,", ",1", "a", "-1", "1,,2", " 1"})
        CHECK_THROWS_AS(IndexVector::parse(bad), std::invalid_argument);
    CHECK(IndexVector{3, 1}.to_string() == "(3,1)");
    CHECK(IndexVector().to_string() == "()");
    CHECK(IndexVector{3, 1, 0}.weight() == 4);
    CHECK_THROWS_AS(IndexVector({1, -1}), std::invalid_argument);
}

TEST_CASE("table layout enumeration") {
    std::vector<std::string> names;
    for (const auto& a : table_index_vectors(4)) names.push_back(a.to_string());
    CHECK(names == std::vector<std::string>{"()", "(1)", "(2)", "(1,1)", "(3)", "(2,1)", "(1,1,1)", "(4)", "(3,1)",
                                            "(2,2)", "(2,1,1)", "(1,1,1,1)"});
}

TEST_CASE("index_vectors includes zeros and respects the bounds") {
    auto all = index_vectors(2, 2);
    std::vector<std::string> names;
    for (const auto& a : all) names.push_back(a.to_string());
    CHECK(names == std::vector<std::string>{"()", "(0)", "(0,0)", "(1)", "(1,0)", "(2)", "(2,0)", "(1,1)"});
}

TEST_CASE("prefactor") {
    CHECK(prefactor({}) == 1);
    CHECK(prefactor({1}) == -12);
    CHECK(prefactor({2}) == 240);
    CHECK(prefactor({2, 1}) == -2880);
    CHECK(prefactor({0, 0}) == 1);
}

TEST_CASE("expansion of the lambda product") {
    CHECK(lambda_product_expansion(0).size() == 1);
    auto g1 = lambda_product_expansion(1);
    CHECK(g1.size() == 4);
    // Lambda_1(1) Lambda_1(alpha) = (1 - lambda_1)(alpha - lambda_1)
    Rational alpha_coeff_of_lambda1;
    for (const auto& t : g1)
        if (t.k + t.j == 1 && t.alpha_power == 1) alpha_coeff_of_lambda1 += Rational(t.sign);
    CHECK(alpha_coeff_of_lambda1 == Rational(-1));
}

TEST_CASE("published table") {
    CHECK(shifted({}) == "1");
    CHECK(shifted({1}) == "t + 12");
    CHECK(shifted({2}) == "t^2 - 10*alpha*t + 240");
    CHECK(shifted({1, 1}) == "t^2 - 12*t");
    CHECK(shifted({3}) == "t^3 - 77/3*alpha*t^2 - 28*t^2 + 280*t + 6720");
    CHECK(shifted({2, 1}) == "t^3 - 10*alpha*t^2 - 48*t^2 + 240*alpha*t + 240*t");
    CHECK(shifted({1, 1, 1}) == "t^3 - 72*t^2 + 432*t");
    CHECK(shifted({4}) == "t^4 - 43*alpha*t^3 - 72*t^3 + 126*alpha^2*t^2 + 756*alpha*t^2 + 840*t^2 + 10080*t + 241920");
    CHECK(shifted({3, 1}) == "t^4 - 77/3*alpha*t^3 - 100*t^3 + 1232*alpha*t^2 + 1624*t^2");
    CHECK(shifted({2, 1, 1}) ==
          "t^4 - 10*alpha*t^3 - 132*t^3 + 840*alpha*t^2 + 3120*t^2 - 8640*alpha*t - 8640*t");
    CHECK(shifted({1, 1, 1, 1}) == "t^4 - 168*t^3 + 5616*t^2 - 20736*t");
}

TEST_CASE("P_(2,2) and its pure-psi specialization") {
    // The printed table has the signs of the two lower coefficients flipped.
    // At alpha = 0 in the shifted convention only psi integrals enter, and
    // 57600 <tau_2^3>_2 = 1680 fixes the sign of the t^2 term.
    CHECK(shifted({2, 2}) == "t^4 - 20*alpha*t^3 - 100*t^3 + 100*alpha^2*t^2 + 1360*alpha*t^2 + 1680*t^2");
    PsiEngine psi;
    CHECK(Rational(prefactor({2, 2})) * psi.integral(2, std::vector<int>{2, 2, 2}) == Rational(1680));
    CHECK(format_text(engine().mumford_specialize({2, 2}).poly) == "t^4 - 100*t^3 + 1680*t^2");
}

TEST_CASE("convention shift is an involution") {
    auto p = engine().assemble({3});
    auto s = shift_convention(p);
    CHECK(s.convention == Convention::alpha_shifted);
    CHECK(shift_convention(s) == p);
    CHECK(to_string(Convention::alpha) == "alpha");
    CHECK(to_string(Convention::alpha_shifted) == "alpha_shifted");
}

TEST_CASE("string rule") {
    auto p1 = engine().assemble({1});
    auto p0 = engine().assemble({0});
    auto via = string_apply(p1, std::vector<PPolynomial>{p0});
    CHECK(via.a == IndexVector{1, 0});
    CHECK(via.poly == engine().assemble({1, 0}).poly);

    auto p21 = engine().assemble({2, 1});
    std::vector<PPolynomial> family{engine().assemble({1, 1}), engine().assemble({2, 0})};
    CHECK(string_apply(p21, family).poly == engine().assemble({2, 1, 0}).poly);

    CHECK_THROWS_AS(string_apply(p21, std::vector<PPolynomial>{engine().assemble({1, 1})}), std::invalid_argument);
    CHECK_THROWS_AS(string_apply(p1, std::vector<PPolynomial>{shift_convention(p0)}), std::invalid_argument);
}

TEST_CASE("dilaton rule") {
    auto p2 = engine().assemble({2});
    auto via = dilaton_apply(p2, 2);
    CHECK(via.poly == engine().assemble({2, 1}).poly);
    CHECK(format_text(shift_convention(via).poly) == "t^3 - 10*alpha*t^2 - 48*t^2 + 240*alpha*t + 240*t");
    CHECK(dilaton_apply(engine().assemble({1, 1}), 3).poly == engine().assemble({1, 1, 1}).poly);
    CHECK_THROWS_AS(dilaton_apply(p2, 3), std::invalid_argument);
}

TEST_CASE("constant terms") {
    CHECK(constant_term({}) == Rational(1));
    CHECK(constant_term({1}) == Rational(12));
    CHECK(constant_term({2}) == Rational(240));
    CHECK(constant_term({4}) == Rational(241920));
    CHECK(constant_term({1, 1}) == Rational(0));
    CHECK(constant_term({2, 1}) == Rational(0));
    CHECK(constant_term({0, 0}) == engine().assemble({0, 0}).poly.coeff(0, 0));
    for (const auto& a : index_vectors(4, 4)) {
        CAPTURE(a.to_string());
        CHECK(UniPoly(constant_term(a)) == engine().assemble(a).poly.t_coefficient(0));
    }
}

TEST_CASE("A values") {
    CHECK(engine().A_value(2, {2}) == UniPoly(Rational(1, 240)));
    CHECK(engine().A_value(3, {2}).is_zero());
    CHECK(engine().A_value(4, {2}).is_zero());
    CHECK(engine().A_value(2, {1, 1}) == UniPoly(Rational(1, 144)));
}

TEST_CASE("F series") {
    auto f = engine().F_series(6);
    CHECK(f[0] == UniPoly(Rational(1)));
    CHECK(f[1].is_zero());
    CHECK(f[2] == UniPoly(Rational(-1, 24)));
    CHECK(f[4] == UniPoly(Rational(1, 1152)));
    CHECK(f[6] == UniPoly(Rational(-1, 82944)));
    CHECK(f[3].is_zero());
    CHECK(f[5].is_zero());
}

TEST_CASE("double Hodge coefficients") {
    // genus 0 needs no lambda classes: prefactor * sum is the t^0 term
    CHECK(engine().double_hodge_coeff(0, {}) == UniPoly(Rational(1)));
    CHECK(engine().double_hodge_coeff(0, {1}) == UniPoly(Rational(-1)));
    CHECK(engine().double_hodge_coeff(1, {}).degree() <= 1);
}

TEST_CASE("Mumford specialization agrees with alpha = -1") {
    for (const auto& a : index_vectors(3, 3)) {
        CAPTURE(a.to_string());
        CHECK(engine().mumford_specialize(a).poly == engine().assemble(a).poly.evaluate_alpha(Rational(-1)));
    }
}

TEST_CASE("total degree probe") {
    auto r4 = conjecture_check(engine().assemble({4}));
    CHECK(r4.weight == 4);
    CHECK(r4.max_total_degree == 4);
    CHECK(r4.holds);
    CHECK(conjecture_check(engine().assemble({2, 2})).max_total_degree == 4);
    auto r0 = conjecture_check(engine().assemble({}));
    CHECK(r0.max_total_degree == 0);
    CHECK(r0.holds);
}

TEST_CASE("output formats") {
    auto p = shift_convention(engine().assemble({3}));
    CHECK(format_latex(p.poly) == "t^3 + (-\\frac{77}{3}\\alpha - 28)t^2 + 280t + 6720");
    CHECK(format_latex(shift_convention(engine().assemble({2})).poly) == "t^2 - 10\\alpha t + 240");
    CHECK(format_latex(BiPoly()) == "0");
    CHECK(format_text(BiPoly()) == "0");
    CHECK(format_latex(Rational(-3, 4)) == "-\\frac{3}{4}");
    auto j = to_json(engine().assemble({1, 1, 1}));
    CHECK(j.dump() == R"({"a":[1,1,1],"convention":"alpha","coeffs":[[3,0,"1"],[2,0,"-72"],[1,0,"432"]]})");
    CHECK(to_json(shift_convention(engine().assemble({}))).dump() ==
          R"({"a":[],"convention":"alpha_shifted","coeffs":[[0,0,"1"]]})");
}
