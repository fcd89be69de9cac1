#include "doctest.h"
#include "qz/expr.hpp"
#include "qz/intpoly.hpp"
#include "qz/rationalfn.hpp"
#include "qz/series.hpp"

using namespace qz;

namespace {

// Parse a polynomial (denominator must reduce to 1).
IntPoly poly(const std::string& src, int arity = 1) {
    RationalFn f = expr::parse_rational(src, arity);
    REQUIRE(expr::render(f.den()) == "1");
    return f.num();
}

RationalFn rat(const std::string& src, int arity = 1) {
    return expr::parse_rational(src, arity);
}

}  // namespace

TEST_CASE("polynomial arithmetic in q and t") {
    IntPoly q = IntPoly::q();
    IntPoly t = IntPoly::t(1, 1);
    IntPoly one = IntPoly::constant(1, VarShape{1, {}});
    IntPoly f = (one + q * t).pow(2);
    CHECK(f == poly("1+2q*t+q^2*t^2"));
    CHECK(f.content() == 1);
    CHECK((Int(6) * f).content() == 6);
    CHECK(f.max_t_exps() == std::vector<int>{2});
    CHECK(f.min_q_exp() == 0);
    CHECK(f.max_q_exp() == 2);
    CHECK(poly("3t^2") * poly("2t") == poly("6t^3"));
    CHECK(poly("(1-t)(1+t)") == poly("1-t^2"));
    CHECK(-poly("t-1") == poly("1-t"));
}

TEST_CASE("multivariate shapes merge and promote") {
    IntPoly t1 = IntPoly::t(1, 2);
    IntPoly t2 = IntPoly::t(2, 2);
    IntPoly f = t1 * t1 * t2 + IntPoly::q() * t1;
    CHECK(f == poly("t1^2*t2+q*t1", 2));
    CHECK(f.max_t_exps() == std::vector<int>{2, 1});
    // A univariate factor promotes into the bivariate shape on contact.
    CHECK(f * IntPoly::constant(2) == poly("2t1^2*t2+2q*t1", 2));
}

TEST_CASE("inversion substitutes 1/q and 1/t with symbol weights") {
    IntPoly f = poly("1+q*t");
    IntPoly g = f.inverted_qt();
    CHECK(g.has_negative_exponents());
    CHECK(g.shifted(1, {1}) == poly("q*t+1"));
    // A weight-1 symbol E transforms as E -> E / q.
    FrobeniusSymbol E{"E", 1};
    IntPoly h = IntPoly::symbol(E) * IntPoly::t(1, 1);
    IntPoly hin = h.inverted_qt();
    CHECK(hin.shifted(1, {1}) == IntPoly::symbol(E));
    CHECK(h.with_symbol_value("E", 7) == poly("7t"));
}

TEST_CASE("rational functions normalize and compare exactly") {
    CHECK(rat("(1-t^2)/((1-t)(1-t^2))") == rat("1/(1-t)"));
    CHECK(rat("t/(t-1)") == rat("-t/(1-t)"));
    CHECK(rat("1/(1-t)") + rat("t/(1-t)") == rat("(1+t)/(1-t)"));
    CHECK(rat("(1+t)/(1-t^2)") == rat("1/(1-t)"));
    CHECK(rat("1/(1-q*t)") * rat("1-q*t") == RationalFn::one(VarShape{1, {}}));
    CHECK(rat("1/(1-t)") / rat("1/(1-t^2)") == rat("1+t"));
    CHECK(rat("2/(2-2t)") == rat("1/(1-t)"));
}

TEST_CASE("canonical rendering round-trips") {
    const std::string star3 = "(1+t^2)/((1-t)(1-t^2)(1-t^3))";
    CHECK(expr::render(rat(star3)) == star3);
    const std::string heis = "1/((1-t)(1-q*t)(1-q^2*t^3))";
    CHECK(expr::render(rat(heis)) == heis);
    const std::string gh = "1/((1-t1)(1-q*t1)(1-t1^2*t2))";
    CHECK(expr::render(rat(gh, 2)) == gh);
    // Implicit multiplication and aliases parse to the same function.
    CHECK(rat("(1+X^2)/((1-X)(1-X^2)(1-X^3))") == rat(star3));
    CHECK(rat("2q*t + t^2") == rat("t^2+2*q*t"));
}

TEST_CASE("inversion ratios of closed forms are monomials") {
    RationalFn heis = rat("1/((1-t)(1-q*t)(1-q^2*t^3))");
    auto r = monomial_ratio(heis.invert_qt(), heis);
    REQUIRE(r.has_value());
    CHECK(*r == Monomial{Rat(-1), 3, {5}});

    RationalFn gh = rat("1/((1-t1)(1-q*t1)(1-t1^2*t2))", 2);
    auto r2 = monomial_ratio(gh.invert_qt(), gh);
    REQUIRE(r2.has_value());
    CHECK(*r2 == Monomial{Rat(-1), 1, {4, 1}});

    // 1/(1-t) picks up -t under t -> 1/t.
    RationalFn f = rat("1/(1-t)");
    CHECK(f.invert_qt() == rat("-t/(1-t)"));
    auto r3 = monomial_ratio(f.invert_qt(), f);
    REQUIRE(r3.has_value());
    CHECK(*r3 == Monomial{Rat(-1), 0, {1}});

    // An asymmetric numerator breaks the monomial property.
    RationalFn g = rat("(1+2t)/(1-t)");
    CHECK_FALSE(monomial_ratio(g.invert_qt(), g).has_value());
}

TEST_CASE("collapse and specialization helpers") {
    RationalFn gh = rat("1/((1-t1)(1-q*t1)(1-t1^2*t2))", 2);
    CHECK(gh.collapsed_univariate() == rat("1/((1-t)(1-q*t)(1-t^3))"));
    RationalFn withE = expr::parse_rational("E*t/(1-t)", 1, {FrobeniusSymbol{"E", 1}});
    CHECK(withE.with_symbol_value("E", 5) == rat("5t/(1-t)"));
    CHECK(rat("1/(1-q*t)").eval(Rat(2), {Rat(1, 4)}) == Rat(2));
}

TEST_CASE("series expansion matches direct geometric sums") {
    PowerSeries s = series_expand(rat("1/(1-q*t)"), 2);
    PowerSeries expect = PowerSeries::from_poly(poly("1+q*t+q^2*t^2"), 2);
    CHECK(s == expect);

    PowerSeries heis = series_expand(rat("1/((1-t)(1-q*t)(1-q^2*t^3))"), 2);
    CHECK(heis.coefficient({0}) == poly("1"));
    CHECK(heis.coefficient({1}) == poly("1+q"));
    CHECK(heis.coefficient({2}) == poly("1+q+q^2"));
    auto at2 = heis.at_q(2);
    CHECK(at2.at({0}) == 1);
    CHECK(at2.at({1}) == 3);
    CHECK(at2.at({2}) == 7);

    // Multivariate expansion respects the total-degree bound.
    PowerSeries gh = series_expand(rat("1/((1-t1)(1-q*t1)(1-t1^2*t2))", 2), 3);
    CHECK(gh.coefficient({1, 0}) == poly("1+q"));
    CHECK(gh.coefficient({2, 1}) == poly("1"));
    CHECK(gh.coefficient({0, 1}) == IntPoly::constant(0));
    CHECK(gh.coefficient({1, 1}) == IntPoly::constant(0));
}

TEST_CASE("series arithmetic and truncation") {
    PowerSeries a = series_expand(rat("1/(1-t)"), 4);
    PowerSeries b = series_expand(rat("1/(1-t^2)"), 4);
    CHECK(a * b == series_expand(rat("1/((1-t)(1-t^2))"), 4));
    CHECK(a.truncated(2) == series_expand(rat("1/(1-t)"), 2));
    CHECK((a - a) == PowerSeries(1, 4));
    CHECK(a.agrees_with(series_expand(rat("1/(1-t)"), 7)));
}
