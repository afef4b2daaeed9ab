#include "lgvsym/errors.hpp"
#include "lgvsym/ring.hpp"
#include "support/random_poly.hpp"

#include <doctest.h>

using namespace lgvsym;
using namespace lgvsym::ring;
using namespace lgvsym::testing;

TEST_CASE("variable order is t < x < y < a, then index") {
  CHECK(Variable::t() < Variable::x(1));
  CHECK(Variable::x(1) < Variable::x(2));
  CHECK(Variable::x(9) < Variable::y(1));
  CHECK(Variable::y(9) < Variable::a(1));
  CHECK(to_string(Variable::x(12)) == "x12");
  CHECK(to_string(Variable::t()) == "t");
  CHECK_THROWS_AS(Variable::x(0), InvalidArgument);
}

TEST_CASE("monomials use graded lex with earlier variables heavier") {
  auto m = [](std::string_view s) { return P(s).leading_monomial(); };
  CHECK(m("x1") > m("x2"));
  CHECK(m("x2^2") > m("x1"));
  CHECK(m("x1*x3") > m("x2^2"));
  CHECK(m("t") > m("x1"));
  CHECK(m("x1") > m("y1"));
  CHECK(m("x1^2*x2").degree() == 3);
  CHECK(m("x1^2*y3").degree_in(Family::Y) == 1);
  CHECK(m("x1").divides(m("x1^2*x2")));
  CHECK_FALSE(m("x3").divides(m("x1^2*x2")));
  CHECK(m("x1^2*x2").quotient(m("x1")) == m("x1*x2"));
}

TEST_CASE("addition") {
  CHECK(S(X(1) + X(2)) == "x1 + x2");
  CHECK((X(1) + Polynomial(-1) * X(1)).is_zero());
  CHECK(S(X(1) + Polynomial(-1) * X(1)) == "0");
  CHECK(S(X(1) * X(2) + 2 + X(1) * X(2)) == "2*x1*x2 + 2");
}

TEST_CASE("multiplication") {
  CHECK(S((X(1) - X(2)) * (X(1) + X(2))) == "x1^2 - x2^2");
  const Polynomial q = 1 + X(1) * Y(1);
  CHECK(S(mul(q, q, 2u)) == "2*x1*y1 + 1");
  CHECK(mul(q, q, 2u) == 1 + 2 * X(1) * Y(1));
  CHECK((q * 0).is_zero());
  CHECK(pow(X(1) + 1, 3) == P("x1^3 + 3*x1^2 + 3*x1 + 1"));
  CHECK(pow(X(1), 0) == 1);
}

TEST_CASE("exact division") {
  CHECK(exact_div(P("x1^2 - x2^2"), P("x1 - x2")) == P("x1 + x2"));
  CHECK_THROWS_AS(exact_div(X(1), X(2)), NotDivisible);
  CHECK_THROWS_AS(exact_div(P("x1^2 + 1"), X(1)), NotDivisible);
  CHECK_THROWS_AS(exact_div(X(1), 2), NotDivisible);
  CHECK(exact_div(P("4*x1 + 6"), 2) == P("2*x1 + 3"));
  CHECK_THROWS_AS(exact_div(X(1), 0), InvalidArgument);
  CHECK(exact_div(0, X(1)).is_zero());
}

TEST_CASE("substitutions") {
  CHECK(substitute_zero(X(1) - X(3), Family::X, 3) == X(1));
  CHECK(substitute_zero(X(1) * X(2), Family::X, 3) == X(1) * X(2));
  CHECK(substitute_zero(Y(2) + X(5), Family::Y, 2) == X(5));
  CHECK(substitute_family(X(1) - X(3), Family::X, Family::X, 1) == X(2) - X(4));
  CHECK(substitute_family(X(3), Family::X, Family::A, -2) == A(1));
  CHECK(substitute_family(Y(1), Family::X, Family::A, 0) == Y(1));
  CHECK_THROWS_AS(substitute_family(X(1), Family::X, Family::X, -1), IndexUnderflow);
  CHECK(swap_variables(X(1) - X(2), Variable::x(1), Variable::x(2)) == X(2) - X(1));
  CHECK(truncate_degree(P("x1^3 + x1*x2 + x1 + 1"), 2) == P("x1*x2 + x1 + 1"));
  CHECK(truncate_family_degree(P("x1^2*y1 + x1*y1^2"), Family::Y, 1) == P("x1^2*y1"));
  CHECK(family_component(P("x1^2*y1 + x1*y1^2 + y1"), Family::X, 1) == P("x1*y1^2"));
}

TEST_CASE("integer evaluation") {
  CHECK(eval_int(X(1) - X(2), {{Variable::x(1), 5}, {Variable::x(2), 3}}) == 2);
  CHECK(eval_int(0, {}) == 0);
  CHECK(eval_int(pow(X(1), 2), {{Variable::x(1), -3}}) == 9);
  CHECK_THROWS_AS(eval_int(X(1) + Y(1), {{Variable::x(1), 1}}), UnassignedVariable);
  // Coefficients are unbounded.
  CHECK(eval_int(pow(X(1), 40), {{Variable::x(1), 9}}) ==
        boost::multiprecision::pow(Integer(9), 40));
}

TEST_CASE("canonical text") {
  CHECK(S(X(1) + X(2)) == "x1 + x2");
  CHECK(S(0) == "0");
  CHECK(S(-X(2) + X(1)) == "x1 - x2");
  CHECK(S(-X(1)) == "-x1");
  CHECK(S(-3) == "-3");
  CHECK(S(T() * X(1) - 2 * pow(A(1), 2)) == "t*x1 - 2*a1^2");
  CHECK(S(P("y2 + x1*y1 + a3 - 7")) == "x1*y1 + y2 + a3 - 7");
}

TEST_CASE("parsing") {
  CHECK(P("x1 + x2") == X(1) + X(2));
  CHECK(P(" - x1 +3 *x2^2 ") == -X(1) + 3 * pow(X(2), 2));
  CHECK(P("x1*x1") == pow(X(1), 2));
  CHECK(P("x1 - x1").is_zero());
  CHECK(P("t^3") == pow(T(), 3));
  for (std::string bad : {"", "x", "x0", "x1^", "x1 +", "z1", "2*", "x1**x2", "y1^-2", "1 2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(P(bad), ParseError);
  }
}

TEST_CASE("ring laws on 1000 random cases") {
  RandomPolynomials gen(7);
  for (int k = 0; k < 1000; ++k) {
    const Polynomial p = gen.polynomial();
    const Polynomial q = gen.polynomial();
    const Polynomial r = gen.polynomial();
    CAPTURE(S(p));
    CAPTURE(S(q));
    CAPTURE(S(r));
    REQUIRE(p + q == q + p);
    REQUIRE(p * q == q * p);
    REQUIRE((p + q) + r == p + (q + r));
    REQUIRE((p * q) * r == p * (q * r));
    REQUIRE(p * (q + r) == p * q + p * r);
    REQUIRE((p - p).is_zero());
    REQUIRE(p * 1 == p);
    REQUIRE(P(S(p)) == p);
    if (!q.is_zero()) REQUIRE(exact_div(p * q, q) == p);
    REQUIRE(mul(p, q, 3u) == truncate_degree(p * q, 3));

    Assignment point;
    for (auto v : {Variable::t(), Variable::x(1), Variable::x(2), Variable::x(3), Variable::y(1),
                   Variable::y(2), Variable::a(1)}) {
      point[v] = gen.uniform(-9, 9);
    }
    REQUIRE(eval_int(p * q + r, point) ==
            eval_int(p, point) * eval_int(q, point) + eval_int(r, point));
  }
}

TEST_CASE("leading term and degree") {
  const Polynomial p = P("3*x2^2 - x1 + 5");
  CHECK(p.degree() == 2);
  CHECK(p.leading_coefficient() == 3);
  CHECK(Polynomial().degree() == -1);
  CHECK(p.size() == 3);
  CHECK(p.coefficient(Monomial::of(Variable::x(1))) == -1);
  CHECK(p.coefficient(Monomial::of(Variable::x(3))) == 0);
}
