#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "agc/tropic.hpp"

using namespace agc;

TEST_CASE("structural rules") {
  // product -> sum, quotient -> difference, sum -> max, const -> 0
  TropExpr t = tropicalize(parse("(c*x + y)/(x + y)"));
  for (long long x : {-3, 0, 2})
    for (long long y : {-2, 1, 5})
      for (long long c : {-1, 1}) {
        long long want = std::max(c + x, y) - std::max(x, y);
        CHECK(t.teval({{"c", c}, {"x", x}, {"y", y}}) == want);
      }

  TropExpr p = tropicalize(parse("x^3/y"));
  CHECK(p.teval({{"x", 4}, {"y", 7}}) == 5);

  // literal positive constants all become 0
  TropExpr z = tropicalize(parse("(2*x + y)/(x + 1/3*y)"));
  CHECK(z.teval({{"x", 10}, {"y", -4}}) ==
        std::max(0 + 10LL, -4LL) - std::max(10LL, 0 + -4LL));
}

TEST_CASE("printing") {
  CHECK(tropicalize(parse("(c*x + y)/(x + y)")).str() ==
        "max(c + x, y) - max(x, y)");
  CHECK(tropicalize(parse("x^2*y")).str() == "2*x + y");
  CHECK(tropicalize(parse("7")).str() == "0");
  CHECK(tropicalize(parse("x/(y + z)")).str() == "x - max(y, z)");
}

TEST_CASE("teval needs every variable") {
  TropExpr t = tropicalize(parse("x + y"));
  CHECK_THROWS_AS(t.teval({{"x", 1}}), MissingVariable);
}

TEST_CASE("tropicalization commutes with substitution structure") {
  // UD of a composite equals composing the UD pieces
  Expr inner = parse("(u + v)/w");
  Expr outer = parse("x^2 + c*x");
  Expr comp = outer.subst({{"x", inner}});
  TropExpr t1 = tropicalize(comp);
  for (long long u : {-5, 1})
    for (long long v : {0, 3})
      for (long long w : {-2, 4})
        for (long long c : {-1, 1}) {
          long long x = std::max(u, v) - w;
          long long want = std::max(2 * x, c + x);
          CHECK(t1.teval({{"u", u}, {"v", v}, {"w", w}, {"c", c}}) == want);
        }
}
