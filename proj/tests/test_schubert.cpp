#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "agc/chart.hpp"
#include "agc/faults.hpp"
#include "agc/schubert.hpp"

using namespace agc;

namespace {

Expr cpow(int k) {
  Expr c = Expr::var("c");
  if (k == 0) return Expr::constant(1);
  if (k > 0) return Expr::power(c, k);
  return Expr::constant(1) / Expr::power(c, -k);
}

const std::vector<std::pair<TypeLabel, int>> kCharts = {
    {TypeLabel::A1, 2},  {TypeLabel::B1, 3},    {TypeLabel::C1, 2},
    {TypeLabel::D1, 4},  {TypeLabel::A2odd, 3}, {TypeLabel::D2, 2},
    {TypeLabel::A2dag, 2}};

bool maps_equal(const ChartMap& a, const ChartMap& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [k, e] : a) {
    auto it = b.find(k);
    if (it == b.end() || !equal(e, it->second)) return false;
  }
  return true;
}

ChartMap with_c(const ChartMap& m, const Expr& carg) {
  ChartMap out;
  std::map<std::string, Expr> s{{"c", carg}};
  for (const auto& [k, e] : m) out[k] = e.subst(s);
  return out;
}

}  // namespace

TEST_CASE("the generic cell action reproduces the per-type actions away "
          "from the zero index") {
  for (auto [t, n] : kCharts) {
    CAPTURE(type_name(t));
    CartanData cd = cartan_data(t, n);
    for (int i = 1; i <= n; ++i) {
      CHECK(maps_equal(schubert_e(cd, cd.word_w1, i), geom_e(t, n, i)));
      CHECK(equal(schubert_eps(cd, cd.word_w1, i), geom_eps(t, n, i)));
    }
    // the character is insensitive to the end vector: every index matches
    for (int i = 0; i <= n; ++i)
      CHECK(equal(schubert_gamma(cd, cd.word_w1, i), geom_gamma(t, n, i)));
  }
}

TEST_CASE("the second chart of A2dag is fully induced by its word") {
  for (int n : {2, 3}) {
    CartanData cd = cartan_data(TypeLabel::A2dag, n);
    for (int i = 0; i <= n - 1; ++i) {
      CHECK(maps_equal(schubert_e(cd, cd.word_w2, i, "y"),
                       geom_e(TypeLabel::A2dag, n, i, Chart::second)));
      CHECK(equal(schubert_eps(cd, cd.word_w2, i, "y"),
                  geom_eps(TypeLabel::A2dag, n, i, Chart::second)));
      CHECK(equal(schubert_gamma(cd, cd.word_w2, i, "y"),
                  geom_gamma(TypeLabel::A2dag, n, i, Chart::second)));
    }
  }
}

TEST_CASE("the chartless label carries a consistent cell action") {
  for (int n : {2, 3}) {
    CartanData cd = cartan_data(TypeLabel::A2even, n);
    for (int i = 0; i <= n; ++i) {
      ChartMap e = schubert_e(cd, cd.word_w1, i);
      CHECK(equal(apply_map(schubert_eps(cd, cd.word_w1, i), e),
                  schubert_eps(cd, cd.word_w1, i) / Expr::var("c")));
      for (int j = 0; j <= n; ++j)
        CHECK(equal(apply_map(schubert_gamma(cd, cd.word_w1, j), e),
                    cpow(cd.a(i, j)) * schubert_gamma(cd, cd.word_w1, j)));
    }
  }
}

TEST_CASE("one braid-shaped relation on the chartless cell") {
  // indices 1,2 of the rank-2 chartless label pair with entries (-2,-1)
  CartanData cd = cartan_data(TypeLabel::A2even, 2);
  REQUIRE(cd.a(1, 2) == -2);
  REQUIRE(cd.a(2, 1) == -1);
  Expr c1 = Expr::var("c1"), c2 = Expr::var("c2");
  auto E = [&](int i, const Expr& carg) {
    return with_c(schubert_e(cd, cd.word_w1, i), carg);
  };
  auto chain = [](std::vector<ChartMap> ms) {
    ChartMap acc = ms.back();
    for (std::size_t k = ms.size() - 1; k-- > 0;) acc = compose_map(ms[k], acc);
    return acc;
  };
  ChartMap lhs = chain({E(1, c1), E(2, Expr::power(c1, 2) * c2),
                        E(1, c1 * c2), E(2, c2)});
  ChartMap rhs = chain({E(2, c2), E(1, c1 * c2),
                        E(2, Expr::power(c1, 2) * c2), E(1, c1)});
  CHECK(maps_equal(lhs, rhs));
}

TEST_CASE("absent letters are rejected") {
  CartanData cd = cartan_data(TypeLabel::A1, 3);
  CHECK_THROWS_AS(schubert_e(cd, cd.word_w1, 0), Error);
  CHECK_THROWS_AS(schubert_eps(cd, cd.word_w1, 0), Error);
  CHECK(word_has_letter(cd.word_w1, 1));
  CHECK_FALSE(word_has_letter(cd.word_w1, 0));
}

TEST_CASE("armed sign defect is visible") {
  CartanData cd = cartan_data(TypeLabel::B1, 3);
  faults::Armed guard("schubert-eps-exponent-sign");
  CHECK_FALSE(equal(schubert_eps(cd, cd.word_w1, 2), geom_eps(TypeLabel::B1, 3, 2)));
  CHECK_FALSE(maps_equal(schubert_e(cd, cd.word_w1, 2), geom_e(TypeLabel::B1, 3, 2)));
}
