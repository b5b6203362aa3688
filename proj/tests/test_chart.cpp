#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "agc/chart.hpp"
#include "agc/faults.hpp"

using namespace agc;

namespace {

Expr cpow(int k) {
  Expr c = Expr::var("c");
  if (k == 0) return Expr::constant(1);
  if (k > 0) return Expr::power(c, k);
  return Expr::constant(1) / Expr::power(c, -k);
}

// All labels that carry a chart, with their minimal ranks.
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

}  // namespace

TEST_CASE("coordinate names follow the word") {
  CHECK(chart_vars(TypeLabel::A1, 3) ==
        std::vector<std::string>{"x3", "x2", "x1"});
  CHECK(chart_vars(TypeLabel::B1, 3) ==
        std::vector<std::string>{"x1", "x2", "x3", "xb2", "xb1"});
  CHECK(chart_vars(TypeLabel::C1, 2) ==
        std::vector<std::string>{"x0", "x1", "x2", "xb1"});
  CHECK(chart_vars(TypeLabel::D1, 4) ==
        std::vector<std::string>{"x1", "x2", "x3", "x4", "xb2", "xb1"});
  CHECK(chart_vars(TypeLabel::A2dag, 2, Chart::second) ==
        std::vector<std::string>{"y2", "y1", "y0", "yb1"});
  CHECK(word_arg_names({0, 1, 0}, "z") ==
        std::vector<std::string>{"z0", "z1", "zb0"});
  CHECK_THROWS_AS(word_arg_names({1, 1, 1}, "z"), Error);
}

TEST_CASE("unsupported charts are rejected") {
  CHECK_THROWS_AS(chart_vars(TypeLabel::A2even, 2), Error);
  CHECK_THROWS_AS(v_closed(TypeLabel::B1, 3, Chart::second), Error);
  CHECK_THROWS_AS(geom_e(TypeLabel::C1, 2, 3), IndexError);
  CHECK_THROWS_AS(geom_e(TypeLabel::A2dag, 2, 2, Chart::second), IndexError);
  CHECK_THROWS_AS(geom_eps(TypeLabel::A1, 2, -1), IndexError);
  CHECK_THROWS_AS(chart_vars(TypeLabel::B1, 2), RankError);
}

TEST_CASE("matrix product matches the closed form") {
  for (auto [t, n0] : kCharts) {
    for (int n : {n0, n0 + 1}) {
      CAPTURE(type_name(t));
      CAPTURE(n);
      auto vm = v_matrix(t, n);
      auto vc = v_closed(t, n);
      REQUIRE(vm.size() == vc.size());
      for (std::size_t j = 0; j < vm.size(); ++j) {
        REQUIRE(vm[j].valid());
        REQUIRE(vc[j].valid());
        CHECK(equal(vm[j], vc[j]));
      }
    }
  }
  for (int n : {2, 3}) {
    auto vm = v_matrix(TypeLabel::A2dag, n, Chart::second);
    auto vc = v_closed(TypeLabel::A2dag, n, Chart::second);
    for (std::size_t j = 0; j < vm.size(); ++j) {
      REQUIRE(vm[j].valid());
      CHECK(equal(vm[j], vc[j]));
    }
  }
}

TEST_CASE("sigma_bar solves the decorated symmetry equation") {
  // v(sigma_bar(x)) = a(x) * (v(x) pushed through the basis symmetry)
  for (auto [t, n] : kCharts) {
    CAPTURE(type_name(t));
    SigmaBar sb = sigma_bar(t, n);
    auto perm = sigma_basis(t, n);
    auto src = v_closed(t, n);
    auto dst = v_closed(t, n, sb.to);
    for (std::size_t k = 0; k < src.size(); ++k) {
      Expr lhs = apply_map(dst[perm[k]], sb.map);
      Expr rhs = sb.a * src[k];
      CHECK(equal(lhs, rhs));
    }
  }
}

TEST_CASE("sigma_bar composed with its inverse is the identity") {
  for (auto [t, n] : kCharts) {
    CAPTURE(type_name(t));
    SigmaBar fwd = sigma_bar(t, n);
    SigmaBar inv = sigma_bar_inverse(t, n);
    ChartMap back = compose_map(inv.map, fwd.map);
    CHECK(maps_equal(back, identity_map(t, n)));
    ChartMap forth = compose_map(fwd.map, inv.map);
    CHECK(maps_equal(forth, identity_map(t, n, fwd.to)));
  }
}

TEST_CASE("sigma_bar is an involution where expected") {
  for (TypeLabel t : {TypeLabel::B1, TypeLabel::C1, TypeLabel::D1,
                      TypeLabel::A2odd, TypeLabel::D2}) {
    int n = min_rank(t);
    SigmaBar sb = sigma_bar(t, n);
    CHECK(maps_equal(compose_map(sb.map, sb.map), identity_map(t, n)));
  }
  // A1's symmetry is cyclic instead: applying it twice moves the point.
  SigmaBar sb = sigma_bar(TypeLabel::A1, 3);
  CHECK_FALSE(maps_equal(compose_map(sb.map, sb.map), identity_map(TypeLabel::A1, 3)));
}

TEST_CASE("the transcribed zero-action equals the conjugated one") {
  for (auto [t, n] : kCharts) {
    CAPTURE(type_name(t));
    CHECK(maps_equal(conjugated_e0(t, n), geom_e(t, n, 0)));
  }
}

TEST_CASE("character scaling and statistic shift, spot checks") {
  for (auto [t, n] : kCharts) {
    CAPTURE(type_name(t));
    CartanData cd = cartan_data(t, n);
    for (int i : {0, 1, n}) {
      ChartMap e = geom_e(t, n, i);
      // epsilon_i(e_i^c x) = c^{-1} epsilon_i(x)
      CHECK(equal(apply_map(geom_eps(t, n, i), e),
                  geom_eps(t, n, i) / Expr::var("c")));
      // gamma_j(e_i^c x) = c^{a_ij} gamma_j(x) for j in {0, i, n}
      for (int j : {0, i, n})
        CHECK(equal(apply_map(geom_gamma(t, n, j), e),
                    cpow(cd.a(i, j)) * geom_gamma(t, n, j)));
    }
  }
  // same shape on the second chart
  CartanData cd = cartan_data(TypeLabel::A2dag, 2);
  for (int i : {0, 1}) {
    ChartMap e = geom_e(TypeLabel::A2dag, 2, i, Chart::second);
    CHECK(equal(apply_map(geom_eps(TypeLabel::A2dag, 2, i, Chart::second), e),
                geom_eps(TypeLabel::A2dag, 2, i, Chart::second) /
                    Expr::var("c")));
    for (int j : {0, 1})
      CHECK(equal(
          apply_map(geom_gamma(TypeLabel::A2dag, 2, j, Chart::second), e),
          cpow(cd.a(i, j)) * geom_gamma(TypeLabel::A2dag, 2, j, Chart::second)));
  }
}

TEST_CASE("pinned closed forms") {
  CHECK(geom_gamma(TypeLabel::A1, 2, 0).str() == "1/(x1*x2)");
  CHECK(geom_eps(TypeLabel::B1, 3, 3).str() == "x2/x3");
  CHECK(geom_eps(TypeLabel::A1, 2, 0).str() == "x1");
  CHECK(geom_e(TypeLabel::B1, 3, 3).at("x3").str() == "c*x3");
  CHECK(geom_e(TypeLabel::A2dag, 2, 0, Chart::second).at("y0").str() ==
        "c*y0");
}

TEST_CASE("armed defects are visible in the checks") {
  {
    faults::Armed guard("chart-d1-xi-denominator-index");
    auto vm = v_matrix(TypeLabel::D1, 4);  // unaffected by the defect
    auto vc = v_closed(TypeLabel::D1, 4);
    bool all = true;
    for (std::size_t j = 0; j < vm.size(); ++j) all = all && equal(vm[j], vc[j]);
    CHECK_FALSE(all);
  }
  {
    faults::Armed guard("chart-b1-gamma1-exponent");
    CartanData cd = cartan_data(TypeLabel::B1, 3);
    ChartMap e = geom_e(TypeLabel::B1, 3, 1);
    CHECK_FALSE(equal(apply_map(geom_gamma(TypeLabel::B1, 3, 1), e),
                      cpow(cd.a(1, 1)) * geom_gamma(TypeLabel::B1, 3, 1)));
  }
  {
    faults::Armed guard("chart-c1-e0-xn-denominator");
    CHECK_FALSE(
        maps_equal(conjugated_e0(TypeLabel::C1, 2), geom_e(TypeLabel::C1, 2, 0)));
  }
  {
    faults::Armed guard("chart-a2dag-sigmabar-y0-square");
    SigmaBar sb = sigma_bar(TypeLabel::A2dag, 2);
    auto src = v_closed(TypeLabel::A2dag, 2);
    auto dst = v_closed(TypeLabel::A2dag, 2, Chart::second);
    bool all = true;
    for (std::size_t k = 0; k < src.size(); ++k)
      all = all && equal(apply_map(dst[k], sb.map), sb.a * src[k]);
    CHECK_FALSE(all);
  }
  // disarmed again: everything is back to clean
  CHECK(faults::current().empty());
  CHECK(maps_equal(conjugated_e0(TypeLabel::C1, 2), geom_e(TypeLabel::C1, 2, 0)));
}
