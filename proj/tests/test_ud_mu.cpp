#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "agc/b_infinity.hpp"
#include "agc/faults.hpp"
#include "agc/ud_crystal.hpp"

using namespace agc;

namespace {

const std::vector<std::pair<TypeLabel, int>> kLattices = {
    {TypeLabel::A1, 2},  {TypeLabel::B1, 3},    {TypeLabel::C1, 2},
    {TypeLabel::D1, 4},  {TypeLabel::A2odd, 3}, {TypeLabel::D2, 2},
    {TypeLabel::A2dag, 2}};

}  // namespace

TEST_CASE("closed forms agree with the tropicalized chart on samples") {
  for (auto [t, n] : kLattices) {
    CAPTURE(type_name(t));
    std::mt19937_64 rng(1000 + (int)t);
    for (int trial = 0; trial < 150; ++trial) {
      LatticePoint p = random_lattice_point(t, n, rng);
      for (int i = 0; i <= n; ++i) {
        CHECK(ud_e(t, n, i, p) == trop_e(t, n, i, p, 1));
        CHECK(ud_f(t, n, i, p) == trop_e(t, n, i, p, -1));
        CHECK(ud_wt(t, n, i, p) == trop_wt(t, n, i, p));
        CHECK(ud_eps(t, n, i, p) == trop_eps(t, n, i, p));
      }
    }
  }
}

TEST_CASE("raising and lowering are mutually inverse with unit shifts") {
  for (auto [t, n] : kLattices) {
    CAPTURE(type_name(t));
    CartanData cd = cartan_data(t, n);
    std::mt19937_64 rng(2000 + (int)t);
    for (int trial = 0; trial < 100; ++trial) {
      LatticePoint p = random_lattice_point(t, n, rng);
      for (int i = 0; i <= n; ++i) {
        LatticePoint up = ud_e(t, n, i, p);
        CHECK(ud_f(t, n, i, up) == p);
        CHECK(ud_e(t, n, i, ud_f(t, n, i, p)) == p);
        CHECK(ud_eps(t, n, i, up) == ud_eps(t, n, i, p) - 1);
        for (int j = 0; j <= n; ++j)
          CHECK(ud_wt(t, n, j, up) == ud_wt(t, n, j, p) + cd.a(i, j));
      }
    }
  }
}

TEST_CASE("pinned branch values") {
  // rank-2 cyclic label: global shift versus single bumps
  LatticePoint a = lattice_point(TypeLabel::A1, 2, {3, 5});
  CHECK(lattice_coords(TypeLabel::A1, 2, ud_e(TypeLabel::A1, 2, 0, a)) ==
        std::vector<long long>{2, 4});
  CHECK(lattice_coords(TypeLabel::A1, 2, ud_e(TypeLabel::A1, 2, 2, a)) ==
        std::vector<long long>{3, 6});

  // twisted rank-2 label with the three-way zero branch: coordinates are
  // (x0, x1, x2, xb1) and the middle case is 2*x0 + 1 == x1 + xb1
  LatticePoint d = lattice_point(TypeLabel::D2, 2, {1, 2, 4, 1});
  CHECK(lattice_coords(TypeLabel::D2, 2, ud_e(TypeLabel::D2, 2, 0, d)) ==
        std::vector<long long>{1, 1, 3, 0});
  LatticePoint dhi = lattice_point(TypeLabel::D2, 2, {3, 2, 4, 1});
  CHECK(lattice_coords(TypeLabel::D2, 2, ud_e(TypeLabel::D2, 2, 0, dhi)) ==
        std::vector<long long>{4, 2, 4, 1});
  LatticePoint dlo = lattice_point(TypeLabel::D2, 2, {0, 2, 4, 1});
  CHECK(lattice_coords(TypeLabel::D2, 2, ud_e(TypeLabel::D2, 2, 0, dlo)) ==
        std::vector<long long>{-1, 0, 2, -1});

  // rank-3 untwisted odd label: the zero action keeps one end coordinate
  LatticePoint b = lattice_point(TypeLabel::B1, 3, {2, 1, 1, 0, 1});
  // pairs: x1+xb1 = 3 >= x2+xb2 = 1, so x1 survives
  CHECK(lattice_coords(TypeLabel::B1, 3, ud_e(TypeLabel::B1, 3, 0, b)) ==
        std::vector<long long>{2, 0, 0, -1, 0});
}

TEST_CASE("mu lands in the dual family and inverts exactly") {
  for (auto [t, n] : kLattices) {
    CAPTURE(type_name(t));
    TypeLabel d = langlands_dual(t);
    std::mt19937_64 rng(3000 + (int)t);
    for (int trial = 0; trial < 150; ++trial) {
      LatticePoint p = random_lattice_point(t, n, rng);
      std::vector<Rat> b = mu(t, n, p);
      CHECK(binf_valid(d, n, b));
      CHECK(mu_inverse(t, n, b) == p);
    }
    for (int trial = 0; trial < 150; ++trial) {
      std::vector<Rat> b = random_belt(d, n, rng);
      REQUIRE(binf_valid(d, n, b));
      CHECK(mu(t, n, mu_inverse(t, n, b)) == b);
    }
  }
}

TEST_CASE("mu intertwines the actions and matches every statistic") {
  for (auto [t, n] : kLattices) {
    CAPTURE(type_name(t));
    TypeLabel d = langlands_dual(t);
    std::mt19937_64 rng(4000 + (int)t);
    for (int trial = 0; trial < 100; ++trial) {
      LatticePoint p = random_lattice_point(t, n, rng);
      std::vector<Rat> b = mu(t, n, p);
      std::vector<long long> w = binf_wt(d, n, b);
      for (int i = 0; i <= n; ++i) {
        CHECK(mu(t, n, ud_e(t, n, i, p)) == binf_e(d, n, i, b));
        CHECK(mu(t, n, ud_f(t, n, i, p)) == binf_f(d, n, i, b));
        CHECK(ud_eps(t, n, i, p) == binf_eps(d, n, i, b));
        CHECK(ud_phi(t, n, i, p) == binf_phi(d, n, i, b));
        CHECK(ud_wt(t, n, i, p) == w[i]);
      }
    }
  }
}

TEST_CASE("rejection gates") {
  CHECK_THROWS_AS(lattice_point(TypeLabel::A1, 2, {1, 2, 3}), Error);
  CHECK_THROWS_AS(ud_e(TypeLabel::A1, 2, 3, lattice_point(TypeLabel::A1, 2, {0, 0})),
                  IndexError);
  CHECK_THROWS_AS(ud_e(TypeLabel::A2even, 2, 1, LatticePoint{}), Error);
  // invalid elements of the dual family are refused by the inverse
  CHECK_THROWS_AS(mu_inverse(TypeLabel::A1, 2, {Rat(1), Rat(0), Rat(0)}), Error);
  CHECK_THROWS_AS(mu_inverse(TypeLabel::A2dag, 2,
                             {Rat(1, 2), Rat(0), Rat(0), Rat(0)}),
                  Error);
}

TEST_CASE("armed threshold defect separates the two routes") {
  faults::Armed guard("ud-d2-e0-threshold");
  LatticePoint d = lattice_point(TypeLabel::D2, 2, {1, 2, 4, 1});
  CHECK(ud_e(TypeLabel::D2, 2, 0, d) != trop_e(TypeLabel::D2, 2, 0, d, 1));
}

TEST_CASE("armed halving defect breaks the coordinate change") {
  faults::Armed guard("mu-a2odd-bn-halving");
  LatticePoint p =
      lattice_point(TypeLabel::A2odd, 3, {1, 2, 2, 0, 1});  // x3 = 2 != 0
  CHECK_FALSE(binf_valid(TypeLabel::B1, 3, mu(TypeLabel::A2odd, 3, p)));
}
