#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "agc/b_infinity.hpp"

using namespace agc;

namespace {

const TypeLabel kFamilies[] = {TypeLabel::A1, TypeLabel::B1,    TypeLabel::C1,
                               TypeLabel::D1, TypeLabel::A2odd, TypeLabel::D2,
                               TypeLabel::A2even};

std::vector<Rat> zero(TypeLabel t, int n) {
  return std::vector<Rat>(binf_dim(t, n), Rat(0));
}

}  // namespace

TEST_CASE("dimensions and the missing label") {
  CHECK(binf_dim(TypeLabel::A1, 3) == 4);
  CHECK(binf_dim(TypeLabel::D1, 4) == 7);
  CHECK(binf_dim(TypeLabel::B1, 3) == 6);
  CHECK_THROWS_AS(binf_dim(TypeLabel::A2dag, 2), Error);
}

TEST_CASE("pinned actions at the origin") {
  // cyclic family
  auto a = binf_e(TypeLabel::A1, 2, 0, zero(TypeLabel::A1, 2));
  CHECK(a == std::vector<Rat>{-1, 0, 1});
  CHECK(binf_eps(TypeLabel::A1, 2, 0, a) == -1);  // one less than at the origin
  CHECK(binf_phi(TypeLabel::A1, 2, 0, a) == 1);   // one more than at the origin

  // half steps at the short node
  auto b = binf_e(TypeLabel::B1, 3, 3, zero(TypeLabel::B1, 3));
  CHECK(b == std::vector<Rat>{0, 0, Rat(1, 2), Rat(-1, 2), 0, 0});
  CHECK(binf_valid(TypeLabel::B1, 3, b));
  CHECK(binf_phi(TypeLabel::B1, 3, 3, b) == 1);
  CHECK(binf_eps(TypeLabel::B1, 3, 3, b) == -1);

  // three-branch rule at index 0
  std::vector<Rat> c = zero(TypeLabel::C1, 2);
  c[0] = 1;
  c[3] = 1;  // b_1 = bar b_1 = 1, l = 2
  auto c1 = binf_e(TypeLabel::C1, 2, 0, c);
  CHECK(c1 == std::vector<Rat>{1, 0, 0, 3});  // b_1 <= bar b_1: bar b_1 += 2
  std::vector<Rat> c2 = zero(TypeLabel::C1, 2);
  c2[0] = 1;  // b_1 = 1 = bar b_1 + 1
  auto c3 = binf_e(TypeLabel::C1, 2, 0, c2);
  CHECK(c3 == std::vector<Rat>{0, 0, 0, 1});
  std::vector<Rat> c4 = zero(TypeLabel::C1, 2);
  c4[0] = 4;
  auto c5 = binf_e(TypeLabel::C1, 2, 0, c4);
  CHECK(c5 == std::vector<Rat>{2, 0, 0, 0});

  // no closure constraint for the free families
  std::vector<Rat> d(binf_dim(TypeLabel::A2even, 2), Rat(3));
  CHECK(binf_valid(TypeLabel::A2even, 2, d));
  std::vector<Rat> dd(binf_dim(TypeLabel::A2odd, 3), Rat(3));
  CHECK_FALSE(binf_valid(TypeLabel::A2odd, 3, dd));
}

TEST_CASE("validity is preserved and operators invert, all families") {
  std::mt19937_64 rng(2026);
  for (TypeLabel t : kFamilies) {
    for (int n = min_rank(t); n <= min_rank(t) + 2; ++n) {
      CAPTURE(type_name(t));
      CAPTURE(n);
      for (int trial = 0; trial < 200; ++trial) {
        auto b = random_belt(t, n, rng);
        REQUIRE(binf_valid(t, n, b));
        for (int i = 0; i <= n; ++i) {
          auto up = binf_e(t, n, i, b);
          auto dn = binf_f(t, n, i, b);
          CHECK(binf_valid(t, n, up));
          CHECK(binf_valid(t, n, dn));
          CHECK(binf_f(t, n, i, up) == b);
          CHECK(binf_e(t, n, i, dn) == b);
          CHECK(binf_eps(t, n, i, up) == binf_eps(t, n, i, b) - 1);
          CHECK(binf_phi(t, n, i, dn) == binf_phi(t, n, i, b) - 1);
        }
      }
    }
  }
}

TEST_CASE("phi - eps matches the weight coefficient") {
  std::mt19937_64 rng(5);
  for (TypeLabel t : kFamilies) {
    int n = min_rank(t);
    CAPTURE(type_name(t));
    for (int trial = 0; trial < 300; ++trial) {
      auto b = random_belt(t, n, rng);
      auto w = binf_wt(t, n, b);
      for (int i = 0; i <= n; ++i)
        CHECK(binf_phi(t, n, i, b) - binf_eps(t, n, i, b) == w[i]);
    }
  }
}

TEST_CASE("json round trip") {
  std::mt19937_64 rng(9);
  auto b = random_belt(TypeLabel::D2, 2, rng);
  auto j = binf_to_json(TypeLabel::D2, 2, b);
  CHECK(j.at("type") == "D2");
  CHECK(j.at("rank") == 2);
  TypeLabel t;
  int n;
  auto back = binf_from_json(j, t, n);
  CHECK(t == TypeLabel::D2);
  CHECK(n == 2);
  CHECK(back == b);
}

TEST_CASE("membership rejects bad denominators and broken closure") {
  CHECK_FALSE(binf_valid(TypeLabel::A1, 2, {Rat(1, 2), Rat(1, 2), Rat(-1)}));
  CHECK_FALSE(binf_valid(TypeLabel::A1, 2, {1, 1, 1}));
  CHECK(binf_valid(TypeLabel::A1, 2, {2, -3, 1}));
  // C1 needs an even total
  CHECK_FALSE(binf_valid(TypeLabel::C1, 2, {1, 0, 0, 0}));
  CHECK(binf_valid(TypeLabel::C1, 2, {1, 1, 0, 0}));
  // half-integers only at the short slots
  CHECK_FALSE(binf_valid(TypeLabel::B1, 3, {Rat(1, 2), 0, 0, 0, 0, Rat(-1, 2)}));
  // b_n + bar b_n must stay integral
  CHECK_FALSE(binf_valid(TypeLabel::D2, 2, {0, Rat(1, 2), 0, 0}));
  CHECK(binf_valid(TypeLabel::D2, 2, {0, Rat(1, 2), Rat(1, 2), 0}));
}
