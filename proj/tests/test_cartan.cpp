#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "agc/cartan.hpp"

using namespace agc;

TEST_CASE("pinned small instances") {
  auto a = cartan_data(TypeLabel::A1, 2);
  CHECK(a.matrix == std::vector<std::vector<int>>{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
  CHECK(a.marks == std::vector<int>{1, 1, 1});
  CHECK(a.comarks == std::vector<int>{1, 1, 1});
  CHECK(a.word_w1 == std::vector<int>{2, 1});
  CHECK(a.sigma == std::vector<int>{1, 2, 0});

  auto b = cartan_data(TypeLabel::B1, 3);
  CHECK(b.a(3, 2) == -2);
  CHECK(b.a(2, 3) == -1);
  CHECK(b.a(0, 2) == -1);
  CHECK(b.a(0, 1) == 0);
  CHECK(b.marks == std::vector<int>{1, 1, 2, 2});
  CHECK(b.comarks == std::vector<int>{1, 1, 2, 1});
  CHECK(b.word_w1 == std::vector<int>{1, 2, 3, 2, 1});

  auto c = cartan_data(TypeLabel::C1, 2);
  CHECK(c.word_w1 == std::vector<int>{0, 1, 2, 1});
  CHECK(c.iota == std::vector<int>{0, 1, 2});
  CHECK(c.sigma == std::vector<int>{2, 1, 0});
  CHECK(c.a(1, 0) == -2);
  CHECK(c.a(0, 1) == -1);

  auto d = cartan_data(TypeLabel::A2dag, 2);
  CHECK(d.word_w2 == std::vector<int>{2, 1, 0, 1});
  CHECK(d.word_w1 == std::vector<int>{0, 1, 2, 1});
  CHECK(d.a(1, 0) == -2);
  CHECK(d.a(2, 1) == -2);
  CHECK(d.a(0, 1) == -1);

  auto dd = cartan_data(TypeLabel::D1, 4);
  CHECK(dd.word_w1 == std::vector<int>{1, 2, 3, 4, 2, 1});
  CHECK(dd.a(2, 4) == -1);
  CHECK(dd.a(3, 4) == 0);
  CHECK(dd.iota == std::vector<int>{1, 0, 2, 4, 3});
}

static bool is_perm(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || x >= (int)p.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

TEST_CASE("structural invariants across types and ranks") {
  for (TypeLabel t : kAllTypes) {
    for (int n = min_rank(t); n <= min_rank(t) + 3; ++n) {
      CAPTURE(type_name(t));
      CAPTURE(n);
      auto cd = cartan_data(t, n);
      REQUIRE((int)cd.matrix.size() == n + 1);

      // marks span the radical on the right, comarks on the left
      for (int i = 0; i <= n; ++i) {
        int row = 0, col = 0;
        for (int j = 0; j <= n; ++j) {
          row += cd.a(i, j) * cd.marks[j];
          col += cd.comarks[j] * cd.a(j, i);
        }
        CHECK(row == 0);
        CHECK(col == 0);
      }

      // diagonal 2, off-diagonal nonpositive, a_ij=0 iff a_ji=0
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
          if (i == j) {
            CHECK(cd.a(i, j) == 2);
          } else {
            CHECK(cd.a(i, j) <= 0);
            CHECK((cd.a(i, j) == 0) == (cd.a(j, i) == 0));
          }
        }

      CHECK(is_perm(cd.sigma));
      CHECK(is_perm(cd.iota));
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
          CHECK(cd.a(cd.sigma[i], cd.sigma[j]) == cd.a(i, j));
          CHECK(cd.a(cd.iota[i], cd.iota[j]) == cd.a(i, j));
        }

      // duality: involutive on labels, transposes the matrix, swaps marks
      auto dual = cartan_data(cd.dual, n);
      CHECK(langlands_dual(cd.dual) == t);
      CHECK(min_rank(cd.dual) == min_rank(t));
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) CHECK(dual.a(i, j) == cd.a(j, i));
      CHECK(dual.marks == cd.comarks);
      CHECK(dual.comarks == cd.marks);

      for (int i : cd.word_w1) {
        CHECK(i >= 0);
        CHECK(i <= n);
      }
      if (t == TypeLabel::A2dag) {
        CHECK(cd.word_w2.size() == cd.word_w1.size());
      } else {
        CHECK(cd.word_w2.empty());
      }
    }
  }
}

TEST_CASE("rank gate") {
  CHECK_THROWS_AS(cartan_data(TypeLabel::A1, 1), RankError);
  CHECK_THROWS_AS(cartan_data(TypeLabel::B1, 2), RankError);
  CHECK_THROWS_AS(cartan_data(TypeLabel::D1, 3), RankError);
  CHECK_THROWS_AS(cartan_data(TypeLabel::A2odd, 2), RankError);
  CHECK_NOTHROW(cartan_data(TypeLabel::D2, 2));
}

TEST_CASE("type label round trip") {
  for (TypeLabel t : kAllTypes) CHECK(type_from_name(type_name(t)) == t);
  CHECK_THROWS_AS(type_from_name("Z9"), Error);
}
