#include "agc/cartan.hpp"

#include <algorithm>
#include <numeric>

namespace agc {

std::string type_name(TypeLabel t) {
  switch (t) {
    case TypeLabel::A1: return "A1";
    case TypeLabel::B1: return "B1";
    case TypeLabel::C1: return "C1";
    case TypeLabel::D1: return "D1";
    case TypeLabel::A2odd: return "A2odd";
    case TypeLabel::D2: return "D2";
    case TypeLabel::A2even: return "A2even";
    case TypeLabel::A2dag: return "A2dag";
  }
  throw Error("unreachable type label");
}

TypeLabel type_from_name(const std::string& s) {
  for (TypeLabel t : kAllTypes)
    if (type_name(t) == s) return t;
  throw Error("unknown type label '" + s + "'");
}

int min_rank(TypeLabel t) {
  switch (t) {
    case TypeLabel::A1: return 2;
    case TypeLabel::B1: return 3;
    case TypeLabel::C1: return 2;
    case TypeLabel::D1: return 4;
    case TypeLabel::A2odd: return 3;
    case TypeLabel::D2: return 2;
    case TypeLabel::A2even: return 2;
    case TypeLabel::A2dag: return 2;
  }
  throw Error("unreachable type label");
}

TypeLabel langlands_dual(TypeLabel t) {
  switch (t) {
    case TypeLabel::A1: return TypeLabel::A1;
    case TypeLabel::B1: return TypeLabel::A2odd;
    case TypeLabel::A2odd: return TypeLabel::B1;
    case TypeLabel::C1: return TypeLabel::D2;
    case TypeLabel::D2: return TypeLabel::C1;
    case TypeLabel::D1: return TypeLabel::D1;
    case TypeLabel::A2even: return TypeLabel::A2dag;
    case TypeLabel::A2dag: return TypeLabel::A2even;
  }
  throw Error("unreachable type label");
}

namespace {

std::vector<std::vector<int>> blank_matrix(int n) {
  std::vector<std::vector<int>> m(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 0; i <= n; ++i) m[i][i] = 2;
  return m;
}

void link(std::vector<std::vector<int>>& m, int i, int j, int aij = -1,
          int aji = -1) {
  m[i][j] = aij;
  m[j][i] = aji;
}

std::vector<int> up_down(int n, int top_hi, int down_from) {
  // 1,2,...,top_hi followed by down_from,down_from-1,...,1
  std::vector<int> w;
  for (int i = 1; i <= top_hi; ++i) w.push_back(i);
  for (int i = down_from; i >= 1; --i) w.push_back(i);
  (void)n;
  return w;
}

std::vector<int> identity_perm(int n) {
  std::vector<int> p(n + 1);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

CartanData cartan_data(TypeLabel t, int n) {
  if (n < min_rank(t))
    throw RankError("type " + type_name(t) + " requires rank >= " +
                    std::to_string(min_rank(t)) + ", got " + std::to_string(n));

  CartanData cd;
  cd.type = t;
  cd.n = n;
  cd.index_set.resize(n + 1);
  std::iota(cd.index_set.begin(), cd.index_set.end(), 0);
  cd.sigma = identity_perm(n);
  cd.iota = identity_perm(n);
  cd.dual = langlands_dual(t);
  auto& m = cd.matrix;
  m = blank_matrix(n);

  switch (t) {
    case TypeLabel::A1: {
      // cyclic diagram on n+1 nodes
      for (int i = 0; i <= n; ++i) link(m, i, (i + 1) % (n + 1));
      cd.marks.assign(n + 1, 1);
      cd.comarks.assign(n + 1, 1);
      for (int i = 0; i <= n; ++i) cd.sigma[i] = (i + 1) % (n + 1);
      cd.iota = cd.sigma;
      for (int i = n; i >= 1; --i) cd.word_w1.push_back(i);
      break;
    }
    case TypeLabel::B1: {
      // fork 0,1 -> 2, chain to n, short root at n
      link(m, 0, 2);
      for (int i = 1; i < n; ++i) link(m, i, i + 1);
      m[n][n - 1] = -2;
      cd.marks.assign(n + 1, 2);
      cd.marks[0] = cd.marks[1] = 1;
      cd.comarks = cd.marks;
      cd.comarks[n] = 1;
      std::swap(cd.sigma[0], cd.sigma[1]);
      cd.iota = cd.sigma;
      cd.word_w1 = up_down(n, n, n - 1);
      break;
    }
    case TypeLabel::C1: {
      // chain 0..n, long roots at the two ends
      for (int i = 0; i < n; ++i) link(m, i, i + 1);
      m[1][0] = -2;
      m[n - 1][n] = -2;
      cd.marks.assign(n + 1, 2);
      cd.marks[0] = cd.marks[n] = 1;
      cd.comarks.assign(n + 1, 1);
      for (int i = 0; i <= n; ++i) cd.sigma[i] = n - i;
      for (int i = 0; i <= n; ++i) cd.word_w1.push_back(i);
      for (int i = n - 1; i >= 1; --i) cd.word_w1.push_back(i);
      break;
    }
    case TypeLabel::D1: {
      // forks at both ends: 0,1 -> 2 and n-1,n -> n-2
      link(m, 0, 2);
      for (int i = 1; i + 1 <= n - 1; ++i) link(m, i, i + 1);
      link(m, n - 2, n);
      cd.marks.assign(n + 1, 2);
      cd.marks[0] = cd.marks[1] = cd.marks[n - 1] = cd.marks[n] = 1;
      cd.comarks = cd.marks;
      std::swap(cd.sigma[0], cd.sigma[1]);
      cd.iota = cd.sigma;
      std::swap(cd.iota[n - 1], cd.iota[n]);
      cd.word_w1 = up_down(n, n, n - 2);
      break;
    }
    case TypeLabel::A2odd: {
      // fork 0,1 -> 2, chain to n, long root at n
      link(m, 0, 2);
      for (int i = 1; i < n; ++i) link(m, i, i + 1);
      m[n - 1][n] = -2;
      cd.marks.assign(n + 1, 2);
      cd.marks[0] = cd.marks[1] = cd.marks[n] = 1;
      cd.comarks.assign(n + 1, 2);
      cd.comarks[0] = cd.comarks[1] = 1;
      std::swap(cd.sigma[0], cd.sigma[1]);
      cd.iota = cd.sigma;
      cd.word_w1 = up_down(n, n, n - 1);
      break;
    }
    case TypeLabel::D2: {
      // chain 0..n, short roots at the two ends
      for (int i = 0; i < n; ++i) link(m, i, i + 1);
      m[0][1] = -2;
      m[n][n - 1] = -2;
      cd.marks.assign(n + 1, 1);
      cd.comarks.assign(n + 1, 2);
      cd.comarks[0] = cd.comarks[n] = 1;
      for (int i = 0; i <= n; ++i) cd.sigma[i] = n - i;
      for (int i = 0; i <= n; ++i) cd.word_w1.push_back(i);
      for (int i = n - 1; i >= 1; --i) cd.word_w1.push_back(i);
      break;
    }
    case TypeLabel::A2even: {
      for (int i = 0; i < n; ++i) link(m, i, i + 1);
      m[0][1] = -2;
      m[n - 1][n] = -2;
      cd.marks.assign(n + 1, 2);
      cd.marks[n] = 1;
      cd.comarks.assign(n + 1, 2);
      cd.comarks[0] = 1;
      // no diagram automorphism; the word below is reduced (reducedness is a
      // property of the Coxeter system, which this type shares with its dual)
      for (int i = 0; i <= n; ++i) cd.word_w1.push_back(i);
      for (int i = n - 1; i >= 1; --i) cd.word_w1.push_back(i);
      break;
    }
    case TypeLabel::A2dag: {
      for (int i = 0; i < n; ++i) link(m, i, i + 1);
      m[1][0] = -2;
      m[n][n - 1] = -2;
      cd.marks.assign(n + 1, 2);
      cd.marks[0] = 1;
      cd.comarks.assign(n + 1, 2);
      cd.comarks[n] = 1;
      for (int i = 0; i <= n; ++i) cd.word_w1.push_back(i);
      for (int i = n - 1; i >= 1; --i) cd.word_w1.push_back(i);
      for (int i = n; i >= 1; --i) cd.word_w2.push_back(i);
      for (int i = 0; i <= n - 1; ++i) cd.word_w2.push_back(i);
      break;
    }
  }
  return cd;
}

}  // namespace agc
