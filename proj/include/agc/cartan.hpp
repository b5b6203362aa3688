#pragma once

// Affine Cartan data for the eight supported type labels, together with
// the diagram automorphism sigma, the twist permutation iota, the
// translation word(s) driving the unipotent product, and Langlands duals.

#include <string>
#include <vector>

#include "agc/errors.hpp"

namespace agc {

// A1    = A_n^(1)   (n >= 2)
// B1    = B_n^(1)   (n >= 3)
// C1    = C_n^(1)   (n >= 2)
// D1    = D_n^(1)   (n >= 4)
// A2odd = A_{2n-1}^(2)  (n >= 3)
// D2    = D_{n+1}^(2)   (n >= 2)
// A2even= A_{2n}^(2)    (n >= 2)
// A2dag = A_{2n}^(2)-dagger, the transposed-diagram variant (n >= 2)
enum class TypeLabel { A1, B1, C1, D1, A2odd, D2, A2even, A2dag };

std::string type_name(TypeLabel t);
TypeLabel type_from_name(const std::string& s);
int min_rank(TypeLabel t);
TypeLabel langlands_dual(TypeLabel t);

constexpr TypeLabel kAllTypes[] = {
    TypeLabel::A1,    TypeLabel::B1, TypeLabel::C1,     TypeLabel::D1,
    TypeLabel::A2odd, TypeLabel::D2, TypeLabel::A2even, TypeLabel::A2dag};

struct CartanData {
  TypeLabel type;
  int n = 0;                             // index set is {0,...,n}
  std::vector<int> index_set;
  std::vector<std::vector<int>> matrix;  // (n+1) x (n+1)
  std::vector<int> marks;                // right null vector, normalized
  std::vector<int> comarks;              // left null vector, normalized
  std::vector<int> sigma;                // diagram automorphism (identity if none)
  std::vector<int> iota;                 // twist used on the second leg of the word
  std::vector<int> word_w1;
  std::vector<int> word_w2;              // nonempty only for A2dag
  TypeLabel dual;

  int a(int i, int j) const { return matrix[i][j]; }
  int num_indices() const { return n + 1; }
};

// Throws RankError when n is below the minimum for t.
CartanData cartan_data(TypeLabel t, int n);

}  // namespace agc
