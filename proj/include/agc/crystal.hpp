#pragma once

// Abstract crystal interface: elements (possibly nested tensor words),
// operator records, the tensor product rule, the one-point crystal
// T_lambda, axiom checking against given Cartan data, and DOT export.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "agc/cartan.hpp"
#include "agc/extint.hpp"
#include "agc/rational.hpp"
#include "agc/report.hpp"

namespace agc {

struct Elem {
  std::vector<Rat> coords;  // leaf payload (used when parts is empty)
  std::vector<Elem> parts;  // tensor factors, left to right

  bool is_leaf() const { return parts.empty(); }
  static Elem leaf(std::vector<Rat> c) { return Elem{std::move(c), {}}; }
  static Elem tensor(std::vector<Elem> p) { return Elem{{}, std::move(p)}; }

  bool operator==(const Elem& o) const;
  bool operator<(const Elem& o) const;
  std::string str() const;
};

// A crystal with index set {0,...,num_idx-1}.  wt reports coefficients on
// the fundamental weights; e/f return nullopt when the operator is
// undefined on the element.
struct CrystalOps {
  int num_idx = 0;
  std::function<std::vector<long long>(const Elem&)> wt;
  std::function<ExtInt(int, const Elem&)> eps;
  std::function<ExtInt(int, const Elem&)> phi;
  std::function<std::optional<Elem>(int, const Elem&)> e;
  std::function<std::optional<Elem>(int, const Elem&)> f;
  std::function<bool(const Elem&)> validate;
};

// One-point crystal: eps = phi = -inf, e = f = undefined, wt = lambda.
CrystalOps tlambda_ops(std::vector<long long> lambda);

// Tensor product; elements are Elem::tensor({a, b}) with a from A, b from B.
CrystalOps tensor_ops(const CrystalOps& A, const CrystalOps& B);

// Checks, for every supplied element and index: the phi/eps/wt relation,
// mutual inversion and statistic shifts of e and f, and the weight shift
// by the i-th column of the Cartan matrix.
Report check_axioms(const CrystalOps& ops, const CartanData& cd,
                    const std::vector<Elem>& sample);

// f-edge graph restricted to elements within the given e/f-radius of the
// seeds; deterministic node and edge order.
std::string graph_dot(const CrystalOps& ops, const std::vector<Elem>& seeds,
                      int radius);

}  // namespace agc
