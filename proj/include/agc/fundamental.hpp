#pragma once

// Labeled bases of the level-zero fundamental modules: weights on the
// fundamental-weight basis and the lowering-operator tables, plus the
// generic one-parameter subgroup action
//   Y_i(c) = exp(c^{-1} f_i) . alpha_i^vee(c)
// templated over the coefficient ring (exact rationals or subtraction-free
// expressions).  The lowering operators are nilpotent on these modules, so
// the exponential truncates by itself.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "agc/cartan.hpp"
#include "agc/posrat.hpp"
#include "agc/rational.hpp"

namespace agc {

// Basis label: i (unbarred), -i (barred), 0, or the extra label "phi".
struct FL {
  int v = 0;
  bool is_phi = false;

  static FL un(int i) { return {i, false}; }
  static FL bar(int i) { return {-i, false}; }
  static FL zero() { return {0, false}; }
  static FL phi() { return {0, true}; }

  bool operator==(const FL&) const = default;
  std::string str() const {
    if (is_phi) return "phi";
    if (v < 0) return std::to_string(-v) + "b";
    return std::to_string(v);
  }
};

struct FundStep {
  long long coeff;
  FL to;
};

class FundBasis {
 public:
  FundBasis(TypeLabel t, int n);  // A2even carries no chart and is rejected

  TypeLabel type() const { return type_; }
  int rank() const { return n_; }
  int dim() const { return (int)labels_.size(); }
  const std::vector<FL>& labels() const { return labels_; }
  int index_of(FL l) const;
  const std::vector<long long>& wt(int idx) const { return wts_[idx]; }
  std::optional<FundStep> f(int i, int idx) const;

 private:
  TypeLabel type_;
  int n_;
  std::vector<FL> labels_;
  std::vector<std::vector<long long>> wts_;
  // steps_[i][idx] = action of f_i on basis vector idx (coeff 0 = none)
  std::vector<std::vector<FundStep>> steps_;
};

struct RatRing {
  using Elt = Rat;
  static Elt zero() { return Rat(0); }
  static Elt one() { return Rat(1); }
  static bool is_zero(const Elt& e) { return e == 0; }
  static Elt add(const Elt& a, const Elt& b) { return a + b; }
  static Elt mul(const Elt& a, const Elt& b) { return a * b; }
  static Elt scale(const Elt& a, const Rat& r) { return a * r; }
  static Elt cpow(const Elt& c, long k) { return rat_pow(c, k); }
};

// Zero is the empty handle; all stored expressions are subtraction-free.
struct ExprRing {
  using Elt = Expr;
  static Elt zero() { return Expr(); }
  static Elt one() { return Expr::constant(1); }
  static bool is_zero(const Elt& e) { return !e.valid(); }
  static Elt add(const Elt& a, const Elt& b) {
    if (is_zero(a)) return b;
    if (is_zero(b)) return a;
    return a + b;
  }
  static Elt mul(const Elt& a, const Elt& b) {
    if (is_zero(a) || is_zero(b)) return zero();
    return a * b;
  }
  static Elt scale(const Elt& a, const Rat& r) {
    if (r == 0 || is_zero(a)) return zero();
    return Expr::constant(r) * a;
  }
  static Elt cpow(const Elt& c, long k) {
    if (k == 0) return one();
    if (k > 0) return Expr::power(c, k);
    return Expr::quotient(one(), Expr::power(c, -k));
  }
};

template <class Ring>
using FundVec = std::vector<typename Ring::Elt>;

// Y_i(c) v
template <class Ring>
FundVec<Ring> apply_y(const FundBasis& fb, int i, const typename Ring::Elt& c,
                      const FundVec<Ring>& v) {
  FundVec<Ring> out(fb.dim(), Ring::zero());
  for (int idx = 0; idx < fb.dim(); ++idx)
    if (!Ring::is_zero(v[idx]))
      out[idx] = Ring::mul(v[idx], Ring::cpow(c, fb.wt(idx)[i]));

  FundVec<Ring> cur = out;
  long long fact = 1;
  for (int k = 1;; ++k) {
    FundVec<Ring> nxt(fb.dim(), Ring::zero());
    bool any = false;
    for (int idx = 0; idx < fb.dim(); ++idx) {
      if (Ring::is_zero(cur[idx])) continue;
      if (auto st = fb.f(i, idx)) {
        int to = fb.index_of(st->to);
        nxt[to] = Ring::add(nxt[to], Ring::scale(cur[idx], Rat(st->coeff)));
        any = true;
      }
    }
    if (!any) break;
    fact *= k;
    auto shift = Ring::cpow(c, -k);
    for (int idx = 0; idx < fb.dim(); ++idx)
      if (!Ring::is_zero(nxt[idx]))
        out[idx] = Ring::add(
            out[idx],
            Ring::scale(Ring::mul(nxt[idx], shift), Rat(1, fact)));
    cur = std::move(nxt);
  }
  return out;
}

// Y_{w[0]}(args[0]) ... Y_{w[k-1]}(args[k-1]) applied to the start vector.
template <class Ring>
FundVec<Ring> word_product(const FundBasis& fb, const std::vector<int>& word,
                           const std::vector<typename Ring::Elt>& args,
                           FL start) {
  if (word.size() != args.size()) throw Error("word/argument length mismatch");
  FundVec<Ring> v(fb.dim(), Ring::zero());
  v[fb.index_of(start)] = Ring::one();
  for (std::size_t m = word.size(); m-- > 0;)
    v = apply_y<Ring>(fb, word[m], args[m], v);
  return v;
}

}  // namespace agc
