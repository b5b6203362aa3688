#pragma once

// Subtraction-free rational expressions over named variables: immutable
// shared DAG nodes, exact evaluation, substitution, and a decision
// procedure for equality (random-point prefilter that can only refute,
// then exact cross-multiplied expansion for the verdict).

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "agc/errors.hpp"
#include "agc/rational.hpp"

namespace agc {

class Expr;

struct ExprNode {
  enum class Kind { Var, Const, Sum, Product, Quotient, Power };
  Kind kind;
  std::string name;        // Var
  Rat value;               // Const, strictly positive
  std::vector<Expr> kids;  // Sum/Product: 2+, Quotient: {num, den}, Power: {base}
  long exponent = 0;       // Power, >= 2 after normalization
};

class Expr {
 public:
  Expr() = default;  // empty handle; using it is a programming error

  static Expr var(const std::string& name);
  static Expr constant(const Rat& c);  // throws Error unless c > 0
  static Expr sum(std::vector<Expr> kids);
  static Expr product(std::vector<Expr> kids);
  static Expr quotient(const Expr& num, const Expr& den);
  static Expr power(const Expr& base, long k);  // throws Error unless k >= 1

  bool valid() const { return node_ != nullptr; }
  const ExprNode& node() const { return *node_; }
  const ExprNode* raw() const { return node_.get(); }

  bool is_const() const { return node_->kind == ExprNode::Kind::Const; }
  bool is_one() const { return is_const() && node_->value == 1; }

  Rat eval(const std::map<std::string, Rat>& env) const;
  Expr subst(const std::map<std::string, Expr>& env) const;
  std::set<std::string> vars() const;
  std::string str() const;

  friend Expr operator+(const Expr& a, const Expr& b) { return sum({a, b}); }
  friend Expr operator*(const Expr& a, const Expr& b) { return product({a, b}); }
  friend Expr operator/(const Expr& a, const Expr& b) { return quotient(a, b); }

 private:
  explicit Expr(std::shared_ptr<const ExprNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const ExprNode> node_;
};

Expr parse(const std::string& text);

inline Rat eval(const Expr& e, const std::map<std::string, Rat>& env) {
  return e.eval(env);
}
inline Expr compose(const Expr& e, const std::map<std::string, Expr>& env) {
  return e.subst(env);
}

// Multivariate polynomial with positive coefficients: exponent vector
// (aligned to an agreed variable order) -> coefficient.
struct SparsePoly {
  std::map<std::vector<int>, Rat> terms;

  bool operator==(const SparsePoly& o) const { return terms == o.terms; }
};

struct SparseFraction {
  SparsePoly num, den;
};

// Expands e into num/den over var_order.  Every intermediate polynomial is
// kept under term_cap terms (ExpansionTooLarge otherwise).  No polynomial
// gcd is attempted; only monomial and scalar content are stripped.
SparseFraction expand(const Expr& e, const std::vector<std::string>& var_order,
                      std::size_t term_cap);

struct EqualOptions {
  std::size_t term_cap = 1'000'000;
  int prefilter_trials = 8;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

// Exact equality as rational functions.  The random prefilter can only
// short-circuit a "false"; "true" always comes from exact expansion.  The
// verdict expands both sides in factored form over a shared table of atom
// polynomials, cancels syntactically identical atoms, and cross-multiplies
// the residue, so composed substitution maps with large common factors
// stay under the term cap; no polynomial gcd is ever attempted.
bool equal(const Expr& a, const Expr& b, const EqualOptions& opt = {});

}  // namespace agc
