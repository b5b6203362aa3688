#pragma once

// Piecewise-linear (max-plus) expressions and the structural
// ultra-discretization of subtraction-free expressions:
//   product -> sum, quotient -> difference, sum -> max,
//   k-th power -> scale by k, positive constant -> 0.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "agc/posrat.hpp"

namespace agc {

class TropExpr;

struct TropNode {
  enum class Kind { Var, Zero, Add, Neg, Scale, Max };
  Kind kind;
  std::string name;           // Var
  std::vector<TropExpr> kids; // Add/Max: 2+, Neg/Scale: 1
  long coeff = 0;             // Scale
};

class TropExpr {
 public:
  TropExpr() = default;

  static TropExpr var(const std::string& name);
  static TropExpr zero();
  static TropExpr add(std::vector<TropExpr> kids);
  static TropExpr neg(const TropExpr& a);
  static TropExpr scale(long k, const TropExpr& a);
  static TropExpr max(std::vector<TropExpr> kids);

  bool valid() const { return node_ != nullptr; }
  const TropNode& node() const { return *node_; }
  const TropNode* raw() const { return node_.get(); }

  long long teval(const std::map<std::string, long long>& env) const;
  std::string str() const;

 private:
  explicit TropExpr(std::shared_ptr<const TropNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const TropNode> node_;
};

TropExpr tropicalize(const Expr& e);

inline long long teval(const TropExpr& e,
                       const std::map<std::string, long long>& env) {
  return e.teval(env);
}

}  // namespace agc
