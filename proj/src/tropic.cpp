#include "agc/tropic.hpp"

#include <algorithm>
#include <unordered_map>

namespace agc {

namespace {

std::shared_ptr<const TropNode> make_node(TropNode n) {
  return std::make_shared<const TropNode>(std::move(n));
}

}  // namespace

TropExpr TropExpr::var(const std::string& name) {
  TropNode n;
  n.kind = TropNode::Kind::Var;
  n.name = name;
  return TropExpr(make_node(std::move(n)));
}

TropExpr TropExpr::zero() {
  TropNode n;
  n.kind = TropNode::Kind::Zero;
  return TropExpr(make_node(std::move(n)));
}

TropExpr TropExpr::add(std::vector<TropExpr> kids) {
  std::vector<TropExpr> flat;
  for (auto& k : kids) {
    if (!k.valid()) throw Error("empty tropical handle in add");
    if (k.node().kind == TropNode::Kind::Add)
      for (auto& g : k.node().kids) flat.push_back(g);
    else if (k.node().kind != TropNode::Kind::Zero)
      flat.push_back(k);
  }
  if (flat.empty()) return zero();
  if (flat.size() == 1) return flat[0];
  TropNode n;
  n.kind = TropNode::Kind::Add;
  n.kids = std::move(flat);
  return TropExpr(make_node(std::move(n)));
}

TropExpr TropExpr::neg(const TropExpr& a) {
  if (!a.valid()) throw Error("empty tropical handle in neg");
  if (a.node().kind == TropNode::Kind::Zero) return a;
  if (a.node().kind == TropNode::Kind::Neg) return a.node().kids[0];
  TropNode n;
  n.kind = TropNode::Kind::Neg;
  n.kids = {a};
  return TropExpr(make_node(std::move(n)));
}

TropExpr TropExpr::scale(long k, const TropExpr& a) {
  if (!a.valid()) throw Error("empty tropical handle in scale");
  if (k == 1) return a;
  if (a.node().kind == TropNode::Kind::Zero) return a;
  TropNode n;
  n.kind = TropNode::Kind::Scale;
  n.coeff = k;
  n.kids = {a};
  return TropExpr(make_node(std::move(n)));
}

TropExpr TropExpr::max(std::vector<TropExpr> kids) {
  std::vector<TropExpr> flat;
  for (auto& k : kids) {
    if (!k.valid()) throw Error("empty tropical handle in max");
    if (k.node().kind == TropNode::Kind::Max)
      for (auto& g : k.node().kids) flat.push_back(g);
    else
      flat.push_back(k);
  }
  if (flat.empty()) throw Error("empty max");
  if (flat.size() == 1) return flat[0];
  TropNode n;
  n.kind = TropNode::Kind::Max;
  n.kids = std::move(flat);
  return TropExpr(make_node(std::move(n)));
}

namespace {

long long teval_rec(const TropNode* n,
                    const std::map<std::string, long long>& env,
                    std::unordered_map<const TropNode*, long long>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  long long out = 0;
  switch (n->kind) {
    case TropNode::Kind::Var: {
      auto v = env.find(n->name);
      if (v == env.end()) throw MissingVariable(n->name);
      out = v->second;
      break;
    }
    case TropNode::Kind::Zero:
      out = 0;
      break;
    case TropNode::Kind::Add:
      for (auto& k : n->kids) out += teval_rec(k.raw(), env, memo);
      break;
    case TropNode::Kind::Neg:
      out = -teval_rec(n->kids[0].raw(), env, memo);
      break;
    case TropNode::Kind::Scale:
      out = n->coeff * teval_rec(n->kids[0].raw(), env, memo);
      break;
    case TropNode::Kind::Max: {
      bool first = true;
      for (auto& k : n->kids) {
        long long v = teval_rec(k.raw(), env, memo);
        out = first ? v : std::max(out, v);
        first = false;
      }
      break;
    }
  }
  memo.emplace(n, out);
  return out;
}

// precedence: add 1, neg/scale 2, atom/max-call 3
int prec(const TropNode* n) {
  switch (n->kind) {
    case TropNode::Kind::Add: return 1;
    case TropNode::Kind::Neg:
    case TropNode::Kind::Scale: return 2;
    default: return 3;
  }
}

void str_rec(const TropNode* n, int min_prec, std::string& out) {
  bool parens = prec(n) < min_prec;
  if (parens) out += '(';
  switch (n->kind) {
    case TropNode::Kind::Var:
      out += n->name;
      break;
    case TropNode::Kind::Zero:
      out += '0';
      break;
    case TropNode::Kind::Add:
      for (std::size_t i = 0; i < n->kids.size(); ++i) {
        const TropNode* k = n->kids[i].raw();
        if (i && k->kind == TropNode::Kind::Neg) {
          out += " - ";
          str_rec(k->kids[0].raw(), 2, out);
        } else {
          if (i) out += " + ";
          str_rec(k, 2, out);
        }
      }
      break;
    case TropNode::Kind::Neg:
      out += '-';
      str_rec(n->kids[0].raw(), 3, out);
      break;
    case TropNode::Kind::Scale:
      out += std::to_string(n->coeff);
      out += '*';
      str_rec(n->kids[0].raw(), 3, out);
      break;
    case TropNode::Kind::Max:
      out += "max(";
      for (std::size_t i = 0; i < n->kids.size(); ++i) {
        if (i) out += ", ";
        str_rec(n->kids[i].raw(), 1, out);
      }
      out += ')';
      break;
  }
  if (parens) out += ')';
}

TropExpr trop_rec(const ExprNode* n,
                  std::unordered_map<const ExprNode*, TropExpr>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  TropExpr out;
  switch (n->kind) {
    case ExprNode::Kind::Var:
      out = TropExpr::var(n->name);
      break;
    case ExprNode::Kind::Const:
      out = TropExpr::zero();
      break;
    case ExprNode::Kind::Sum: {
      std::vector<TropExpr> kids;
      for (auto& k : n->kids) kids.push_back(trop_rec(k.raw(), memo));
      out = TropExpr::max(std::move(kids));
      break;
    }
    case ExprNode::Kind::Product: {
      std::vector<TropExpr> kids;
      for (auto& k : n->kids) kids.push_back(trop_rec(k.raw(), memo));
      out = TropExpr::add(std::move(kids));
      break;
    }
    case ExprNode::Kind::Quotient:
      out = TropExpr::add({trop_rec(n->kids[0].raw(), memo),
                           TropExpr::neg(trop_rec(n->kids[1].raw(), memo))});
      break;
    case ExprNode::Kind::Power:
      out = TropExpr::scale(n->exponent, trop_rec(n->kids[0].raw(), memo));
      break;
  }
  memo.emplace(n, out);
  return out;
}

}  // namespace

long long TropExpr::teval(const std::map<std::string, long long>& env) const {
  std::unordered_map<const TropNode*, long long> memo;
  return teval_rec(raw(), env, memo);
}

std::string TropExpr::str() const {
  std::string out;
  str_rec(raw(), 0, out);
  return out;
}

TropExpr tropicalize(const Expr& e) {
  std::unordered_map<const ExprNode*, TropExpr> memo;
  return trop_rec(e.raw(), memo);
}

}  // namespace agc
