#include "agc/posrat.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <unordered_map>

namespace agc {

namespace {

std::shared_ptr<const ExprNode> make_node(ExprNode n) {
  return std::make_shared<const ExprNode>(std::move(n));
}

}  // namespace

Expr Expr::var(const std::string& name) {
  ExprNode n;
  n.kind = ExprNode::Kind::Var;
  n.name = name;
  return Expr(make_node(std::move(n)));
}

Expr Expr::constant(const Rat& c) {
  if (c <= 0) throw Error("constants must be strictly positive, got " + rat_str(c));
  ExprNode n;
  n.kind = ExprNode::Kind::Const;
  n.value = c;
  return Expr(make_node(std::move(n)));
}

Expr Expr::sum(std::vector<Expr> kids) {
  std::vector<Expr> flat;
  Rat c(0);
  for (auto& k : kids) {
    if (!k.valid()) throw Error("empty expression handle in sum");
    if (k.node().kind == ExprNode::Kind::Sum) {
      for (auto& g : k.node().kids) {
        if (g.is_const())
          c += g.node().value;
        else
          flat.push_back(g);
      }
    } else if (k.is_const()) {
      c += k.node().value;
    } else {
      flat.push_back(k);
    }
  }
  if (c != 0) flat.push_back(constant(c));
  if (flat.empty()) throw Error("empty sum");
  if (flat.size() == 1) return flat[0];
  ExprNode n;
  n.kind = ExprNode::Kind::Sum;
  n.kids = std::move(flat);
  return Expr(make_node(std::move(n)));
}

Expr Expr::product(std::vector<Expr> kids) {
  std::vector<Expr> flat;
  Rat c(1);
  for (auto& k : kids) {
    if (!k.valid()) throw Error("empty expression handle in product");
    if (k.node().kind == ExprNode::Kind::Product) {
      for (auto& g : k.node().kids) {
        if (g.is_const())
          c *= g.node().value;
        else
          flat.push_back(g);
      }
    } else if (k.is_const()) {
      c *= k.node().value;
    } else {
      flat.push_back(k);
    }
  }
  if (flat.empty()) return constant(c);
  if (c != 1) flat.insert(flat.begin(), constant(c));
  if (flat.size() == 1) return flat[0];
  ExprNode n;
  n.kind = ExprNode::Kind::Product;
  n.kids = std::move(flat);
  return Expr(make_node(std::move(n)));
}

Expr Expr::quotient(const Expr& num, const Expr& den) {
  if (!num.valid() || !den.valid()) throw Error("empty expression handle in quotient");
  if (den.is_one()) return num;
  if (num.is_const() && den.is_const())
    return constant(num.node().value / den.node().value);
  if (den.node().kind == ExprNode::Kind::Quotient)
    return quotient(product({num, den.node().kids[1]}), den.node().kids[0]);
  if (num.node().kind == ExprNode::Kind::Quotient)
    return quotient(num.node().kids[0], product({num.node().kids[1], den}));
  ExprNode n;
  n.kind = ExprNode::Kind::Quotient;
  n.kids = {num, den};
  return Expr(make_node(std::move(n)));
}

Expr Expr::power(const Expr& base, long k) {
  if (!base.valid()) throw Error("empty expression handle in power");
  if (k < 1) throw Error("exponent must be a positive integer");
  if (k == 1) return base;
  if (base.is_const()) return constant(rat_pow(base.node().value, k));
  if (base.node().kind == ExprNode::Kind::Power) {
    long k2 = base.node().exponent;
    if (k > (1L << 30) / k2) throw Error("exponent overflow");
    return power(base.node().kids[0], k * k2);
  }
  if (base.node().kind == ExprNode::Kind::Quotient)
    return quotient(power(base.node().kids[0], k), power(base.node().kids[1], k));
  ExprNode n;
  n.kind = ExprNode::Kind::Power;
  n.kids = {base};
  n.exponent = k;
  return Expr(make_node(std::move(n)));
}

namespace {

Rat eval_rec(const ExprNode* n, const std::map<std::string, Rat>& env,
             std::unordered_map<const ExprNode*, Rat>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  Rat out;
  switch (n->kind) {
    case ExprNode::Kind::Var: {
      auto v = env.find(n->name);
      if (v == env.end()) throw MissingVariable(n->name);
      out = v->second;
      break;
    }
    case ExprNode::Kind::Const:
      out = n->value;
      break;
    case ExprNode::Kind::Sum: {
      out = 0;
      for (auto& k : n->kids) out += eval_rec(k.raw(), env, memo);
      break;
    }
    case ExprNode::Kind::Product: {
      out = 1;
      for (auto& k : n->kids) out *= eval_rec(k.raw(), env, memo);
      break;
    }
    case ExprNode::Kind::Quotient: {
      Rat den = eval_rec(n->kids[1].raw(), env, memo);
      if (den == 0) throw DivisionByZero();
      out = eval_rec(n->kids[0].raw(), env, memo) / den;
      break;
    }
    case ExprNode::Kind::Power:
      out = rat_pow(eval_rec(n->kids[0].raw(), env, memo), n->exponent);
      break;
  }
  memo.emplace(n, out);
  return out;
}

Expr subst_rec(const Expr& e, const std::map<std::string, Expr>& env,
               std::unordered_map<const ExprNode*, Expr>& memo) {
  const ExprNode* n = e.raw();
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  Expr out;
  switch (n->kind) {
    case ExprNode::Kind::Var: {
      auto v = env.find(n->name);
      out = (v == env.end()) ? e : v->second;
      break;
    }
    case ExprNode::Kind::Const:
      out = e;
      break;
    case ExprNode::Kind::Sum:
    case ExprNode::Kind::Product: {
      std::vector<Expr> kids;
      kids.reserve(n->kids.size());
      bool changed = false;
      for (auto& k : n->kids) {
        kids.push_back(subst_rec(k, env, memo));
        changed |= kids.back().raw() != k.raw();
      }
      if (!changed)
        out = e;
      else
        out = n->kind == ExprNode::Kind::Sum ? Expr::sum(std::move(kids))
                                             : Expr::product(std::move(kids));
      break;
    }
    case ExprNode::Kind::Quotient: {
      Expr a = subst_rec(n->kids[0], env, memo);
      Expr b = subst_rec(n->kids[1], env, memo);
      out = (a.raw() == n->kids[0].raw() && b.raw() == n->kids[1].raw())
                ? e
                : Expr::quotient(a, b);
      break;
    }
    case ExprNode::Kind::Power: {
      Expr b = subst_rec(n->kids[0], env, memo);
      out = b.raw() == n->kids[0].raw() ? e : Expr::power(b, n->exponent);
      break;
    }
  }
  memo.emplace(n, out);
  return out;
}

void vars_rec(const ExprNode* n, std::set<std::string>& out,
              std::unordered_map<const ExprNode*, bool>& seen) {
  if (seen.count(n)) return;
  seen[n] = true;
  if (n->kind == ExprNode::Kind::Var) out.insert(n->name);
  for (auto& k : n->kids) vars_rec(k.raw(), out, seen);
}

// precedence: sum 1, product/quotient 2, power 3, atom 4
int prec(const ExprNode* n) {
  switch (n->kind) {
    case ExprNode::Kind::Sum: return 1;
    case ExprNode::Kind::Product:
    case ExprNode::Kind::Quotient: return 2;
    case ExprNode::Kind::Power: return 3;
    case ExprNode::Kind::Const:
      return is_integer(n->value) ? 4 : 0;  // fractions always take parens
    case ExprNode::Kind::Var: return 4;
  }
  return 4;
}

void str_rec(const ExprNode* n, int min_prec, std::string& out) {
  bool parens = prec(n) < min_prec;
  if (parens) out += '(';
  switch (n->kind) {
    case ExprNode::Kind::Var:
      out += n->name;
      break;
    case ExprNode::Kind::Const:
      out += rat_str(n->value);
      break;
    case ExprNode::Kind::Sum:
      for (std::size_t i = 0; i < n->kids.size(); ++i) {
        if (i) out += " + ";
        str_rec(n->kids[i].raw(), 1, out);
      }
      break;
    case ExprNode::Kind::Product:
      for (std::size_t i = 0; i < n->kids.size(); ++i) {
        if (i) out += '*';
        str_rec(n->kids[i].raw(), 2, out);
      }
      break;
    case ExprNode::Kind::Quotient:
      str_rec(n->kids[0].raw(), 2, out);
      out += '/';
      str_rec(n->kids[1].raw(), 3, out);
      break;
    case ExprNode::Kind::Power:
      str_rec(n->kids[0].raw(), 4, out);
      out += '^';
      out += std::to_string(n->exponent);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

Rat Expr::eval(const std::map<std::string, Rat>& env) const {
  std::unordered_map<const ExprNode*, Rat> memo;
  return eval_rec(raw(), env, memo);
}

Expr Expr::subst(const std::map<std::string, Expr>& env) const {
  std::unordered_map<const ExprNode*, Expr> memo;
  return subst_rec(*this, env, memo);
}

std::set<std::string> Expr::vars() const {
  std::set<std::string> out;
  std::unordered_map<const ExprNode*, bool> seen;
  vars_rec(raw(), out, seen);
  return out;
}

std::string Expr::str() const {
  std::string out;
  str_rec(raw(), 0, out);
  return out;
}

// ---------------------------------------------------------------- parser

namespace {

struct Parser {
  const std::string& s;
  std::size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }
  bool peek_is(char c) {
    skip_ws();
    return i < s.size() && s[i] == c;
  }
  bool eat(char c) {
    if (peek_is(c)) {
      ++i;
      return true;
    }
    return false;
  }

  Expr parse_expr() {
    Expr e = parse_term();
    while (true) {
      skip_ws();
      if (i < s.size() && s[i] == '-')
        throw NegativeNotAllowed("minus is not allowed", i);
      if (eat('+'))
        e = e + parse_term();
      else
        return e;
    }
  }

  Expr parse_term() {
    Expr e = parse_factor();
    while (true) {
      if (eat('*'))
        e = e * parse_factor();
      else if (eat('/'))
        e = e / parse_factor();
      else
        return e;
    }
  }

  Expr parse_factor() {
    Expr b = parse_base();
    if (eat('^')) {
      skip_ws();
      std::size_t at = i;
      long k = parse_posint(at);
      if (k < 1) throw NegativeNotAllowed("exponent must be positive", at);
      return Expr::power(b, k);
    }
    return b;
  }

  long parse_posint(std::size_t at) {
    if (i >= s.size() || !std::isdigit((unsigned char)s[i]))
      throw ParseError("expected an integer exponent", at);
    long v = 0;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) {
      v = v * 10 + (s[i] - '0');
      if (v > (1L << 30)) throw ParseError("exponent too large", at);
      ++i;
    }
    return v;
  }

  Expr parse_base() {
    skip_ws();
    if (i >= s.size()) throw ParseError("unexpected end of input", i);
    char c = s[i];
    if (c == '-') throw NegativeNotAllowed("minus is not allowed", i);
    if (c == '(') {
      ++i;
      Expr e = parse_expr();
      if (!eat(')')) throw ParseError("expected ')'", i);
      return e;
    }
    if (std::isdigit((unsigned char)c)) return parse_number();
    if (std::isalpha((unsigned char)c) || c == '_') return parse_ident();
    throw ParseError(std::string("unexpected character '") + c + "'", i);
  }

  Expr parse_number() {
    std::size_t at = i;
    std::string digits;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) digits += s[i++];
    Rat v{BigInt(digits)};
    if (v <= 0) throw NegativeNotAllowed("constants must be positive", at);
    return Expr::constant(v);
  }

  Expr parse_ident() {
    std::string name;
    while (i < s.size() &&
           (std::isalnum((unsigned char)s[i]) || s[i] == '_'))
      name += s[i++];
    return Expr::var(name);
  }
};

}  // namespace

Expr parse(const std::string& text) {
  Parser p(text);
  Expr e = p.parse_expr();
  p.skip_ws();
  if (p.i != text.size())
    throw ParseError("trailing input", p.i);
  return e;
}

// ------------------------------------------------------------- expansion

namespace {

using Terms = std::map<std::vector<int>, Rat>;

void add_term(Terms& into, const std::vector<int>& mono, const Rat& coeff,
              std::size_t cap) {
  auto [it, fresh] = into.emplace(mono, coeff);
  if (!fresh) it->second += coeff;
  if (into.size() > cap) throw ExpansionTooLarge(cap);
}

SparsePoly poly_add(const SparsePoly& a, const SparsePoly& b, std::size_t cap) {
  SparsePoly out = a;
  for (auto& [m, c] : b.terms) add_term(out.terms, m, c, cap);
  return out;
}

SparsePoly poly_mul(const SparsePoly& a, const SparsePoly& b, std::size_t cap) {
  SparsePoly out;
  std::vector<int> mono;
  for (auto& [ma, ca] : a.terms)
    for (auto& [mb, cb] : b.terms) {
      mono = ma;
      for (std::size_t k = 0; k < mono.size(); ++k) mono[k] += mb[k];
      add_term(out.terms, mono, ca * cb, cap);
    }
  return out;
}

SparsePoly poly_pow(SparsePoly base, long k, std::size_t cap, std::size_t nv) {
  SparsePoly acc;
  acc.terms.emplace(std::vector<int>(nv, 0), Rat(1));
  while (k > 0) {
    if (k & 1) acc = poly_mul(acc, base, cap);
    k >>= 1;
    if (k) base = poly_mul(base, base, cap);
  }
  return acc;
}

// strips shared monomial content and rescales so coefficients are coprime ints
void reduce_frac(SparseFraction& f) {
  if (f.num.terms.empty() || f.den.terms.empty()) return;
  std::size_t nv = f.num.terms.begin()->first.size();
  std::vector<int> shift(nv, INT32_MAX);
  auto scan = [&](const SparsePoly& p) {
    for (auto& [m, c] : p.terms)
      for (std::size_t k = 0; k < nv; ++k) shift[k] = std::min(shift[k], m[k]);
  };
  scan(f.num);
  scan(f.den);
  bool any_shift = std::any_of(shift.begin(), shift.end(), [](int s) { return s != 0; });

  BigInt gnum(0), glcm(1);
  auto content = [&](const SparsePoly& p) {
    for (auto& [m, c] : p.terms) {
      gnum = boost::multiprecision::gcd(gnum, rat_num(c));
      glcm = glcm / boost::multiprecision::gcd(glcm, rat_den(c)) * rat_den(c);
    }
  };
  content(f.num);
  content(f.den);
  Rat scale = Rat(glcm) / Rat(gnum);
  bool any_scale = scale != 1;
  if (!any_shift && !any_scale) return;

  auto apply = [&](SparsePoly& p) {
    Terms out;
    for (auto& [m, c] : p.terms) {
      std::vector<int> mm = m;
      for (std::size_t k = 0; k < nv; ++k) mm[k] -= shift[k];
      out.emplace(std::move(mm), c * scale);
    }
    p.terms = std::move(out);
  };
  apply(f.num);
  apply(f.den);
}

SparseFraction expand_rec(
    const ExprNode* n, const std::map<std::string, std::size_t>& pos,
    std::size_t nv, std::size_t cap,
    std::unordered_map<const ExprNode*, SparseFraction>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;

  auto one = [&] {
    SparsePoly p;
    p.terms.emplace(std::vector<int>(nv, 0), Rat(1));
    return p;
  };
  SparseFraction out;
  switch (n->kind) {
    case ExprNode::Kind::Var: {
      auto p = pos.find(n->name);
      if (p == pos.end()) throw MissingVariable(n->name);
      std::vector<int> mono(nv, 0);
      mono[p->second] = 1;
      out.num.terms.emplace(std::move(mono), Rat(1));
      out.den = one();
      break;
    }
    case ExprNode::Kind::Const: {
      out.num.terms.emplace(std::vector<int>(nv, 0), n->value);
      out.den = one();
      break;
    }
    case ExprNode::Kind::Sum: {
      out.num = SparsePoly{};
      out.den = one();
      for (auto& k : n->kids) {
        SparseFraction f = expand_rec(k.raw(), pos, nv, cap, memo);
        if (f.den == out.den) {
          out.num = poly_add(out.num, f.num, cap);
        } else {
          out.num = poly_add(poly_mul(out.num, f.den, cap),
                             poly_mul(f.num, out.den, cap), cap);
          out.den = poly_mul(out.den, f.den, cap);
        }
        reduce_frac(out);
      }
      break;
    }
    case ExprNode::Kind::Product: {
      out.num = one();
      out.den = one();
      for (auto& k : n->kids) {
        SparseFraction f = expand_rec(k.raw(), pos, nv, cap, memo);
        out.num = poly_mul(out.num, f.num, cap);
        out.den = poly_mul(out.den, f.den, cap);
        reduce_frac(out);
      }
      break;
    }
    case ExprNode::Kind::Quotient: {
      SparseFraction a = expand_rec(n->kids[0].raw(), pos, nv, cap, memo);
      SparseFraction b = expand_rec(n->kids[1].raw(), pos, nv, cap, memo);
      out.num = poly_mul(a.num, b.den, cap);
      out.den = poly_mul(a.den, b.num, cap);
      reduce_frac(out);
      break;
    }
    case ExprNode::Kind::Power: {
      SparseFraction b = expand_rec(n->kids[0].raw(), pos, nv, cap, memo);
      out.num = poly_pow(b.num, n->exponent, cap, nv);
      out.den = poly_pow(b.den, n->exponent, cap, nv);
      reduce_frac(out);
      break;
    }
  }
  memo.emplace(n, out);
  return out;
}

// A fraction kept in factored form: scalar * monomial * product of interned
// "atom" polynomials with signed exponents.  Atoms are content- and
// monomial-free, so syntactically identical factors produced on the two
// sides of an identity share an id and cancel exactly -- no polynomial gcd
// is ever computed.  Only additions multiply anything out, and then only
// the parts not shared by the two summands' factorizations, which is what
// keeps deeply composed substitution maps within the term cap.

struct AtomLess {
  bool operator()(const SparsePoly& a, const SparsePoly& b) const {
    return a.terms < b.terms;
  }
};

struct AtomTable {
  std::map<SparsePoly, int, AtomLess> ids;
  std::vector<const SparsePoly*> atom;

  int intern(SparsePoly p) {
    auto [it, fresh] = ids.emplace(std::move(p), (int)atom.size());
    if (fresh) atom.push_back(&it->first);
    return it->second;
  }
};

struct Factored {
  Rat coeff{1};
  std::vector<int> mono;     // signed exponent per variable
  std::map<int, long> pw;    // atom id -> signed exponent, never zero
};

void pw_merge(std::map<int, long>& into, const std::map<int, long>& add,
              long scale) {
  for (auto& [u, e] : add) {
    long& v = into[u];
    v += scale * e;
    if (v == 0) into.erase(u);
  }
}

long pw_get(const std::map<int, long>& pw, int u) {
  auto it = pw.find(u);
  return it == pw.end() ? 0 : it->second;
}

Factored f_mul(Factored a, const Factored& b) {
  a.coeff *= b.coeff;
  for (std::size_t k = 0; k < a.mono.size(); ++k) a.mono[k] += b.mono[k];
  pw_merge(a.pw, b.pw, 1);
  return a;
}

Factored f_div(Factored a, const Factored& b) {
  a.coeff /= b.coeff;
  for (std::size_t k = 0; k < a.mono.size(); ++k) a.mono[k] -= b.mono[k];
  pw_merge(a.pw, b.pw, -1);
  return a;
}

Factored f_pow(Factored a, long k) {
  Rat c{1};
  for (long t = 0; t < k; ++t) c *= a.coeff;
  a.coeff = c;
  for (std::size_t v = 0; v < a.mono.size(); ++v) a.mono[v] *= (int)k;
  for (auto& [u, e] : a.pw) e *= k;
  return a;
}

// The summand divided by the shared part, multiplied out: every exponent
// that appears is nonnegative by construction.
SparsePoly f_complement(const Factored& f, const std::vector<int>& base_mono,
                        const std::map<int, long>& shared, const AtomTable& at,
                        std::size_t cap, std::size_t nv) {
  std::vector<int> m(nv);
  for (std::size_t k = 0; k < nv; ++k) m[k] = f.mono[k] - base_mono[k];
  SparsePoly p;
  p.terms.emplace(std::move(m), f.coeff);
  for (auto& [u, e] : f.pw) {
    long r = e - pw_get(shared, u);
    if (r > 0) p = poly_mul(p, poly_pow(*at.atom[u], r, cap, nv), cap);
  }
  return p;
}

Factored f_add(const Factored& a, const Factored& b, AtomTable& at,
               std::size_t cap, std::size_t nv) {
  Factored out;
  out.mono.resize(nv);
  for (std::size_t k = 0; k < nv; ++k)
    out.mono[k] = std::min(a.mono[k], b.mono[k]);
  std::map<int, long> shared;
  auto consider = [&](int u) {
    long m = std::min(pw_get(a.pw, u), pw_get(b.pw, u));
    if (m != 0) shared[u] = m;
  };
  for (auto& [u, e] : a.pw) consider(u);
  for (auto& [u, e] : b.pw)
    if (!a.pw.count(u)) consider(u);
  SparsePoly s = poly_add(f_complement(a, out.mono, shared, at, cap, nv),
                          f_complement(b, out.mono, shared, at, cap, nv), cap);
  out.pw = std::move(shared);

  // strip monomial and scalar content from the fresh sum into the scalar
  // and monomial parts, so equal atoms are stored identically
  std::vector<int> shift(nv, INT32_MAX);
  BigInt gnum(0), glcm(1);
  for (auto& [m, c] : s.terms) {
    for (std::size_t k = 0; k < nv; ++k) shift[k] = std::min(shift[k], m[k]);
    gnum = boost::multiprecision::gcd(gnum, rat_num(c));
    glcm = glcm / boost::multiprecision::gcd(glcm, rat_den(c)) * rat_den(c);
  }
  Rat content = Rat(gnum) / Rat(glcm);
  Terms stripped;
  for (auto& [m, c] : s.terms) {
    std::vector<int> mm = m;
    for (std::size_t k = 0; k < nv; ++k) mm[k] -= shift[k];
    stripped.emplace(std::move(mm), c / content);
  }
  s.terms = std::move(stripped);
  out.coeff = content;
  for (std::size_t k = 0; k < nv; ++k) out.mono[k] += shift[k];
  if (s.terms.size() > 1) {
    std::map<int, long> unit{{at.intern(std::move(s)), 1}};
    pw_merge(out.pw, unit, 1);
  }
  return out;
}

Factored expand_factored_rec(
    const ExprNode* n, const std::map<std::string, std::size_t>& pos,
    std::size_t nv, std::size_t cap, AtomTable& at,
    std::unordered_map<const ExprNode*, Factored>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;

  Factored out;
  out.mono.resize(nv);
  switch (n->kind) {
    case ExprNode::Kind::Var: {
      auto p = pos.find(n->name);
      if (p == pos.end()) throw MissingVariable(n->name);
      out.mono[p->second] = 1;
      break;
    }
    case ExprNode::Kind::Const:
      out.coeff = n->value;
      break;
    case ExprNode::Kind::Sum: {
      out = expand_factored_rec(n->kids[0].raw(), pos, nv, cap, at, memo);
      for (std::size_t k = 1; k < n->kids.size(); ++k)
        out = f_add(out,
                    expand_factored_rec(n->kids[k].raw(), pos, nv, cap, at,
                                        memo),
                    at, cap, nv);
      break;
    }
    case ExprNode::Kind::Product: {
      for (auto& k : n->kids)
        out = f_mul(std::move(out),
                    expand_factored_rec(k.raw(), pos, nv, cap, at, memo));
      break;
    }
    case ExprNode::Kind::Quotient:
      out = f_div(expand_factored_rec(n->kids[0].raw(), pos, nv, cap, at, memo),
                  expand_factored_rec(n->kids[1].raw(), pos, nv, cap, at, memo));
      break;
    case ExprNode::Kind::Power:
      out = f_pow(expand_factored_rec(n->kids[0].raw(), pos, nv, cap, at, memo),
                  n->exponent);
      break;
  }
  memo.emplace(n, out);
  return out;
}

}  // namespace

SparseFraction expand(const Expr& e, const std::vector<std::string>& var_order,
                      std::size_t term_cap) {
  std::map<std::string, std::size_t> pos;
  for (std::size_t k = 0; k < var_order.size(); ++k) pos[var_order[k]] = k;
  std::unordered_map<const ExprNode*, SparseFraction> memo;
  return expand_rec(e.raw(), pos, var_order.size(), term_cap, memo);
}

bool equal(const Expr& a, const Expr& b, const EqualOptions& opt) {
  std::set<std::string> vs = a.vars();
  for (auto& v : b.vars()) vs.insert(v);
  std::vector<std::string> order(vs.begin(), vs.end());

  // refutation-only prefilter at random integer points
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<long> pick(-1000000, 1000000);
  for (int t = 0; t < opt.prefilter_trials; ++t) {
    for (int attempt = 0;; ++attempt) {
      if (attempt >= 1000) break;  // give up on this trial, expansion decides
      std::map<std::string, Rat> env;
      for (auto& v : order) {
        long x = pick(rng);
        if (x == 0) x = 1;
        env[v] = Rat(x);
      }
      try {
        if (a.eval(env) != b.eval(env)) return false;
        break;
      } catch (const DivisionByZero&) {
        continue;  // resample
      }
    }
  }

  // exact verdict: expand both sides in factored form over one shared atom
  // table, cancel matching atoms, and cross-multiply only the residue
  std::map<std::string, std::size_t> pos;
  for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = k;
  std::size_t nv = order.size();
  AtomTable at;
  std::unordered_map<const ExprNode*, Factored> memo;
  Factored fa = expand_factored_rec(a.raw(), pos, nv, opt.term_cap, at, memo);
  Factored fb = expand_factored_rec(b.raw(), pos, nv, opt.term_cap, at, memo);

  Rat q = fa.coeff / fb.coeff;
  std::vector<int> ml(nv, 0), mr(nv, 0);
  for (std::size_t k = 0; k < nv; ++k) {
    int d = fa.mono[k] - fb.mono[k];
    (d > 0 ? ml[k] : mr[k]) = d > 0 ? d : -d;
  }
  SparsePoly L, R;
  L.terms.emplace(std::move(ml), Rat(rat_num(q)));
  R.terms.emplace(std::move(mr), Rat(rat_den(q)));
  std::map<int, long> d = fa.pw;
  pw_merge(d, fb.pw, -1);
  for (auto& [u, e] : d) {
    if (e > 0)
      L = poly_mul(L, poly_pow(*at.atom[u], e, opt.term_cap, nv), opt.term_cap);
    else
      R = poly_mul(R, poly_pow(*at.atom[u], -e, opt.term_cap, nv),
                   opt.term_cap);
  }
  return L == R;
}

}  // namespace agc
