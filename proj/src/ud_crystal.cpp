#include "agc/ud_crystal.hpp"

#include <tuple>

#include "agc/b_infinity.hpp"
#include "agc/faults.hpp"
#include "agc/tropic.hpp"

namespace agc {

namespace {

std::string xs(int i) { return "x" + std::to_string(i); }
std::string xbs(int i) { return "xb" + std::to_string(i); }

// Largest index carrying a barred coordinate.
int last_bar(TypeLabel t, int n) {
  if (t == TypeLabel::A1) return 0;
  return t == TypeLabel::D1 ? n - 2 : n - 1;
}

// Documented layout: x0 when present, x1..xn, barred coordinates in
// decreasing index.  (chart_vars follows the reduced word instead, which
// lists the same names in a different order for the cyclic family.)
std::vector<std::string> layout(TypeLabel t, int n) {
  std::vector<std::string> v;
  if (t == TypeLabel::C1 || t == TypeLabel::D2 || t == TypeLabel::A2dag)
    v.push_back(xs(0));
  for (int i = 1; i <= n; ++i) v.push_back(xs(i));
  for (int i = last_bar(t, n); i >= 1; --i) v.push_back(xbs(i));
  return v;
}

// Additive image of the coordinate pair products: x_i + xb_i in the
// barred range, with the per-family unpaired ends.
long long pair_sum(TypeLabel t, int n, const LatticePoint& p, int i) {
  auto get = [&](const std::string& k) { return p.at(k); };
  if (i >= 1 && i <= last_bar(t, n)) return get(xs(i)) + get(xbs(i));
  switch (t) {
    case TypeLabel::B1:
      if (i == n) return 2 * get(xs(n));
      break;
    case TypeLabel::C1:
      if (i == 0) return get(xs(0));
      if (i == n) return get(xs(n));
      break;
    case TypeLabel::D1:
      if (i == n - 1) return get(xs(n - 1)) + get(xs(n));
      break;
    case TypeLabel::A2odd:
      if (i == n) return get(xs(n));
      break;
    case TypeLabel::D2:
      if (i == 0) return 2 * get(xs(0));
      if (i == n) return 2 * get(xs(n));
      break;
    case TypeLabel::A2dag:
      if (i == 0) return get(xs(0));
      if (i == n) return 2 * get(xs(n));
      break;
    default:
      break;
  }
  throw IndexError("no coordinate pair at this index");
}

long long plus(long long z) { return z > 0 ? z : 0; }

void check_point(TypeLabel t, int n, const LatticePoint& p) {
  for (const auto& v : chart_vars(t, n))
    if (!p.count(v)) throw Error("lattice point is missing coordinate " + v);
  if ((int)p.size() != chart_dim(t, n))
    throw Error("lattice point has extra coordinates");
}

}  // namespace

LatticePoint lattice_point(TypeLabel t, int n,
                           const std::vector<long long>& coords) {
  cartan_data(t, n);
  auto names = layout(t, n);
  if (coords.size() != names.size())
    throw Error("coordinate count does not match the chart dimension");
  LatticePoint p;
  for (std::size_t k = 0; k < names.size(); ++k) p[names[k]] = coords[k];
  return p;
}

std::vector<long long> lattice_coords(TypeLabel t, int n,
                                      const LatticePoint& p) {
  check_point(t, n, p);
  std::vector<long long> out;
  for (const auto& v : layout(t, n)) out.push_back(p.at(v));
  return out;
}

LatticePoint ud_e(TypeLabel t, int n, int i, const LatticePoint& pin) {
  cartan_data(t, n);
  if (i < 0 || i > n) throw IndexError("action index out of range");
  check_point(t, n, pin);
  LatticePoint p = pin;
  auto X = [&](int j) -> long long& { return p.at(xs(j)); };
  auto XB = [&](int j) -> long long& { return p.at(xbs(j)); };
  auto P = [&](int j) { return pair_sum(t, n, p, j); };
  auto all = [&](long long d) {
    for (auto& [k, v] : p) v += d;
  };

  if (t == TypeLabel::A1) {
    if (i == 0)
      all(-1);
    else
      ++X(i);
    return p;
  }
  if (i == 0) {
    switch (t) {
      case TypeLabel::B1:
      case TypeLabel::D1:
      case TypeLabel::A2odd:
        if (P(1) >= P(2)) {
          long long keep = X(1);
          all(-1);
          X(1) = keep;
        } else {
          long long keep = XB(1);
          all(-1);
          XB(1) = keep;
        }
        if (t == TypeLabel::A2odd) --X(n);  // the end drops twice
        break;
      case TypeLabel::C1:
        if (X(0) >= P(1)) {
          ++X(0);
        } else {
          all(-1);
          --X(n);
        }
        break;
      case TypeLabel::D2: {
        long long lhs = 2 * X(0);
        if (faults::armed("ud-d2-e0-threshold")) lhs += 1;
        if (lhs >= P(1)) {
          ++X(0);
        } else if (lhs + 1 == P(1)) {
          long long keep = X(0);
          all(-1);
          X(0) = keep;
        } else {
          all(-2);
          X(0) += 1;
        }
        break;
      }
      case TypeLabel::A2dag:
        if (X(0) >= P(1))
          ++X(0);
        else
          all(-1);
        break;
      default:
        throw Error("label has no chart lattice");
    }
    return p;
  }
  if (i == n || (t == TypeLabel::D1 && i == n - 1)) {
    ++X(i);
    return p;
  }
  // 1 <= i <= last barred index: move toward the larger neighbor sum
  if (P(i) >= P(i + 1))
    ++X(i);
  else
    ++XB(i);
  return p;
}

LatticePoint ud_f(TypeLabel t, int n, int i, const LatticePoint& pin) {
  cartan_data(t, n);
  if (i < 0 || i > n) throw IndexError("action index out of range");
  check_point(t, n, pin);
  LatticePoint p = pin;
  auto X = [&](int j) -> long long& { return p.at(xs(j)); };
  auto XB = [&](int j) -> long long& { return p.at(xbs(j)); };
  auto P = [&](int j) { return pair_sum(t, n, p, j); };
  auto all = [&](long long d) {
    for (auto& [k, v] : p) v += d;
  };

  if (t == TypeLabel::A1) {
    if (i == 0)
      all(1);
    else
      --X(i);
    return p;
  }
  if (i == 0) {
    switch (t) {
      case TypeLabel::B1:
      case TypeLabel::D1:
      case TypeLabel::A2odd:
        if (P(1) > P(2)) {
          long long keep = X(1);
          all(1);
          X(1) = keep;
        } else {
          long long keep = XB(1);
          all(1);
          XB(1) = keep;
        }
        if (t == TypeLabel::A2odd) ++X(n);
        break;
      case TypeLabel::C1:
        if (X(0) > P(1)) {
          --X(0);
        } else {
          all(1);
          ++X(n);
        }
        break;
      case TypeLabel::D2:
        if (2 * X(0) - 2 >= P(1)) {
          --X(0);
        } else if (2 * X(0) - 1 == P(1)) {
          long long keep = X(0);
          all(1);
          X(0) = keep;
        } else {
          all(2);
          X(0) -= 1;
        }
        break;
      case TypeLabel::A2dag:
        if (X(0) > P(1))
          --X(0);
        else
          all(1);
        break;
      default:
        throw Error("label has no chart lattice");
    }
    return p;
  }
  if (i == n || (t == TypeLabel::D1 && i == n - 1)) {
    --X(i);
    return p;
  }
  if (P(i) > P(i + 1))
    --X(i);
  else
    --XB(i);
  return p;
}

long long ud_wt(TypeLabel t, int n, int i, const LatticePoint& pin) {
  cartan_data(t, n);
  if (i < 0 || i > n) throw IndexError("statistic index out of range");
  check_point(t, n, pin);
  const LatticePoint& p = pin;
  auto X = [&](int j) { return p.at(xs(j)); };
  auto P = [&](int j) { return pair_sum(t, n, p, j); };

  switch (t) {
    case TypeLabel::A1:
      if (i == 0) return -X(1) - X(n);
      if (i == 1) return 2 * X(1) - X(2);
      if (i == n) return 2 * X(n) - X(n - 1);
      return -X(i - 1) + 2 * X(i) - X(i + 1);
    case TypeLabel::B1:
      if (i == 0) return -P(2);
      if (i == 1) return 2 * P(1) - P(2);
      if (i == n) return 2 * X(n) - P(n - 1);
      return -P(i - 1) + 2 * P(i) - P(i + 1);
    case TypeLabel::C1:
      if (i == 0) return 2 * X(0) - 2 * P(1);
      if (i == n) return 2 * X(n) - 2 * P(n - 1);
      return -P(i - 1) + 2 * P(i) - P(i + 1);
    case TypeLabel::D1:
      if (i == 0) return -P(2);
      if (i == 1) return 2 * P(1) - P(2);
      if (i == n - 1) return -P(n - 2) + 2 * X(n - 1);
      if (i == n) return -P(n - 2) + 2 * X(n);
      return -P(i - 1) + 2 * P(i) - P(i + 1);
    case TypeLabel::A2odd:
      if (i == 0) return -P(2);
      if (i == 1) return 2 * P(1) - P(2);
      if (i == n) return 2 * X(n) - 2 * P(n - 1);
      return -P(i - 1) + 2 * P(i) - P(i + 1);
    case TypeLabel::D2:
      if (i == 0) return 2 * X(0) - P(1);
      if (i == n) return 2 * X(n) - P(n - 1);
      return -P(i - 1) + 2 * P(i) - P(i + 1);
    case TypeLabel::A2dag:
      if (i == 0) return 2 * X(0) - 2 * P(1);
      if (i == n) return 2 * X(n) - P(n - 1);
      return -P(i - 1) + 2 * P(i) - P(i + 1);
    default:
      throw Error("label has no chart lattice");
  }
}

long long ud_eps(TypeLabel t, int n, int i, const LatticePoint& pin) {
  cartan_data(t, n);
  if (i < 0 || i > n) throw IndexError("statistic index out of range");
  check_point(t, n, pin);
  const LatticePoint& p = pin;
  auto X = [&](int j) { return p.at(xs(j)); };
  auto XB = [&](int j) { return p.at(xbs(j)); };
  auto P = [&](int j) { return pair_sum(t, n, p, j); };

  switch (t) {
    case TypeLabel::A1:
      if (i == 0) return X(1);
      if (i == n) return -X(n);
      return X(i + 1) - X(i);
    case TypeLabel::B1:
    case TypeLabel::D1:
    case TypeLabel::A2odd:
      if (i == 0) return XB(1) + plus(P(2) - P(1));
      if (i == 1) return plus(P(2) - P(1)) - X(1);
      if (t == TypeLabel::D1 && i == n - 1) return X(n - 2) - X(n - 1);
      if (t == TypeLabel::D1 && i == n) return X(n - 2) - X(n);
      if (t == TypeLabel::B1 && i == n) return X(n - 1) - X(n);
      if (t == TypeLabel::A2odd && i == n) return 2 * X(n - 1) - X(n);
      return X(i - 1) - X(i) + plus(P(i + 1) - P(i));
    case TypeLabel::C1:
      if (i == 0) return -X(0) + 2 * plus(P(1) - X(0));
      if (i == n) return 2 * X(n - 1) - X(n);
      return X(i - 1) - X(i) + plus(P(i + 1) - P(i));
    case TypeLabel::D2:
      if (i == 0) return -X(0) + plus(P(1) - 2 * X(0));
      if (i == 1) return 2 * X(0) - X(1) + plus(P(2) - P(1));
      if (i == n) return X(n - 1) - X(n);
      return X(i - 1) - X(i) + plus(P(i + 1) - P(i));
    case TypeLabel::A2dag:
      if (i == 0) return -X(0) + 2 * plus(P(1) - X(0));
      if (i == n) return X(n - 1) - X(n);
      return X(i - 1) - X(i) + plus(P(i + 1) - P(i));
    default:
      throw Error("label has no chart lattice");
  }
}

long long ud_phi(TypeLabel t, int n, int i, const LatticePoint& p) {
  return ud_eps(t, n, i, p) + ud_wt(t, n, i, p);
}

namespace {

using TropMap = std::vector<std::pair<std::string, TropExpr>>;
using TropKey = std::tuple<TypeLabel, int, int, std::string>;

const TropMap& trop_action(TypeLabel t, int n, int i) {
  static std::map<TropKey, TropMap> cache;
  TropKey key{t, n, i, faults::current()};
  auto it = cache.find(key);
  if (it == cache.end()) {
    TropMap entries;
    for (const auto& [name, e] : geom_e(t, n, i))
      entries.emplace_back(name, tropicalize(e));
    it = cache.emplace(std::move(key), std::move(entries)).first;
  }
  return it->second;
}

const TropExpr& trop_stat(TypeLabel t, int n, int i, bool character) {
  static std::map<std::tuple<TypeLabel, int, int, bool, std::string>, TropExpr>
      cache;
  std::tuple<TypeLabel, int, int, bool, std::string> key{t, n, i, character,
                                                         faults::current()};
  auto it = cache.find(key);
  if (it == cache.end()) {
    Expr e = character ? geom_gamma(t, n, i) : geom_eps(t, n, i);
    it = cache.emplace(std::move(key), tropicalize(e)).first;
  }
  return it->second;
}

}  // namespace

LatticePoint trop_e(TypeLabel t, int n, int i, const LatticePoint& pin,
                    long long cval) {
  check_point(t, n, pin);
  std::map<std::string, long long> env = pin;
  env["c"] = cval;
  LatticePoint out;
  for (const auto& [name, te] : trop_action(t, n, i))
    out[name] = teval(te, env);
  return out;
}

long long trop_wt(TypeLabel t, int n, int i, const LatticePoint& pin) {
  check_point(t, n, pin);
  return teval(trop_stat(t, n, i, true), pin);
}

long long trop_eps(TypeLabel t, int n, int i, const LatticePoint& pin) {
  check_point(t, n, pin);
  return teval(trop_stat(t, n, i, false), pin);
}

std::vector<Rat> mu(TypeLabel t, int n, const LatticePoint& pin) {
  cartan_data(t, n);
  check_point(t, n, pin);
  auto X = [&](int j) { return Rat(pin.at(xs(j))); };
  auto XB = [&](int j) { return Rat(pin.at(xbs(j))); };
  const Rat half(1, 2);
  std::vector<Rat> b(binf_dim(langlands_dual(t), n), Rat(0));
  auto set_b = [&](int i, const Rat& v) { b.at(i - 1) = v; };
  auto set_bb = [&](int i, const Rat& v) { b.at(b.size() - i) = v; };

  switch (t) {
    case TypeLabel::A1:
      set_b(1, X(1));
      for (int i = 2; i <= n; ++i) set_b(i, X(i) - X(i - 1));
      set_b(n + 1, -X(n));
      break;
    case TypeLabel::B1:
      set_b(1, XB(1));
      for (int i = 2; i <= n - 1; ++i) set_b(i, XB(i) - XB(i - 1));
      set_b(n, X(n) - XB(n - 1));
      for (int i = 2; i <= n; ++i) set_bb(i, X(i - 1) - X(i));
      set_bb(1, -X(1));
      break;
    case TypeLabel::C1:
      set_b(1, XB(1));
      for (int i = 2; i <= n - 1; ++i) set_b(i, XB(i) - XB(i - 1));
      set_b(n, half * X(n) - XB(n - 1));
      set_bb(n, X(n - 1) - half * X(n));
      for (int i = 1; i <= n - 1; ++i) set_bb(i, X(i - 1) - X(i));
      break;
    case TypeLabel::D1:
      set_b(1, XB(1));
      for (int i = 2; i <= n - 2; ++i) set_b(i, XB(i) - XB(i - 1));
      set_b(n - 1, X(n - 1) - XB(n - 2));
      set_b(n, X(n) - X(n - 1));
      set_bb(n - 1, X(n - 2) - X(n));
      for (int i = 2; i <= n - 2; ++i) set_bb(i, X(i - 1) - X(i));
      set_bb(1, -X(1));
      break;
    case TypeLabel::A2odd: {
      set_b(1, XB(1));
      for (int i = 2; i <= n - 1; ++i) set_b(i, XB(i) - XB(i - 1));
      Rat bn = half * X(n) - XB(n - 1);
      if (faults::armed("mu-a2odd-bn-halving")) bn = X(n) - XB(n - 1);
      set_b(n, bn);
      set_bb(n, X(n - 1) - half * X(n));
      for (int i = 2; i <= n - 1; ++i) set_bb(i, X(i - 1) - X(i));
      set_bb(1, -X(1));
      break;
    }
    case TypeLabel::D2:
      set_b(1, XB(1));
      for (int i = 2; i <= n - 1; ++i) set_b(i, XB(i) - XB(i - 1));
      set_b(n, X(n) - XB(n - 1));
      for (int i = 2; i <= n; ++i) set_bb(i, X(i - 1) - X(i));
      set_bb(1, 2 * X(0) - X(1));
      break;
    case TypeLabel::A2dag:
      set_b(1, XB(1));
      for (int i = 2; i <= n - 1; ++i) set_b(i, XB(i) - XB(i - 1));
      set_b(n, X(n) - XB(n - 1));
      for (int i = 1; i <= n; ++i) set_bb(i, X(i - 1) - X(i));
      break;
    default:
      throw Error("label has no chart lattice");
  }
  return b;
}

LatticePoint mu_inverse(TypeLabel t, int n, const std::vector<Rat>& b) {
  cartan_data(t, n);
  TypeLabel d = langlands_dual(t);
  if (!binf_valid(d, n, b))
    throw Error("not a valid element of the dual limit family");
  auto gb = [&](int i) { return b.at(i - 1); };
  auto gbb = [&](int i) { return b.at(b.size() - i); };
  const Rat half(1, 2);
  std::map<std::string, Rat> x;

  switch (t) {
    case TypeLabel::A1: {
      Rat acc(0);
      for (int i = 1; i <= n; ++i) {
        acc += gb(i);
        x[xs(i)] = acc;
      }
      break;
    }
    case TypeLabel::B1:
      x[xbs(1)] = gb(1);
      for (int i = 2; i <= n - 1; ++i) x[xbs(i)] = x[xbs(i - 1)] + gb(i);
      x[xs(n)] = gb(n) + x[xbs(n - 1)];
      for (int i = n; i >= 2; --i) x[xs(i - 1)] = gbb(i) + x[xs(i)];
      break;
    case TypeLabel::C1:
      x[xbs(1)] = gb(1);
      for (int i = 2; i <= n - 1; ++i) x[xbs(i)] = x[xbs(i - 1)] + gb(i);
      x[xs(n)] = 2 * (gb(n) + x[xbs(n - 1)]);
      x[xs(n - 1)] = gbb(n) + half * x[xs(n)];
      for (int i = n - 1; i >= 1; --i) x[xs(i - 1)] = gbb(i) + x[xs(i)];
      break;
    case TypeLabel::D1:
      x[xbs(1)] = gb(1);
      for (int i = 2; i <= n - 2; ++i) x[xbs(i)] = x[xbs(i - 1)] + gb(i);
      x[xs(n - 1)] = gb(n - 1) + x[xbs(n - 2)];
      x[xs(n)] = gb(n) + x[xs(n - 1)];
      x[xs(n - 2)] = gbb(n - 1) + x[xs(n)];
      for (int i = n - 2; i >= 2; --i) x[xs(i - 1)] = gbb(i) + x[xs(i)];
      break;
    case TypeLabel::A2odd:
      x[xbs(1)] = gb(1);
      for (int i = 2; i <= n - 1; ++i) x[xbs(i)] = x[xbs(i - 1)] + gb(i);
      x[xs(n)] = 2 * (gb(n) + x[xbs(n - 1)]);
      x[xs(n - 1)] = gbb(n) + half * x[xs(n)];
      for (int i = n - 1; i >= 2; --i) x[xs(i - 1)] = gbb(i) + x[xs(i)];
      break;
    case TypeLabel::D2:
      x[xbs(1)] = gb(1);
      for (int i = 2; i <= n - 1; ++i) x[xbs(i)] = x[xbs(i - 1)] + gb(i);
      x[xs(n)] = gb(n) + x[xbs(n - 1)];
      for (int i = n; i >= 2; --i) x[xs(i - 1)] = gbb(i) + x[xs(i)];
      x[xs(0)] = (gbb(1) + x[xs(1)]) / 2;
      break;
    case TypeLabel::A2dag:
      x[xbs(1)] = gb(1);
      for (int i = 2; i <= n - 1; ++i) x[xbs(i)] = x[xbs(i - 1)] + gb(i);
      x[xs(n)] = gb(n) + x[xbs(n - 1)];
      for (int i = n; i >= 1; --i) x[xs(i - 1)] = gbb(i) + x[xs(i)];
      break;
    default:
      throw Error("label has no chart lattice");
  }

  LatticePoint out;
  for (const auto& [k, v] : x) {
    if (!is_integer(v))
      throw Error("inverse image is not a lattice point at " + k);
    out[k] = (long long)rat_num(v);
  }
  check_point(t, n, out);
  return out;
}

LatticePoint random_lattice_point(TypeLabel t, int n, std::mt19937_64& rng,
                                  int box) {
  std::uniform_int_distribution<long long> dist(-box, box);
  LatticePoint p;
  for (const auto& v : chart_vars(t, n)) p[v] = dist(rng);
  return p;
}

}  // namespace agc
