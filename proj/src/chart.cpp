#include "agc/chart.hpp"

#include <map>

#include "agc/errors.hpp"
#include "agc/faults.hpp"

namespace agc {

namespace {

std::string xs(int i) { return "x" + std::to_string(i); }
std::string xbs(int i) { return "xb" + std::to_string(i); }
std::string ws(int i) { return "y" + std::to_string(i); }
std::string wbs(int i) { return "yb" + std::to_string(i); }

Expr vx(int i) { return Expr::var(xs(i)); }
Expr vxb(int i) { return Expr::var(xbs(i)); }
Expr vy(int i) { return Expr::var(ws(i)); }
Expr vyb(int i) { return Expr::var(wbs(i)); }
Expr cvar() { return Expr::var("c"); }
Expr one() { return Expr::constant(1); }
Expr sq(const Expr& e) { return Expr::power(e, 2); }

void require_chart(TypeLabel t, Chart chart) {
  if (t == TypeLabel::A2even)
    throw Error("A2even carries no chart; use its transposed partner");
  if (chart == Chart::second && t != TypeLabel::A2dag)
    throw Error("only A2dag has a second chart");
}

// Pair products p_i along the main chart: the value the letter-i actions
// and statistics are built from.  x_i*xb_i in the middle; the ends are
// type-specific (a bare coordinate or its square).  Unused slots stay
// invalid.
std::vector<Expr> main_pairs(TypeLabel t, int n) {
  std::vector<Expr> p(n + 1);
  auto mid = [&](int lo, int hi) {
    for (int i = lo; i <= hi; ++i) p[i] = vx(i) * vxb(i);
  };
  switch (t) {
    case TypeLabel::B1:
      mid(1, n - 1);
      p[n] = sq(vx(n));
      break;
    case TypeLabel::C1:
      p[0] = vx(0);
      mid(1, n - 1);
      p[n] = vx(n);
      break;
    case TypeLabel::D1:
      mid(1, n - 2);
      p[n - 1] = vx(n - 1) * vx(n);
      break;
    case TypeLabel::A2odd:
      mid(1, n - 1);
      p[n] = vx(n);
      break;
    case TypeLabel::D2:
      p[0] = sq(vx(0));
      mid(1, n - 1);
      p[n] = sq(vx(n));
      break;
    case TypeLabel::A2dag:
      p[0] = vx(0);
      mid(1, n - 1);
      p[n] = sq(vx(n));
      break;
    default:
      break;  // A1 carries no pairs
  }
  return p;
}

// A2dag second chart: q_0 = y_0, q_i = y_i*yb_i, q_n = y_n^2.
std::vector<Expr> second_pairs(int n) {
  std::vector<Expr> q(n + 1);
  q[0] = vy(0);
  for (int i = 1; i <= n - 1; ++i) q[i] = vy(i) * vyb(i);
  q[n] = sq(vy(n));
  return q;
}

// Closed-form column coefficients xi_1..xi_n (D1 uses only 1..n-1).
std::vector<Expr> xi_list(TypeLabel t, int n) {
  auto p = main_pairs(t, n);
  std::vector<Expr> xi(n + 1);
  switch (t) {
    case TypeLabel::B1:
    case TypeLabel::A2odd:
      xi[1] = p[1];
      for (int i = 2; i <= n; ++i) xi[i] = (p[i - 1] + p[i]) / vx(i - 1);
      break;
    case TypeLabel::D1:
      xi[1] = p[1];
      for (int i = 2; i <= n - 1; ++i) {
        int d = faults::armed("chart-d1-xi-denominator-index") ? i : i - 1;
        xi[i] = (p[i - 1] + p[i]) / vx(d);
      }
      break;
    case TypeLabel::C1:
    case TypeLabel::A2dag:
      for (int i = 1; i <= n; ++i) xi[i] = (p[i - 1] + p[i]) / vx(i - 1);
      break;
    case TypeLabel::D2:
      xi[1] = (p[0] + p[1]) / p[0];
      for (int i = 2; i <= n; ++i) xi[i] = (p[i - 1] + p[i]) / vx(i - 1);
      break;
    default:
      break;
  }
  return xi;
}

// A2dag second chart closed-form coefficients eta_1..eta_n.
std::vector<Expr> eta_list(int n) {
  auto q = second_pairs(n);
  std::vector<Expr> eta(n + 1);
  eta[1] = (q[0] + q[1]) / vy(1);
  for (int i = 2; i <= n - 1; ++i) eta[i] = (q[i - 1] + q[i]) / vy(i);
  eta[n] = (q[n - 1] + q[n]) / sq(vy(n));
  return eta;
}

// x_i -> x_i (c p_i + p_next)/(p_i + p_next),
// xb_i -> xb_i c (p_i + p_next)/(c p_i + p_next).
void pair_action(ChartMap& m, int i, const Expr& pi, const Expr& pnext) {
  Expr c = cvar();
  m[xs(i)] = vx(i) * (c * pi + pnext) / (pi + pnext);
  m[xbs(i)] = vxb(i) * (c * (pi + pnext)) / (c * pi + pnext);
}

}  // namespace

std::vector<std::string> word_arg_names(const std::vector<int>& word,
                                        const std::string& prefix) {
  std::map<int, int> seen;
  std::vector<std::string> out;
  out.reserve(word.size());
  for (int l : word) {
    int k = seen[l]++;
    if (k > 1) throw Error("letter appears more than twice in word");
    out.push_back(k == 0 ? prefix + std::to_string(l)
                         : prefix + "b" + std::to_string(l));
  }
  return out;
}

std::vector<std::string> chart_vars(TypeLabel t, int n, Chart chart) {
  require_chart(t, chart);
  CartanData cd = cartan_data(t, n);
  const auto& word = chart == Chart::main ? cd.word_w1 : cd.word_w2;
  return word_arg_names(word, chart == Chart::main ? "x" : "y");
}

int chart_dim(TypeLabel t, int n) { return (int)chart_vars(t, n).size(); }

std::vector<Expr> v_matrix(TypeLabel t, int n, Chart chart) {
  require_chart(t, chart);
  CartanData cd = cartan_data(t, n);
  FundBasis fb(t, n);
  const auto& word = chart == Chart::main ? cd.word_w1 : cd.word_w2;
  auto names = word_arg_names(word, chart == Chart::main ? "x" : "y");
  std::vector<Expr> args;
  args.reserve(names.size());
  for (const auto& nm : names) args.push_back(Expr::var(nm));
  FL start = chart == Chart::main ? FL::un(1) : FL::bar(n);
  return word_product<ExprRing>(fb, word, args, start);
}

std::vector<Expr> v_closed(TypeLabel t, int n, Chart chart) {
  require_chart(t, chart);
  cartan_data(t, n);
  FundBasis fb(t, n);
  std::vector<Expr> out(fb.dim());
  auto set = [&](FL l, const Expr& e) { out[fb.index_of(l)] = e; };
  if (chart == Chart::second) {
    auto eta = eta_list(n);
    for (int i = 1; i <= n - 1; ++i) set(FL::un(i), vy(i));
    set(FL::un(n), sq(vy(n)));
    set(FL::zero(), vy(n));
    for (int i = 1; i <= n; ++i) set(FL::bar(i), eta[i]);
    return out;
  }
  auto xi = xi_list(t, n);
  switch (t) {
    case TypeLabel::A1:
      for (int i = 1; i <= n; ++i) set(FL::un(i), vx(i));
      set(FL::un(n + 1), one());
      break;
    case TypeLabel::B1:
      for (int i = 1; i <= n; ++i) set(FL::un(i), xi[i]);
      set(FL::zero(), vx(n));
      for (int i = 2; i <= n; ++i) set(FL::bar(i), vx(i - 1));
      set(FL::bar(1), one());
      break;
    case TypeLabel::C1:
      for (int i = 1; i <= n; ++i) set(FL::un(i), xi[i]);
      for (int i = 1; i <= n; ++i) set(FL::bar(i), vx(i - 1));
      break;
    case TypeLabel::D1:
      for (int i = 1; i <= n - 1; ++i) set(FL::un(i), xi[i]);
      set(FL::un(n), vx(n));
      for (int i = 2; i <= n; ++i) set(FL::bar(i), vx(i - 1));
      set(FL::bar(1), one());
      break;
    case TypeLabel::A2odd:
      for (int i = 1; i <= n; ++i) set(FL::un(i), xi[i]);
      for (int i = 2; i <= n; ++i) set(FL::bar(i), vx(i - 1));
      set(FL::bar(1), one());
      break;
    case TypeLabel::D2:
      for (int i = 1; i <= n; ++i) set(FL::un(i), xi[i]);
      set(FL::zero(), vx(n));
      set(FL::phi(), vx(0));
      for (int i = 2; i <= n; ++i) set(FL::bar(i), vx(i - 1));
      set(FL::bar(1), sq(vx(0)));
      break;
    case TypeLabel::A2dag:
      for (int i = 1; i <= n; ++i) set(FL::un(i), xi[i]);
      set(FL::zero(), vx(n));
      for (int i = 1; i <= n; ++i) set(FL::bar(i), vx(i - 1));
      break;
    default:
      break;
  }
  return out;
}

std::vector<int> sigma_basis(TypeLabel t, int n) {
  require_chart(t, Chart::main);
  cartan_data(t, n);
  FundBasis fb(t, n);
  auto img = [&](FL l) -> FL {
    switch (t) {
      case TypeLabel::A1:
        return FL::un(l.v == n + 1 ? 1 : l.v + 1);
      case TypeLabel::B1:
      case TypeLabel::D1:
      case TypeLabel::A2odd:
        if (l == FL::un(1)) return FL::bar(1);
        if (l == FL::bar(1)) return FL::un(1);
        return l;
      case TypeLabel::C1:
        return l.v > 0 ? FL::bar(n + 1 - l.v) : FL::un(n + 1 + l.v);
      case TypeLabel::D2:
        if (l.is_phi) return FL::zero();
        if (l == FL::zero()) return FL::phi();
        return l.v > 0 ? FL::bar(n + 1 - l.v) : FL::un(n + 1 + l.v);
      case TypeLabel::A2dag:
        return l;
      default:
        throw Error("label has no basis symmetry");
    }
  };
  std::vector<int> perm(fb.dim());
  for (int j = 0; j < fb.dim(); ++j)
    perm[j] = fb.index_of(img(fb.labels()[j]));
  return perm;
}

Expr sigma_scalar(TypeLabel t, int n) {
  require_chart(t, Chart::main);
  cartan_data(t, n);
  auto p = main_pairs(t, n);
  switch (t) {
    case TypeLabel::A1:
      return one() / vx(n);
    case TypeLabel::B1:
    case TypeLabel::D1:
    case TypeLabel::A2odd:
      return one() / p[1];
    case TypeLabel::C1:
      return (p[n - 1] + vx(n)) / (vx(n - 1) * vx(n));
    case TypeLabel::D2:
    case TypeLabel::A2dag:
      return (p[n - 1] + sq(vx(n))) / (vx(n - 1) * sq(vx(n)));
    default:
      throw Error("label has no decoration scalar");
  }
}

ChartMap identity_map(TypeLabel t, int n, Chart chart) {
  ChartMap m;
  for (const auto& v : chart_vars(t, n, chart)) m[v] = Expr::var(v);
  return m;
}

ChartMap geom_e(TypeLabel t, int n, int i, Chart chart) {
  require_chart(t, chart);
  cartan_data(t, n);
  Expr c = cvar();
  if (chart == Chart::second) {
    if (i < 0 || i > n - 1)
      throw IndexError("second-chart action supports indices 0..n-1");
    ChartMap m = identity_map(t, n, chart);
    auto q = second_pairs(n);
    if (i == 0) {
      m[ws(0)] = c * vy(0);
    } else {
      m[ws(i)] = vy(i) * (c * q[i] + q[i - 1]) / (q[i] + q[i - 1]);
      m[wbs(i)] = vyb(i) * (c * (q[i] + q[i - 1])) / (c * q[i] + q[i - 1]);
    }
    return m;
  }
  if (i < 0 || i > n) throw IndexError("action index out of range");
  ChartMap m = identity_map(t, n, chart);
  auto p = main_pairs(t, n);
  switch (t) {
    case TypeLabel::A1:
      if (i == 0)
        for (int j = 1; j <= n; ++j) m[xs(j)] = vx(j) / c;
      else
        m[xs(i)] = c * vx(i);
      break;
    case TypeLabel::B1:
      if (i == 0) {
        m[xs(1)] = vx(1) * (c * p[1] + p[2]) / (c * (p[1] + p[2]));
        m[xbs(1)] = vxb(1) * (p[1] + p[2]) / (c * p[1] + p[2]);
        for (int j = 2; j <= n; ++j) m[xs(j)] = vx(j) / c;
        for (int j = 2; j <= n - 1; ++j) m[xbs(j)] = vxb(j) / c;
      } else if (i == n) {
        m[xs(n)] = c * vx(n);
      } else {
        pair_action(m, i, p[i], p[i + 1]);
      }
      break;
    case TypeLabel::C1:
      if (i == 0) {
        Expr A = c * vx(0) + p[1], B = vx(0) + p[1];
        m[xs(0)] = vx(0) * sq(A) / (c * sq(B));
        for (int j = 1; j <= n - 1; ++j) {
          m[xs(j)] = vx(j) * A / (c * B);
          m[xbs(j)] = vxb(j) * A / (c * B);
        }
        Expr cden = faults::armed("chart-c1-e0-xn-denominator") ? c : sq(c);
        m[xs(n)] = vx(n) * sq(A) / (cden * sq(B));
      } else if (i == n) {
        m[xs(n)] = c * vx(n);
      } else {
        pair_action(m, i, p[i], p[i + 1]);
      }
      break;
    case TypeLabel::D1:
      if (i == 0) {
        m[xs(1)] = vx(1) * (c * p[1] + p[2]) / (c * (p[1] + p[2]));
        m[xbs(1)] = vxb(1) * (p[1] + p[2]) / (c * p[1] + p[2]);
        for (int j = 2; j <= n; ++j) m[xs(j)] = vx(j) / c;
        for (int j = 2; j <= n - 2; ++j) m[xbs(j)] = vxb(j) / c;
      } else if (i >= n - 1) {
        m[xs(i)] = c * vx(i);
      } else {
        pair_action(m, i, p[i], p[i + 1]);
      }
      break;
    case TypeLabel::A2odd:
      if (i == 0) {
        m[xs(1)] = vx(1) * (c * p[1] + p[2]) / (c * (p[1] + p[2]));
        m[xbs(1)] = vxb(1) * (p[1] + p[2]) / (c * p[1] + p[2]);
        for (int j = 2; j <= n - 1; ++j) {
          m[xs(j)] = vx(j) / c;
          m[xbs(j)] = vxb(j) / c;
        }
        m[xs(n)] = vx(n) / sq(c);
      } else if (i == n) {
        m[xs(n)] = c * vx(n);
      } else {
        pair_action(m, i, p[i], p[i + 1]);
      }
      break;
    case TypeLabel::D2:
      if (i == 0) {
        Expr A = sq(c) * p[0] + p[1], B = p[0] + p[1];
        m[xs(0)] = vx(0) * A / (c * B);
        for (int j = 1; j <= n; ++j) m[xs(j)] = vx(j) * A / (sq(c) * B);
        for (int j = 1; j <= n - 1; ++j) m[xbs(j)] = vxb(j) * A / (sq(c) * B);
      } else if (i == n) {
        m[xs(n)] = c * vx(n);
      } else {
        pair_action(m, i, p[i], p[i + 1]);
      }
      break;
    case TypeLabel::A2dag:
      if (i == 0) {
        Expr A = c * vx(0) + p[1], B = vx(0) + p[1];
        m[xs(0)] = vx(0) * sq(A) / (c * sq(B));
        for (int j = 1; j <= n; ++j) m[xs(j)] = vx(j) * A / (c * B);
        for (int j = 1; j <= n - 1; ++j) m[xbs(j)] = vxb(j) * A / (c * B);
      } else if (i == n) {
        m[xs(n)] = c * vx(n);
      } else {
        pair_action(m, i, p[i], p[i + 1]);
      }
      break;
    default:
      throw Error("label has no chart actions");
  }
  return m;
}

Expr geom_eps(TypeLabel t, int n, int i, Chart chart) {
  require_chart(t, chart);
  cartan_data(t, n);
  if (chart == Chart::second) {
    if (i < 0 || i > n - 1)
      throw IndexError("second-chart statistics support indices 0..n-1");
    auto q = second_pairs(n);
    if (i == 0) return sq(vy(1)) / vy(0);
    Expr top = i <= n - 2 ? vy(i + 1) : sq(vy(n));
    return (top / vy(i)) * (one() + q[i - 1] / q[i]);
  }
  if (i < 0 || i > n) throw IndexError("statistic index out of range");
  auto p = main_pairs(t, n);
  switch (t) {
    case TypeLabel::A1:
      if (i == 0) return vx(1);
      if (i == n) return one() / vx(n);
      return vx(i + 1) / vx(i);
    case TypeLabel::B1:
      if (i == 0) return (p[1] + p[2]) / vx(1);
      if (i == n) return vx(n - 1) / vx(n);
      if (i == 1) return (one() / vx(1)) * (one() + p[2] / p[1]);
      return (vx(i - 1) / vx(i)) * (one() + p[i + 1] / p[i]);
    case TypeLabel::C1:
      if (i == 0) return (one() / vx(0)) * sq(one() + p[1] / vx(0));
      if (i == n) return sq(vx(n - 1)) / vx(n);
      return (vx(i - 1) / vx(i)) * (one() + p[i + 1] / p[i]);
    case TypeLabel::D1:
      if (i == 0) return (p[1] + p[2]) / vx(1);
      if (i == n - 1) return vx(n - 2) / vx(n - 1);
      if (i == n) return vx(n - 2) / vx(n);
      if (i == 1) return (one() / vx(1)) * (one() + p[2] / p[1]);
      return (vx(i - 1) / vx(i)) * (one() + p[i + 1] / p[i]);
    case TypeLabel::A2odd:
      if (i == 0) return (p[1] + p[2]) / vx(1);
      if (i == n) return sq(vx(n - 1)) / vx(n);
      if (i == 1) return (one() / vx(1)) * (one() + p[2] / p[1]);
      return (vx(i - 1) / vx(i)) * (one() + p[i + 1] / p[i]);
    case TypeLabel::D2:
      if (i == 0) return (p[0] + p[1]) / Expr::power(vx(0), 3);
      if (i == n) return vx(n - 1) / vx(n);
      if (i == 1) return (p[0] / vx(1)) * (one() + p[2] / p[1]);
      return (vx(i - 1) / vx(i)) * (one() + p[i + 1] / p[i]);
    case TypeLabel::A2dag:
      if (i == 0) return (one() / vx(0)) * sq(one() + p[1] / vx(0));
      if (i == n) return vx(n - 1) / vx(n);
      return (vx(i - 1) / vx(i)) * (one() + p[i + 1] / p[i]);
    default:
      throw Error("label has no chart statistics");
  }
}

Expr geom_gamma(TypeLabel t, int n, int i, Chart chart) {
  require_chart(t, chart);
  cartan_data(t, n);
  if (chart == Chart::second) {
    if (i < 0 || i > n - 1)
      throw IndexError("second-chart statistics support indices 0..n-1");
    auto q = second_pairs(n);
    if (i == 0) return sq(vy(0)) / sq(q[1]);
    return sq(q[i]) / (q[i - 1] * q[i + 1]);
  }
  if (i < 0 || i > n) throw IndexError("statistic index out of range");
  auto p = main_pairs(t, n);
  switch (t) {
    case TypeLabel::A1:
      if (i == 0) return one() / (vx(1) * vx(n));
      if (i == 1) return sq(vx(1)) / vx(2);
      if (i == n) return sq(vx(n)) / vx(n - 1);
      return sq(vx(i)) / (vx(i - 1) * vx(i + 1));
    case TypeLabel::B1: {
      if (i == 0) return one() / p[2];
      if (i == n) return sq(vx(n)) / p[n - 1];
      long g1e = faults::armed("chart-b1-gamma1-exponent") ? 3 : 2;
      if (i == 1) return Expr::power(p[1], g1e) / p[2];
      return sq(p[i]) / (p[i - 1] * p[i + 1]);
    }
    case TypeLabel::C1:
      if (i == 0) return sq(vx(0)) / sq(p[1]);
      if (i == n) return sq(vx(n)) / sq(p[n - 1]);
      return sq(p[i]) / (p[i - 1] * p[i + 1]);
    case TypeLabel::D1:
      if (i == 0) return one() / p[2];
      if (i == 1) return sq(p[1]) / p[2];
      if (i == n - 1) return sq(vx(n - 1)) / p[n - 2];
      if (i == n) return sq(vx(n)) / p[n - 2];
      return sq(p[i]) / (p[i - 1] * p[i + 1]);
    case TypeLabel::A2odd:
      if (i == 0) return one() / p[2];
      if (i == 1) return sq(p[1]) / p[2];
      if (i == n) return sq(vx(n)) / sq(p[n - 1]);
      return sq(p[i]) / (p[i - 1] * p[i + 1]);
    case TypeLabel::D2:
      if (i == 0) return p[0] / p[1];
      if (i == n) return p[n] / p[n - 1];
      return sq(p[i]) / (p[i - 1] * p[i + 1]);
    case TypeLabel::A2dag:
      if (i == 0) return sq(vx(0)) / sq(p[1]);
      if (i == n) return sq(vx(n)) / p[n - 1];
      return sq(p[i]) / (p[i - 1] * p[i + 1]);
    default:
      throw Error("label has no chart statistics");
  }
}

SigmaBar sigma_bar(TypeLabel t, int n) {
  require_chart(t, Chart::main);
  cartan_data(t, n);
  SigmaBar sb;
  sb.from = Chart::main;
  sb.to = t == TypeLabel::A2dag ? Chart::second : Chart::main;
  sb.a = sigma_scalar(t, n);
  auto p = main_pairs(t, n);
  auto xi = xi_list(t, n);
  switch (t) {
    case TypeLabel::A1:
      sb.map[xs(1)] = one() / vx(n);
      for (int i = 2; i <= n; ++i) sb.map[xs(i)] = vx(i - 1) / vx(n);
      break;
    case TypeLabel::B1:
    case TypeLabel::D1:
      for (const auto& v : chart_vars(t, n)) sb.map[v] = Expr::var(v) / p[1];
      break;
    case TypeLabel::A2odd:
      for (int i = 1; i <= n - 1; ++i) {
        sb.map[xs(i)] = vx(i) / p[1];
        sb.map[xbs(i)] = vxb(i) / p[1];
      }
      sb.map[xs(n)] = vx(n) / sq(p[1]);
      break;
    case TypeLabel::C1:
      sb.map[xs(0)] = sq(sb.a) * vx(n);
      for (int i = 1; i <= n - 1; ++i) {
        sb.map[xs(i)] = sb.a * xi[n - i];
        sb.map[xbs(i)] = sb.a * p[n - i] / xi[n - i];
      }
      sb.map[xs(n)] = sq(sb.a) * vx(0);
      break;
    case TypeLabel::D2:
      sb.map[xs(0)] = sb.a * vx(n);
      for (int i = 1; i <= n - 1; ++i) {
        sb.map[xs(i)] = sb.a * xi[n - i];
        sb.map[xbs(i)] = sb.a * p[n - i] / xi[n - i];
      }
      sb.map[xs(n)] = sb.a * vx(0);
      break;
    case TypeLabel::A2dag:
      sb.map[ws(0)] = faults::armed("chart-a2dag-sigmabar-y0-square")
                          ? sb.a * vx(0)
                          : sq(sb.a) * vx(0);
      for (int i = 1; i <= n - 1; ++i) {
        sb.map[ws(i)] = sb.a * xi[i];
        sb.map[wbs(i)] = sb.a * p[i] / xi[i];
      }
      sb.map[ws(n)] = sb.a * vx(n);
      break;
    default:
      throw Error("label has no chart symmetry");
  }
  return sb;
}

SigmaBar sigma_bar_inverse(TypeLabel t, int n) {
  require_chart(t, Chart::main);
  cartan_data(t, n);
  if (t == TypeLabel::A1) {
    SigmaBar sb;
    sb.from = sb.to = Chart::main;
    sb.map[xs(n)] = one() / vx(1);
    for (int j = 1; j <= n - 1; ++j) sb.map[xs(j)] = vx(j + 1) / vx(1);
    sb.a = vx(1);  // the forward scalar re-expressed on the image side
    return sb;
  }
  if (t != TypeLabel::A2dag) return sigma_bar(t, n);  // involutions
  SigmaBar sb;
  sb.from = Chart::second;
  sb.to = Chart::main;
  auto q = second_pairs(n);
  auto eta = eta_list(n);
  Expr a = q[0] * vy(1) / (q[0] + q[1]);
  sb.a = a;
  sb.map[xs(0)] = eta[1] / a;
  for (int i = 1; i <= n - 2; ++i) sb.map[xs(i)] = eta[i + 1] / a;
  sb.map[xs(n - 1)] = eta[n] / a;
  sb.map[xs(n)] = vy(n) / a;
  for (int i = 1; i <= n - 2; ++i)
    sb.map[xbs(i)] = q[i] * vy(i + 1) / ((q[i] + q[i + 1]) * a);
  sb.map[xbs(n - 1)] = q[n - 1] * sq(vy(n)) / ((q[n - 1] + q[n]) * a);
  return sb;
}

int conjugating_index(TypeLabel t, int n) {
  require_chart(t, Chart::main);
  switch (t) {
    case TypeLabel::A1:
    case TypeLabel::B1:
    case TypeLabel::D1:
    case TypeLabel::A2odd:
      return 1;
    case TypeLabel::C1:
    case TypeLabel::D2:
      return n;
    case TypeLabel::A2dag:
      return 0;
    default:
      throw Error("label has no conjugated zero-action");
  }
}

Chart conjugating_chart(TypeLabel t) {
  return t == TypeLabel::A2dag ? Chart::second : Chart::main;
}

ChartMap conjugated_e0(TypeLabel t, int n) {
  SigmaBar fwd = sigma_bar(t, n);
  SigmaBar inv = sigma_bar_inverse(t, n);
  ChartMap ej = geom_e(t, n, conjugating_index(t, n), conjugating_chart(t));
  return compose_map(inv.map, compose_map(ej, fwd.map));
}

Expr apply_map(const Expr& e, const ChartMap& m) { return e.subst(m); }

ChartMap compose_map(const ChartMap& later, const ChartMap& first) {
  ChartMap out;
  for (const auto& [k, e] : later) out[k] = e.subst(first);
  return out;
}

}  // namespace agc
