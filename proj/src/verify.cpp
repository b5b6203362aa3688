#include "agc/verify.hpp"

#include <random>
#include <set>

#include "agc/b_infinity.hpp"
#include "agc/chart.hpp"
#include "agc/crystal.hpp"
#include "agc/schubert.hpp"
#include "agc/ud_crystal.hpp"

namespace agc {

namespace {

bool cell_only(TypeLabel t) { return t == TypeLabel::A2even; }

ChartMap action(TypeLabel t, int n, int i) {
  if (cell_only(t)) {
    CartanData cd = cartan_data(t, n);
    return schubert_e(cd, cd.word_w1, i);
  }
  return geom_e(t, n, i);
}

Expr action_eps(TypeLabel t, int n, int i) {
  if (cell_only(t)) {
    CartanData cd = cartan_data(t, n);
    return schubert_eps(cd, cd.word_w1, i);
  }
  return geom_eps(t, n, i);
}

Expr action_gamma(TypeLabel t, int n, int i) {
  if (cell_only(t)) {
    CartanData cd = cartan_data(t, n);
    return schubert_gamma(cd, cd.word_w1, i);
  }
  return geom_gamma(t, n, i);
}

ChartMap with_c(const ChartMap& m, const Expr& carg) {
  std::map<std::string, Expr> s{{"c", carg}};
  ChartMap out;
  for (const auto& [k, e] : m) out[k] = e.subst(s);
  return out;
}

ChartMap chain(const std::vector<ChartMap>& ms) {
  ChartMap acc = ms.back();
  for (std::size_t k = ms.size() - 1; k-- > 0;) acc = compose_map(ms[k], acc);
  return acc;
}

Expr cpow(const Expr& c, int k) {
  if (k == 0) return Expr::constant(1);
  Expr p = k == 1 || k == -1 ? c : Expr::power(c, k > 0 ? k : -k);
  return k > 0 ? p : Expr::constant(1) / p;
}

std::string trunc(std::string s) {
  if (s.size() > 160) {
    s.resize(157);
    s += "...";
  }
  return s;
}

std::uint64_t mix_seed(std::uint64_t seed, TypeLabel t, int n, int salt) {
  return seed * 1000003ull + 8191ull * (std::uint64_t)salt +
         131ull * (std::uint64_t)(int)t + (std::uint64_t)n;
}

bool resolve_symbolic(const VerifyOptions& opt) {
  if (opt.mode.empty() || opt.mode == "symbolic") return true;
  if (opt.mode == "sampled") return false;
  throw Error("unknown mode \"" + opt.mode +
              "\" (expected \"symbolic\" or \"sampled\")");
}

void require_sampled(const VerifyOptions& opt, const std::string& check) {
  if (opt.mode.empty() || opt.mode == "sampled") return;
  if (opt.mode == "symbolic")
    throw Error(check + " draws random elements and has no symbolic mode");
  throw Error("unknown mode \"" + opt.mode +
              "\" (expected \"symbolic\" or \"sampled\")");
}

// Comparator for the identity campaigns: symbolic via equal(), sampled
// via exact evaluation at random nonzero integer points (rejecting the
// measure-zero denominator hits, 1000 retries per point).
struct Cmp {
  bool symbolic = true;
  int trials = 100;
  std::mt19937_64 rng{0};
  std::string witness;

  std::size_t weight() const { return symbolic ? 1 : (std::size_t)trials; }

  bool operator()(const Expr& a, const Expr& b) {
    witness.clear();
    if (symbolic) return equal(a, b);
    std::set<std::string> vs = a.vars();
    for (auto& v : b.vars()) vs.insert(v);
    std::uniform_int_distribution<long> pick(-1000000, 1000000);
    for (int t = 0; t < trials; ++t) {
      for (int attempt = 0; attempt < 1000; ++attempt) {
        std::map<std::string, Rat> env;
        for (auto& v : vs) {
          long x = pick(rng);
          if (x == 0) x = 1;
          env[v] = Rat(x);
        }
        try {
          if (a.eval(env) != b.eval(env)) {
            witness = " at {";
            for (auto& [k, val] : env) {
              if (witness.size() > 5) witness += ",";
              witness += k + ":" + rat_str(val);
            }
            witness += "}";
            return false;
          }
          break;
        } catch (const DivisionByZero&) {
          continue;
        }
      }
    }
    return true;
  }
};

Cmp make_cmp(const VerifyOptions& opt, std::uint64_t seed) {
  Cmp cmp;
  cmp.symbolic = resolve_symbolic(opt);
  cmp.trials = opt.trials;
  if (!cmp.symbolic) cmp.rng.seed(seed);
  return cmp;
}

Report base(const std::string& check, TypeLabel t, int n, const Cmp& cmp,
            std::uint64_t seed) {
  Report r;
  r.check = check;
  r.type = type_name(t);
  r.rank = n;
  r.mode = cmp.symbolic ? "symbolic" : "sampled";
  if (!cmp.symbolic) r.seed = seed;
  return r;
}

void compare_scalar(Report& r, Cmp& cmp, const std::string& element, int index,
                    const Expr& le, const Expr& re) {
  r.sample_size += cmp.weight();
  if (!cmp(le, re))
    r.fail(element + cmp.witness, index, trunc(le.str()), trunc(re.str()));
}

void compare_maps(Report& r, Cmp& cmp, const std::string& element,
                  const ChartMap& L, const ChartMap& R) {
  for (const auto& [k, le] : L) {
    auto it = R.find(k);
    if (it == R.end()) {
      r.sample_size += cmp.weight();
      r.fail(element + " @" + k, -1, trunc(le.str()), "<absent>");
      continue;
    }
    compare_scalar(r, cmp, element + " @" + k, -1, le, it->second);
  }
}

void expect_identity(Report& r, Cmp& cmp, const std::string& element,
                     const ChartMap& m) {
  for (const auto& [k, e] : m)
    compare_scalar(r, cmp, element + " @" + k, -1, e, Expr::var(k));
}

std::string pt_str(const LatticePoint& p) {
  std::string s = "{";
  for (const auto& [k, v] : p) {
    if (s.size() > 1) s += ",";
    s += k + ":" + std::to_string(v);
  }
  return s + "}";
}

std::string vec_str(const std::vector<Rat>& b) {
  std::string s = "(";
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (k) s += ",";
    s += rat_str(b[k]);
  }
  return s + ")";
}

}  // namespace

Report verify_verma(TypeLabel t, int n, const VerifyOptions& opt) {
  std::uint64_t seed = mix_seed(opt.seed, t, n, 10);
  Cmp cmp = make_cmp(opt, seed);
  Report r = base("verma", t, n, cmp, seed);
  CartanData cd = cartan_data(t, n);
  Expr c1 = Expr::var("c1"), c2 = Expr::var("c2");
  std::map<int, ChartMap> act;
  for (int i = 0; i <= n; ++i) act[i] = action(t, n, i);
  auto E = [&](int k, const Expr& c) { return with_c(act.at(k), c); };
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      int aij = cd.a(i, j), aji = cd.a(j, i);
      std::string el =
          "relation(" + std::to_string(i) + "," + std::to_string(j) + ")";
      std::vector<ChartMap> L, R;
      if (aij == 0 && aji == 0) {
        L = {E(i, c1), E(j, c2)};
        R = {E(j, c2), E(i, c1)};
      } else if (aij == -1 && aji == -1) {
        L = {E(i, c1), E(j, c1 * c2), E(i, c2)};
        R = {E(j, c2), E(i, c1 * c2), E(j, c1)};
      } else if ((aij == -2 && aji == -1) || (aij == -1 && aji == -2)) {
        int I = aij == -2 ? i : j, J = aij == -2 ? j : i;
        Expr cc = c1 * c1 * c2;
        L = {E(I, c1), E(J, cc), E(I, c1 * c2), E(J, c2)};
        R = {E(J, c2), E(I, c1 * c2), E(J, cc), E(I, c1)};
      } else if ((aij == -3 && aji == -1) || (aij == -1 && aji == -3)) {
        int I = aij == -3 ? i : j, J = aij == -3 ? j : i;
        Expr c13 = c1 * c1 * c1;
        L = {E(I, c1),           E(J, c13 * c2), E(I, c1 * c1 * c2),
             E(J, c13 * c2 * c2), E(I, c1 * c2), E(J, c2)};
        R = {E(J, c2),           E(I, c1 * c2), E(J, c13 * c2 * c2),
             E(I, c1 * c1 * c2), E(J, c13 * c2), E(I, c1)};
      } else {
        r.fail(el, -1,
               "pairing (" + std::to_string(aij) + "," + std::to_string(aji) +
                   ")",
               "no supported relation shape");
        continue;
      }
      compare_maps(r, cmp, el, chain(L), chain(R));
    }
  return r;
}

Report verify_geom_axioms(TypeLabel t, int n, const VerifyOptions& opt) {
  std::uint64_t seed = mix_seed(opt.seed, t, n, 11);
  Cmp cmp = make_cmp(opt, seed);
  Report r = base("geom-axioms", t, n, cmp, seed);
  CartanData cd = cartan_data(t, n);
  Expr c = Expr::var("c"), c1 = Expr::var("c1"), c2 = Expr::var("c2");
  auto run = [&](int i, const ChartMap& ei, const Expr& eps,
                 const std::vector<Expr>& gammas, const std::string& tag) {
    std::string is = std::to_string(i);
    expect_identity(r, cmp, tag + "unit@e_" + is,
                    with_c(ei, Expr::constant(1)));
    compare_maps(r, cmp, tag + "parameter-product@e_" + is,
                 compose_map(with_c(ei, c1), with_c(ei, c2)),
                 with_c(ei, c1 * c2));
    compare_scalar(r, cmp, tag + "eps-scaling@e_" + is, i, apply_map(eps, ei),
                   eps / c);
    for (int j = 0; j < (int)gammas.size(); ++j)
      compare_scalar(r, cmp,
                     tag + "character-scaling@e_" + is + "->gamma_" +
                         std::to_string(j),
                     j, apply_map(gammas[j], ei),
                     cpow(c, cd.a(i, j)) * gammas[j]);
  };
  std::vector<Expr> gammas;
  for (int j = 0; j <= n; ++j) gammas.push_back(action_gamma(t, n, j));
  for (int i = 0; i <= n; ++i)
    run(i, action(t, n, i), action_eps(t, n, i), gammas, "");
  if (t == TypeLabel::A2dag) {
    std::vector<Expr> g2;
    for (int j = 0; j <= n - 1; ++j)
      g2.push_back(geom_gamma(t, n, j, Chart::second));
    for (int i = 0; i <= n - 1; ++i)
      run(i, geom_e(t, n, i, Chart::second), geom_eps(t, n, i, Chart::second),
          g2, "second:");
  }
  if (!cell_only(t)) {
    // the zero-index eps is the classical one seen through the twist
    SigmaBar fwd = sigma_bar(t, n);
    Expr lhs = apply_map(
        geom_eps(t, n, conjugating_index(t, n), conjugating_chart(t)),
        fwd.map);
    compare_scalar(r, cmp, "zero-eps-via-twist", 0, lhs, geom_eps(t, n, 0));
  }
  return r;
}

Report verify_sigma(TypeLabel t, int n, const VerifyOptions& opt) {
  std::uint64_t seed = mix_seed(opt.seed, t, n, 12);
  Cmp cmp = make_cmp(opt, seed);
  Report r = base("sigma", t, n, cmp, seed);
  SigmaBar fwd = sigma_bar(t, n);
  SigmaBar inv = sigma_bar_inverse(t, n);
  // defining proportionality on the basis vectors
  auto src = v_closed(t, n, fwd.from);
  auto dst = v_closed(t, n, fwd.to);
  auto perm = sigma_basis(t, n);
  for (std::size_t k = 0; k < src.size(); ++k)
    compare_scalar(r, cmp, "defining-equation@slot" + std::to_string(k),
                   (int)k, apply_map(dst[perm[k]], fwd.map), fwd.a * src[k]);
  // two-sided inverse (for the involutive labels this is the involution)
  expect_identity(r, cmp, "inverse-then-twist", compose_map(inv.map, fwd.map));
  expect_identity(r, cmp, "twist-then-inverse", compose_map(fwd.map, inv.map));
  // conjugating the distinguished index reproduces the zero action
  compare_maps(r, cmp, "conjugated-zero-action", conjugated_e0(t, n),
               geom_e(t, n, 0));
  return r;
}

Report verify_chart(TypeLabel t, int n, const VerifyOptions& opt) {
  std::uint64_t seed = mix_seed(opt.seed, t, n, 13);
  Cmp cmp = make_cmp(opt, seed);
  Report r = base("chart", t, n, cmp, seed);
  std::vector<Chart> charts = {Chart::main};
  if (t == TypeLabel::A2dag) charts.push_back(Chart::second);
  for (Chart ch : charts) {
    auto vm = v_matrix(t, n, ch);
    auto vc = v_closed(t, n, ch);
    std::string tag = ch == Chart::main ? "main" : "second";
    for (std::size_t k = 0; k < vm.size(); ++k) {
      if (!vm[k].valid() || !vc[k].valid()) {
        r.sample_size += cmp.weight();
        if (vm[k].valid() != vc[k].valid())
          r.fail(tag + "-vector@slot" + std::to_string(k), (int)k,
                 vm[k].valid() ? trunc(vm[k].str()) : "<zero>",
                 vc[k].valid() ? trunc(vc[k].str()) : "<zero>");
        continue;
      }
      compare_scalar(r, cmp, tag + "-vector@slot" + std::to_string(k), (int)k,
                     vm[k], vc[k]);
    }
  }
  // the twisted vector is proportional to the permuted one
  SigmaBar fwd = sigma_bar(t, n);
  auto src = v_closed(t, n, fwd.from);
  auto dst = v_closed(t, n, fwd.to);
  auto perm = sigma_basis(t, n);
  for (std::size_t k = 0; k < src.size(); ++k)
    compare_scalar(r, cmp, "twisted-vector@slot" + std::to_string(k), (int)k,
                   apply_map(dst[perm[k]], fwd.map), fwd.a * src[k]);
  return r;
}

Report verify_schubert(TypeLabel t, int n, const VerifyOptions& opt) {
  std::uint64_t seed = mix_seed(opt.seed, t, n, 14);
  Cmp cmp = make_cmp(opt, seed);
  Report r = base("schubert", t, n, cmp, seed);
  CartanData cd = cartan_data(t, n);
  for (int i = 1; i <= n; ++i) {
    compare_maps(r, cmp, "induced-action@" + std::to_string(i),
                 schubert_e(cd, cd.word_w1, i), geom_e(t, n, i));
    compare_scalar(r, cmp, "induced-eps@" + std::to_string(i), i,
                   schubert_eps(cd, cd.word_w1, i), geom_eps(t, n, i));
  }
  for (int i = 0; i <= n; ++i)
    compare_scalar(r, cmp, "induced-character@" + std::to_string(i), i,
                   schubert_gamma(cd, cd.word_w1, i), geom_gamma(t, n, i));
  if (t == TypeLabel::A2dag) {
    for (int i = 0; i <= n - 1; ++i) {
      compare_maps(r, cmp, "second:induced-action@" + std::to_string(i),
                   schubert_e(cd, cd.word_w2, i, "y"),
                   geom_e(t, n, i, Chart::second));
      compare_scalar(r, cmp, "second:induced-eps@" + std::to_string(i), i,
                     schubert_eps(cd, cd.word_w2, i, "y"),
                     geom_eps(t, n, i, Chart::second));
      compare_scalar(r, cmp, "second:induced-character@" + std::to_string(i),
                     i, schubert_gamma(cd, cd.word_w2, i, "y"),
                     geom_gamma(t, n, i, Chart::second));
    }
  }
  return r;
}

Report verify_ud(TypeLabel t, int n, const VerifyOptions& opt) {
  require_sampled(opt, "ud");
  Report r;
  r.check = "ud";
  r.type = type_name(t);
  r.rank = n;
  r.mode = "sampled";
  r.seed = mix_seed(opt.seed, t, n, 0);
  std::mt19937_64 rng(r.seed);
  cartan_data(t, n);
  for (int trial = 0; trial < opt.trials; ++trial) {
    LatticePoint p = random_lattice_point(t, n, rng, opt.box);
    for (int i = 0; i <= n; ++i) {
      ++r.sample_size;
      if (ud_e(t, n, i, p) != trop_e(t, n, i, p, 1))
        r.fail(pt_str(p), i, pt_str(ud_e(t, n, i, p)),
               pt_str(trop_e(t, n, i, p, 1)));
      ++r.sample_size;
      if (ud_f(t, n, i, p) != trop_e(t, n, i, p, -1))
        r.fail(pt_str(p), i, pt_str(ud_f(t, n, i, p)),
               pt_str(trop_e(t, n, i, p, -1)));
      ++r.sample_size;
      if (ud_eps(t, n, i, p) != trop_eps(t, n, i, p))
        r.fail(pt_str(p), i, std::to_string(ud_eps(t, n, i, p)),
               std::to_string(trop_eps(t, n, i, p)));
      ++r.sample_size;
      if (ud_wt(t, n, i, p) != trop_wt(t, n, i, p))
        r.fail(pt_str(p), i, std::to_string(ud_wt(t, n, i, p)),
               std::to_string(trop_wt(t, n, i, p)));
    }
  }
  return r;
}

Report verify_mu(TypeLabel t, int n, const VerifyOptions& opt) {
  require_sampled(opt, "mu");
  Report r;
  r.check = "mu";
  r.type = type_name(t);
  r.rank = n;
  r.mode = "sampled";
  r.seed = mix_seed(opt.seed, t, n, 1);
  std::mt19937_64 rng(r.seed);
  TypeLabel d = langlands_dual(t);
  cartan_data(t, n);
  for (int trial = 0; trial < opt.trials; ++trial) {
    LatticePoint p = random_lattice_point(t, n, rng, opt.box);
    std::vector<Rat> b = mu(t, n, p);
    ++r.sample_size;
    if (!binf_valid(d, n, b)) {
      r.fail(pt_str(p), -1, vec_str(b), "a valid element of the dual family");
      continue;
    }
    ++r.sample_size;
    try {
      if (mu_inverse(t, n, b) != p)
        r.fail(pt_str(p), -1, pt_str(mu_inverse(t, n, b)), pt_str(p));
    } catch (const Error& e) {
      r.fail(pt_str(p), -1, e.what(), "an exact inverse image");
    }
    std::vector<long long> w = binf_wt(d, n, b);
    for (int i = 0; i <= n; ++i) {
      ++r.sample_size;
      if (mu(t, n, ud_e(t, n, i, p)) != binf_e(d, n, i, b))
        r.fail(pt_str(p), i, vec_str(mu(t, n, ud_e(t, n, i, p))),
               vec_str(binf_e(d, n, i, b)));
      ++r.sample_size;
      if (mu(t, n, ud_f(t, n, i, p)) != binf_f(d, n, i, b))
        r.fail(pt_str(p), i, vec_str(mu(t, n, ud_f(t, n, i, p))),
               vec_str(binf_f(d, n, i, b)));
      ++r.sample_size;
      if (ud_eps(t, n, i, p) != binf_eps(d, n, i, b))
        r.fail(pt_str(p), i, std::to_string(ud_eps(t, n, i, p)),
               std::to_string(binf_eps(d, n, i, b)));
      ++r.sample_size;
      if (ud_phi(t, n, i, p) != binf_phi(d, n, i, b))
        r.fail(pt_str(p), i, std::to_string(ud_phi(t, n, i, p)),
               std::to_string(binf_phi(d, n, i, b)));
      ++r.sample_size;
      if (ud_wt(t, n, i, p) != w[i])
        r.fail(pt_str(p), i, std::to_string(ud_wt(t, n, i, p)),
               std::to_string(w[i]));
    }
  }
  for (int trial = 0; trial < opt.trials; ++trial) {
    std::vector<Rat> b = random_belt(d, n, rng, opt.box);
    ++r.sample_size;
    try {
      if (mu(t, n, mu_inverse(t, n, b)) != b)
        r.fail(vec_str(b), -1, vec_str(mu(t, n, mu_inverse(t, n, b))),
               vec_str(b));
    } catch (const Error& e) {
      r.fail(vec_str(b), -1, e.what(), "an exact inverse image");
    }
  }
  return r;
}

Report verify_binfty(TypeLabel t, int n, const VerifyOptions& opt) {
  require_sampled(opt, "binfty");
  Report r;
  r.check = "binfty";
  r.type = type_name(t);
  r.rank = n;
  r.mode = "sampled";
  r.seed = mix_seed(opt.seed, t, n, 2);
  std::mt19937_64 rng(r.seed);
  CartanData cd = cartan_data(t, n);
  CrystalOps ops = binf_ops(t, n);
  std::vector<Elem> sample;
  for (int k = 0; k < opt.trials; ++k)
    sample.push_back(Elem::leaf(random_belt(t, n, rng, opt.box)));
  r.absorb(check_axioms(ops, cd, sample));
  CrystalOps pair_ops = tensor_ops(ops, ops);
  std::vector<Elem> pairs;
  int npairs = opt.trials / 4 > 8 ? opt.trials / 4 : 8;
  for (int k = 0; k < npairs; ++k)
    pairs.push_back(Elem::tensor({Elem::leaf(random_belt(t, n, rng, opt.box)),
                                  Elem::leaf(random_belt(t, n, rng, opt.box))}));
  r.absorb(check_axioms(pair_ops, cd, pairs));
  return r;
}

Report verify_check(const std::string& name, TypeLabel t, int n,
                    const VerifyOptions& opt) {
  if (name == "verma") return verify_verma(t, n, opt);
  if (name == "geom-axioms") return verify_geom_axioms(t, n, opt);
  if (name == "sigma") return verify_sigma(t, n, opt);
  if (name == "chart") return verify_chart(t, n, opt);
  if (name == "schubert") return verify_schubert(t, n, opt);
  if (name == "ud") return verify_ud(t, n, opt);
  if (name == "mu") return verify_mu(t, n, opt);
  if (name == "binfty") return verify_binfty(t, n, opt);
  throw Error("unknown check: " + name);
}

const std::vector<std::string>& verify_check_names() {
  static const std::vector<std::string> names = {
      "verma", "geom-axioms", "sigma", "chart",
      "schubert", "ud", "mu", "binfty"};
  return names;
}

}  // namespace agc
