#include "agc/crystal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace agc {

bool Elem::operator==(const Elem& o) const {
  return coords == o.coords && parts == o.parts;
}

bool Elem::operator<(const Elem& o) const {
  if (coords != o.coords) return coords < o.coords;
  return parts < o.parts;
}

std::string Elem::str() const {
  if (is_leaf()) {
    std::string out = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (i) out += ",";
      out += rat_str(coords[i]);
    }
    return out + ")";
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "(x)";
    out += parts[i].str();
  }
  return out;
}

CrystalOps tlambda_ops(std::vector<long long> lambda) {
  CrystalOps ops;
  ops.num_idx = (int)lambda.size();
  std::vector<Rat> marker(lambda.begin(), lambda.end());
  ops.wt = [lambda](const Elem&) { return lambda; };
  ops.eps = [](int, const Elem&) { return ExtInt::minus_inf(); };
  ops.phi = [](int, const Elem&) { return ExtInt::minus_inf(); };
  ops.e = [](int, const Elem&) { return std::nullopt; };
  ops.f = [](int, const Elem&) { return std::nullopt; };
  ops.validate = [marker](const Elem& b) {
    return b.is_leaf() && b.coords == marker;
  };
  return ops;
}

CrystalOps tensor_ops(const CrystalOps& A, const CrystalOps& B) {
  if (A.num_idx != B.num_idx) throw Error("tensor factors disagree on index set");
  CrystalOps ops;
  ops.num_idx = A.num_idx;
  auto split = [](const Elem& b) -> std::pair<const Elem&, const Elem&> {
    if (b.parts.size() != 2) throw Error("expected a two-factor tensor element");
    return {b.parts[0], b.parts[1]};
  };
  ops.wt = [A, B, split](const Elem& b) {
    auto [x, y] = split(b);
    auto w = A.wt(x);
    auto w2 = B.wt(y);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += w2[i];
    return w;
  };
  ops.eps = [A, B, split](int i, const Elem& b) {
    auto [x, y] = split(b);
    return max(A.eps(i, x), B.eps(i, y) - A.wt(x)[i]);
  };
  ops.phi = [A, B, split](int i, const Elem& b) {
    auto [x, y] = split(b);
    return max(B.phi(i, y), A.phi(i, x) + B.wt(y)[i]);
  };
  ops.e = [A, B, split](int i, const Elem& b) -> std::optional<Elem> {
    auto [x, y] = split(b);
    if (A.phi(i, x) < B.eps(i, y)) {
      auto y2 = B.e(i, y);
      if (!y2) return std::nullopt;
      return Elem::tensor({x, *y2});
    }
    auto x2 = A.e(i, x);
    if (!x2) return std::nullopt;
    return Elem::tensor({*x2, y});
  };
  ops.f = [A, B, split](int i, const Elem& b) -> std::optional<Elem> {
    auto [x, y] = split(b);
    if (A.phi(i, x) > B.eps(i, y)) {
      auto x2 = A.f(i, x);
      if (!x2) return std::nullopt;
      return Elem::tensor({*x2, y});
    }
    auto y2 = B.f(i, y);
    if (!y2) return std::nullopt;
    return Elem::tensor({x, *y2});
  };
  ops.validate = [A, B](const Elem& b) {
    return b.parts.size() == 2 && A.validate(b.parts[0]) && B.validate(b.parts[1]);
  };
  return ops;
}

namespace {

std::string wt_str(const std::vector<long long>& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w[i]);
  }
  return out + "]";
}

}  // namespace

Report check_axioms(const CrystalOps& ops, const CartanData& cd,
                    const std::vector<Elem>& sample) {
  if (ops.num_idx != cd.n + 1)
    throw Error("crystal and Cartan data disagree on index set");
  Report rep;
  rep.check = "crystal-axioms";
  rep.type = type_name(cd.type);
  rep.rank = cd.n;
  rep.mode = "sampled";
  rep.sample_size = sample.size();

  for (const Elem& b : sample) {
    if (!ops.validate(b)) {
      rep.fail(b.str(), -1, "validate", "member of the crystal");
      continue;
    }
    auto w = ops.wt(b);
    for (int i = 0; i <= cd.n; ++i) {
      ExtInt ep = ops.eps(i, b), ph = ops.phi(i, b);

      // phi - eps = <alpha_i^vee, wt>, with -inf only in matched pairs
      if (ep.finite != ph.finite) {
        rep.fail(b.str(), i, "eps " + ep.str(), "phi " + ph.str());
      } else if (ep.finite && ph.v - ep.v != w[i]) {
        rep.fail(b.str(), i, "phi-eps=" + std::to_string(ph.v - ep.v),
                 "<ai*,wt>=" + std::to_string(w[i]));
      }

      auto up = ops.e(i, b);
      if (!ep.finite && up) rep.fail(b.str(), i, "e defined", "undefined (eps=-inf)");
      if (up) {
        if (!ops.validate(*up)) rep.fail(up->str(), i, "e image validates", "member");
        auto back = ops.f(i, *up);
        if (!back || !(*back == b))
          rep.fail(b.str(), i, "f(e(b))=" + (back ? back->str() : "null"), b.str());
        if (!(ops.eps(i, *up) == ep - 1))
          rep.fail(b.str(), i, "eps(e(b))=" + ops.eps(i, *up).str(),
                   (ep - 1).str());
        if (!(ops.phi(i, *up) == ph + 1))
          rep.fail(b.str(), i, "phi(e(b))=" + ops.phi(i, *up).str(),
                   (ph + 1).str());
        auto w2 = ops.wt(*up);
        for (int j = 0; j <= cd.n; ++j)
          if (w2[j] != w[j] + cd.a(j, i)) {
            rep.fail(b.str(), i, "wt(e(b))=" + wt_str(w2), "wt(b)+cl(a_i)");
            break;
          }
      }

      auto dn = ops.f(i, b);
      if (!ph.finite && dn) rep.fail(b.str(), i, "f defined", "undefined (phi=-inf)");
      if (dn) {
        if (!ops.validate(*dn)) rep.fail(dn->str(), i, "f image validates", "member");
        auto back = ops.e(i, *dn);
        if (!back || !(*back == b))
          rep.fail(b.str(), i, "e(f(b))=" + (back ? back->str() : "null"), b.str());
        if (!(ops.eps(i, *dn) == ep + 1))
          rep.fail(b.str(), i, "eps(f(b))=" + ops.eps(i, *dn).str(),
                   (ep + 1).str());
        if (!(ops.phi(i, *dn) == ph - 1))
          rep.fail(b.str(), i, "phi(f(b))=" + ops.phi(i, *dn).str(),
                   (ph - 1).str());
        auto w2 = ops.wt(*dn);
        for (int j = 0; j <= cd.n; ++j)
          if (w2[j] != w[j] - cd.a(j, i)) {
            rep.fail(b.str(), i, "wt(f(b))=" + wt_str(w2), "wt(b)-cl(a_i)");
            break;
          }
      }
    }
  }
  return rep;
}

std::string graph_dot(const CrystalOps& ops, const std::vector<Elem>& seeds,
                      int radius) {
  std::set<Elem> visited(seeds.begin(), seeds.end());
  std::vector<Elem> frontier(visited.begin(), visited.end());
  for (int step = 0; step < radius; ++step) {
    std::vector<Elem> next;
    for (const Elem& b : frontier)
      for (int i = 0; i < ops.num_idx; ++i)
        for (auto dir : {ops.e(i, b), ops.f(i, b)})
          if (dir && !visited.count(*dir)) {
            visited.insert(*dir);
            next.push_back(*dir);
          }
    frontier = std::move(next);
  }

  std::ostringstream out;
  out << "digraph crystal {\n  rankdir=TB;\n";
  for (const Elem& b : visited)
    out << "  \"" << b.str() << "\";\n";
  for (const Elem& b : visited)
    for (int i = 0; i < ops.num_idx; ++i) {
      auto dn = ops.f(i, b);
      if (dn && visited.count(*dn))
        out << "  \"" << b.str() << "\" -> \"" << dn->str() << "\" [label=\""
            << i << "\"];\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace agc
