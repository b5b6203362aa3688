#include "agc/b_infinity.hpp"

#include <algorithm>

namespace agc {

namespace {

Rat pos(const Rat& x) { return x > 0 ? x : Rat(0); }

long long as_ll(const Rat& x) {
  if (!is_integer(x)) throw Error("expected an integer, got " + rat_str(x));
  return (long long)rat_num(x);
}

struct View {
  // 1-based access into the coordinate vector, matching the b_i naming
  TypeLabel t;
  int n;
  std::vector<Rat>& c;

  bool has_bar_n() const { return binf_dim(t, n) == 2 * n; }
  Rat& b(int i) { return c.at(i - 1); }
  Rat& bb(int i) { return c.at(binf_dim(t, n) - i); }
  Rat halfsum() const {
    Rat s(0);
    for (const Rat& x : c) s += x;
    return s;
  }
};

bool half_integer_slot(TypeLabel t, int n, int pos0) {
  // slots allowed to carry denominator 2 (positions of b_n and bar b_n)
  if (t == TypeLabel::B1 || t == TypeLabel::D2)
    return pos0 == n - 1 || pos0 == n;
  (void)n;
  return false;
}

}  // namespace

int binf_dim(TypeLabel t, int n) {
  switch (t) {
    case TypeLabel::A1: return n + 1;
    case TypeLabel::D1: return 2 * n - 1;
    case TypeLabel::B1:
    case TypeLabel::C1:
    case TypeLabel::A2odd:
    case TypeLabel::D2:
    case TypeLabel::A2even: return 2 * n;
    case TypeLabel::A2dag:
      throw Error("A2dag has no limit crystal family here; use its dual");
  }
  throw Error("unreachable");
}

bool binf_valid(TypeLabel t, int n, const std::vector<Rat>& bc) {
  if ((int)bc.size() != binf_dim(t, n)) return false;
  for (int k = 0; k < (int)bc.size(); ++k) {
    const Rat& x = bc[k];
    if (is_integer(x)) continue;
    if (rat_den(x) == 2 && half_integer_slot(t, n, k)) continue;
    return false;
  }
  std::vector<Rat> copy = bc;
  View v{t, n, copy};
  switch (t) {
    case TypeLabel::A1:
    case TypeLabel::D1:
    case TypeLabel::A2odd:
      return v.halfsum() == 0;
    case TypeLabel::B1:
      return v.halfsum() == 0 && is_integer(v.b(n) + v.bb(n));
    case TypeLabel::C1:
      return is_integer(v.halfsum() / 2);
    case TypeLabel::D2:
      return is_integer(v.b(n) + v.bb(n));
    case TypeLabel::A2even:
      return true;
    default:
      return false;
  }
}

std::vector<long long> binf_wt(TypeLabel t, int n, const std::vector<Rat>& bc) {
  std::vector<Rat> copy = bc;
  View v{t, n, copy};
  std::vector<Rat> w(n + 1, Rat(0));
  auto middle = [&](int lo, int hi) {
    for (int i = lo; i <= hi; ++i)
      w[i] = v.b(i) - v.bb(i) + v.bb(i + 1) - v.b(i + 1);
  };
  switch (t) {
    case TypeLabel::A1: {
      w[0] = v.b(n + 1) - v.b(1);
      for (int i = 1; i <= n; ++i) w[i] = v.b(i) - v.b(i + 1);
      break;
    }
    case TypeLabel::B1: {
      w[0] = v.bb(1) - v.b(1) + v.bb(2) - v.b(2);
      middle(1, n - 1);
      w[n] = 2 * (v.b(n) - v.bb(n));
      break;
    }
    case TypeLabel::C1: {
      w[0] = v.bb(1) - v.b(1);
      middle(1, n - 1);
      w[n] = v.b(n) - v.bb(n);
      break;
    }
    case TypeLabel::D1: {
      w[0] = v.bb(1) - v.b(1) + v.bb(2) - v.b(2);
      middle(1, n - 2);
      w[n - 1] = v.b(n - 1) - v.bb(n - 1) - v.b(n);
      w[n] = v.b(n - 1) - v.bb(n - 1) + v.b(n);
      break;
    }
    case TypeLabel::A2odd: {
      w[0] = v.bb(1) - v.b(1) + v.bb(2) - v.b(2);
      middle(1, n - 1);
      w[n] = v.b(n) - v.bb(n);
      break;
    }
    case TypeLabel::D2: {
      w[0] = 2 * (v.bb(1) - v.b(1));
      middle(1, n - 1);
      w[n] = 2 * (v.b(n) - v.bb(n));
      break;
    }
    case TypeLabel::A2even: {
      w[0] = 2 * (v.bb(1) - v.b(1));
      middle(1, n - 1);
      w[n] = v.b(n) - v.bb(n);
      break;
    }
    default:
      throw Error("no family for this label");
  }
  std::vector<long long> out(n + 1);
  for (int i = 0; i <= n; ++i) out[i] = as_ll(w[i]);
  return out;
}

long long binf_eps(TypeLabel t, int n, int i, const std::vector<Rat>& bc) {
  std::vector<Rat> copy = bc;
  View v{t, n, copy};
  Rat l = v.halfsum();
  Rat out;
  if (t == TypeLabel::A1) {
    out = i == 0 ? v.b(1) : v.b(i + 1);
    return as_ll(out);
  }
  if (i == 0) {
    switch (t) {
      case TypeLabel::B1:
      case TypeLabel::D1:
      case TypeLabel::A2odd:
        out = v.b(1) + pos(v.b(2) - v.bb(2));
        break;
      case TypeLabel::C1:
        out = -l / 2 + pos(v.b(1) - v.bb(1));
        break;
      case TypeLabel::D2:
      case TypeLabel::A2even:
        out = -l + 2 * pos(v.b(1) - v.bb(1));
        break;
      default:
        throw Error("no family for this label");
    }
  } else if (i == n) {
    switch (t) {
      case TypeLabel::B1:
      case TypeLabel::D2:
        out = 2 * v.bb(n);
        break;
      case TypeLabel::C1:
      case TypeLabel::A2odd:
      case TypeLabel::A2even:
        out = v.bb(n);
        break;
      case TypeLabel::D1:
        out = v.bb(n - 1);
        break;
      default:
        throw Error("no family for this label");
    }
  } else if (t == TypeLabel::D1 && i == n - 1) {
    out = v.b(n) + v.bb(n - 1);
  } else {
    out = v.bb(i) + pos(v.b(i + 1) - v.bb(i + 1));
  }
  return as_ll(out);
}

long long binf_phi(TypeLabel t, int n, int i, const std::vector<Rat>& bc) {
  std::vector<Rat> copy = bc;
  View v{t, n, copy};
  Rat l = v.halfsum();
  Rat out;
  if (t == TypeLabel::A1) {
    out = i == 0 ? v.b(n + 1) : v.b(i);
    return as_ll(out);
  }
  if (i == 0) {
    switch (t) {
      case TypeLabel::B1:
      case TypeLabel::D1:
      case TypeLabel::A2odd:
        out = v.bb(1) + pos(v.bb(2) - v.b(2));
        break;
      case TypeLabel::C1:
        out = -l / 2 + pos(v.bb(1) - v.b(1));
        break;
      case TypeLabel::D2:
      case TypeLabel::A2even:
        out = -l + 2 * pos(v.bb(1) - v.b(1));
        break;
      default:
        throw Error("no family for this label");
    }
  } else if (i == n) {
    switch (t) {
      case TypeLabel::B1:
      case TypeLabel::D2:
        out = 2 * v.b(n);
        break;
      case TypeLabel::C1:
      case TypeLabel::A2odd:
      case TypeLabel::A2even:
        out = v.b(n);
        break;
      case TypeLabel::D1:
        out = v.b(n - 1) + v.b(n);
        break;
      default:
        throw Error("no family for this label");
    }
  } else if (t == TypeLabel::D1 && i == n - 1) {
    out = v.b(n - 1);
  } else {
    out = v.b(i) + pos(v.bb(i + 1) - v.b(i + 1));
  }
  return as_ll(out);
}

std::vector<Rat> binf_e(TypeLabel t, int n, int i, std::vector<Rat> bc) {
  View v{t, n, bc};
  const Rat half(1, 2);
  if (t == TypeLabel::A1) {
    if (i == 0) {
      v.b(1) -= 1;
      v.b(n + 1) += 1;
    } else {
      v.b(i) += 1;
      v.b(i + 1) -= 1;
    }
    return bc;
  }
  if (i == 0) {
    switch (t) {
      case TypeLabel::B1:
      case TypeLabel::D1:
      case TypeLabel::A2odd:
        if (v.b(2) > v.bb(2)) {
          v.b(2) -= 1;
          v.bb(1) += 1;
        } else {
          v.b(1) -= 1;
          v.bb(2) += 1;
        }
        break;
      case TypeLabel::C1:
        if (v.b(1) > v.bb(1) + 1) {
          v.b(1) -= 2;
        } else if (v.b(1) == v.bb(1) + 1) {
          v.b(1) -= 1;
          v.bb(1) += 1;
        } else {
          v.bb(1) += 2;
        }
        break;
      case TypeLabel::D2:
      case TypeLabel::A2even:
        if (v.b(1) > v.bb(1))
          v.b(1) -= 1;
        else
          v.bb(1) += 1;
        break;
      default:
        throw Error("no family for this label");
    }
    return bc;
  }
  if (i == n) {
    switch (t) {
      case TypeLabel::B1:
      case TypeLabel::D2:
        v.b(n) += half;
        v.bb(n) -= half;
        break;
      case TypeLabel::C1:
      case TypeLabel::A2odd:
      case TypeLabel::A2even:
        v.b(n) += 1;
        v.bb(n) -= 1;
        break;
      case TypeLabel::D1:
        v.b(n) += 1;
        v.bb(n - 1) -= 1;
        break;
      default:
        throw Error("no family for this label");
    }
    return bc;
  }
  if (t == TypeLabel::D1 && i == n - 1) {
    v.b(n - 1) += 1;
    v.b(n) -= 1;
    return bc;
  }
  if (v.b(i + 1) > v.bb(i + 1)) {
    v.b(i) += 1;
    v.b(i + 1) -= 1;
  } else {
    v.bb(i + 1) += 1;
    v.bb(i) -= 1;
  }
  return bc;
}

std::vector<Rat> binf_f(TypeLabel t, int n, int i, std::vector<Rat> bc) {
  View v{t, n, bc};
  const Rat half(1, 2);
  if (t == TypeLabel::A1) {
    if (i == 0) {
      v.b(1) += 1;
      v.b(n + 1) -= 1;
    } else {
      v.b(i) -= 1;
      v.b(i + 1) += 1;
    }
    return bc;
  }
  if (i == 0) {
    switch (t) {
      case TypeLabel::B1:
      case TypeLabel::D1:
      case TypeLabel::A2odd:
        if (v.b(2) >= v.bb(2)) {
          v.b(2) += 1;
          v.bb(1) -= 1;
        } else {
          v.b(1) += 1;
          v.bb(2) -= 1;
        }
        break;
      case TypeLabel::C1:
        if (v.b(1) >= v.bb(1)) {
          v.b(1) += 2;
        } else if (v.b(1) == v.bb(1) - 1) {
          v.b(1) += 1;
          v.bb(1) -= 1;
        } else {
          v.bb(1) -= 2;
        }
        break;
      case TypeLabel::D2:
      case TypeLabel::A2even:
        if (v.b(1) >= v.bb(1))
          v.b(1) += 1;
        else
          v.bb(1) -= 1;
        break;
      default:
        throw Error("no family for this label");
    }
    return bc;
  }
  if (i == n) {
    switch (t) {
      case TypeLabel::B1:
      case TypeLabel::D2:
        v.b(n) -= half;
        v.bb(n) += half;
        break;
      case TypeLabel::C1:
      case TypeLabel::A2odd:
      case TypeLabel::A2even:
        v.b(n) -= 1;
        v.bb(n) += 1;
        break;
      case TypeLabel::D1:
        v.b(n) -= 1;
        v.bb(n - 1) += 1;
        break;
      default:
        throw Error("no family for this label");
    }
    return bc;
  }
  if (t == TypeLabel::D1 && i == n - 1) {
    v.b(n - 1) -= 1;
    v.b(n) += 1;
    return bc;
  }
  if (v.b(i + 1) >= v.bb(i + 1)) {
    v.b(i) -= 1;
    v.b(i + 1) += 1;
  } else {
    v.bb(i + 1) -= 1;
    v.bb(i) += 1;
  }
  return bc;
}

CrystalOps binf_ops(TypeLabel t, int n) {
  binf_dim(t, n);  // reject A2dag up front
  if (n < min_rank(t)) throw RankError("rank too small for " + type_name(t));
  CrystalOps ops;
  ops.num_idx = n + 1;
  ops.wt = [t, n](const Elem& b) { return binf_wt(t, n, b.coords); };
  ops.eps = [t, n](int i, const Elem& b) {
    return ExtInt::of(binf_eps(t, n, i, b.coords));
  };
  ops.phi = [t, n](int i, const Elem& b) {
    return ExtInt::of(binf_phi(t, n, i, b.coords));
  };
  ops.e = [t, n](int i, const Elem& b) -> std::optional<Elem> {
    return Elem::leaf(binf_e(t, n, i, b.coords));
  };
  ops.f = [t, n](int i, const Elem& b) -> std::optional<Elem> {
    return Elem::leaf(binf_f(t, n, i, b.coords));
  };
  ops.validate = [t, n](const Elem& b) {
    return b.is_leaf() && binf_valid(t, n, b.coords);
  };
  return ops;
}

std::vector<Rat> random_belt(TypeLabel t, int n, std::mt19937_64& rng,
                             int box) {
  std::uniform_int_distribution<long long> pick(-box, box);
  std::uniform_int_distribution<long long> pick2(-2 * box, 2 * box);
  std::vector<Rat> bc(binf_dim(t, n), Rat(0));
  for (auto& x : bc) x = Rat(pick(rng));
  View v{t, n, bc};
  const Rat half(1, 2);
  switch (t) {
    case TypeLabel::A1: {
      Rat s(0);
      for (int i = 1; i <= n; ++i) s += v.b(i);
      v.b(n + 1) = -s;
      break;
    }
    case TypeLabel::B1: {
      v.b(n) = half * pick2(rng);
      v.bb(n) = Rat(pick(rng)) - v.b(n);
      Rat s(0);
      for (const Rat& x : bc) s += x;
      v.bb(1) -= s;
      break;
    }
    case TypeLabel::C1: {
      Rat s(0);
      for (const Rat& x : bc) s += x;
      if (!is_integer(s / 2)) v.bb(1) += 1;
      break;
    }
    case TypeLabel::D1:
    case TypeLabel::A2odd: {
      Rat s(0);
      for (const Rat& x : bc) s += x;
      v.bb(1) -= s;
      break;
    }
    case TypeLabel::D2: {
      v.b(n) = half * pick2(rng);
      v.bb(n) = Rat(pick(rng)) - v.b(n);
      break;
    }
    case TypeLabel::A2even:
      break;
    default:
      throw Error("no family for this label");
  }
  return bc;
}

nlohmann::json binf_to_json(TypeLabel t, int n, const std::vector<Rat>& b) {
  nlohmann::json coords = nlohmann::json::array();
  for (const Rat& x : b) coords.push_back(rat_str(x));
  return {{"type", type_name(t)}, {"rank", n}, {"coords", coords}};
}

std::vector<Rat> binf_from_json(const nlohmann::json& j, TypeLabel& t, int& n) {
  t = type_from_name(j.at("type").get<std::string>());
  n = j.at("rank").get<int>();
  std::vector<Rat> out;
  for (const auto& s : j.at("coords")) out.push_back(rat_parse(s.get<std::string>()));
  if ((int)out.size() != binf_dim(t, n))
    throw Error("coordinate length does not match type/rank");
  return out;
}

}  // namespace agc
