#include "agc/fundamental.hpp"

namespace agc {

namespace {

std::vector<long long> lam(int n, std::initializer_list<std::pair<int, long long>> parts) {
  std::vector<long long> w(n + 1, 0);
  for (auto [i, c] : parts) w[i] += c;
  return w;
}

}  // namespace

FundBasis::FundBasis(TypeLabel t, int n) : type_(t), n_(n) {
  if (n < min_rank(t)) throw RankError("rank too small for " + type_name(t));

  auto row = [&](bool with_zero, bool with_phi) {
    for (int i = 1; i <= n; ++i) labels_.push_back(FL::un(i));
    if (with_zero) labels_.push_back(FL::zero());
    for (int i = n; i >= 1; --i) labels_.push_back(FL::bar(i));
    if (with_phi) labels_.push_back(FL::phi());
  };

  switch (t) {
    case TypeLabel::A1:
      for (int i = 1; i <= n + 1; ++i) labels_.push_back(FL::un(i));
      break;
    case TypeLabel::B1:
    case TypeLabel::A2dag:
      row(true, false);
      break;
    case TypeLabel::C1:
    case TypeLabel::D1:
    case TypeLabel::A2odd:
      row(false, false);
      break;
    case TypeLabel::D2:
      row(true, true);
      break;
    case TypeLabel::A2even:
      throw Error("A2even carries no chart here; use its dual label");
  }

  wts_.resize(labels_.size());
  steps_.assign(n + 1, std::vector<FundStep>(labels_.size(), FundStep{0, FL::zero()}));
  auto setw = [&](FL l, std::vector<long long> w) { wts_[index_of(l)] = std::move(w); };
  auto setf = [&](int i, FL from, FL to, long long coeff = 1) {
    steps_[i][index_of(from)] = FundStep{coeff, to};
  };
  // mirrored pair: wt[l] = w, wt[bar l] = -w
  auto setw2 = [&](int i, std::vector<long long> w) {
    setw(FL::un(i), w);
    for (auto& c : w) c = -c;
    setw(FL::bar(i), std::move(w));
  };

  switch (t) {
    case TypeLabel::A1: {
      for (int i = 1; i <= n + 1; ++i) {
        int lo = i == 1 ? 0 : i - 1;   // Lambda_{i-1}, cyclically
        int hi = i == n + 1 ? 0 : i;   // Lambda_i
        setw(FL::un(i), lam(n, {{hi, 1}, {lo, -1}}));
      }
      for (int i = 1; i <= n; ++i) setf(i, FL::un(i), FL::un(i + 1));
      setf(0, FL::un(n + 1), FL::un(1));
      break;
    }
    case TypeLabel::B1: {
      for (int i = 1; i <= n; ++i) {
        if (i == 2)
          setw2(2, lam(n, {{2, 1}, {1, -1}, {0, -1}}));
        else if (i == n)
          setw2(n, lam(n, {{n, 2}, {n - 1, -1}}));
        else
          setw2(i, lam(n, {{i, 1}, {i - 1, -1}}));
      }
      setw(FL::zero(), lam(n, {}));
      for (int i = 1; i <= n - 1; ++i) {
        setf(i, FL::un(i), FL::un(i + 1));
        setf(i, FL::bar(i + 1), FL::bar(i));
      }
      setf(n, FL::un(n), FL::zero());
      setf(n, FL::zero(), FL::bar(n), 2);
      setf(0, FL::bar(2), FL::un(1));
      setf(0, FL::bar(1), FL::un(2));
      break;
    }
    case TypeLabel::C1: {
      for (int i = 1; i <= n; ++i) setw2(i, lam(n, {{i, 1}, {i - 1, -1}}));
      for (int i = 1; i <= n - 1; ++i) {
        setf(i, FL::un(i), FL::un(i + 1));
        setf(i, FL::bar(i + 1), FL::bar(i));
      }
      setf(n, FL::un(n), FL::bar(n));
      setf(0, FL::bar(1), FL::un(1));
      break;
    }
    case TypeLabel::D1: {
      for (int i = 1; i <= n; ++i) {
        if (i == 2)
          setw2(2, lam(n, {{2, 1}, {1, -1}, {0, -1}}));
        else if (i == n - 1)
          setw2(n - 1, lam(n, {{n, 1}, {n - 1, 1}, {n - 2, -1}}));
        else
          setw2(i, lam(n, {{i, 1}, {i - 1, -1}}));
      }
      for (int i = 1; i <= n - 1; ++i) {
        setf(i, FL::un(i), FL::un(i + 1));
        setf(i, FL::bar(i + 1), FL::bar(i));
      }
      setf(n, FL::un(n), FL::bar(n - 1));
      setf(n, FL::un(n - 1), FL::bar(n));
      setf(0, FL::bar(2), FL::un(1));
      setf(0, FL::bar(1), FL::un(2));
      break;
    }
    case TypeLabel::A2odd: {
      for (int i = 1; i <= n; ++i) {
        if (i == 2)
          setw2(2, lam(n, {{2, 1}, {1, -1}, {0, -1}}));
        else
          setw2(i, lam(n, {{i, 1}, {i - 1, -1}}));
      }
      for (int i = 1; i <= n - 1; ++i) {
        setf(i, FL::un(i), FL::un(i + 1));
        setf(i, FL::bar(i + 1), FL::bar(i));
      }
      setf(n, FL::un(n), FL::bar(n));
      setf(0, FL::bar(2), FL::un(1));
      setf(0, FL::bar(1), FL::un(2));
      break;
    }
    case TypeLabel::D2: {
      for (int i = 1; i <= n; ++i) {
        if (i == 1)
          setw2(1, lam(n, {{1, 1}, {0, -2}}));
        else if (i == n)
          setw2(n, lam(n, {{n, 2}, {n - 1, -1}}));
        else
          setw2(i, lam(n, {{i, 1}, {i - 1, -1}}));
      }
      setw(FL::zero(), lam(n, {}));
      setw(FL::phi(), lam(n, {}));
      for (int i = 1; i <= n - 1; ++i) {
        setf(i, FL::un(i), FL::un(i + 1));
        setf(i, FL::bar(i + 1), FL::bar(i));
      }
      setf(n, FL::un(n), FL::zero());
      setf(n, FL::zero(), FL::bar(n), 2);
      setf(0, FL::bar(1), FL::phi());
      setf(0, FL::phi(), FL::un(1), 2);
      break;
    }
    case TypeLabel::A2dag: {
      for (int i = 1; i <= n; ++i) {
        if (i == n)
          setw2(n, lam(n, {{n, 2}, {n - 1, -1}}));
        else
          setw2(i, lam(n, {{i, 1}, {i - 1, -1}}));
      }
      setw(FL::zero(), lam(n, {}));
      for (int i = 1; i <= n - 1; ++i) {
        setf(i, FL::un(i), FL::un(i + 1));
        setf(i, FL::bar(i + 1), FL::bar(i));
      }
      setf(n, FL::un(n), FL::zero());
      setf(n, FL::zero(), FL::bar(n), 2);
      setf(0, FL::bar(1), FL::un(1));
      break;
    }
    case TypeLabel::A2even:
      break;  // unreachable
  }
}

int FundBasis::index_of(FL l) const {
  for (int k = 0; k < (int)labels_.size(); ++k)
    if (labels_[k] == l) return k;
  throw IndexError("no basis label " + l.str() + " in type " + type_name(type_));
}

std::optional<FundStep> FundBasis::f(int i, int idx) const {
  if (i < 0 || i > n_) throw IndexError("index out of range");
  const FundStep& st = steps_[i][idx];
  if (st.coeff == 0) return std::nullopt;
  return st;
}

}  // namespace agc
