#include "agc/schubert.hpp"

#include <algorithm>

#include "agc/errors.hpp"
#include "agc/faults.hpp"

namespace agc {

namespace {

Expr one() { return Expr::constant(1); }

Expr expr_pow(const Expr& b, int k) {
  if (k == 0) return one();
  if (k == 1) return b;
  if (k > 1) return Expr::power(b, k);
  return one() / expr_pow(b, -k);
}

// Terms 1/(c_1^{a_{i_1,i}} ... c_{m-1}^{a_{i_{m-1},i}} c_m) for positions m
// whose letter is i; position index is recorded alongside.
struct OccTerm {
  std::size_t pos;  // 0-based position in the word
  Expr inv;         // the inverse prefix-weighted coordinate
};

std::vector<OccTerm> occurrence_terms(const CartanData& cd,
                                      const std::vector<int>& word, int i,
                                      const std::vector<Expr>& cs) {
  std::vector<OccTerm> out;
  Expr prefix = one();
  for (std::size_t m = 0; m < word.size(); ++m) {
    if (word[m] == i) out.push_back({m, one() / (prefix * cs[m])});
    int a = cd.a(word[m], i);
    if (faults::armed("schubert-eps-exponent-sign")) a = -a;
    prefix = prefix * expr_pow(cs[m], a);
  }
  return out;
}

std::vector<Expr> position_vars(const std::vector<int>& word,
                                const std::string& prefix) {
  auto names = word_arg_names(word, prefix);
  std::vector<Expr> cs;
  cs.reserve(names.size());
  for (const auto& nm : names) cs.push_back(Expr::var(nm));
  return cs;
}

}  // namespace

bool word_has_letter(const std::vector<int>& word, int i) {
  return std::find(word.begin(), word.end(), i) != word.end();
}

ChartMap schubert_e(const CartanData& cd, const std::vector<int>& word, int i,
                    const std::string& prefix) {
  if (!word_has_letter(word, i))
    throw Error("letter " + std::to_string(i) + " does not occur in the word");
  auto names = word_arg_names(word, prefix);
  auto cs = position_vars(word, prefix);
  auto occ = occurrence_terms(cd, word, i, cs);
  Expr c = Expr::var("c");

  ChartMap m;
  for (std::size_t j = 0; j < word.size(); ++j) {
    if (word[j] != i) {
      m[names[j]] = cs[j];
      continue;
    }
    // numerator: occurrences at or before j scaled by c, later ones plain;
    // denominator: strictly-before scaled by c, at-or-after plain.
    std::vector<Expr> num, den;
    for (const auto& t : occ) {
      num.push_back(t.pos <= j ? c * t.inv : t.inv);
      den.push_back(t.pos < j ? c * t.inv : t.inv);
    }
    auto fold = [](std::vector<Expr> v) {
      return v.size() == 1 ? v[0] : Expr::sum(std::move(v));
    };
    m[names[j]] = cs[j] * fold(num) / fold(den);
  }
  return m;
}

Expr schubert_eps(const CartanData& cd, const std::vector<int>& word, int i,
                  const std::string& prefix) {
  if (!word_has_letter(word, i))
    throw Error("letter " + std::to_string(i) + " does not occur in the word");
  auto cs = position_vars(word, prefix);
  auto occ = occurrence_terms(cd, word, i, cs);
  std::vector<Expr> terms;
  terms.reserve(occ.size());
  for (const auto& t : occ) terms.push_back(t.inv);
  return terms.size() == 1 ? terms[0] : Expr::sum(std::move(terms));
}

Expr schubert_gamma(const CartanData& cd, const std::vector<int>& word, int i,
                    const std::string& prefix) {
  auto cs = position_vars(word, prefix);
  Expr g = one();
  for (std::size_t m = 0; m < word.size(); ++m)
    g = g * expr_pow(cs[m], cd.a(word[m], i));
  return g;
}

}  // namespace agc
