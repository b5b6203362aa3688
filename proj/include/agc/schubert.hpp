#pragma once

// The generic geometric crystal structure on a unipotent cell attached to
// a reduced word: the substitution giving e_i^c, and the statistics
// epsilon_i and gamma_i, all as subtraction-free expressions over the
// per-position coordinates.  Independent of the per-type closed forms in
// chart.hpp, which makes it a cross-check oracle for them -- and the only
// route to an action for labels without a chart of their own.

#include <string>
#include <vector>

#include "agc/cartan.hpp"
#include "agc/chart.hpp"
#include "agc/posrat.hpp"

namespace agc {

bool word_has_letter(const std::vector<int>& word, int i);

// e_i^c on the cell of `word`, coordinates named word_arg_names(word,
// prefix): a complete substitution map over those names plus "c".
// Throws Error when the letter does not occur in the word.
ChartMap schubert_e(const CartanData& cd, const std::vector<int>& word, int i,
                    const std::string& prefix = "x");

// Sum over occurrences of i of the inverse prefix-weighted coordinate.
// Throws Error when the letter does not occur in the word.
Expr schubert_eps(const CartanData& cd, const std::vector<int>& word, int i,
                  const std::string& prefix = "x");

// The character: product over all positions of the coordinate raised to
// its pairing with alpha_i.  Defined for every index i.
Expr schubert_gamma(const CartanData& cd, const std::vector<int>& word, int i,
                    const std::string& prefix = "x");

}  // namespace agc
