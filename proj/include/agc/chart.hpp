#pragma once

// Birational charts of the translation cells.  Each supported type label
// carries one chart (two for A2dag) whose coordinates are indexed by the
// letters of the translation word.  This header exposes:
//   * the coordinate names and the cell element as a vector in the
//     fundamental module, both as an actual matrix product (v_matrix)
//     and in closed form (v_closed);
//   * the crystal action e_i^c as a substitution map on coordinates;
//   * the characters gamma_i and the functions epsilon_i;
//   * the chart symmetry sigma_bar with its decoration scalar, plus the
//     conjugated zero-action it induces.
// All formulas are subtraction-free expressions over the chart variables
// (and "c" for the one-parameter actions).

#include <map>
#include <string>
#include <vector>

#include "agc/cartan.hpp"
#include "agc/fundamental.hpp"
#include "agc/posrat.hpp"

namespace agc {

// Every type uses Chart::main; A2dag has a second chart reached by
// sigma_bar, with its own coordinates ("y.."/"yb..") and word.
enum class Chart { main, second };

// Coordinate-wise substitution: new value of each coordinate, as an
// expression in the old coordinates (plus "c" for one-parameter maps).
using ChartMap = std::map<std::string, Expr>;

// One name per letter of the word: first occurrence of letter i becomes
// "<prefix><i>", the second occurrence "<prefix>b<i>".
std::vector<std::string> word_arg_names(const std::vector<int>& word,
                                        const std::string& prefix);

std::vector<std::string> chart_vars(TypeLabel t, int n,
                                    Chart chart = Chart::main);
int chart_dim(TypeLabel t, int n);

// The cell element as a vector over the labeled basis of the fundamental
// module (aligned with FundBasis(t, n).labels()): computed by multiplying
// out the one-parameter subgroups of the word, and in closed form.
std::vector<Expr> v_matrix(TypeLabel t, int n, Chart chart = Chart::main);
std::vector<Expr> v_closed(TypeLabel t, int n, Chart chart = Chart::main);

// The diagram symmetry acting on basis labels: entry j holds the index of
// the image of basis vector j (identity for A2dag, whose two charts are
// related without a basis twist).
std::vector<int> sigma_basis(TypeLabel t, int n);

// Decoration scalar a(x) in v(y) = a(x) sigma(v(x)) (main-chart coords).
Expr sigma_scalar(TypeLabel t, int n);

// e_i^c as a complete substitution map (every chart coordinate appears as
// a key; unchanged ones map to themselves).  Chart::main accepts all i in
// {0,...,n}; the A2dag second chart accepts i in {0,...,n-1}.
ChartMap geom_e(TypeLabel t, int n, int i, Chart chart = Chart::main);

Expr geom_eps(TypeLabel t, int n, int i, Chart chart = Chart::main);
Expr geom_gamma(TypeLabel t, int n, int i, Chart chart = Chart::main);

struct SigmaBar {
  ChartMap map;  // target coordinate -> expression in source coordinates
  Expr a;        // decoration scalar in source coordinates
  Chart from = Chart::main;
  Chart to = Chart::main;
};

// For A1 the map is cyclic (inverse differs from the forward map); for
// B1/C1/D1/A2odd/D2 it is an involution; for A2dag it swaps the charts.
SigmaBar sigma_bar(TypeLabel t, int n);
SigmaBar sigma_bar_inverse(TypeLabel t, int n);

// The index whose action is conjugated by sigma_bar to produce the
// zero-action, and the chart that conjugation passes through.
int conjugating_index(TypeLabel t, int n);
Chart conjugating_chart(TypeLabel t);

// sigma_bar^{-1} . e_j^c . sigma_bar on the main chart, for cross-checking
// against the directly transcribed geom_e(t, n, 0).
ChartMap conjugated_e0(TypeLabel t, int n);

// Substitute m into every variable of e / into every entry of later.
Expr apply_map(const Expr& e, const ChartMap& m);
ChartMap compose_map(const ChartMap& later, const ChartMap& first);
ChartMap identity_map(TypeLabel t, int n, Chart chart = Chart::main);

}  // namespace agc
