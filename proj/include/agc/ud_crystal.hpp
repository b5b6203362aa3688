#pragma once

// Piecewise-linear crystals on the integer points of the torus charts.
//
// Two independent routes produce the same structure:
//   * ud_e / ud_f / ud_wt / ud_eps  -- closed-form case analyses, one per
//     family, written out branch by branch;
//   * trop_e / trop_wt / trop_eps   -- the mechanical route: tropicalize
//     the birational chart formulas and evaluate them on the lattice,
//     with the parameter specialized to +1 (raising) or -1 (lowering).
// The tests compare the two on large samples.
//
// mu / mu_inverse give the exact coordinate change from each chart
// lattice onto the limit crystal of the Langlands-dual label, bijective
// onto the valid set of that family.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "agc/cartan.hpp"
#include "agc/chart.hpp"
#include "agc/rational.hpp"

namespace agc {

// A lattice point of the main chart, keyed by coordinate name.
using LatticePoint = std::map<std::string, long long>;

// Conversions between the keyed form and the documented coordinate
// order: x0 when the chart has it, then x1..xn, then the barred
// coordinates in decreasing index.
LatticePoint lattice_point(TypeLabel t, int n,
                           const std::vector<long long>& coords);
std::vector<long long> lattice_coords(TypeLabel t, int n,
                                      const LatticePoint& p);

// Closed-form structure; i runs over 0..n.
LatticePoint ud_e(TypeLabel t, int n, int i, const LatticePoint& p);
LatticePoint ud_f(TypeLabel t, int n, int i, const LatticePoint& p);
long long ud_wt(TypeLabel t, int n, int i, const LatticePoint& p);
long long ud_eps(TypeLabel t, int n, int i, const LatticePoint& p);
long long ud_phi(TypeLabel t, int n, int i, const LatticePoint& p);

// Mechanical route.  cval = +1 raises, -1 lowers.
LatticePoint trop_e(TypeLabel t, int n, int i, const LatticePoint& p,
                    long long cval = 1);
long long trop_wt(TypeLabel t, int n, int i, const LatticePoint& p);
long long trop_eps(TypeLabel t, int n, int i, const LatticePoint& p);

// Coordinate change onto the limit family of langlands_dual(t), and its
// exact inverse (which throws Error when b is not a valid element of
// that family).
std::vector<Rat> mu(TypeLabel t, int n, const LatticePoint& p);
LatticePoint mu_inverse(TypeLabel t, int n, const std::vector<Rat>& b);

// Uniform point with every coordinate in [-box, box].
LatticePoint random_lattice_point(TypeLabel t, int n, std::mt19937_64& rng,
                                  int box = 8);

}  // namespace agc
