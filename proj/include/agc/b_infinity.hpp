#pragma once

// The level-zero limit crystals for the seven affine families, in their
// coordinate models.  Coordinates are exact rationals whose denominators
// are 1 or 2; the Kashiwara operators are total on each family.

#include <random>
#include <vector>

#include <json.hpp>

#include "agc/cartan.hpp"
#include "agc/crystal.hpp"

namespace agc {

// Coordinate length: row (b_1..b_n), then the barred row in decreasing
// index.  A1 has the single row b_1..b_{n+1}; families with a middle
// letter fold it into the same vector:
//   A1: n+1   B1/C1/A2odd/D2/A2even: 2n   D1: 2n-1
// A2dag has no such family here and is rejected.
int binf_dim(TypeLabel t, int n);

bool binf_valid(TypeLabel t, int n, const std::vector<Rat>& b);
std::vector<long long> binf_wt(TypeLabel t, int n, const std::vector<Rat>& b);
long long binf_eps(TypeLabel t, int n, int i, const std::vector<Rat>& b);
long long binf_phi(TypeLabel t, int n, int i, const std::vector<Rat>& b);

// Raising / lowering; defined everywhere on the family.
std::vector<Rat> binf_e(TypeLabel t, int n, int i, std::vector<Rat> b);
std::vector<Rat> binf_f(TypeLabel t, int n, int i, std::vector<Rat> b);

CrystalOps binf_ops(TypeLabel t, int n);

// Uniform element with entries in [-box, box] honoring the family's
// integrality and closure constraints.
std::vector<Rat> random_belt(TypeLabel t, int n, std::mt19937_64& rng,
                             int box = 8);

nlohmann::json binf_to_json(TypeLabel t, int n, const std::vector<Rat>& b);
std::vector<Rat> binf_from_json(const nlohmann::json& j, TypeLabel& t, int& n);

}  // namespace agc
