#pragma once

// Verification campaigns.  Symbolic checks establish identities of
// rational maps exactly (random refutation first, then factored
// expansion); with mode "sampled" they instead compare exact evaluations
// at random integer points, as a cheaper spot check.  The lattice and
// limit-family campaigns are sampled by nature.  Every campaign returns
// a Report carrying concrete witnesses for whatever failed.

#include <cstdint>
#include <string>
#include <vector>

#include "agc/cartan.hpp"
#include "agc/report.hpp"

namespace agc {

struct VerifyOptions {
  int trials = 2000;               // elements per sampled campaign
  int box = 8;                     // lattice coordinate range
  std::uint64_t seed = 20250825;   // base seed for sampled campaigns
  // "" picks the campaign default: symbolic for identity campaigns,
  // sampled for the lattice / limit-family ones (their only mode).
  std::string mode;
};

// Every two-index relation of the torus actions (the shape is chosen
// from the Cartan pairing of the two indices).
Report verify_verma(TypeLabel t, int n, const VerifyOptions& opt = {});

// Unit parameter acts trivially, parameters multiply, the characters
// scale by the Cartan pairing, eps scales inversely, and the zero-index
// eps is the conjugated classical one.
Report verify_geom_axioms(TypeLabel t, int n, const VerifyOptions& opt = {});

// The twist is an involution (or has the recorded two-sided inverse),
// and conjugating the distinguished action through it gives the
// documented zero action.
Report verify_sigma(TypeLabel t, int n, const VerifyOptions& opt = {});

// Closed-form chart vectors equal the matrix products, and the twisted
// vector satisfies its defining proportionality.
Report verify_chart(TypeLabel t, int n, const VerifyOptions& opt = {});

// The word-induced cell action, eps and character agree with the
// explicit per-type formulas wherever both are defined.
Report verify_schubert(TypeLabel t, int n, const VerifyOptions& opt = {});

// Sampled only: closed-form lattice operators equal the tropicalized
// chart actions and statistics.
Report verify_ud(TypeLabel t, int n, const VerifyOptions& opt = {});

// Sampled only: the coordinate change onto the dual limit family is a
// statistic-preserving bijection intertwining all operators.
Report verify_mu(TypeLabel t, int n, const VerifyOptions& opt = {});

// Sampled only: limit-family axioms on random elements and tensor pairs.
Report verify_binfty(TypeLabel t, int n, const VerifyOptions& opt = {});

// Dispatcher over the names below; throws Error for unknown names.
Report verify_check(const std::string& name, TypeLabel t, int n,
                    const VerifyOptions& opt = {});
const std::vector<std::string>& verify_check_names();

}  // namespace agc
