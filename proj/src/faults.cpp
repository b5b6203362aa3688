#include "agc/faults.hpp"

#include <algorithm>

#include "agc/errors.hpp"

namespace agc::faults {

namespace {
std::string g_armed;  // empty = nothing armed
}

const std::vector<std::string>& catalog() {
  static const std::vector<std::string> ids = {
      "chart-b1-gamma1-exponent",      // squared pair becomes cubed
      "chart-c1-e0-xn-denominator",    // c^2 becomes c in the zero-action
      "chart-d1-xi-denominator-index", // coefficient divides by the wrong slot
      "chart-a2dag-sigmabar-y0-square",// decoration scalar loses its square
      "schubert-eps-exponent-sign",    // prefix exponent enters negated
      "ud-d2-e0-threshold",            // branch threshold off by one
      "mu-a2odd-bn-halving",           // halved coordinate enters unhalved
  };
  return ids;
}

void arm(const std::string& id) {
  const auto& ids = catalog();
  if (std::find(ids.begin(), ids.end(), id) == ids.end())
    throw Error("unknown fault id: " + id);
  g_armed = id;
}

void disarm() { g_armed.clear(); }

bool armed(const std::string& id) noexcept { return g_armed == id; }

const std::string& current() { return g_armed; }

}  // namespace agc::faults
