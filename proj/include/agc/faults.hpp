#pragma once

// Mutation hooks for negative-control testing.  Each id names one
// deliberate single-token defect wired into a production formula site
// (an exponent, an index, a threshold, or a scale factor).  Arming an id
// flips exactly that site; with nothing armed the behavior is identical
// to not having the hooks at all.  The verification checks are expected
// to catch every armed defect with a concrete witness.

#include <string>
#include <vector>

namespace agc::faults {

// Arm exactly one defect (throws Error for unknown ids); disarm resets.
void arm(const std::string& id);
void disarm();
bool armed(const std::string& id) noexcept;
const std::string& current();

// All known ids, in a stable order.
const std::vector<std::string>& catalog();

// RAII guard for tests.
struct Armed {
  explicit Armed(const std::string& id) { arm(id); }
  ~Armed() { disarm(); }
  Armed(const Armed&) = delete;
  Armed& operator=(const Armed&) = delete;
};

}  // namespace agc::faults
