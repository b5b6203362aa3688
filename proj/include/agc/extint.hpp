#pragma once

// Integers extended by -infinity, which absorbs addition and loses
// every comparison.  Used for crystal statistics.

#include <string>

#include "agc/errors.hpp"

namespace agc {

struct ExtInt {
  bool finite = true;
  long long v = 0;

  static ExtInt of(long long x) { return ExtInt{true, x}; }
  static ExtInt minus_inf() { return ExtInt{false, 0}; }

  long long value() const {
    if (!finite) throw Error("took the value of -inf");
    return v;
  }

  friend ExtInt operator+(ExtInt a, long long b) {
    return a.finite ? of(a.v + b) : a;
  }
  friend ExtInt operator-(ExtInt a, long long b) {
    return a.finite ? of(a.v - b) : a;
  }
  friend bool operator==(ExtInt a, ExtInt b) {
    return a.finite == b.finite && (!a.finite || a.v == b.v);
  }
  friend bool operator<(ExtInt a, ExtInt b) {
    if (!a.finite) return b.finite;
    if (!b.finite) return false;
    return a.v < b.v;
  }
  friend bool operator>(ExtInt a, ExtInt b) { return b < a; }
  friend bool operator<=(ExtInt a, ExtInt b) { return !(b < a); }
  friend bool operator>=(ExtInt a, ExtInt b) { return !(a < b); }
  friend ExtInt max(ExtInt a, ExtInt b) { return a < b ? b : a; }

  std::string str() const { return finite ? std::to_string(v) : "-inf"; }
};

}  // namespace agc
