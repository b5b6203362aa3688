#pragma once

// Exact rational arithmetic. boost::multiprecision::cpp_rational is
// header-only and swappable for the GMP backend by changing this alias.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "agc/errors.hpp"

namespace agc {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline BigInt rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

// r^k for any integer k (k<0 requires r!=0).
inline Rat rat_pow(Rat r, long k) {
  if (k < 0) {
    if (r == 0) throw DivisionByZero();
    r = Rat(1) / r;
    k = -k;
  }
  Rat acc(1);
  while (k > 0) {
    if (k & 1) acc *= r;
    r *= r;
    k >>= 1;
  }
  return acc;
}

// "p" or "p/q" with optional leading '-'.
inline Rat rat_parse(const std::string& s) {
  try {
    return Rat(s);
  } catch (const std::exception&) {
    throw ParseError("bad rational literal '" + s + "'", 0);
  }
}

inline std::string rat_str(const Rat& r) { return r.str(); }

}  // namespace agc
