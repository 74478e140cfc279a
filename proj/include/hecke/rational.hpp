#pragma once

/*
 * Rational numbers.  Thin layer over GMP's mpq_class: construction
 * helpers, canonical printing ("-3/2", integers without "/1"), and
 * parsing.  All arithmetic is exact.
 */

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <string>

#include "hecke/error.hpp"

namespace hecke {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  require(den != 0, errc::division_by_zero, "rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

// Accepts an optionally signed integer or integer/integer pair.
inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) fail(errc::parse_error, "empty rational literal");
  Rat r;
  if (r.set_str(s, 10) != 0) fail(errc::parse_error, "bad rational literal '" + s + "'");
  require(r.get_den() != 0, errc::division_by_zero, "rational literal with zero denominator");
  r.canonicalize();
  return r;
}

inline long lcm_long(long a, long b) { return std::lcm(a, b); }

}  // namespace hecke
