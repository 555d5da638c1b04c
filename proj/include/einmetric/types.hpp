#pragma once
// Shared scalar types and small helpers.
//
// All exact arithmetic in the library runs on GMP rationals/integers; the
// numerical root-polishing layers use boost::multiprecision on top of these.

#include <gmpxx.h>

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace einmetric {

using Int = mpz_class;
using Rat = mpq_class;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw error(msg);
}

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw error("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

// Exact integrality test + extraction.
inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int to_int(const Rat& r) {
  require(is_integer(r), "expected integer rational, got " + to_string(r));
  return r.get_num();
}

// Convert an exact rational into a target scalar type.  The generic path is
// exact up to one rounding: both operands convert from decimal digits.
template <class S>
inline S to_scalar(const Rat& r) {
  return S(r.get_num().get_str()) / S(r.get_den().get_str());
}

template <>
inline double to_scalar<double>(const Rat& r) {
  return r.get_d();
}

template <>
inline Rat to_scalar<Rat>(const Rat& r) {
  return r;
}

}  // namespace einmetric
