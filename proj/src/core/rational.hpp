#pragma once

// Exact arithmetic types. Integers and rationals are GMP-backed; every Rat
// produced here is canonical (lowest terms, positive denominator).

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "error.hpp"

namespace arakx0 {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) fail(ErrorCode::Domain, "rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

inline Int int_from(std::int64_t v) {
  // mpz_class has no portable int64 constructor on every platform
  return Int(std::to_string(v));
}

inline Int int_from(std::uint64_t v) { return Int(std::to_string(v)); }

inline std::int64_t to_i64(const Int& v) {
  if (!v.fits_slong_p()) fail(ErrorCode::Domain, "integer does not fit in 64 bits: " + v.get_str());
  return v.get_si();
}

inline double to_double(const Rat& r) { return r.get_d(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// "num/den", or just "num" when the denominator is 1.
inline std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Always "num/den", the serialization format for machine-readable output.
inline std::string rat_fraction_str(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace arakx0
