#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace morphic {

// Word lengths at level k of the scheme iteration grow like lambda^k and
// overflow any fixed-width type almost immediately; everything that touches
// lengths or the decision constants is arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt num(const BigRat& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const BigRat& r) { return boost::multiprecision::denominator(r); }

inline BigInt floor_rat(const BigRat& r) {
  BigInt q = num(r) / den(r);
  if (num(r) < 0 && q * den(r) != num(r)) --q;
  return q;
}

inline BigInt ceil_rat(const BigRat& r) {
  BigInt q = num(r) / den(r);
  if (num(r) > 0 && q * den(r) != num(r)) ++q;
  return q;
}

inline BigInt pow_int(BigInt base, unsigned e) {
  BigInt r = 1;
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline BigRat pow_rat(const BigRat& base, unsigned e) {
  return BigRat(pow_int(num(base), e), pow_int(den(base), e));
}

inline std::string rat_str(const BigRat& r) { return r.str(); }

}  // namespace morphic
