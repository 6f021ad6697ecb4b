#pragma once

#include <utility>
#include <vector>

#include "morphic/errors.hpp"
#include "morphic/ints.hpp"

namespace morphic {

// Dense polynomial over Q; coeffs[i] multiplies x^i. Normalized form has a
// nonzero leading coefficient; the zero polynomial is the empty vector.
using QPoly = std::vector<BigRat>;

QPoly poly_trim(QPoly p);
inline bool poly_is_zero(const QPoly& p) { return p.empty(); }
inline int poly_deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }
QPoly poly_add(const QPoly& a, const QPoly& b);
QPoly poly_sub(const QPoly& a, const QPoly& b);
QPoly poly_mul(const QPoly& a, const QPoly& b);
QPoly poly_scale(QPoly a, const BigRat& c);
// division with remainder; b nonzero
std::pair<QPoly, QPoly> poly_divmod(const QPoly& a, const QPoly& b);
QPoly poly_monic(QPoly p);
// monic gcd; gcd(0, 0) = 0
QPoly poly_gcd(QPoly a, QPoly b);
QPoly poly_derivative(const QPoly& p);
// p / gcd(p, p'), monic; same roots as p, all simple
QPoly poly_squarefree(const QPoly& p);
BigRat poly_eval(const QPoly& p, const BigRat& x);
int sign_at(const QPoly& p, const BigRat& x);

struct SturmChain {
  std::vector<QPoly> seq;
  explicit SturmChain(const QPoly& squarefree);
  int variations(const BigRat& x) const;
  // number of roots in the half-open interval (a, b]; requires a <= b
  int count_roots(const BigRat& a, const BigRat& b) const;
};

// det(xI - M), monic, exact integer coefficients
QPoly char_poly(const std::vector<std::vector<BigInt>>& M);

// A real algebraic number: either an exact rational (lo == hi) or the unique
// root of the squarefree monic p inside the open interval (lo, hi), with
// p(lo), p(hi) nonzero and of opposite sign.
struct AlgebraicReal {
  QPoly p;
  BigRat lo, hi;
  bool is_rational() const { return lo == hi; }
  BigRat mid() const { return (lo + hi) / 2; }
};

AlgebraicReal algebraic_rational(const BigRat& r);

void refine_once(AlgebraicReal& x);
void refine_to_width(AlgebraicReal& x, const BigRat& width);

// -1, 0, +1; exact (detects equality of distinct representations)
int compare(AlgebraicReal a, AlgebraicReal b);

// The largest real root of p inside (0, bound]. Throws InternalError when p
// has no root there.
AlgebraicReal largest_root_in(const QPoly& p, const BigRat& bound);

// Decimal rendering of a rational, digits places after the point (truncated).
std::string decimal_str(const BigRat& r, int digits);

}  // namespace morphic
