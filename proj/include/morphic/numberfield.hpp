#pragma once

#include <utility>
#include <vector>

#include "morphic/algebra.hpp"

namespace morphic {

// Exact arithmetic in Q(lambda), lambda a real algebraic number. The modulus
// is kept squarefree but never factored: whenever a gcd exposes a nontrivial
// factor, the modulus shrinks to the factor that still has lambda as a root
// (dynamic evaluation). Elements created earlier stay valid, since reduction
// modulo a divisor is a ring homomorphism on the quotient.
class NumberField {
 public:
  using Elem = QPoly;  // residue, kept reduced below deg(modulus)

  explicit NumberField(const AlgebraicReal& lambda);

  Elem of_rat(const BigRat& r) const;
  Elem gen() const;  // the class of x, i.e. lambda itself
  Elem reduce(Elem e) const;

  Elem add(const Elem& a, const Elem& b) const { return reduce(poly_add(a, b)); }
  Elem sub(const Elem& a, const Elem& b) const { return reduce(poly_sub(a, b)); }
  Elem mul(const Elem& a, const Elem& b) const { return reduce(poly_mul(a, b)); }
  Elem neg(const Elem& a) const { return poly_scale(a, BigRat(-1)); }
  Elem inverse(Elem e);
  Elem div(const Elem& a, Elem b) { return mul(a, inverse(std::move(b))); }

  bool is_zero(Elem e);
  int sign(Elem e);

  // rational enclosure [lo, hi] of e(lambda) with hi - lo <= width
  std::pair<BigRat, BigRat> enclose(Elem e, const BigRat& width);

  // current isolating interval of lambda (a point when lambda is rational)
  BigRat lambda_lo() const { return lo_; }
  BigRat lambda_hi() const { return hi_; }
  bool lambda_rational() const { return lo_ == hi_; }
  void refine_lambda();

  const QPoly& modulus() const { return m_; }

 private:
  QPoly m_;  // monic squarefree, lambda its unique root in (lo_, hi_)
  BigRat lo_, hi_;

  // replace the modulus by its divisor that keeps lambda as a root; g must
  // divide m_ nontrivially
  void shrink_to(QPoly g);
  bool vanishes_at_lambda(const QPoly& g) const;
  std::pair<BigRat, BigRat> interval_eval(const Elem& e) const;
};

// Gaussian elimination over the field. solve_linear requires A regular;
// kernel_vector requires nullity exactly one and returns a nonzero solution
// of A x = 0.
std::vector<NumberField::Elem> solve_linear(NumberField& F,
                                            std::vector<std::vector<NumberField::Elem>> A,
                                            std::vector<NumberField::Elem> b);
std::vector<NumberField::Elem> kernel_vector(NumberField& F,
                                             std::vector<std::vector<NumberField::Elem>> A);

}  // namespace morphic
