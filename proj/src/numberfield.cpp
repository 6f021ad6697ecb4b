#include "morphic/numberfield.hpp"

#include <algorithm>

namespace morphic {

namespace {

// returns (g, u) with g = gcd(e, m) monic and u*e = g modulo m
std::pair<QPoly, QPoly> half_egcd(const QPoly& e, const QPoly& m) {
  QPoly r0 = poly_trim(e), u0 = {BigRat(1)};
  QPoly r1 = m, u1 = {};
  while (!r1.empty()) {
    auto [q, r2] = poly_divmod(r0, r1);
    QPoly u2 = poly_sub(u0, poly_mul(q, u1));
    r0 = std::move(r1);
    u0 = std::move(u1);
    r1 = std::move(r2);
    u1 = std::move(u2);
  }
  if (r0.empty()) return {r0, u0};
  BigRat lead = r0.back();
  for (auto& c : r0) c /= lead;
  for (auto& c : u0) c /= lead;
  return {std::move(r0), std::move(u0)};
}

constexpr int kRefineCap = 20000;

}  // namespace

NumberField::NumberField(const AlgebraicReal& lambda) {
  if (lambda.is_rational()) {
    lo_ = hi_ = lambda.lo;
    m_ = {-lambda.lo, BigRat(1)};
  } else {
    m_ = poly_monic(lambda.p);
    lo_ = lambda.lo;
    hi_ = lambda.hi;
  }
}

NumberField::Elem NumberField::of_rat(const BigRat& r) const {
  if (r == 0) return {};
  return {r};
}

NumberField::Elem NumberField::gen() const { return reduce({BigRat(0), BigRat(1)}); }

NumberField::Elem NumberField::reduce(Elem e) const {
  e = poly_trim(std::move(e));
  if (poly_deg(e) < poly_deg(m_)) return e;
  return poly_divmod(e, m_).second;
}

bool NumberField::vanishes_at_lambda(const QPoly& g) const {
  if (g.empty()) return true;
  if (lambda_rational()) return sign_at(g, lo_) == 0;
  // divisors of the squarefree modulus are squarefree and nonzero at the
  // interval endpoints, so the Sturm count is exact
  return SturmChain(g).count_roots(lo_, hi_) >= 1;
}

void NumberField::shrink_to(QPoly g) {
  g = poly_monic(std::move(g));
  if (poly_deg(g) < 1 || poly_deg(g) >= poly_deg(m_))
    throw InternalError("modulus shrink with a trivial factor");
  m_ = std::move(g);
}

bool NumberField::is_zero(Elem e) {
  e = reduce(std::move(e));
  if (e.empty()) return true;
  if (poly_deg(m_) == 1) return false;
  QPoly g = poly_gcd(e, m_);
  if (poly_deg(g) == 0) return false;
  if (vanishes_at_lambda(g)) {
    shrink_to(std::move(g));
    return true;
  }
  shrink_to(poly_divmod(m_, g).first);
  return false;
}

void NumberField::refine_lambda() {
  if (lambda_rational()) return;
  BigRat m = (lo_ + hi_) / 2;
  int sm = sign_at(m_, m);
  if (sm == 0) {
    lo_ = hi_ = m;
    m_ = {-m, BigRat(1)};
    return;
  }
  if (sign_at(m_, lo_) * sm < 0)
    hi_ = m;
  else
    lo_ = m;
}

std::pair<BigRat, BigRat> NumberField::interval_eval(const Elem& e) const {
  BigRat lo = 0, hi = 0;
  for (size_t i = e.size(); i-- > 0;) {
    BigRat a = lo * lo_, b = lo * hi_, c = hi * lo_, d = hi * hi_;
    lo = std::min(std::min(a, b), std::min(c, d)) + e[i];
    hi = std::max(std::max(a, b), std::max(c, d)) + e[i];
  }
  return {lo, hi};
}

int NumberField::sign(Elem e) {
  if (is_zero(e)) return 0;
  e = reduce(std::move(e));
  for (int guard = 0; guard < kRefineCap; ++guard) {
    auto [l, h] = interval_eval(e);
    if (l > 0) return 1;
    if (h < 0) return -1;
    refine_lambda();
    e = reduce(std::move(e));
  }
  throw PrecisionExhausted("sign determination in the number field stalled");
}

NumberField::Elem NumberField::inverse(Elem e) {
  e = reduce(std::move(e));
  for (;;) {
    if (e.empty()) throw InternalError("division by zero in the number field");
    if (poly_deg(m_) == 1) return {BigRat(1) / e[0]};
    auto [g, u] = half_egcd(e, m_);
    if (poly_deg(g) == 0) return reduce(std::move(u));
    if (vanishes_at_lambda(g)) throw InternalError("division by zero in the number field");
    shrink_to(poly_divmod(m_, g).first);
    e = reduce(std::move(e));
  }
}

std::pair<BigRat, BigRat> NumberField::enclose(Elem e, const BigRat& width) {
  e = reduce(std::move(e));
  for (int guard = 0; guard < kRefineCap; ++guard) {
    auto [l, h] = interval_eval(e);
    if (h - l <= width) return {l, h};
    refine_lambda();
    e = reduce(std::move(e));
  }
  throw PrecisionExhausted("number field enclosure did not converge");
}

std::vector<NumberField::Elem> solve_linear(NumberField& F,
                                            std::vector<std::vector<NumberField::Elem>> A,
                                            std::vector<NumberField::Elem> b) {
  size_t n = A.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && F.is_zero(A[piv][col])) ++piv;
    if (piv == n) throw InternalError("singular linear system in the number field");
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    auto inv = F.inverse(A[col][col]);
    for (size_t j = col; j < n; ++j) A[col][j] = F.mul(A[col][j], inv);
    b[col] = F.mul(b[col], inv);
    for (size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      auto factor = A[r][col];
      if (F.is_zero(factor)) continue;
      for (size_t j = col; j < n; ++j) A[r][j] = F.sub(A[r][j], F.mul(factor, A[col][j]));
      b[r] = F.sub(b[r], F.mul(factor, b[col]));
    }
  }
  return b;
}

std::vector<NumberField::Elem> kernel_vector(NumberField& F,
                                             std::vector<std::vector<NumberField::Elem>> A) {
  size_t n = A.size();
  std::vector<std::pair<size_t, size_t>> pivots;  // (row, col)
  std::vector<char> is_pivot_col(n, 0);
  size_t row = 0;
  for (size_t col = 0; col < n && row < n; ++col) {
    size_t piv = row;
    while (piv < n && F.is_zero(A[piv][col])) ++piv;
    if (piv == n) continue;
    std::swap(A[piv], A[row]);
    auto inv = F.inverse(A[row][col]);
    for (size_t j = col; j < n; ++j) A[row][j] = F.mul(A[row][j], inv);
    for (size_t r = 0; r < n; ++r) {
      if (r == row) continue;
      auto factor = A[r][col];
      if (F.is_zero(factor)) continue;
      for (size_t j = col; j < n; ++j) A[r][j] = F.sub(A[r][j], F.mul(factor, A[row][j]));
    }
    pivots.emplace_back(row, col);
    is_pivot_col[col] = 1;
    ++row;
  }
  std::vector<size_t> free_cols;
  for (size_t c = 0; c < n; ++c)
    if (!is_pivot_col[c]) free_cols.push_back(c);
  if (free_cols.size() != 1)
    throw InternalError("kernel dimension is not one where a simple eigenvalue was expected");
  size_t f = free_cols[0];
  std::vector<NumberField::Elem> x(n);
  x[f] = F.of_rat(1);
  for (auto [r, c] : pivots) x[c] = F.neg(A[r][f]);
  return x;
}

}  // namespace morphic
