#include "morphic/algebra.hpp"

#include <algorithm>

namespace morphic {

QPoly poly_trim(QPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

QPoly poly_add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), BigRat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return poly_trim(std::move(r));
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), BigRat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return poly_trim(std::move(r));
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, BigRat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return poly_trim(std::move(r));
}

QPoly poly_scale(QPoly a, const BigRat& c) {
  if (c == 0) return {};
  for (auto& x : a) x *= c;
  return a;
}

std::pair<QPoly, QPoly> poly_divmod(const QPoly& a, const QPoly& b) {
  if (b.empty()) throw InternalError("polynomial division by zero");
  QPoly rem = a;
  QPoly quot;
  int db = poly_deg(b);
  if (poly_deg(rem) >= db) quot.assign(static_cast<size_t>(poly_deg(rem) - db + 1), BigRat(0));
  const BigRat& lead = b.back();
  while (poly_deg(rem) >= db) {
    int k = poly_deg(rem) - db;
    BigRat c = rem.back() / lead;
    quot[static_cast<size_t>(k)] = c;
    for (int i = 0; i <= db; ++i) rem[static_cast<size_t>(k + i)] -= c * b[static_cast<size_t>(i)];
    rem = poly_trim(std::move(rem));
  }
  return {poly_trim(std::move(quot)), std::move(rem)};
}

QPoly poly_monic(QPoly p) {
  p = poly_trim(std::move(p));
  if (p.empty()) return p;
  BigRat lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

QPoly poly_gcd(QPoly a, QPoly b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    auto [q, r] = poly_divmod(a, b);
    (void)q;
    a = std::move(b);
    b = poly_monic(std::move(r));  // normalization keeps coefficients tame
  }
  return poly_monic(std::move(a));
}

QPoly poly_derivative(const QPoly& p) {
  if (p.size() <= 1) return {};
  QPoly r(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * BigRat(static_cast<unsigned>(i));
  return poly_trim(std::move(r));
}

QPoly poly_squarefree(const QPoly& p) {
  QPoly q = poly_monic(p);
  if (poly_deg(q) <= 1) return q;
  QPoly g = poly_gcd(q, poly_derivative(q));
  if (poly_deg(g) <= 0) return q;
  return poly_monic(poly_divmod(q, g).first);
}

BigRat poly_eval(const QPoly& p, const BigRat& x) {
  BigRat acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

int sign_at(const QPoly& p, const BigRat& x) {
  BigRat v = poly_eval(p, x);
  return v.sign();
}

SturmChain::SturmChain(const QPoly& squarefree) {
  QPoly a = poly_trim(squarefree);
  if (a.empty()) throw InternalError("Sturm chain of the zero polynomial");
  seq.push_back(a);
  QPoly b = poly_derivative(a);
  while (!b.empty()) {
    seq.push_back(b);
    QPoly r = poly_divmod(a, b).second;
    for (auto& c : r) c = -c;
    // scale by a positive constant only: signs must be preserved
    if (!r.empty()) {
      BigRat lead = r.back();
      if (lead < 0) lead = -lead;
      for (auto& c : r) c /= lead;
    }
    a = std::move(b);
    b = std::move(r);
  }
}

int SturmChain::variations(const BigRat& x) const {
  int var = 0;
  int prev = 0;
  for (const auto& p : seq) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int SturmChain::count_roots(const BigRat& a, const BigRat& b) const {
  if (a > b) throw InternalError("bad root counting interval");
  if (a == b) return 0;
  return variations(a) - variations(b);
}

QPoly char_poly(const std::vector<std::vector<BigInt>>& M) {
  size_t n = M.size();
  for (const auto& row : M)
    if (row.size() != n) throw InternalError("characteristic polynomial of a non-square matrix");
  // Faddeev-LeVerrier: exact over the integers, every division comes out even
  std::vector<std::vector<BigInt>> Mk(n, std::vector<BigInt>(n, 0));
  std::vector<BigInt> c(n + 1);
  c[n] = 1;  // coefficient of x^n
  std::vector<std::vector<BigInt>> acc = M;
  for (size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      // acc = M * (Mk + c_{k-1} I)
      std::vector<std::vector<BigInt>> tmp = Mk;
      for (size_t i = 0; i < n; ++i) tmp[i][i] += c[n - (k - 1)];
      std::vector<std::vector<BigInt>> prod(n, std::vector<BigInt>(n, 0));
      for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < n; ++l) {
          if (M[i][l] == 0) continue;
          for (size_t j = 0; j < n; ++j) prod[i][j] += M[i][l] * tmp[l][j];
        }
      acc = std::move(prod);
    }
    BigInt tr = 0;
    for (size_t i = 0; i < n; ++i) tr += acc[i][i];
    BigInt ck = -tr / BigInt(k);
    if (ck * BigInt(k) != -tr) throw InternalError("Faddeev-LeVerrier division was not exact");
    c[n - k] = ck;
    Mk = acc;
  }
  QPoly out(n + 1);
  for (size_t i = 0; i <= n; ++i) out[i] = BigRat(c[i]);
  return poly_trim(std::move(out));
}

AlgebraicReal algebraic_rational(const BigRat& r) { return AlgebraicReal{{}, r, r}; }

void refine_once(AlgebraicReal& x) {
  if (x.is_rational()) return;
  BigRat m = x.mid();
  int sm = sign_at(x.p, m);
  if (sm == 0) {
    x.lo = x.hi = m;
    x.p.clear();
    return;
  }
  if (sign_at(x.p, x.lo) * sm < 0)
    x.hi = m;
  else
    x.lo = m;
}

void refine_to_width(AlgebraicReal& x, const BigRat& width) {
  while (!x.is_rational() && x.hi - x.lo > width) refine_once(x);
}

int compare(AlgebraicReal a, AlgebraicReal b) {
  if (a.is_rational() && b.is_rational()) return a.lo < b.lo ? -1 : (a.lo == b.lo ? 0 : 1);
  if (a.is_rational()) return -compare(std::move(b), std::move(a));
  if (b.is_rational()) {
    const BigRat r = b.lo;
    if (r > a.lo && r < a.hi && sign_at(a.p, r) == 0) return 0;
    while (r > a.lo && r < a.hi) refine_once(a);
    if (a.is_rational()) return a.lo < r ? -1 : (a.lo == r ? 0 : 1);
    return a.hi <= r ? -1 : 1;
  }
  // exact equality: the gcd holds the common roots; one of them inside both
  // isolating intervals means the two numbers are the same root
  QPoly g = poly_gcd(a.p, b.p);
  if (poly_deg(g) >= 1) {
    BigRat L = std::max(a.lo, b.lo), R = std::min(a.hi, b.hi);
    if (L < R && SturmChain(g).count_roots(L, R) >= 1) return 0;
  }
  for (int guard = 0; guard < 100000; ++guard) {
    if (a.hi <= b.lo) return -1;
    if (b.hi <= a.lo) return 1;
    refine_once(a);
    refine_once(b);
    if (a.is_rational() || b.is_rational()) return compare(std::move(a), std::move(b));
  }
  throw PrecisionExhausted("algebraic comparison did not separate");
}

AlgebraicReal largest_root_in(const QPoly& p, const BigRat& bound) {
  QPoly sf = poly_squarefree(p);
  if (poly_deg(sf) < 1) throw InternalError("largest root of a constant polynomial");
  SturmChain chain(sf);
  BigRat a = 0, b = bound;
  if (chain.count_roots(a, b) < 1) throw InternalError("no root in the requested interval");
  // shrink until exactly one root remains in (a, b]
  while (chain.count_roots(a, b) > 1) {
    BigRat m = (a + b) / 2;
    if (chain.count_roots(m, b) >= 1)
      a = m;
    else
      b = m;
  }
  if (sign_at(sf, b) == 0) return algebraic_rational(b);
  // isolate away from a possible root at the left endpoint
  while (sign_at(sf, a) == 0) {
    BigRat m = (a + b) / 2;
    if (sign_at(sf, m) == 0) return algebraic_rational(m);
    if (chain.count_roots(m, b) == 1)
      a = m;
    else
      b = m;
  }
  // Integer roots are common here (a rational root of a monic integer
  // polynomial is an integer) and an exact value degrades all later field
  // arithmetic to plain rationals, so look for one before answering.
  while (b - a >= 1) {
    BigRat m = (a + b) / 2;
    if (sign_at(sf, m) == 0) return algebraic_rational(m);
    if (chain.count_roots(m, b) == 1)
      a = m;
    else
      b = m;
  }
  BigRat n(floor_rat(a) + 1);
  if (n < b && sign_at(sf, n) == 0) return algebraic_rational(n);
  return AlgebraicReal{sf, a, b};
}

std::string decimal_str(const BigRat& r, int digits) {
  BigInt scale = pow_int(10, static_cast<unsigned>(digits));
  BigRat scaled = r * BigRat(scale);
  BigInt t = floor_rat(scaled);
  bool neg = t < 0;
  if (neg) t = -t;
  std::string ds = t.str();
  while (static_cast<int>(ds.size()) <= digits) ds.insert(ds.begin(), '0');
  std::string out = ds.substr(0, ds.size() - static_cast<size_t>(digits));
  if (digits > 0) out += "." + ds.substr(ds.size() - static_cast<size_t>(digits));
  if (neg) out.insert(out.begin(), '-');
  return out;
}

}  // namespace morphic
