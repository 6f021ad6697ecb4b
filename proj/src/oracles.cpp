#include "morphic/oracles.hpp"

#include <algorithm>

namespace morphic::oracles {

std::vector<std::size_t> occurrence_starts(const Word& prefix, const Word& factor) {
  std::vector<std::size_t> out;
  if (factor.empty() || factor.size() > prefix.size()) return out;
  for (size_t i = 0; i + factor.size() <= prefix.size(); ++i)
    if (std::equal(factor.begin(), factor.end(), prefix.begin() + static_cast<std::ptrdiff_t>(i)))
      out.push_back(i);
  return out;
}

std::set<Word> oracle_factors(const Word& prefix, std::size_t n) {
  std::set<Word> out;
  if (n == 0 || n > prefix.size()) return out;
  for (size_t i = 0; i + n <= prefix.size(); ++i)
    out.emplace(prefix.begin() + static_cast<std::ptrdiff_t>(i),
                prefix.begin() + static_cast<std::ptrdiff_t>(i + n));
  return out;
}

GapResult oracle_recurrence_gap(const Word& prefix, const Word& factor) {
  auto occ = occurrence_starts(prefix, factor);
  if (occ.empty()) return {GapResult::Absent, 0};
  if (occ.size() == 1) return {GapResult::SingleOccurrence, 0};
  size_t g = 0;
  for (size_t i = 0; i + 1 < occ.size(); ++i) g = std::max(g, occ[i + 1] - occ[i]);
  return {GapResult::Gap, g};
}

std::vector<BigInt> oracle_growth(const Morphism& phi, Sym a, unsigned n_max,
                                  std::size_t size_cap) {
  std::vector<BigInt> out;
  Word w{a};
  out.emplace_back(1);
  for (unsigned n = 1; n <= n_max; ++n) {
    w = phi(w);
    if (w.size() > size_cap) throw ResourceLimit("materialized growth iterate exceeds the size cap");
    out.emplace_back(w.size());
  }
  return out;
}

std::vector<BigInt> oracle_growth_matrix(const Morphism& phi, Sym a, unsigned n_max) {
  std::vector<BigInt> out;
  std::vector<BigInt> L(static_cast<size_t>(phi.src_size), 1);
  out.push_back(L[static_cast<size_t>(a)]);
  for (unsigned n = 1; n <= n_max; ++n) {
    std::vector<BigInt> next(L.size());
    for (size_t c = 0; c < L.size(); ++c) {
      BigInt sum = 0;
      for (Sym b : phi.images[c]) sum += L[static_cast<size_t>(b)];
      next[c] = sum;
    }
    L = std::move(next);
    out.push_back(L[static_cast<size_t>(a)]);
  }
  return out;
}

bool ultimately_periodic_check(const Word& w, std::size_t r, std::size_t q) {
  if (q == 0) return false;
  for (size_t i = r; i + q < w.size(); ++i)
    if (w[i] != w[i + q]) return false;
  return true;
}

}  // namespace morphic::oracles
