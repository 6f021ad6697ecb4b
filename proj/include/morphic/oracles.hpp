#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "morphic/words.hpp"

namespace morphic::oracles {

// Deliberately naive reference implementations. These anchor the expected
// values in the test suite, so they must stay obviously correct; quadratic
// scans are fine.

std::vector<std::size_t> occurrence_starts(const Word& prefix, const Word& factor);

std::set<Word> oracle_factors(const Word& prefix, std::size_t n);

struct GapResult {
  enum Kind { Absent, SingleOccurrence, Gap };
  Kind kind = Absent;
  std::size_t max_gap = 0;  // meaningful only when kind == Gap
};

// Largest distance between consecutive occurrence starts of factor in prefix.
GapResult oracle_recurrence_gap(const Word& prefix, const Word& factor);

// |phi^n(a)| for n = 0..n_max by materializing the words.
std::vector<BigInt> oracle_growth(const Morphism& phi, Sym a, unsigned n_max,
                                  std::size_t size_cap = 1u << 24);

// Same values through the length recurrence; cross-checked against the above.
std::vector<BigInt> oracle_growth_matrix(const Morphism& phi, Sym a, unsigned n_max);

// w[i] == w[i+q] for all r <= i < |w| - q.
bool ultimately_periodic_check(const Word& w, std::size_t r, std::size_t q);

}  // namespace morphic::oracles
