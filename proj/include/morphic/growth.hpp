#pragma once

#include <variant>
#include <vector>

#include "morphic/algebra.hpp"
#include "morphic/words.hpp"

namespace morphic {

struct SccInfo {
  int count = 0;
  std::vector<int> comp;                  // letter -> component id
  std::vector<std::vector<Sym>> members;  // component id -> letters
  std::vector<std::vector<int>> succ;     // condensation edges, sorted unique
};

// Components of the digraph with an edge a -> b whenever b occurs in phi(a).
// Ids come out in reverse topological order: every successor of a component
// has a smaller id (sinks first).
SccInfo scc_condensation(const Morphism& phi);

struct GrowthRate {
  int d = 0;            // polynomial degree
  AlgebraicReal theta;  // exponential base; 1 for bounded letters
};

// theta first, then d
int compare(const GrowthRate& x, const GrowthRate& y);

// |phi^n(a)| grows like n^d * theta^n. phi non-erasing.
std::vector<GrowthRate> letter_growth(const Morphism& phi);

struct GrowthConstants {
  BigRat K1, K2;          // K1 * lambda^k < |psi(phi^k(a))| < K2 * lambda^k, all k >= 0
  BigRat Theta1, Theta2;  // rationals with 1 < Theta1 <= lambda <= Theta2
};

struct UniformGrowth {
  GrowthConstants constants;
  AlgebraicReal lambda;  // the common Perron root of the occurring letters
};

struct GapWitness {
  Word factor;      // fast letter, then slower letters, then a fast letter
  size_t position;  // start offset in phi^infty(axiom)
};

using GrowthCheckResult = std::variant<UniformGrowth, GapWitness>;

// The uniform growth test on a system whose letters all grow. weights[a] must
// be |psi_eff(a)| >= 1 for the effective output morphism. When some occurring
// letter is slower than the axiom's rate, returns an explicit gap factor;
// otherwise certifies the constants through an exact left Perron eigenvector,
// which makes the K1/K2 inequalities valid for every k, not just tested ones.
GrowthCheckResult uniform_growth_check(const Morphism& phi, Sym axiom,
                                       const std::vector<BigInt>& weights,
                                       std::size_t scan_cap = 1u << 22);

}  // namespace morphic
