#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "morphic/errors.hpp"
#include "morphic/ints.hpp"

namespace morphic {

// Symbols are dense integer ids; display names live in the Alphabet and only
// matter at the I/O boundary.
using Sym = std::int32_t;
using Word = std::vector<Sym>;

struct Alphabet {
  std::vector<std::string> names;
  std::unordered_map<std::string, Sym> by_name;

  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> ns);

  int size() const { return static_cast<int>(names.size()); }
  Sym add(const std::string& name);
  std::optional<Sym> find(const std::string& name) const;
  Sym at(const std::string& name) const;
  const std::string& name(Sym s) const;
};

// Render a word through an alphabet's display names. With an empty separator
// the names are just concatenated.
std::string format_word(const Word& w, const Alphabet& alpha, const std::string& sep = "");

struct Morphism {
  int src_size = 0;
  int dst_size = 0;
  std::vector<Word> images;  // images[a] over [0, dst_size)

  Morphism() = default;
  Morphism(int src, int dst, std::vector<Word> im);
  static Morphism identity(int n);

  const Word& operator()(Sym a) const { return images[static_cast<size_t>(a)]; }
  Word operator()(const Word& w) const;

  bool nonerasing() const;
  bool is_coding() const;
  bool is_endo() const { return src_size == dst_size; }

  // Apply this morphism, then g. Result maps src_size -> g.dst_size.
  Morphism then(const Morphism& g) const;

  // k-fold composition of an endomorphism, images materialized. Throws
  // ResourceLimit once the images hold more than max_symbols letters in total.
  Morphism power(unsigned k, std::size_t max_symbols = 1u << 22) const;

  // M[i][j] = number of occurrences of letter i in images[j]; column j sums to
  // |images[j]|. dst_size x src_size.
  std::vector<std::vector<BigInt>> incidence() const;
};

// Exact |phi^k(a)| for every letter a, by iterating the length recurrence.
std::vector<BigInt> power_lengths(const Morphism& phi, unsigned k);

// Exact |psi(phi^k(a))| where weights[b] = |psi(b)|.
std::vector<BigInt> power_lengths_weighted(const Morphism& phi, const std::vector<BigInt>& weights,
                                           unsigned k);

struct SubstitutionSystem {
  Alphabet A;    // substitution alphabet
  Alphabet B;    // output alphabet of psi
  Sym axiom = 0;
  Morphism phi;  // endomorphism of A*
  Morphism psi;  // A* -> B*
};

// Letters whose iterated phi-image is eventually empty.
std::vector<char> mortal_letters(const Morphism& phi);

// Letters occurring in phi^n(a0) for some n (a0 included).
std::vector<char> reachable_from(const Morphism& phi, Sym a0);

// True when phi(axiom) = axiom . x and x survives forever (some letter of x is
// immortal). Assumes the first-letter condition was already checked.
bool fixed_point_infinite(const Morphism& phi, Sym axiom);

// Checks shapes, prolongability and infiniteness of phi^infty(axiom).
// Throws AlphabetMismatch / NotProlongable / FiniteFixedPoint.
void validate_system(const SubstitutionSystem& sys);

// First n letters of phi^infty(axiom). Streams block by block, so erasing
// images are fine; throws FiniteFixedPoint when the fixed point is shorter
// than n.
Word fixed_point_prefix(const Morphism& phi, Sym axiom, std::size_t n);

// First n letters of psi(phi^infty(axiom)). step_cap bounds how many fixed
// point letters may be consumed before giving up with ResourceLimit (psi may
// erase, so progress is not guaranteed without an infiniteness certificate).
Word image_prefix(const SubstitutionSystem& sys, std::size_t n, std::size_t step_cap = 1u << 26);

// All 1- and 2-letter factors of phi^infty(axiom), ordered by (length, lex on
// symbol ids). phi must be non-erasing.
std::vector<Word> generators(const Morphism& phi, Sym axiom);

}  // namespace morphic
