#include "morphic/words.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace morphic {

Alphabet::Alphabet(std::vector<std::string> ns) {
  for (auto& n : ns) add(n);
}

Sym Alphabet::add(const std::string& name) {
  if (name.empty()) throw AlphabetMismatch("empty symbol name");
  if (by_name.count(name)) throw AlphabetMismatch("duplicate symbol name: " + name);
  Sym id = static_cast<Sym>(names.size());
  names.push_back(name);
  by_name.emplace(name, id);
  return id;
}

std::optional<Sym> Alphabet::find(const std::string& name) const {
  auto it = by_name.find(name);
  if (it == by_name.end()) return std::nullopt;
  return it->second;
}

Sym Alphabet::at(const std::string& name) const {
  auto s = find(name);
  if (!s) throw AlphabetMismatch("unknown symbol: " + name);
  return *s;
}

const std::string& Alphabet::name(Sym s) const {
  if (s < 0 || s >= size()) throw AlphabetMismatch("symbol id out of range");
  return names[static_cast<size_t>(s)];
}

std::string format_word(const Word& w, const Alphabet& alpha, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i && !sep.empty()) out += sep;
    out += alpha.name(w[i]);
  }
  return out;
}

Morphism::Morphism(int src, int dst, std::vector<Word> im)
    : src_size(src), dst_size(dst), images(std::move(im)) {
  if (static_cast<int>(images.size()) != src_size)
    throw AlphabetMismatch("morphism image count does not match the source alphabet");
  for (const auto& w : images)
    for (Sym s : w)
      if (s < 0 || s >= dst_size)
        throw AlphabetMismatch("morphism image uses a symbol outside the target alphabet");
}

Morphism Morphism::identity(int n) {
  std::vector<Word> im(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) im[static_cast<size_t>(a)] = {static_cast<Sym>(a)};
  return Morphism(n, n, std::move(im));
}

Word Morphism::operator()(const Word& w) const {
  size_t total = 0;
  for (Sym a : w) {
    if (a < 0 || a >= src_size) throw AlphabetMismatch("word symbol outside the source alphabet");
    total += images[static_cast<size_t>(a)].size();
  }
  Word out;
  out.reserve(total);
  for (Sym a : w) {
    const Word& im = images[static_cast<size_t>(a)];
    out.insert(out.end(), im.begin(), im.end());
  }
  return out;
}

bool Morphism::nonerasing() const {
  return std::all_of(images.begin(), images.end(), [](const Word& w) { return !w.empty(); });
}

bool Morphism::is_coding() const {
  return std::all_of(images.begin(), images.end(), [](const Word& w) { return w.size() == 1; });
}

Morphism Morphism::then(const Morphism& g) const {
  if (dst_size != g.src_size) throw AlphabetMismatch("composition alphabets do not line up");
  std::vector<Word> im;
  im.reserve(images.size());
  for (const auto& w : images) im.push_back(g(w));
  return Morphism(src_size, g.dst_size, std::move(im));
}

Morphism Morphism::power(unsigned k, std::size_t max_symbols) const {
  if (!is_endo()) throw AlphabetMismatch("power of a non-endomorphism");
  Morphism result = identity(src_size);
  for (unsigned i = 0; i < k; ++i) {
    result = result.then(*this);
    size_t total = 0;
    for (const auto& w : result.images) total += w.size();
    if (total > max_symbols) throw ResourceLimit("materialized morphism power exceeds the symbol cap");
  }
  return result;
}

std::vector<std::vector<BigInt>> Morphism::incidence() const {
  std::vector<std::vector<BigInt>> M(static_cast<size_t>(dst_size),
                                     std::vector<BigInt>(static_cast<size_t>(src_size), 0));
  for (int j = 0; j < src_size; ++j)
    for (Sym i : images[static_cast<size_t>(j)]) M[static_cast<size_t>(i)][static_cast<size_t>(j)] += 1;
  return M;
}

std::vector<BigInt> power_lengths(const Morphism& phi, unsigned k) {
  return power_lengths_weighted(phi, std::vector<BigInt>(static_cast<size_t>(phi.src_size), 1), k);
}

std::vector<BigInt> power_lengths_weighted(const Morphism& phi, const std::vector<BigInt>& weights,
                                           unsigned k) {
  if (!phi.is_endo()) throw AlphabetMismatch("power lengths of a non-endomorphism");
  if (weights.size() != static_cast<size_t>(phi.src_size))
    throw AlphabetMismatch("weight vector size does not match the alphabet");
  std::vector<BigInt> L = weights;
  for (unsigned step = 0; step < k; ++step) {
    std::vector<BigInt> next(L.size());
    for (size_t a = 0; a < L.size(); ++a) {
      BigInt sum = 0;
      for (Sym b : phi.images[a]) sum += L[static_cast<size_t>(b)];
      next[a] = sum;
    }
    L = std::move(next);
  }
  return L;
}

std::vector<char> mortal_letters(const Morphism& phi) {
  if (!phi.is_endo()) throw AlphabetMismatch("mortal letters of a non-endomorphism");
  size_t n = static_cast<size_t>(phi.src_size);
  std::vector<char> mortal(n, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t a = 0; a < n; ++a) {
      if (mortal[a]) continue;
      bool all_dead = true;
      for (Sym b : phi.images[a])
        if (!mortal[static_cast<size_t>(b)]) {
          all_dead = false;
          break;
        }
      if (all_dead) {
        mortal[a] = 1;
        changed = true;
      }
    }
  }
  return mortal;
}

std::vector<char> reachable_from(const Morphism& phi, Sym a0) {
  if (!phi.is_endo()) throw AlphabetMismatch("reachability in a non-endomorphism");
  size_t n = static_cast<size_t>(phi.src_size);
  std::vector<char> seen(n, 0);
  std::deque<Sym> queue{a0};
  seen[static_cast<size_t>(a0)] = 1;
  while (!queue.empty()) {
    Sym a = queue.front();
    queue.pop_front();
    for (Sym b : phi.images[static_cast<size_t>(a)])
      if (!seen[static_cast<size_t>(b)]) {
        seen[static_cast<size_t>(b)] = 1;
        queue.push_back(b);
      }
  }
  return seen;
}

bool fixed_point_infinite(const Morphism& phi, Sym axiom) {
  const Word& im = phi(axiom);
  if (im.size() < 2) return false;
  auto mortal = mortal_letters(phi);
  for (size_t i = 1; i < im.size(); ++i)
    if (!mortal[static_cast<size_t>(im[i])]) return true;
  return false;
}

void validate_system(const SubstitutionSystem& sys) {
  if (sys.A.size() == 0) throw AlphabetMismatch("empty substitution alphabet");
  if (sys.B.size() == 0) throw AlphabetMismatch("empty output alphabet");
  if (sys.phi.src_size != sys.A.size() || sys.phi.dst_size != sys.A.size())
    throw AlphabetMismatch("phi is not an endomorphism of the substitution alphabet");
  if (sys.psi.src_size != sys.A.size() || sys.psi.dst_size != sys.B.size())
    throw AlphabetMismatch("psi does not map the substitution alphabet into the output alphabet");
  if (sys.axiom < 0 || sys.axiom >= sys.A.size()) throw AlphabetMismatch("axiom outside the alphabet");
  const Word& im = sys.phi(sys.axiom);
  if (im.empty() || im[0] != sys.axiom)
    throw NotProlongable("phi(axiom) does not start with the axiom letter");
  if (!fixed_point_infinite(sys.phi, sys.axiom))
    throw FiniteFixedPoint("phi^infty(axiom) is a finite word");
}

Word fixed_point_prefix(const Morphism& phi, Sym axiom, std::size_t n) {
  if (!phi.is_endo()) throw AlphabetMismatch("fixed point of a non-endomorphism");
  Word X = phi(Word{axiom});
  if (X.empty() || X[0] != axiom)
    throw NotProlongable("phi(axiom) does not start with the axiom letter");
  size_t extend = 1;
  while (X.size() < n) {
    if (extend >= X.size()) throw FiniteFixedPoint("fixed point shorter than the requested prefix");
    const Word& im = phi(X[extend]);
    X.insert(X.end(), im.begin(), im.end());
    ++extend;
  }
  X.resize(n);
  return X;
}

Word image_prefix(const SubstitutionSystem& sys, std::size_t n, std::size_t step_cap) {
  Word X = sys.phi(Word{sys.axiom});
  if (X.empty() || X[0] != sys.axiom)
    throw NotProlongable("phi(axiom) does not start with the axiom letter");
  Word out;
  out.reserve(n);
  size_t consume = 0;
  size_t extend = 1;
  size_t steps = 0;
  while (out.size() < n) {
    if (consume < X.size()) {
      const Word& im = sys.psi(X[consume++]);
      for (Sym b : im) {
        out.push_back(b);
        if (out.size() == n) break;
      }
      if (++steps > step_cap) throw ResourceLimit("image prefix consumed too many fixed point letters");
      continue;
    }
    if (extend >= X.size())
      throw FiniteFixedPoint("psi(phi^infty(axiom)) shorter than the requested prefix");
    const Word& im = sys.phi(X[extend]);
    X.insert(X.end(), im.begin(), im.end());
    ++extend;
  }
  return out;
}

namespace {
struct GenOrder {
  bool operator()(const Word& x, const Word& y) const {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  }
};
}  // namespace

std::vector<Word> generators(const Morphism& phi, Sym axiom) {
  if (!phi.nonerasing())
    throw PreconditionViolated("generator extraction requires a non-erasing substitution");
  std::set<Word, GenOrder> known;
  std::deque<Word> queue;
  auto push_windows = [&](const Word& w) {
    auto push = [&](Word v) {
      if (known.insert(v).second) queue.push_back(std::move(v));
    };
    for (size_t i = 0; i < w.size(); ++i) push(Word{w[i]});
    for (size_t i = 0; i + 1 < w.size(); ++i) push(Word{w[i], w[i + 1]});
  };
  push_windows(phi(Word{axiom}));
  while (!queue.empty()) {
    Word v = std::move(queue.front());
    queue.pop_front();
    push_windows(phi(v));
  }
  return {known.begin(), known.end()};
}

}  // namespace morphic
