#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "morphic/words.hpp"

// Test shorthand: single-character symbols 'a', 'b', 'c', ... with ids 0, 1, 2, ...

inline morphic::Word wd(std::string_view s) {
  morphic::Word w;
  for (char c : s) w.push_back(static_cast<morphic::Sym>(c - 'a'));
  return w;
}

inline morphic::Morphism mor(std::initializer_list<std::string_view> images, int dst = -1) {
  std::vector<morphic::Word> im;
  int max_letter = -1;
  for (auto s : images) {
    im.push_back(wd(s));
    for (auto x : im.back()) max_letter = std::max<int>(max_letter, x);
  }
  int src = static_cast<int>(im.size());
  if (dst < 0) dst = std::max(src, max_letter + 1);
  return morphic::Morphism(src, dst, std::move(im));
}

inline morphic::Alphabet letters(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return morphic::Alphabet(names);
}

inline morphic::SubstitutionSystem sys_identity_psi(morphic::Morphism phi, morphic::Sym axiom = 0) {
  morphic::SubstitutionSystem s;
  s.A = letters(phi.src_size);
  s.B = s.A;
  s.axiom = axiom;
  s.psi = morphic::Morphism::identity(phi.src_size);
  s.phi = std::move(phi);
  return s;
}
