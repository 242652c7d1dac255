#pragma once

// Small constructors shared by the test sources.

#include <initializer_list>
#include <vector>

#include "fgc/random.hpp"
#include "fgc/unitriangular.hpp"
#include "fgc/word.hpp"

namespace fgc::testing {

inline std::vector<Letter> letters(std::initializer_list<int> codes) {
  std::vector<Letter> out;
  out.reserve(codes.size());
  for (int c : codes) out.push_back(Letter(c));
  return out;
}

inline Word word(int rank, std::initializer_list<int> codes) {
  return Word::reduce(rank, letters(codes));
}

// Uniform tuple coordinates: each u_i is a random reduced word over
// f_1..f_{i-1} of length at most max_len.
inline UniTri random_unitri(int rank, std::size_t max_len, Rng& rng) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::vector<Word> tuple;
  for (int i = 2; i <= rank; ++i) {
    std::size_t L = len(rng);
    tuple.push_back(embed(random_reduced_word(i - 1, L, rng), rank));
  }
  return UniTri(rank, std::move(tuple));
}

}  // namespace fgc::testing
