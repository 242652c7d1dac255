#pragma once

#include <cstdint>
#include <random>

#include "fgc/word.hpp"

namespace fgc {

// Mixes a seed with stream indices so that independent test cases get
// decorrelated engines while staying reproducible from one root seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream,
                                 std::uint64_t index) {
  return splitmix64(splitmix64(root ^ splitmix64(stream)) + index);
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(splitmix64(seed)); }

// Uniformly random freely reduced word of exactly the requested length:
// the first letter is uniform over all 2*rank symbols, each later letter
// uniform over the 2*rank - 1 symbols that do not cancel the previous one.
inline Word random_reduced_word(int rank, std::size_t length, Rng& rng) {
  if (rank < 1 && length > 0) {
    throw RankError("positive-length word needs rank >= 1");
  }
  if (length == 0) return Word(rank < 0 ? 0 : rank);
  std::vector<Letter> out;
  out.reserve(length);
  std::uniform_int_distribution<int> first(0, 2 * rank - 1);
  int c = first(rng);
  out.push_back(Letter::gen(c / 2 + 1, c % 2 == 0 ? +1 : -1));
  std::uniform_int_distribution<int> rest(0, 2 * rank - 2);
  while (out.size() < length) {
    Letter banned = out.back().inverse();
    int r = rest(rng);
    // Skip over the banned symbol in the fixed enumeration of all 2*rank.
    int banned_pos = (banned.index() - 1) * 2 + (banned.sign() > 0 ? 0 : 1);
    if (r >= banned_pos) ++r;
    out.push_back(Letter::gen(r / 2 + 1, r % 2 == 0 ? +1 : -1));
  }
  return Word::adopt_reduced(rank, std::move(out));
}

}  // namespace fgc
