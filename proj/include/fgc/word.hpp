#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fgc {

// Thrown when an operation mixes objects over free groups of different
// ranks, or when a generator index lies outside the declared rank.
struct RankError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// One symbol f_k or f_k^-1, packed as the nonzero integer +k or -k.
class Letter {
 public:
  constexpr explicit Letter(std::int32_t code) : code_(code) {
    assert(code != 0);
  }

  static constexpr Letter gen(int index, int sign = +1) {
    assert(index >= 1);
    assert(sign == +1 || sign == -1);
    return Letter(static_cast<std::int32_t>(sign > 0 ? index : -index));
  }

  constexpr int index() const { return code_ < 0 ? -code_ : code_; }
  constexpr int sign() const { return code_ < 0 ? -1 : +1; }
  constexpr Letter inverse() const { return Letter(-code_); }
  constexpr std::int32_t code() const { return code_; }

  friend constexpr bool operator==(Letter, Letter) = default;

 private:
  std::int32_t code_;
};

namespace detail {

inline void check_rank(int rank) {
  if (rank < 0) throw RankError("rank must be nonnegative");
}

// Core cancellation step shared by every word constructor: push x onto an
// already reduced buffer, cancelling against the top if possible.
inline void push_reduced(std::vector<Letter>& out, Letter x) {
  if (!out.empty() && out.back() == x.inverse()) {
    out.pop_back();
  } else {
    out.push_back(x);
  }
}

}  // namespace detail

// A freely reduced word over the generators f_1..f_rank of a free group.
// Every instance is reduced; all operations preserve that invariant, so
// two words are equal in the group iff they compare equal here.
class Word {
 public:
  // The empty word (group identity).
  explicit Word(int rank) : rank_(rank) { detail::check_rank(rank); }

  // Free reduction of an arbitrary letter sequence, in one stack pass.
  static Word reduce(int rank, const std::vector<Letter>& letters) {
    detail::check_rank(rank);
    std::vector<Letter> out;
    out.reserve(letters.size());
    for (Letter x : letters) {
      if (x.index() > rank) {
        throw RankError("letter f_" + std::to_string(x.index()) +
                        " exceeds rank " + std::to_string(rank));
      }
      detail::push_reduced(out, x);
    }
    return Word(rank, std::move(out));
  }

  // Wraps a buffer the caller guarantees is already reduced and in range.
  static Word adopt_reduced(int rank, std::vector<Letter> letters) {
#ifndef NDEBUG
    for (std::size_t i = 0; i < letters.size(); ++i) {
      assert(letters[i].index() >= 1 && letters[i].index() <= rank);
      assert(i == 0 || letters[i - 1] != letters[i].inverse());
    }
#endif
    return Word(rank, std::move(letters));
  }

  int rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  Word(int rank, std::vector<Letter> letters)
      : rank_(rank), letters_(std::move(letters)) {}

  int rank_ = 0;
  std::vector<Letter> letters_;
};

namespace detail {

inline void require_same_rank(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) {
    throw RankError("rank mismatch: " + std::to_string(u.rank()) + " vs " +
                    std::to_string(v.rank()));
  }
}

}  // namespace detail

// Product u * v.  Both inputs are reduced, so cancellation can only happen
// at the seam and one pass over v suffices.
inline Word multiply(const Word& u, const Word& v) {
  detail::require_same_rank(u, v);
  std::vector<Letter> out = u.letters();
  out.reserve(out.size() + v.length());
  for (Letter x : v.letters()) detail::push_reduced(out, x);
  return Word::adopt_reduced(u.rank(), std::move(out));
}

inline Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word::adopt_reduced(w.rank(), std::move(out));
}

// [u, v] = u v u^-1 v^-1, assembled through a single reduction buffer.
inline Word commutator(const Word& u, const Word& v) {
  detail::require_same_rank(u, v);
  std::vector<Letter> out;
  out.reserve(2 * (u.length() + v.length()));
  for (Letter x : u.letters()) out.push_back(x);
  for (Letter x : v.letters()) detail::push_reduced(out, x);
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) {
    detail::push_reduced(out, it->inverse());
  }
  for (auto it = v.letters().rbegin(); it != v.letters().rend(); ++it) {
    detail::push_reduced(out, it->inverse());
  }
  return Word::adopt_reduced(u.rank(), std::move(out));
}

// c^-1 w c.
inline Word conjugate(const Word& w, const Word& c) {
  return multiply(multiply(invert(c), w), c);
}

// Largest generator index appearing in w, or 0 for the identity.
inline int max_generator(const Word& w) {
  int m = 0;
  for (Letter x : w.letters()) {
    if (x.index() > m) m = x.index();
  }
  return m;
}

// The same word viewed in a free group of different rank.  Any rank that
// still covers every letter is allowed, so this both embeds into a larger
// group and trims unused trailing generators.
inline Word embed(const Word& w, int new_rank) {
  if (new_rank < max_generator(w)) {
    throw RankError("rank " + std::to_string(new_rank) +
                    " does not cover word over f_1..f_" +
                    std::to_string(max_generator(w)));
  }
  return Word::adopt_reduced(new_rank, w.letters());
}

inline Word operator*(const Word& u, const Word& v) { return multiply(u, v); }

inline std::string to_text(Letter x) {
  std::string s = "f" + std::to_string(x.index());
  if (x.sign() < 0) s += "^-1";
  return s;
}

// "e" for the identity, otherwise space-separated letters: "f2 f1^-1 f2".
inline std::string to_text(const Word& w) {
  if (w.is_identity()) return "e";
  std::string s;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i > 0) s += ' ';
    s += to_text(w.letters()[i]);
  }
  return s;
}

}  // namespace fgc
