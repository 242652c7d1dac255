#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fgc/word.hpp"

namespace fgc {

// The word consisting of the single letter f_i.
inline Word generator_word(int rank, int i) {
  if (i < 1 || i > rank) {
    throw RankError("generator index " + std::to_string(i) +
                    " outside rank " + std::to_string(rank));
  }
  return Word::adopt_reduced(rank, {Letter::gen(i)});
}

// An endomorphism of F_n, stored as the images of f_1..f_n.  Because
// reduced words are unique normal forms, componentwise equality of the
// image table decides equality of the maps.
class EndoMap {
 public:
  EndoMap(int rank, std::vector<Word> images)
      : rank_(rank), images_(std::move(images)) {
    if (rank < 1) throw RankError("endomorphism needs rank >= 1");
    if (images_.size() != static_cast<std::size_t>(rank)) {
      throw RankError("expected " + std::to_string(rank) + " images, got " +
                      std::to_string(images_.size()));
    }
    for (const Word& w : images_) {
      if (w.rank() != rank) {
        throw RankError("image rank " + std::to_string(w.rank()) +
                        " differs from map rank " + std::to_string(rank));
      }
    }
  }

  static EndoMap identity(int rank) {
    std::vector<Word> images;
    images.reserve(static_cast<std::size_t>(rank));
    for (int i = 1; i <= rank; ++i) images.push_back(generator_word(rank, i));
    return EndoMap(rank, std::move(images));
  }

  int rank() const { return rank_; }
  const std::vector<Word>& images() const { return images_; }

  // Image of f_i, 1-based.
  const Word& image(int i) const {
    if (i < 1 || i > rank_) {
      throw RankError("no generator f_" + std::to_string(i) + " in rank " +
                      std::to_string(rank_));
    }
    return images_[static_cast<std::size_t>(i - 1)];
  }

  friend bool operator==(const EndoMap&, const EndoMap&) = default;

 private:
  int rank_;
  std::vector<Word> images_;
};

inline EndoMap identity_endo(int rank) { return EndoMap::identity(rank); }

// Substitution: each letter f_i^s of w is replaced by image(i)^s, with
// free reduction folded into the single output pass.
inline Word apply(const EndoMap& e, const Word& w) {
  if (e.rank() != w.rank()) {
    throw RankError("cannot apply rank-" + std::to_string(e.rank()) +
                    " map to rank-" + std::to_string(w.rank()) + " word");
  }
  std::vector<Letter> out;
  for (Letter x : w.letters()) {
    const Word& img = e.image(x.index());
    if (x.sign() > 0) {
      for (Letter y : img.letters()) detail::push_reduced(out, y);
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend();
           ++it) {
        detail::push_reduced(out, it->inverse());
      }
    }
  }
  return Word::adopt_reduced(w.rank(), std::move(out));
}

// Right-action convention used throughout: compose(a, b) applies a first,
// so apply(compose(a, b), w) = apply(b, apply(a, w)), and a product
// written g1 g2 ... gk acts by applying g1 first.
inline EndoMap compose(const EndoMap& a, const EndoMap& b) {
  if (a.rank() != b.rank()) {
    throw RankError("compose rank mismatch: " + std::to_string(a.rank()) +
                    " vs " + std::to_string(b.rank()));
  }
  std::vector<Word> images;
  images.reserve(a.images().size());
  for (const Word& u : a.images()) images.push_back(apply(b, u));
  return EndoMap(a.rank(), std::move(images));
}

inline bool is_identity(const EndoMap& e) {
  for (int i = 1; i <= e.rank(); ++i) {
    const Word& img = e.image(i);
    if (img.length() != 1 || img.letters()[0] != Letter::gen(i)) return false;
  }
  return true;
}

// Conjugation g |-> c^-1 g c.  Under the right-action convention this is
// covariant: inner_auto(c) then inner_auto(d) equals inner_auto(c d).
inline EndoMap inner_auto(int rank, const Word& c) {
  Word ce = embed(c, rank);
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) {
    images.push_back(conjugate(generator_word(rank, i), ce));
  }
  return EndoMap(rank, std::move(images));
}

// A named automorphism together with its known inverse.  Inverses are
// supplied, not computed: nothing here certifies a general EndoMap as an
// automorphism.
struct NamedEndo {
  EndoMap forward;
  EndoMap inverse;
};

using EndoTable = std::map<std::string, NamedEndo, std::less<>>;

// A group word in named generators: (name, exponent) with exponent +-1.
using EndoWord = std::vector<std::pair<std::string, int>>;

// tau1, tau2 (conjugation by f_1, f_2) and sigma (f_2 |-> f_1 f_2),
// the generating set of the rank-2 automorphism group used here.
inline EndoTable aut_f2_table() {
  EndoTable table;
  Word f1 = generator_word(2, 1);
  Word f2 = generator_word(2, 2);
  table.emplace("tau1", NamedEndo{inner_auto(2, f1), inner_auto(2, invert(f1))});
  table.emplace("tau2", NamedEndo{inner_auto(2, f2), inner_auto(2, invert(f2))});
  EndoMap sigma(2, {f1, multiply(f1, f2)});
  EndoMap sigma_inv(2, {f1, multiply(invert(f1), f2)});
  table.emplace("sigma", NamedEndo{std::move(sigma), std::move(sigma_inv)});
  return table;
}

// Evaluates a group word in named generators by folding compose left to
// right (right action: the leftmost factor is applied first).
inline EndoMap evaluate_endo_word(const EndoTable& table, const EndoWord& word,
                                  int rank) {
  EndoMap acc = identity_endo(rank);
  for (const auto& [name, exponent] : word) {
    auto it = table.find(name);
    if (it == table.end()) {
      throw std::invalid_argument("unbound generator name: " + name);
    }
    if (exponent != +1 && exponent != -1) {
      throw std::invalid_argument("exponent must be +1 or -1");
    }
    const EndoMap& step =
        exponent > 0 ? it->second.forward : it->second.inverse;
    if (step.rank() != rank) {
      throw RankError("generator " + name + " has rank " +
                      std::to_string(step.rank()) + ", expected " +
                      std::to_string(rank));
    }
    acc = compose(acc, step);
  }
  return acc;
}

}  // namespace fgc
