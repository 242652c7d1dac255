#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fgc/endomorphism.hpp"
#include "fgc/random.hpp"
#include "fgc/word.hpp"

namespace fgc {

// An automorphism of F_n that fixes f_1 and sends each later f_i to
// u_i f_i with u_i a word over f_1..f_{i-1}.  The tuple (u_2,...,u_n) is
// stored directly; it is a complete and unique coordinate system, so
// structural equality decides group equality.
class UniTri {
 public:
  // Identity element of the rank-n group.
  explicit UniTri(int rank) : rank_(rank) {
    if (rank < 1) throw RankError("unitriangular rank must be >= 1");
    tuple_.assign(static_cast<std::size_t>(rank - 1), Word(rank));
  }

  UniTri(int rank, std::vector<Word> tuple)
      : rank_(rank), tuple_(std::move(tuple)) {
    if (rank < 1) throw RankError("unitriangular rank must be >= 1");
    if (tuple_.size() != static_cast<std::size_t>(rank - 1)) {
      throw RankError("rank " + std::to_string(rank) + " needs " +
                      std::to_string(rank - 1) + " tuple entries, got " +
                      std::to_string(tuple_.size()));
    }
    for (int i = 2; i <= rank; ++i) {
      const Word& u = tuple_[static_cast<std::size_t>(i - 2)];
      if (u.rank() != rank) {
        throw RankError("tuple entry u_" + std::to_string(i) +
                        " has rank " + std::to_string(u.rank()) +
                        ", expected " + std::to_string(rank));
      }
      if (max_generator(u) > i - 1) {
        throw RankError("tuple entry u_" + std::to_string(i) +
                        " must lie in the subgroup on f_1..f_" +
                        std::to_string(i - 1));
      }
    }
  }

  int rank() const { return rank_; }
  const std::vector<Word>& tuple() const { return tuple_; }

  // u_i for 2 <= i <= rank.
  const Word& entry(int i) const {
    if (i < 2 || i > rank_) {
      throw RankError("tuple index " + std::to_string(i) +
                      " outside 2.." + std::to_string(rank_));
    }
    return tuple_[static_cast<std::size_t>(i - 2)];
  }

  bool is_identity() const {
    for (const Word& u : tuple_) {
      if (!u.is_identity()) return false;
    }
    return true;
  }

  friend bool operator==(const UniTri&, const UniTri&) = default;

 private:
  int rank_;
  std::vector<Word> tuple_;
};

// (f_1, u_2 f_2, ..., u_n f_n).  No cancellation can occur: u_i has no
// f_i letters, so the concatenations are already reduced.
inline EndoMap to_endo(const UniTri& phi) {
  int n = phi.rank();
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(n));
  images.push_back(generator_word(n, 1));
  for (int i = 2; i <= n; ++i) {
    std::vector<Letter> buf = phi.entry(i).letters();
    buf.push_back(Letter::gen(i));
    images.push_back(Word::adopt_reduced(n, std::move(buf)));
  }
  return EndoMap(n, std::move(images));
}

// Recognizes the unitriangular shape: f_1 must map to itself and each
// image of f_i must end in the letter f_i with its prefix over
// f_1..f_{i-1}.  Failure is an expected outcome, not an error.
inline std::optional<UniTri> from_endo(const EndoMap& e) {
  int n = e.rank();
  if (e.image(1) != generator_word(n, 1)) return std::nullopt;
  std::vector<Word> tuple;
  tuple.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 2; i <= n; ++i) {
    const Word& img = e.image(i);
    if (img.is_identity() || img.letters().back() != Letter::gen(i)) {
      return std::nullopt;
    }
    std::vector<Letter> prefix(img.letters().begin(),
                               img.letters().end() - 1);
    for (Letter x : prefix) {
      if (x.index() >= i) return std::nullopt;
    }
    tuple.push_back(Word::adopt_reduced(n, std::move(prefix)));
  }
  return UniTri(n, std::move(tuple));
}

// Group law in tuple coordinates, right action: the product "phi then
// psi" has entries apply(psi, u_i) * v_i.  Agrees with composing the
// induced endomorphisms.
inline UniTri ut_compose(const UniTri& phi, const UniTri& psi) {
  if (phi.rank() != psi.rank()) {
    throw RankError("ut_compose rank mismatch: " +
                    std::to_string(phi.rank()) + " vs " +
                    std::to_string(psi.rank()));
  }
  EndoMap pe = to_endo(psi);
  std::vector<Word> tuple;
  tuple.reserve(phi.tuple().size());
  for (int i = 2; i <= phi.rank(); ++i) {
    tuple.push_back(multiply(apply(pe, phi.entry(i)), psi.entry(i)));
  }
  return UniTri(phi.rank(), std::move(tuple));
}

// Inverse by induction on the coordinate: once v_2..v_{i-1} are known
// they determine the inverse on f_1..f_{i-1}, which is exactly where
// u_i lives, giving v_i = inverse_so_far(u_i^-1).
inline UniTri ut_invert(const UniTri& phi) {
  int n = phi.rank();
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) images.push_back(generator_word(n, i));
  std::vector<Word> tuple;
  tuple.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 2; i <= n; ++i) {
    EndoMap partial(n, images);
    Word v = apply(partial, invert(phi.entry(i)));
    tuple.push_back(v);
    std::vector<Letter> img = v.letters();
    img.push_back(Letter::gen(i));
    images[static_cast<std::size_t>(i - 1)] =
        Word::adopt_reduced(n, std::move(img));
  }
  return UniTri(n, std::move(tuple));
}

inline UniTri ut_commutator(const UniTri& a, const UniTri& b) {
  return ut_compose(ut_compose(ut_compose(a, b), ut_invert(a)),
                    ut_invert(b));
}

// The Nielsen move f_i |-> f_j f_i (j < i), fixing every other basis
// element: the tuple with u_i = f_j.
inline UniTri lambda_gen(int rank, int i, int j) {
  if (!(1 <= j && j < i && i <= rank)) {
    throw RankError("lambda generator needs 1 <= j < i <= rank, got i=" +
                    std::to_string(i) + " j=" + std::to_string(j) +
                    " rank=" + std::to_string(rank));
  }
  UniTri id(rank);
  std::vector<Word> tuple = id.tuple();
  tuple[static_cast<std::size_t>(i - 2)] = generator_word(rank, j);
  return UniTri(rank, std::move(tuple));
}

// One symbol lambda(i,j)^exponent of a word in the Nielsen generators.
struct LambdaLetter {
  int i;
  int j;
  int exponent;  // +1 or -1

  friend bool operator==(const LambdaLetter&, const LambdaLetter&) = default;
};

using LambdaWord = std::vector<LambdaLetter>;

inline LambdaLetter inverse(LambdaLetter x) {
  return {x.i, x.j, -x.exponent};
}

inline LambdaWord invert(const LambdaWord& w) {
  LambdaWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

// Inverse generators stay primitive: lambda(i,j)^-1 is the tuple with
// u_i = f_j^-1, not an expanded word.
inline UniTri lambda_gen_signed(int rank, const LambdaLetter& x) {
  if (x.exponent != +1 && x.exponent != -1) {
    throw std::invalid_argument("lambda exponent must be +1 or -1");
  }
  UniTri g = lambda_gen(rank, x.i, x.j);
  if (x.exponent < 0) {
    std::vector<Word> tuple = g.tuple();
    tuple[static_cast<std::size_t>(x.i - 2)] =
        invert(tuple[static_cast<std::size_t>(x.i - 2)]);
    return UniTri(rank, std::move(tuple));
  }
  return g;
}

// Folds left to right under the right action, so the written word acts
// leftmost factor first.
inline UniTri evaluate_lambda_word(int rank, const LambdaWord& w) {
  UniTri acc(rank);
  for (const LambdaLetter& x : w) {
    acc = ut_compose(acc, lambda_gen_signed(rank, x));
  }
  return acc;
}

// Whether phi fixes each of f_1..f_m.  In tuple coordinates that is
// emptiness of u_2..u_m; f_1 is fixed by every element.
inline bool fixes(const UniTri& phi, int m) {
  if (m > phi.rank()) {
    throw RankError("prefix " + std::to_string(m) + " exceeds rank " +
                    std::to_string(phi.rank()));
  }
  for (int i = 2; i <= m; ++i) {
    if (!phi.entry(i).is_identity()) return false;
  }
  return true;
}

// Uniformly random Nielsen-generator symbol over F_rank.
inline LambdaLetter random_lambda_letter(int rank, Rng& rng) {
  if (rank < 2) throw RankError("no lambda generators below rank 2");
  std::uniform_int_distribution<int> pick_i(2, rank);
  int i = pick_i(rng);
  std::uniform_int_distribution<int> pick_j(1, i - 1);
  std::uniform_int_distribution<int> pick_s(0, 1);
  return {i, pick_j(rng), pick_s(rng) ? +1 : -1};
}

inline LambdaWord random_lambda_word(int rank, std::size_t length, Rng& rng) {
  LambdaWord out;
  out.reserve(length);
  for (std::size_t k = 0; k < length; ++k) {
    out.push_back(random_lambda_letter(rank, rng));
  }
  return out;
}

// Uniformly random tuple entries; entry i is drawn from the free group on
// the first i-1 generators, so the result is always a valid element.
inline UniTri random_unitri(int rank, std::size_t max_entry_length, Rng& rng) {
  std::vector<Word> tuple;
  for (int i = 2; i <= rank; ++i) {
    std::uniform_int_distribution<std::size_t> len(0, max_entry_length);
    tuple.push_back(embed(random_reduced_word(i - 1, len(rng), rng), rank));
  }
  return UniTri(rank, std::move(tuple));
}

// `count` random weight-k left-normed commutators [..[[x_1,x_2],x_3]..,x_k]
// of short random lambda-words; every output lies in the k-th term of the
// lower central series.
inline std::vector<UniTri> gamma_sample(int rank, int weight, int count,
                                        std::uint64_t seed) {
  if (weight < 1) throw std::invalid_argument("weight must be >= 1");
  std::vector<UniTri> out;
  out.reserve(static_cast<std::size_t>(count));
  Rng rng = make_rng(seed);
  std::uniform_int_distribution<std::size_t> len(1, 3);
  for (int s = 0; s < count; ++s) {
    std::size_t first_len = len(rng);
    UniTri acc =
        evaluate_lambda_word(rank, random_lambda_word(rank, first_len, rng));
    for (int k = 2; k <= weight; ++k) {
      std::size_t next_len = len(rng);
      UniTri next =
          evaluate_lambda_word(rank, random_lambda_word(rank, next_len, rng));
      acc = ut_commutator(acc, next);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

// The generator assignment lambda(3,1) |-> tau_1, lambda(3,2) |-> tau_2,
// lambda(2,1) |-> sigma, extended to words.  Only those three generators
// (and inverses) are legal input.
inline EndoMap alpha_image(const LambdaWord& w) {
  static const EndoTable table = aut_f2_table();
  std::vector<std::pair<std::string, int>> named;
  named.reserve(w.size());
  for (const LambdaLetter& x : w) {
    if (x.i == 3 && x.j == 1) {
      named.emplace_back("tau1", x.exponent);
    } else if (x.i == 3 && x.j == 2) {
      named.emplace_back("tau2", x.exponent);
    } else if (x.i == 2 && x.j == 1) {
      named.emplace_back("sigma", x.exponent);
    } else {
      throw std::invalid_argument(
          "alpha is defined on lambda(3,1), lambda(3,2), lambda(2,1) only");
    }
  }
  return evaluate_endo_word(table, named, 2);
}

// Every tuple entry of the product written per-coordinate, ascending:
// blocks for i = 2..n of lambda(i,j)^s symbols spelling u_i.  Later
// blocks move only f_i with i above everything earlier blocks touch, so
// the concatenation evaluates back to phi exactly.
inline LambdaWord to_lambda_word(const UniTri& phi) {
  LambdaWord out;
  for (int i = 2; i <= phi.rank(); ++i) {
    for (Letter x : phi.entry(i).letters()) {
      out.push_back({i, x.index(), x.sign()});
    }
  }
  return out;
}

}  // namespace fgc
