#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "fgc/endomorphism.hpp"
#include "fgc/hnn.hpp"
#include "fgc/unitriangular.hpp"
#include "fgc/word.hpp"

// Interchange formats:
//   Word      [2, -1, 3]                       (+k is f_k, -k its inverse)
//   EndoMap   {"rank": n, "images": [word...]}
//   UniTri    {"rank": n, "tuple": [word...]}  (entries u_2..u_n)
//   LambdaWord[[i, j, e], ...]
//   PairElem  [word, word]
//   HnnWord   {"rank": m, "head": pair, "tail": [[e, pair], ...]}

namespace fgc {

using nlohmann::json;

namespace detail {

[[noreturn]] inline void bad_json(const std::string& what) {
  throw std::invalid_argument("malformed value: " + what);
}

}  // namespace detail

inline json word_to_json(const Word& w) {
  json out = json::array();
  for (Letter x : w.letters()) out.push_back(x.code());
  return out;
}

inline Word word_from_json(const json& j, int rank) {
  if (!j.is_array()) detail::bad_json("a word must be an array of integers");
  std::vector<Letter> letters;
  letters.reserve(j.size());
  for (const json& item : j) {
    if (!item.is_number_integer()) {
      detail::bad_json("word letters must be integers");
    }
    auto code = item.get<std::int64_t>();
    if (code == 0) detail::bad_json("word letters must be nonzero");
    if (code > INT32_MAX || code < INT32_MIN) {
      detail::bad_json("word letter out of range");
    }
    letters.push_back(Letter(static_cast<std::int32_t>(code)));
  }
  return Word::reduce(rank, letters);
}

inline json endo_to_json(const EndoMap& e) {
  json images = json::array();
  for (const Word& w : e.images()) images.push_back(word_to_json(w));
  return json{{"rank", e.rank()}, {"images", std::move(images)}};
}

inline EndoMap endo_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("images")) {
    detail::bad_json("an endomorphism needs \"rank\" and \"images\"");
  }
  if (!j["rank"].is_number_integer()) detail::bad_json("rank must be an integer");
  int rank = j["rank"].get<int>();
  if (rank < 1 || rank > 4096) detail::bad_json("rank out of range");
  if (!j["images"].is_array()) detail::bad_json("images must be an array");
  std::vector<Word> images;
  for (const json& item : j["images"]) {
    images.push_back(word_from_json(item, rank));
  }
  return EndoMap(rank, std::move(images));
}

inline json unitri_to_json(const UniTri& phi) {
  json tuple = json::array();
  for (const Word& w : phi.tuple()) tuple.push_back(word_to_json(w));
  return json{{"rank", phi.rank()}, {"tuple", std::move(tuple)}};
}

inline UniTri unitri_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("tuple")) {
    detail::bad_json("a tuple element needs \"rank\" and \"tuple\"");
  }
  if (!j["rank"].is_number_integer()) detail::bad_json("rank must be an integer");
  int rank = j["rank"].get<int>();
  if (rank < 1 || rank > 4096) detail::bad_json("rank out of range");
  if (!j["tuple"].is_array()) detail::bad_json("tuple must be an array");
  std::vector<Word> tuple;
  for (const json& item : j["tuple"]) {
    tuple.push_back(word_from_json(item, rank));
  }
  return UniTri(rank, std::move(tuple));
}

inline json lambda_word_to_json(const LambdaWord& w) {
  json out = json::array();
  for (const LambdaLetter& x : w) {
    out.push_back(json::array({x.i, x.j, x.exponent}));
  }
  return out;
}

inline LambdaWord lambda_word_from_json(const json& j) {
  if (!j.is_array()) detail::bad_json("a lambda word must be an array");
  LambdaWord out;
  out.reserve(j.size());
  for (const json& item : j) {
    if (!item.is_array() || item.size() != 3 ||
        !item[0].is_number_integer() || !item[1].is_number_integer() ||
        !item[2].is_number_integer()) {
      detail::bad_json("each lambda letter must be [i, j, exponent]");
    }
    int i = item[0].get<int>();
    int jj = item[1].get<int>();
    int e = item[2].get<int>();
    if (jj < 1 || jj >= i) detail::bad_json("lambda letter needs 1 <= j < i");
    if (e != +1 && e != -1) detail::bad_json("lambda exponent must be +-1");
    out.push_back({i, jj, e});
  }
  return out;
}

inline json pair_to_json(const PairElem& p) {
  return json::array({word_to_json(p.left()), word_to_json(p.right())});
}

inline PairElem pair_from_json(const json& j, int rank) {
  if (!j.is_array() || j.size() != 2) {
    detail::bad_json("a pair must be [word, word]");
  }
  return PairElem(word_from_json(j[0], rank), word_from_json(j[1], rank));
}

inline json hnn_to_json(const HnnWord& w) {
  json tail = json::array();
  for (const Syllable& s : w.tail()) {
    tail.push_back(json::array({s.exponent, pair_to_json(s.elem)}));
  }
  return json{{"rank", w.rank()},
              {"head", pair_to_json(w.head())},
              {"tail", std::move(tail)}};
}

inline HnnWord hnn_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("head") ||
      !j.contains("tail")) {
    detail::bad_json("an hnn word needs \"rank\", \"head\" and \"tail\"");
  }
  if (!j["rank"].is_number_integer()) detail::bad_json("rank must be an integer");
  int rank = j["rank"].get<int>();
  if (rank < 0 || rank > 4096) detail::bad_json("rank out of range");
  PairElem head = pair_from_json(j["head"], rank);
  if (!j["tail"].is_array()) detail::bad_json("tail must be an array");
  std::vector<Syllable> tail;
  for (const json& item : j["tail"]) {
    if (!item.is_array() || item.size() != 2 ||
        !item[0].is_number_integer()) {
      detail::bad_json("each tail entry must be [exponent, pair]");
    }
    int e = item[0].get<int>();
    if (e != +1 && e != -1) detail::bad_json("stable exponent must be +-1");
    tail.push_back({e, pair_from_json(item[1], rank)});
  }
  return HnnWord(std::move(head), std::move(tail));
}

}  // namespace fgc
