#include <catch2/catch_amalgamated.hpp>

#include "fgc/hnn.hpp"
#include "support/build.hpp"

using fgc::HnnWord;
using fgc::PairElem;
using fgc::Word;
using fgc::testing::word;

namespace {

PairElem pair(std::initializer_list<int> l, std::initializer_list<int> r) {
  return PairElem(word(2, l), word(2, r));
}

}  // namespace

TEST_CASE("direct-product arithmetic") {
  REQUIRE(fgc::pair_multiply(pair({1}, {}), pair({}, {1})) ==
          pair({1}, {1}));
  REQUIRE(fgc::pair_invert(pair({1}, {2})) == pair({-1}, {-2}));
  REQUIRE(fgc::pair_is_trivial(pair({}, {})));
  REQUIRE(!fgc::pair_is_trivial(pair({}, {2})));
  REQUIRE_THROWS_AS(PairElem(Word(2), Word(3)), fgc::RankError);
}

TEST_CASE("associated subgroups and the crossing isomorphism") {
  REQUIRE(fgc::in_A(pair({1, 2}, {1, 2})));
  REQUIRE(fgc::in_B(pair({}, {2})));
  REQUIRE(!fgc::in_A(pair({}, {2})));
  REQUIRE(!fgc::in_A(pair({1}, {2})));
  REQUIRE(!fgc::in_B(pair({1}, {2})));
  REQUIRE(fgc::in_A(pair({}, {})));
  REQUIRE(fgc::in_B(pair({}, {})));

  REQUIRE(fgc::phi(pair({1}, {1})) == pair({}, {1}));
  REQUIRE(fgc::phi_inv(pair({}, {2, 1})) == pair({2, 1}, {2, 1}));
  REQUIRE_THROWS_AS(fgc::phi(pair({1}, {2})), std::domain_error);
  REQUIRE_THROWS_AS(fgc::phi_inv(pair({1}, {1})), std::domain_error);

  auto rng = fgc::make_rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    Word g = fgc::random_reduced_word(2, 10, rng);
    PairElem diag(g, g);
    REQUIRE(fgc::phi_inv(fgc::phi(diag)) == diag);
  }
}

TEST_CASE("pinch removal") {
  int rank = 2;
  SECTION("diagonal pair crosses left to right") {
    HnnWord w = fgc::hnn_multiply(
        fgc::hnn_multiply(fgc::hnn_t(rank), fgc::hnn_from_pair(pair({1}, {1}))),
        fgc::hnn_t(rank, -1));
    HnnWord r = fgc::britton_reduce(w);
    REQUIRE(r.t_letters() == 0);
    REQUIRE(r.head() == pair({}, {1}));
    REQUIRE(r.is_britton_reduced());
  }
  SECTION("non-diagonal pair blocks the pinch") {
    HnnWord w = fgc::hnn_multiply(
        fgc::hnn_multiply(fgc::hnn_t(rank), fgc::hnn_from_pair(pair({1}, {2}))),
        fgc::hnn_t(rank, -1));
    HnnWord r = fgc::britton_reduce(w);
    REQUIRE(r == w);
    REQUIRE(r.t_letters() == 2);
  }
  SECTION("right-to-left crossing") {
    HnnWord w = fgc::hnn_multiply(
        fgc::hnn_multiply(fgc::hnn_t(rank, -1),
                          fgc::hnn_from_pair(pair({}, {2}))),
        fgc::hnn_t(rank));
    HnnWord r = fgc::britton_reduce(w);
    REQUIRE(r.t_letters() == 0);
    REQUIRE(r.head() == pair({2}, {2}));
  }
  SECTION("nested pinches unwind from the inside") {
    // t t (g,g) t^-1 t^-1 with g = f1 f2.
    Word g = word(2, {1, 2});
    HnnWord w = fgc::hnn_multiply(
        fgc::hnn_multiply(fgc::hnn_multiply(fgc::hnn_t(rank), fgc::hnn_t(rank)),
                          fgc::hnn_from_pair(PairElem(g, g))),
        fgc::hnn_multiply(fgc::hnn_t(rank, -1), fgc::hnn_t(rank, -1)));
    HnnWord r = fgc::britton_reduce(w);
    // First crossing gives (e, g), which is in B but is flanked by
    // t ... t^-1, not t^-1 ... t, so reduction stops there.
    REQUIRE(r.t_letters() == 2);
    REQUIRE(fgc::britton_reduce(r) == r);
  }
}

TEST_CASE("reduction is idempotent and equality ignores the flag") {
  auto rng = fgc::make_rng(23);
  for (int trial = 0; trial < 2000; ++trial) {
    HnnWord w = fgc::random_hnn_word(2, 6, 6, rng);
    HnnWord once = fgc::britton_reduce(w);
    HnnWord twice = fgc::britton_reduce(once);
    REQUIRE(once == twice);
    REQUIRE(!w.is_britton_reduced());
    if (w == once) {
      // Same value, different flag states.
      REQUIRE(once.is_britton_reduced());
    }
  }
}

TEST_CASE("word-problem verdicts") {
  REQUIRE(fgc::hnn_is_trivial(HnnWord::trivial(2)));
  REQUIRE(!fgc::hnn_is_trivial(fgc::hnn_t(2)));
  REQUIRE(fgc::hnn_is_trivial(fgc::relator(word(2, {1}))));

  auto rng = fgc::make_rng(29);
  for (int trial = 0; trial < 500; ++trial) {
    Word g = fgc::random_reduced_word(2, 10, rng);
    REQUIRE(fgc::hnn_is_trivial(fgc::relator(g)));
  }

  // (f1, e) and (e, f2) commute in the direct product.
  HnnWord a = fgc::hnn_from_pair(pair({1}, {}));
  HnnWord b = fgc::hnn_from_pair(pair({}, {2}));
  HnnWord comm = fgc::hnn_multiply(
      fgc::hnn_multiply(fgc::hnn_multiply(a, b), fgc::hnn_invert(a)),
      fgc::hnn_invert(b));
  REQUIRE(fgc::hnn_is_trivial(comm));

  // w w^-1 is always trivial, with or without t-letters.
  for (int trial = 0; trial < 500; ++trial) {
    HnnWord w = fgc::random_hnn_word(2, 5, 5, rng);
    REQUIRE(fgc::hnn_is_trivial(fgc::hnn_multiply(w, fgc::hnn_invert(w))));
    REQUIRE(fgc::hnn_is_trivial(fgc::hnn_multiply(fgc::hnn_invert(w), w)));
  }
}

TEST_CASE("multiplication is associative and merges base factors") {
  HnnWord ab = fgc::hnn_multiply(fgc::hnn_from_pair(pair({1}, {})),
                                 fgc::hnn_from_pair(pair({}, {2})));
  REQUIRE(ab.t_letters() == 0);
  REQUIRE(ab.head() == pair({1}, {2}));

  auto rng = fgc::make_rng(37);
  for (int trial = 0; trial < 500; ++trial) {
    HnnWord x = fgc::random_hnn_word(2, 3, 4, rng);
    HnnWord y = fgc::random_hnn_word(2, 3, 4, rng);
    HnnWord z = fgc::random_hnn_word(2, 3, 4, rng);
    REQUIRE(fgc::hnn_multiply(fgc::hnn_multiply(x, y), z) ==
            fgc::hnn_multiply(x, fgc::hnn_multiply(y, z)));
  }
}

TEST_CASE("image in the rank-4 triangular group") {
  REQUIRE(fgc::fp_image(fgc::hnn_from_pair(pair({}, {1}))) ==
          fgc::lambda_gen(4, 3, 1));
  REQUIRE(fgc::fp_image(fgc::hnn_from_pair(pair({1}, {}))) ==
          fgc::lambda_gen(4, 4, 1));
  REQUIRE(fgc::fp_image(fgc::hnn_t(2)) ==
          fgc::lambda_gen_signed(4, {4, 3, fgc::kStableLetterSign}));
  REQUIRE(fgc::fp_image(HnnWord::trivial(2)).is_identity());
  REQUIRE_THROWS_AS(fgc::fp_image(HnnWord::trivial(3)), fgc::RankError);

  // On base pairs the image reads off both components.
  auto rng = fgc::make_rng(41);
  for (int trial = 0; trial < 1000; ++trial) {
    Word g = fgc::random_reduced_word(2, 12, rng);
    Word h = fgc::random_reduced_word(2, 12, rng);
    fgc::UniTri img = fgc::fp_image(fgc::hnn_from_pair(PairElem(g, h)));
    REQUIRE(img ==
            fgc::UniTri(4, {Word(4), fgc::embed(h, 4), fgc::embed(g, 4)}));
  }
}

TEST_CASE("the image is a homomorphism constant on fibers of reduction") {
  auto rng = fgc::make_rng(43);
  for (int trial = 0; trial < 800; ++trial) {
    HnnWord x = fgc::random_hnn_word(2, 4, 4, rng);
    HnnWord y = fgc::random_hnn_word(2, 4, 4, rng);
    REQUIRE(fgc::fp_image(fgc::hnn_multiply(x, y)) ==
            fgc::ut_compose(fgc::fp_image(x), fgc::fp_image(y)));
    REQUIRE(fgc::fp_image(fgc::britton_reduce(x)) == fgc::fp_image(x));
    REQUIRE(fgc::fp_image(fgc::hnn_invert(x)) ==
            fgc::ut_invert(fgc::fp_image(x)));
  }
}

TEST_CASE("triviality is preserved by the image and by relator insertion") {
  auto rng = fgc::make_rng(47);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 500; ++trial) {
    HnnWord w = fgc::random_hnn_word(2, 5, 5, rng);
    if (fgc::hnn_is_trivial(w)) {
      REQUIRE(fgc::fp_image(w).is_identity());
    }

    // Multiplying by a relator anywhere never changes the verdict.
    Word g = fgc::random_reduced_word(2, 6, rng);
    HnnWord rel = fgc::relator(g);
    HnnWord spliced = coin(rng) ? fgc::hnn_multiply(w, rel)
                                : fgc::hnn_multiply(rel, w);
    REQUIRE(fgc::hnn_is_trivial(spliced) == fgc::hnn_is_trivial(w));
  }
}

TEST_CASE("stable-letter orientation is discovered uniquely") {
  fgc::FpReport report = fgc::verify_fp_relations(2000, 12, 53);
  REQUIRE(report.all_pass());
  REQUIRE(report.sign == fgc::kStableLetterSign);

  // The opposite orientation violates the conjugation identity.
  int wrong = -fgc::kStableLetterSign;
  fgc::UniTri lhs = fgc::evaluate_lambda_word(
      4, {{4, 3, wrong}, {4, 1, +1}, {3, 1, +1}, {4, 3, -wrong}});
  REQUIRE(lhs != fgc::lambda_gen(4, 3, 1));
}

TEST_CASE("syllable validation") {
  REQUIRE_THROWS_AS(HnnWord(PairElem::trivial(2),
                            {{+2, PairElem::trivial(2)}}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(HnnWord(PairElem::trivial(2),
                            {{+1, PairElem::trivial(3)}}),
                    fgc::RankError);
  REQUIRE_THROWS_AS(
      fgc::hnn_multiply(HnnWord::trivial(2), HnnWord::trivial(3)),
      fgc::RankError);
}
