#include <catch2/catch_amalgamated.hpp>

#include "fgc/endomorphism.hpp"
#include "fgc/random.hpp"
#include "support/build.hpp"

using fgc::EndoMap;
using fgc::Word;
using fgc::testing::word;

namespace {

EndoMap random_endo(int rank, std::size_t max_len, fgc::Rng& rng) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::vector<Word> images;
  for (int i = 1; i <= rank; ++i) {
    images.push_back(fgc::random_reduced_word(rank, len(rng), rng));
  }
  return EndoMap(rank, std::move(images));
}

// lambda(i,j) as a raw rank-n endomorphism: f_i |-> f_j f_i.
EndoMap lambda_endo(int rank, int i, int j) {
  std::vector<Word> images;
  for (int k = 1; k <= rank; ++k) {
    images.push_back(k == i
                         ? fgc::multiply(fgc::generator_word(rank, j),
                                         fgc::generator_word(rank, i))
                         : fgc::generator_word(rank, k));
  }
  return EndoMap(rank, std::move(images));
}

}  // namespace

TEST_CASE("apply substitutes generator images") {
  EndoMap l21 = lambda_endo(2, 2, 1);
  REQUIRE(fgc::apply(l21, word(2, {2})) == word(2, {1, 2}));
  REQUIRE(fgc::apply(l21, word(2, {1})) == word(2, {1}));
  REQUIRE(fgc::apply(l21, word(2, {-2})) == word(2, {-2, -1}));

  EndoMap tau1 = fgc::inner_auto(2, word(2, {1}));
  REQUIRE(fgc::apply(tau1, word(2, {2})) == word(2, {-1, 2, 1}));
  REQUIRE(fgc::apply(tau1, word(2, {1})) == word(2, {1}));

  auto rng = fgc::make_rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = fgc::random_reduced_word(3, 20, rng);
    REQUIRE(fgc::apply(fgc::identity_endo(3), w) == w);
  }
}

TEST_CASE("apply is a homomorphism") {
  auto rng = fgc::make_rng(42);
  for (int trial = 0; trial < 10000; ++trial) {
    EndoMap e = random_endo(3, 5, rng);
    Word u = fgc::random_reduced_word(3, 12, rng);
    Word v = fgc::random_reduced_word(3, 12, rng);
    REQUIRE(fgc::apply(e, u * v) == fgc::apply(e, u) * fgc::apply(e, v));
    REQUIRE(fgc::apply(e, fgc::invert(u)) == fgc::invert(fgc::apply(e, u)));
  }
}

TEST_CASE("compose applies the left factor first") {
  auto rng = fgc::make_rng(77);
  for (int trial = 0; trial < 500; ++trial) {
    EndoMap a = random_endo(3, 4, rng);
    EndoMap b = random_endo(3, 4, rng);
    Word w = fgc::random_reduced_word(3, 10, rng);
    REQUIRE(fgc::apply(fgc::compose(a, b), w) ==
            fgc::apply(b, fgc::apply(a, w)));
  }

  EndoMap both = fgc::compose(lambda_endo(3, 3, 1), lambda_endo(3, 3, 2));
  REQUIRE(fgc::apply(both, word(3, {3})) == word(3, {1, 2, 3}));
}

TEST_CASE("compose is associative with identity as neutral element") {
  auto rng = fgc::make_rng(4096);
  EndoMap id = fgc::identity_endo(3);
  for (int trial = 0; trial < 300; ++trial) {
    EndoMap a = random_endo(3, 3, rng);
    EndoMap b = random_endo(3, 3, rng);
    EndoMap c = random_endo(3, 3, rng);
    REQUIRE(fgc::compose(fgc::compose(a, b), c) ==
            fgc::compose(a, fgc::compose(b, c)));
    REQUIRE(fgc::compose(a, id) == a);
    REQUIRE(fgc::compose(id, a) == a);
  }
  REQUIRE(fgc::is_identity(id));
  REQUIRE(!fgc::is_identity(lambda_endo(3, 2, 1)));
}

TEST_CASE("inner automorphisms") {
  REQUIRE(fgc::inner_auto(2, Word(2)) == fgc::identity_endo(2));

  EndoMap tau2 = fgc::inner_auto(2, word(2, {2}));
  REQUIRE(tau2.image(2) == word(2, {2}));
  REQUIRE(tau2.image(1) == word(2, {-2, 1, 2}));

  // Covariance under the right action: conjugating by c then by d is
  // conjugation by c d.
  auto rng = fgc::make_rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    Word c = fgc::random_reduced_word(2, 8, rng);
    Word d = fgc::random_reduced_word(2, 8, rng);
    REQUIRE(fgc::compose(fgc::inner_auto(2, c), fgc::inner_auto(2, d)) ==
            fgc::inner_auto(2, c * d));
  }
}

TEST_CASE("conjugation identities among tau and sigma") {
  fgc::EndoTable table = fgc::aut_f2_table();
  const EndoMap& tau1 = table.at("tau1").forward;
  const EndoMap& tau2 = table.at("tau2").forward;
  const EndoMap& sigma = table.at("sigma").forward;
  const EndoMap& sigma_inv = table.at("sigma").inverse;

  REQUIRE(fgc::compose(sigma, sigma_inv) == fgc::identity_endo(2));
  REQUIRE(fgc::compose(sigma_inv, sigma) == fgc::identity_endo(2));

  // sigma^-1 tau_1 sigma = tau_1 and sigma^-1 tau_2 sigma = tau_1 tau_2,
  // both as exact equalities of image tables.
  REQUIRE(fgc::compose(fgc::compose(sigma_inv, tau1), sigma) == tau1);
  REQUIRE(fgc::compose(fgc::compose(sigma_inv, tau2), sigma) ==
          fgc::compose(tau1, tau2));
}

TEST_CASE("evaluate_endo_word folds named generators") {
  fgc::EndoTable table = fgc::aut_f2_table();

  EndoMap lhs = fgc::evaluate_endo_word(
      table, {{"sigma", -1}, {"tau2", +1}, {"sigma", +1}}, 2);
  REQUIRE(lhs == fgc::compose(table.at("tau1").forward,
                              table.at("tau2").forward));

  REQUIRE(fgc::evaluate_endo_word(table, {}, 2) == fgc::identity_endo(2));
  REQUIRE(fgc::evaluate_endo_word(table, {{"tau1", +1}, {"tau1", -1}}, 2) ==
          fgc::identity_endo(2));

  REQUIRE_THROWS_AS(fgc::evaluate_endo_word(table, {{"rho", +1}}, 2),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(fgc::evaluate_endo_word(table, {{"tau1", 2}}, 2),
                    std::invalid_argument);
}

TEST_CASE("rank discipline of endomorphisms") {
  REQUIRE_THROWS_AS(EndoMap(2, {word(2, {1})}), fgc::RankError);
  REQUIRE_THROWS_AS(EndoMap(2, {word(3, {1}), word(3, {2})}), fgc::RankError);
  REQUIRE_THROWS_AS(fgc::apply(fgc::identity_endo(2), word(3, {1})),
                    fgc::RankError);
  REQUIRE_THROWS_AS(
      fgc::compose(fgc::identity_endo(2), fgc::identity_endo(3)),
      fgc::RankError);
  REQUIRE_THROWS_AS(fgc::identity_endo(0), fgc::RankError);
  REQUIRE_THROWS_AS(fgc::generator_word(3, 4), fgc::RankError);
}
