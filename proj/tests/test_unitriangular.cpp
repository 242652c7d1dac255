#include <catch2/catch_amalgamated.hpp>

#include "fgc/relations.hpp"
#include "fgc/unitriangular.hpp"
#include "support/build.hpp"

using fgc::lambda_gen;
using fgc::UniTri;
using fgc::Word;
using fgc::testing::random_unitri;
using fgc::testing::word;

TEST_CASE("tuple coordinates induce the expected endomorphism") {
  REQUIRE(fgc::to_endo(UniTri(3)) == fgc::identity_endo(3));

  fgc::EndoMap l21 = fgc::to_endo(lambda_gen(2, 2, 1));
  REQUIRE(l21.image(2) == word(2, {1, 2}));

  UniTri chain(3, {word(3, {1}), word(3, {2})});
  fgc::EndoMap e = fgc::to_endo(chain);
  REQUIRE(e.image(1) == word(3, {1}));
  REQUIRE(e.image(2) == word(3, {1, 2}));
  REQUIRE(e.image(3) == word(3, {2, 3}));
}

TEST_CASE("recognition of the unitriangular shape") {
  REQUIRE(fgc::from_endo(fgc::identity_endo(3)) == UniTri(3));
  REQUIRE(fgc::from_endo(fgc::to_endo(lambda_gen(3, 3, 2))) ==
          UniTri(3, {Word(3), word(3, {2})}));

  // Conjugation by f_1 is an automorphism but not of triangular shape:
  // the image of f_2 ends in f_1.
  REQUIRE(!fgc::from_endo(fgc::inner_auto(2, word(2, {1}))).has_value());

  // Image of f_2 ending in f_2^-1 is rejected.
  fgc::EndoMap bad(2, {word(2, {1}), word(2, {1, -2})});
  REQUIRE(!fgc::from_endo(bad).has_value());

  // Prefix containing f_2 itself is rejected.
  fgc::EndoMap bad2(2, {word(2, {1}), word(2, {2, 1, 2})});
  REQUIRE(!fgc::from_endo(bad2).has_value());

  auto rng = fgc::make_rng(314);
  for (int trial = 0; trial < 3000; ++trial) {
    UniTri phi = random_unitri(5, 8, rng);
    REQUIRE(fgc::from_endo(fgc::to_endo(phi)) == phi);
  }
}

TEST_CASE("tuple composition matches the endomorphism oracle") {
  REQUIRE(fgc::ut_compose(lambda_gen(3, 2, 1), lambda_gen(3, 3, 2)) ==
          UniTri(3, {word(3, {1}), word(3, {2})}));
  REQUIRE(fgc::ut_compose(lambda_gen(3, 3, 1), lambda_gen(3, 3, 2)) ==
          UniTri(3, {Word(3), word(3, {1, 2})}));

  auto rng = fgc::make_rng(2718);
  for (int trial = 0; trial < 3000; ++trial) {
    UniTri phi = random_unitri(5, 6, rng);
    UniTri psi = random_unitri(5, 6, rng);
    UniTri direct = fgc::ut_compose(phi, psi);
    auto via_endo =
        fgc::from_endo(fgc::compose(fgc::to_endo(phi), fgc::to_endo(psi)));
    REQUIRE(via_endo.has_value());
    REQUIRE(*via_endo == direct);
    REQUIRE(fgc::ut_compose(phi, UniTri(5)) == phi);
    REQUIRE(fgc::ut_compose(UniTri(5), phi) == phi);
  }
}

TEST_CASE("recursive inversion") {
  REQUIRE(fgc::ut_invert(lambda_gen(2, 2, 1)) ==
          UniTri(2, {word(2, {-1})}));
  REQUIRE(fgc::ut_invert(UniTri(4)) == UniTri(4));
  REQUIRE(fgc::ut_invert(UniTri(3, {word(3, {1}), word(3, {2, 1})})) ==
          UniTri(3, {word(3, {-1}), word(3, {-1, -2, 1})}));

  auto rng = fgc::make_rng(161803);
  for (int trial = 0; trial < 2000; ++trial) {
    UniTri phi = random_unitri(6, 6, rng);
    UniTri inv = fgc::ut_invert(phi);
    REQUIRE(fgc::ut_compose(phi, inv).is_identity());
    REQUIRE(fgc::ut_compose(inv, phi).is_identity());
  }
}

TEST_CASE("nielsen generators") {
  REQUIRE(lambda_gen(3, 3, 2) == UniTri(3, {Word(3), word(3, {2})}));
  REQUIRE(lambda_gen(4, 4, 3) ==
          UniTri(4, {Word(4), Word(4), word(4, {3})}));
  REQUIRE(lambda_gen(2, 2, 1) == UniTri(2, {word(2, {1})}));

  REQUIRE_THROWS_AS(lambda_gen(3, 2, 2), fgc::RankError);
  REQUIRE_THROWS_AS(lambda_gen(3, 4, 1), fgc::RankError);
  REQUIRE_THROWS_AS(lambda_gen(3, 1, 1), fgc::RankError);
}

TEST_CASE("words in the nielsen generators") {
  REQUIRE(fgc::evaluate_lambda_word(3, {}) == UniTri(3));
  REQUIRE(fgc::evaluate_lambda_word(3, {{2, 1, +1}, {2, 1, -1}}) ==
          UniTri(3));

  // [L(3,2), L(2,1)] collapses to the skipping generator L(3,1).
  REQUIRE(fgc::evaluate_lambda_word(
              3, {{3, 2, +1}, {2, 1, +1}, {3, 2, -1}, {2, 1, -1}}) ==
          lambda_gen(3, 3, 1));

  REQUIRE(fgc::evaluate_lambda_word(3, {{2, 1, -1}, {3, 2, +1}, {2, 1, +1}}) ==
          fgc::ut_compose(lambda_gen(3, 3, 1), lambda_gen(3, 3, 2)));

  REQUIRE_THROWS_AS(fgc::evaluate_lambda_word(3, {{4, 1, +1}}),
                    fgc::RankError);
  REQUIRE_THROWS_AS(fgc::evaluate_lambda_word(3, {{3, 1, 0}}),
                    std::invalid_argument);

  auto rng = fgc::make_rng(55);
  for (int trial = 0; trial < 1000; ++trial) {
    UniTri phi = random_unitri(5, 5, rng);
    REQUIRE(fgc::evaluate_lambda_word(5, fgc::to_lambda_word(phi)) == phi);
  }
}

TEST_CASE("fixed basis prefixes") {
  REQUIRE(fgc::fixes(UniTri(5), 5));
  REQUIRE(fgc::fixes(lambda_gen(2, 2, 1), 1));
  REQUIRE(!fgc::fixes(lambda_gen(2, 2, 1), 2));
  REQUIRE(fgc::fixes(
      fgc::ut_commutator(lambda_gen(3, 3, 2), lambda_gen(3, 2, 1)), 1));
  REQUIRE_THROWS_AS(fgc::fixes(UniTri(3), 4), fgc::RankError);

  // The tuple test agrees with actually applying the map to f_1..f_m.
  auto rng = fgc::make_rng(808);
  for (int trial = 0; trial < 500; ++trial) {
    UniTri phi = random_unitri(4, 3, rng);
    fgc::EndoMap e = fgc::to_endo(phi);
    for (int m = 1; m <= 4; ++m) {
      bool applied = true;
      for (int k = 1; k <= m; ++k) {
        applied = applied && e.image(k) == fgc::generator_word(4, k);
      }
      REQUIRE(fgc::fixes(phi, m) == applied);
    }
  }
}

TEST_CASE("lower central series samples") {
  auto batch = fgc::gamma_sample(4, 2, 200, 1234);
  REQUIRE(batch.size() == 200);
  for (const UniTri& phi : batch) {
    REQUIRE(phi.rank() == 4);
    REQUIRE(fgc::fixes(phi, 1));
  }

  // Weight n-2 samples stabilize f_1..f_{n-3} at ranks 4 and 5.
  for (int n : {4, 5}) {
    for (const UniTri& phi : fgc::gamma_sample(n, n - 2, 300, 99)) {
      REQUIRE(fgc::fixes(phi, n - 3 < 1 ? 1 : n - 3));
    }
  }

  // Same seed reproduces the batch; weight 1 is unconstrained sampling.
  REQUIRE(fgc::gamma_sample(5, 3, 50, 7) == fgc::gamma_sample(5, 3, 50, 7));
  REQUIRE(fgc::gamma_sample(3, 1, 10, 7).size() == 10);
}

TEST_CASE("the generator assignment into rank-2 automorphisms") {
  fgc::EndoTable table = fgc::aut_f2_table();
  REQUIRE(fgc::alpha_image({{3, 1, +1}}) == table.at("tau1").forward);
  REQUIRE(fgc::alpha_image({{2, 1, -1}, {3, 2, +1}, {2, 1, +1}}) ==
          fgc::compose(table.at("tau1").forward, table.at("tau2").forward));
  REQUIRE(fgc::alpha_image({}) == fgc::identity_endo(2));
  REQUIRE_THROWS_AS(fgc::alpha_image({{4, 1, +1}}), std::invalid_argument);

  // Homomorphism: image of a concatenation is the composition of images.
  auto rng = fgc::make_rng(600);
  for (int trial = 0; trial < 500; ++trial) {
    fgc::LambdaWord a = fgc::random_lambda_word(3, 6, rng);
    fgc::LambdaWord b = fgc::random_lambda_word(3, 6, rng);
    fgc::LambdaWord ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    REQUIRE(fgc::alpha_image(ab) ==
            fgc::compose(fgc::alpha_image(a), fgc::alpha_image(b)));
  }
}

TEST_CASE("triviality transfers across the assignment") {
  fgc::ProbeReport report = fgc::alpha_faithfulness_probe(2000, 25, 424242);
  REQUIRE(report.samples == 2000);
  REQUIRE(report.mismatches == 0);
  REQUIRE(report.all_pass());
}

TEST_CASE("relation suite passes exactly") {
  fgc::RelationReport report = fgc::check_relation_suite(6);
  REQUIRE(report.all_pass());

  // 2 + 2 conjugation identities, chains for all k < j < i <= 6, one
  // aggregated disjointness sweep, one hydra check.
  int chains = 0;
  for (const auto& c : report.checks) {
    if (c.name.starts_with("comm.chain.")) ++chains;
  }
  REQUIRE(chains == 20);
  REQUIRE(report.checks.size() == 4 + 20 + 1 + 1);
  REQUIRE_THROWS_AS(fgc::check_relation_suite(3), std::invalid_argument);
}

TEST_CASE("small ranks degenerate as expected") {
  // Rank 1: only the identity exists (empty tuple).
  UniTri only(1);
  REQUIRE(only.tuple().empty());
  REQUIRE(fgc::ut_compose(only, only) == only);
  REQUIRE_THROWS_AS(lambda_gen(1, 1, 1), fgc::RankError);

  // Rank 2: tuples are powers of f_1 and multiply like integers.
  auto power = [](int k) {
    std::vector<fgc::Letter> buf(
        static_cast<std::size_t>(k < 0 ? -k : k),
        fgc::Letter::gen(1, k < 0 ? -1 : +1));
    return UniTri(2, {Word::adopt_reduced(2, std::move(buf))});
  };
  REQUIRE(fgc::ut_compose(power(3), power(-5)) == power(-2));
  REQUIRE(fgc::ut_invert(power(4)) == power(-4));
}

TEST_CASE("tuple validation") {
  REQUIRE_THROWS_AS(UniTri(0), fgc::RankError);
  REQUIRE_THROWS_AS(UniTri(3, {Word(3)}), fgc::RankError);
  REQUIRE_THROWS_AS(UniTri(3, {Word(2), Word(2)}), fgc::RankError);
  // u_2 must avoid f_2 and above.
  REQUIRE_THROWS_AS(UniTri(3, {word(3, {2}), Word(3)}), fgc::RankError);
  REQUIRE_THROWS_AS(UniTri(3, {word(3, {1}), word(3, {3})}), fgc::RankError);
}
