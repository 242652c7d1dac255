#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fgc/endomorphism.hpp"
#include "fgc/random.hpp"
#include "fgc/unitriangular.hpp"
#include "fgc/word.hpp"

namespace fgc {

struct RelationCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct RelationReport {
  std::vector<RelationCheck> checks;

  bool all_pass() const {
    for (const RelationCheck& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
};

namespace detail {

inline void record(RelationReport& report, std::string name, bool pass,
                   std::string detail) {
  report.checks.push_back({std::move(name), pass, std::move(detail)});
}

}  // namespace detail

// The defining identities of the generator calculus, checked by exact
// normal-form equality.  `rank_limit` bounds the exhaustive index sweeps.
inline RelationReport check_relation_suite(int rank_limit) {
  if (rank_limit < 4) throw std::invalid_argument("rank limit must be >= 4");
  RelationReport report;

  // Conjugating lambda(3,j) by lambda(2,1) inside the rank-3 group:
  // lambda(2,1)^-1 lambda(3,1) lambda(2,1) = lambda(3,1) and
  // lambda(2,1)^-1 lambda(3,2) lambda(2,1) = lambda(3,1) lambda(3,2).
  {
    UniTri lhs1 = evaluate_lambda_word(
        3, {{2, 1, -1}, {3, 1, +1}, {2, 1, +1}});
    detail::record(report, "conj.l21-l31", lhs1 == lambda_gen(3, 3, 1),
                   "L(2,1)^-1 L(3,1) L(2,1) = L(3,1)");
    UniTri lhs2 = evaluate_lambda_word(
        3, {{2, 1, -1}, {3, 2, +1}, {2, 1, +1}});
    UniTri rhs2 = ut_compose(lambda_gen(3, 3, 1), lambda_gen(3, 3, 2));
    detail::record(report, "conj.l21-l32", lhs2 == rhs2,
                   "L(2,1)^-1 L(3,2) L(2,1) = L(3,1) L(3,2)");
  }

  // The mirror identities in the rank-2 automorphism group:
  // sigma^-1 tau_1 sigma = tau_1 and sigma^-1 tau_2 sigma = tau_1 tau_2.
  {
    EndoTable table = aut_f2_table();
    EndoMap lhs1 = evaluate_endo_word(
        table, {{"sigma", -1}, {"tau1", +1}, {"sigma", +1}}, 2);
    detail::record(report, "conj.sigma-tau1",
                   lhs1 == table.at("tau1").forward,
                   "sigma^-1 tau1 sigma = tau1");
    EndoMap lhs2 = evaluate_endo_word(
        table, {{"sigma", -1}, {"tau2", +1}, {"sigma", +1}}, 2);
    EndoMap rhs2 =
        compose(table.at("tau1").forward, table.at("tau2").forward);
    detail::record(report, "conj.sigma-tau2", lhs2 == rhs2,
                   "sigma^-1 tau2 sigma = tau1 tau2");
  }

  // [lambda(i,j), lambda(j,k)] = lambda(i,k) for every chain k < j < i.
  for (int i = 3; i <= rank_limit; ++i) {
    for (int j = 2; j < i; ++j) {
      for (int k = 1; k < j; ++k) {
        UniTri lhs = ut_commutator(lambda_gen(rank_limit, i, j),
                                   lambda_gen(rank_limit, j, k));
        bool ok = lhs == lambda_gen(rank_limit, i, k);
        detail::record(report,
                       "comm.chain." + std::to_string(i) + "." +
                           std::to_string(j) + "." + std::to_string(k),
                       ok,
                       "[L(" + std::to_string(i) + "," + std::to_string(j) +
                           "), L(" + std::to_string(j) + "," +
                           std::to_string(k) + ")] = L(" + std::to_string(i) +
                           "," + std::to_string(k) + ")");
      }
    }
  }

  // Generators with no index interaction commute: [L(i,j), L(k,l)] = e
  // whenever i != k, i != l, k != j.  Swept exhaustively up to the limit
  // and reported as one aggregated entry.
  {
    int checked = 0;
    int failed = 0;
    for (int i = 2; i <= rank_limit; ++i) {
      for (int j = 1; j < i; ++j) {
        for (int k = 2; k <= rank_limit; ++k) {
          for (int l = 1; l < k; ++l) {
            if (i == k && j == l) continue;
            if (i == k || i == l || k == j) continue;
            ++checked;
            UniTri c = ut_commutator(lambda_gen(rank_limit, i, j),
                                     lambda_gen(rank_limit, k, l));
            if (!c.is_identity()) ++failed;
          }
        }
      }
    }
    detail::record(report, "comm.disjoint", failed == 0,
                   std::to_string(checked) + " disjoint pairs up to rank " +
                       std::to_string(rank_limit) + ", " +
                       std::to_string(failed) + " failures");
  }

  // The hydra relation [[a, b], b] = e with a = lambda(3,2),
  // b = lambda(2,1), the single defining relation of the rank-3 group.
  {
    UniTri a = lambda_gen(3, 3, 2);
    UniTri b = lambda_gen(3, 2, 1);
    UniTri c = ut_commutator(ut_commutator(a, b), b);
    detail::record(report, "hydra", c.is_identity(),
                   "[[L(3,2), L(2,1)], L(2,1)] = e");
  }

  return report;
}

struct ProbeReport {
  int samples = 0;
  int mismatches = 0;
  std::vector<std::string> failures;

  bool all_pass() const { return mismatches == 0; }
};

// Samples random words in the rank-3 Nielsen generators and checks that
// triviality in tuple coordinates coincides with triviality of the image
// under the tau/sigma assignment.  Both sides reduce to unique normal
// forms, so each verdict is exact.
inline ProbeReport alpha_faithfulness_probe(int samples,
                                            std::size_t max_length,
                                            std::uint64_t seed) {
  ProbeReport report;
  report.samples = samples;
  Rng rng = make_rng(seed);
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  for (int s = 0; s < samples; ++s) {
    std::size_t L = len(rng);
    LambdaWord w = random_lambda_word(3, L, rng);
    bool trivial_source = evaluate_lambda_word(3, w).is_identity();
    bool trivial_image = is_identity(alpha_image(w));
    if (trivial_source != trivial_image) {
      ++report.mismatches;
      if (report.failures.size() < 16) {
        std::string desc = "sample " + std::to_string(s) + ": source " +
                           (trivial_source ? "trivial" : "nontrivial") +
                           ", image " +
                           (trivial_image ? "trivial" : "nontrivial");
        report.failures.push_back(std::move(desc));
      }
    }
  }
  return report;
}

}  // namespace fgc
