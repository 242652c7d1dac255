// Property-based fuzzing harness.
//
// Each property draws its cases from case seeds derived as
// derive_seed(root, property_index, case_index), so a report is a pure
// function of (config, catalog) and any failure is replayable from its
// recorded seed alone.
//
// Failures serialize as JSONL records {property, seed, case, expected,
// actual}, one per line.  A corpus file of such records acts as a
// regression ratchet: entries are re-run before the fresh sweep, and the
// rewritten corpus is the union of prior entries and current failures,
// sorted by (property, seed, case).  Entries that pass again stay in the
// file; they are cheap and catch reintroduced bugs immediately.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "fgc/endomorphism.hpp"
#include "fgc/hnn.hpp"
#include "fgc/parse.hpp"
#include "fgc/random.hpp"
#include "fgc/serialize.hpp"
#include "fgc/unitriangular.hpp"
#include "fgc/word.hpp"

namespace fgc {

struct FuzzConfig {
  int samples = 10000;
  std::uint64_t seed = 0;
  std::size_t max_length = 20;
  std::string only;  // substring filter on property names; empty = all
};

struct FuzzFailure {
  std::string property;
  std::uint64_t seed = 0;
  int case_index = 0;
  std::string expected;
  std::string actual;

  friend bool operator==(const FuzzFailure&, const FuzzFailure&) = default;
};

inline json failure_to_json(const FuzzFailure& f) {
  return json{{"property", f.property},
              {"seed", f.seed},
              {"case", f.case_index},
              {"expected", f.expected},
              {"actual", f.actual}};
}

inline FuzzFailure failure_from_json(const json& j) {
  if (!j.is_object() || !j.contains("property") || !j.contains("seed") ||
      !j.contains("case") || !j.contains("expected") ||
      !j.contains("actual")) {
    throw std::invalid_argument(
        "malformed value: a failure record needs property/seed/case/"
        "expected/actual");
  }
  FuzzFailure f;
  f.property = j.at("property").get<std::string>();
  f.seed = j.at("seed").get<std::uint64_t>();
  f.case_index = j.at("case").get<int>();
  f.expected = j.at("expected").get<std::string>();
  f.actual = j.at("actual").get<std::string>();
  return f;
}

struct FuzzReport {
  int samples_per_property = 0;
  std::vector<std::pair<std::string, int>> cases_run;
  std::vector<FuzzFailure> failures;
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }
};

namespace detail {

// expected/actual strings of a failing case; nullopt means the case passed.
using CaseOutcome = std::optional<std::pair<std::string, std::string>>;

struct FuzzProperty {
  std::string name;
  std::function<CaseOutcome(std::uint64_t, const FuzzConfig&,
                            std::vector<std::string>*)>
      run;
};

inline std::vector<Letter> raw_letter_codes(int rank, std::size_t length,
                                            Rng& rng) {
  std::uniform_int_distribution<int> idx(1, rank);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::vector<Letter> out;
  out.reserve(length);
  for (std::size_t k = 0; k < length; ++k) {
    out.push_back(Letter::gen(idx(rng), sgn(rng) ? +1 : -1));
  }
  return out;
}

inline CaseOutcome word_confluence_case(std::uint64_t cs, const FuzzConfig& c,
                                        std::vector<std::string>*) {
  Rng rng = make_rng(cs);
  const int rank = 5;
  std::uniform_int_distribution<std::size_t> len(0, 3 * c.max_length + 2);
  std::vector<Letter> raw = raw_letter_codes(rank, len(rng), rng);
  Word base = Word::reduce(rank, raw);

  Word again = Word::reduce(rank, base.letters());
  if (again != base) {
    return {{to_text(base), to_text(again)}};
  }

  std::uniform_int_distribution<std::size_t> pos(0, raw.size());
  std::uniform_int_distribution<int> idx(1, rank);
  std::uniform_int_distribution<int> sgn(0, 1);
  Letter x = Letter::gen(idx(rng), sgn(rng) ? +1 : -1);
  std::vector<Letter> spliced = raw;
  std::size_t at = pos(rng);
  spliced.insert(spliced.begin() + static_cast<std::ptrdiff_t>(at),
                 {x, x.inverse()});
  Word other = Word::reduce(rank, spliced);
  if (other != base) {
    return {{to_text(base), to_text(other)}};
  }
  return std::nullopt;
}

inline int pick_rank(std::uint64_t cs) { return 2 + static_cast<int>(cs % 5); }

inline CaseOutcome ut_roundtrip_case(std::uint64_t cs, const FuzzConfig& c,
                                     std::vector<std::string>*) {
  Rng rng = make_rng(cs);
  int rank = pick_rank(cs);
  UniTri phi = random_unitri(rank, std::min<std::size_t>(c.max_length, 12),
                             rng);
  std::optional<UniTri> back = from_endo(to_endo(phi));
  if (!back) return {{to_text(phi), "unrecognized"}};
  if (*back != phi) return {{to_text(phi), to_text(*back)}};
  return std::nullopt;
}

inline CaseOutcome ut_closure_case(std::uint64_t cs, const FuzzConfig& c,
                                   std::vector<std::string>*) {
  Rng rng = make_rng(cs);
  int rank = pick_rank(cs);
  std::size_t cap = std::min<std::size_t>(c.max_length, 12);
  UniTri phi = random_unitri(rank, cap, rng);
  UniTri psi = random_unitri(rank, cap, rng);
  UniTri direct = ut_compose(phi, psi);
  std::optional<UniTri> via_maps = from_endo(compose(to_endo(phi),
                                                     to_endo(psi)));
  if (!via_maps) return {{to_text(direct), "unrecognized"}};
  if (*via_maps != direct) return {{to_text(direct), to_text(*via_maps)}};
  return std::nullopt;
}

inline CaseOutcome alpha_triviality_case(std::uint64_t cs, const FuzzConfig& c,
                                         std::vector<std::string>*) {
  Rng rng = make_rng(cs);
  std::uniform_int_distribution<std::size_t> len(0,
                                                 std::max<std::size_t>(
                                                     c.max_length, 1));
  LambdaWord w = random_lambda_word(3, len(rng), rng);
  bool in_u3 = evaluate_lambda_word(3, w).is_identity();
  bool in_aut = is_identity(alpha_image(w));
  if (in_u3 != in_aut) {
    return {{in_u3 ? "trivial" : "nontrivial",
             in_aut ? "trivial" : "nontrivial"}};
  }
  return std::nullopt;
}

inline HnnWord random_small_hnn(const FuzzConfig& c, Rng& rng) {
  std::size_t comp = std::min<std::size_t>(c.max_length, 10);
  return random_hnn_word(2, 8, comp, rng);
}

inline CaseOutcome hnn_soundness_case(std::uint64_t cs, const FuzzConfig& c,
                                      std::vector<std::string>* notes) {
  Rng rng = make_rng(cs);
  HnnWord w = random_small_hnn(c, rng);
  bool trivial = hnn_is_trivial(w);
  bool image_trivial = fp_image(w).is_identity();
  if (trivial && !image_trivial) {
    return {{"identity image", to_text(fp_image(w))}};
  }
  if (!trivial && image_trivial && notes && notes->size() < 8) {
    notes->push_back("kernel witness candidate: " + to_text(w));
  }
  return std::nullopt;
}

inline CaseOutcome hnn_relator_case(std::uint64_t cs, const FuzzConfig& c,
                                    std::vector<std::string>*) {
  Rng rng = make_rng(cs);
  HnnWord w = random_small_hnn(c, rng);
  bool before = hnn_is_trivial(w);

  std::uniform_int_distribution<std::size_t> pos(0, w.tail().size());
  std::size_t cut = pos(rng);
  std::uniform_int_distribution<std::size_t> len(0, 6);
  Word g = random_reduced_word(2, len(rng), rng);

  std::vector<Syllable> front(w.tail().begin(),
                              w.tail().begin() +
                                  static_cast<std::ptrdiff_t>(cut));
  std::vector<Syllable> back(w.tail().begin() +
                                 static_cast<std::ptrdiff_t>(cut),
                             w.tail().end());
  HnnWord left(w.head(), std::move(front));
  HnnWord right(PairElem::trivial(2), std::move(back));
  HnnWord spliced =
      hnn_multiply(hnn_multiply(left, relator(g)), right);

  bool after = hnn_is_trivial(spliced);
  if (before != after) {
    return {{before ? "trivial" : "nontrivial",
             after ? "trivial" : "nontrivial"}};
  }
  return std::nullopt;
}

inline CaseOutcome dsl_word_case(std::uint64_t cs, const FuzzConfig& c,
                                 std::vector<std::string>*) {
  Rng rng = make_rng(cs);
  int rank = pick_rank(cs);
  std::uniform_int_distribution<std::size_t> len(0, c.max_length);
  Word w = random_reduced_word(rank, len(rng), rng);
  Word back = eval_word(parse(to_text(w), {rank, ExprKind::word}), rank);
  if (back != w) return {{to_text(w), to_text(back)}};
  return std::nullopt;
}

inline CaseOutcome dsl_lambda_case(std::uint64_t cs, const FuzzConfig& c,
                                   std::vector<std::string>*) {
  Rng rng = make_rng(cs);
  int rank = std::max(3, pick_rank(cs));
  std::uniform_int_distribution<std::size_t> len(0,
                                                 std::min<std::size_t>(
                                                     c.max_length, 12));
  UniTri phi = evaluate_lambda_word(rank, random_lambda_word(rank, len(rng),
                                                             rng));
  UniTri back = eval_lambda_expr(parse(to_text(phi),
                                       {rank, ExprKind::lambda_word}),
                                 rank);
  if (back != phi) return {{to_text(phi), to_text(back)}};
  return std::nullopt;
}

inline CaseOutcome dsl_endo_case(std::uint64_t cs, const FuzzConfig& c,
                                 std::vector<std::string>*) {
  Rng rng = make_rng(cs);
  static const char* names[] = {"tau1", "tau2", "sigma"};
  std::uniform_int_distribution<std::size_t> len(0,
                                                 std::min<std::size_t>(
                                                     c.max_length, 14));
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<int> sgn(0, 1);
  EndoWord w;
  std::size_t n = len(rng);
  for (std::size_t k = 0; k < n; ++k) {
    w.emplace_back(names[pick(rng)], sgn(rng) ? +1 : -1);
  }
  const EndoTable& table = aut_f2_table();
  EndoMap value = evaluate_endo_word(table, w, 2);
  EndoMap back = eval_endo_expr(parse(to_text(w), {2, ExprKind::endo_word}));
  if (back != value) return {{to_text(w), "differs after re-parse"}};
  return std::nullopt;
}

inline CaseOutcome dsl_hnn_case(std::uint64_t cs, const FuzzConfig& c,
                                std::vector<std::string>*) {
  Rng rng = make_rng(cs);
  HnnWord w = random_small_hnn(c, rng);
  HnnWord back = eval_hnn_expr(parse(to_text(w), {2, ExprKind::hnn_word}), 2);
  if (back != w) return {{to_text(w), to_text(back)}};
  return std::nullopt;
}

inline const std::vector<FuzzProperty>& fuzz_catalog() {
  static const std::vector<FuzzProperty> catalog = {
      {"word.confluence", word_confluence_case},
      {"ut.roundtrip", ut_roundtrip_case},
      {"ut.closure", ut_closure_case},
      {"alpha.triviality", alpha_triviality_case},
      {"hnn.soundness", hnn_soundness_case},
      {"hnn.relator-insertion", hnn_relator_case},
      {"dsl.roundtrip.word", dsl_word_case},
      {"dsl.roundtrip.lambda", dsl_lambda_case},
      {"dsl.roundtrip.endo", dsl_endo_case},
      {"dsl.roundtrip.hnn", dsl_hnn_case},
  };
  return catalog;
}

inline bool property_selected(const std::string& name,
                              const std::string& only) {
  return only.empty() || name.find(only) != std::string::npos;
}

inline void sort_failures(std::vector<FuzzFailure>& v) {
  std::sort(v.begin(), v.end(), [](const FuzzFailure& a,
                                   const FuzzFailure& b) {
    return std::tie(a.property, a.seed, a.case_index) <
           std::tie(b.property, b.seed, b.case_index);
  });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace detail

// Replays `corpus` entries whose property still exists, then sweeps the
// whole catalog.  Failures come back sorted and deduplicated.
inline FuzzReport run_fuzz(const FuzzConfig& config,
                           const std::vector<FuzzFailure>& corpus = {}) {
  if (config.samples < 1) {
    throw std::invalid_argument("samples must be >= 1");
  }
  const auto& catalog = detail::fuzz_catalog();
  FuzzReport report;
  report.samples_per_property = config.samples;

  auto run_one = [&](const detail::FuzzProperty& prop, std::uint64_t cs,
                     int case_index) {
    detail::CaseOutcome out = prop.run(cs, config, &report.notes);
    if (out) {
      report.failures.push_back(
          {prop.name, cs, case_index, out->first, out->second});
    }
  };

  for (const FuzzFailure& old : corpus) {
    for (const auto& prop : catalog) {
      if (prop.name == old.property &&
          detail::property_selected(prop.name, config.only)) {
        run_one(prop, old.seed, old.case_index);
      }
    }
  }

  for (std::size_t p = 0; p < catalog.size(); ++p) {
    if (!detail::property_selected(catalog[p].name, config.only)) continue;
    int run = 0;
    for (int k = 0; k < config.samples; ++k) {
      run_one(catalog[p], derive_seed(config.seed, p,
                                      static_cast<std::uint64_t>(k)),
              k);
      ++run;
    }
    report.cases_run.emplace_back(catalog[p].name, run);
  }

  detail::sort_failures(report.failures);
  return report;
}

inline std::vector<FuzzFailure> read_failure_corpus(std::istream& in) {
  std::vector<FuzzFailure> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(failure_from_json(json::parse(line)));
  }
  return out;
}

inline void write_failure_corpus(std::ostream& out,
                                 const std::vector<FuzzFailure>& corpus) {
  for (const FuzzFailure& f : corpus) {
    out << failure_to_json(f).dump() << '\n';
  }
}

// New corpus content after a run: prior entries plus fresh failures.
inline std::vector<FuzzFailure> merge_corpus(std::vector<FuzzFailure> prior,
                                             const FuzzReport& report) {
  prior.insert(prior.end(), report.failures.begin(), report.failures.end());
  detail::sort_failures(prior);
  return prior;
}

}  // namespace fgc
