// Command-line front end: expression evaluation, the relation suite,
// property fuzzing, and the reduction benchmark.
//
// Exit codes: 0 success/all-pass, 1 relation or property failure,
// 2 input error, 3 nontrivial/unrecognized verdict.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fgc/fgc.hpp"

namespace {

struct Options {
  int rank = 2;
  std::uint64_t seed = 0;
  int samples = 10000;
  int max_length = 20;
  std::string format = "text";
  std::string only;
};

bool json_mode(const Options& o) { return o.format == "json"; }

// Inputs equal to "-" stand for the whole of stdin.
std::string read_input(const std::string& arg) {
  if (arg != "-") return arg;
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  return buf.str();
}

fgc::Word parse_word(const std::string& text, int rank) {
  return fgc::eval_word(fgc::parse(text, {rank, fgc::ExprKind::word}), rank);
}

fgc::UniTri parse_ut(const std::string& text, int rank) {
  return fgc::eval_lambda_expr(
      fgc::parse(text, {rank, fgc::ExprKind::lambda_word}), rank);
}

fgc::EndoMap parse_endo(const std::string& text) {
  return fgc::eval_endo_expr(fgc::parse(text, {2, fgc::ExprKind::endo_word}));
}

fgc::HnnWord parse_hnn(const std::string& text, int rank) {
  return fgc::eval_hnn_expr(
      fgc::parse(text, {rank, fgc::ExprKind::hnn_word}), rank);
}

void print_word(const fgc::Word& w, const Options& o) {
  if (json_mode(o)) {
    std::cout << fgc::word_to_json(w).dump() << "\n";
  } else {
    std::cout << fgc::to_text(w) << "\n";
  }
}

void print_ut(const fgc::UniTri& phi, const Options& o) {
  if (json_mode(o)) {
    std::cout << fgc::unitri_to_json(phi).dump() << "\n";
  } else {
    std::cout << fgc::to_text(phi) << "\n";
  }
}

void print_endo(const fgc::EndoMap& e, const Options& o) {
  if (json_mode(o)) {
    std::cout << fgc::endo_to_json(e).dump() << "\n";
    return;
  }
  for (int i = 1; i <= e.rank(); ++i) {
    std::cout << "f" << i << " -> " << fgc::to_text(e.image(i)) << "\n";
  }
}

void print_hnn(const fgc::HnnWord& w, const Options& o) {
  if (json_mode(o)) {
    std::cout << fgc::hnn_to_json(w).dump() << "\n";
  } else {
    std::cout << fgc::to_text(w) << "\n";
  }
}

// ---- check-relations ----------------------------------------------------

// The sigma/tau conjugation identities, recomputed against a caller-supplied
// generator table so a corrupted table (the negative control) shows up as a
// failing check.
void sigma_conjugation_checks(const fgc::EndoTable& table,
                              std::vector<fgc::RelationCheck>& out) {
  using fgc::EndoWord;
  EndoWord lhs1 = {{"sigma", -1}, {"tau1", +1}, {"sigma", +1}};
  bool ok1 = fgc::evaluate_endo_word(table, lhs1, 2) ==
             fgc::evaluate_endo_word(table, {{"tau1", +1}}, 2);
  out.push_back({"conj.sigma-tau1", ok1, "sigma^-1 tau(1) sigma = tau(1)"});

  EndoWord lhs2 = {{"sigma", -1}, {"tau2", +1}, {"sigma", +1}};
  EndoWord rhs2 = {{"tau1", +1}, {"tau2", +1}};
  bool ok2 = fgc::evaluate_endo_word(table, lhs2, 2) ==
             fgc::evaluate_endo_word(table, rhs2, 2);
  out.push_back(
      {"conj.sigma-tau2", ok2, "sigma^-1 tau(2) sigma = tau(1) tau(2)"});
}

int cmd_check_relations(const Options& o, bool corrupt) {
  std::vector<fgc::RelationCheck> checks =
      fgc::check_relation_suite(6).checks;

  if (corrupt) {
    fgc::EndoTable table = fgc::aut_f2_table();
    fgc::NamedEndo& sigma = table.find("sigma")->second;
    sigma.inverse = sigma.forward;
    sigma_conjugation_checks(table, checks);
  }

  {
    // The conjugation-table map is a homomorphism on sampled products.
    auto rng = fgc::make_rng(fgc::derive_seed(o.seed, 0xA1, 0));
    std::uniform_int_distribution<std::size_t> len(
        0, static_cast<std::size_t>(o.max_length));
    int bad = 0;
    int n = std::min(o.samples, 2000);
    for (int k = 0; k < n; ++k) {
      fgc::LambdaWord v = fgc::random_lambda_word(3, len(rng), rng);
      fgc::LambdaWord w = fgc::random_lambda_word(3, len(rng), rng);
      fgc::LambdaWord vw = v;
      vw.insert(vw.end(), w.begin(), w.end());
      if (fgc::alpha_image(vw) !=
          fgc::compose(fgc::alpha_image(v), fgc::alpha_image(w))) {
        ++bad;
      }
    }
    checks.push_back({"alpha.homomorphism", bad == 0,
                      std::to_string(n) + " sampled products"});
  }

  {
    fgc::ProbeReport probe = fgc::alpha_faithfulness_probe(
        o.samples, static_cast<std::size_t>(o.max_length),
        fgc::derive_seed(o.seed, 0xA2, 0));
    checks.push_back({"alpha.triviality-probe", probe.all_pass(),
                      std::to_string(probe.samples) + " samples, " +
                          std::to_string(probe.mismatches) + " mismatches"});
  }

  {
    fgc::FpReport fp = fgc::verify_fp_relations(
        o.samples, static_cast<std::size_t>(o.max_length),
        fgc::derive_seed(o.seed, 0xA3, 0));
    for (const fgc::RelationCheck& c : fp.relations.checks) {
      checks.push_back(c);
    }
  }

  std::vector<fgc::RelationCheck> shown;
  for (const fgc::RelationCheck& c : checks) {
    if (o.only.empty() || c.name.find(o.only) != std::string::npos) {
      shown.push_back(c);
    }
  }

  bool all = true;
  for (const fgc::RelationCheck& c : shown) all = all && c.pass;

  if (json_mode(o)) {
    fgc::json arr = fgc::json::array();
    for (const fgc::RelationCheck& c : shown) {
      arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    std::cout << fgc::json{{"checks", arr}, {"all_pass", all}}.dump()
              << "\n";
  } else {
    for (const fgc::RelationCheck& c : shown) {
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (!c.pass && !c.detail.empty()) std::cout << "  (" << c.detail << ")";
      std::cout << "\n";
    }
    if (shown.empty()) std::cout << "no checks matched " << o.only << "\n";
    std::cout << (all ? "all checks passed" : "CHECKS FAILED") << "\n";
  }
  return all ? 0 : 1;
}

// ---- fuzz ----------------------------------------------------------------

int cmd_fuzz(const Options& o, const std::string& corpus_path) {
  fgc::FuzzConfig config;
  config.samples = o.samples;
  config.seed = o.seed;
  config.max_length = static_cast<std::size_t>(o.max_length);
  config.only = o.only;

  std::vector<fgc::FuzzFailure> prior;
  {
    std::ifstream in(corpus_path);
    if (in) prior = fgc::read_failure_corpus(in);
  }

  fgc::FuzzReport report = fgc::run_fuzz(config, prior);

  std::vector<fgc::FuzzFailure> merged = fgc::merge_corpus(prior, report);
  {
    std::ofstream out(corpus_path, std::ios::trunc);
    fgc::write_failure_corpus(out, merged);
  }

  if (json_mode(o)) {
    fgc::json props = fgc::json::array();
    for (const auto& [name, count] : report.cases_run) {
      props.push_back({{"property", name}, {"cases", count}});
    }
    fgc::json fails = fgc::json::array();
    for (const fgc::FuzzFailure& f : report.failures) {
      fails.push_back(fgc::failure_to_json(f));
    }
    std::cout << fgc::json{{"properties", props},
                           {"failures", fails},
                           {"notes", report.notes}}
                     .dump()
              << "\n";
  } else {
    for (const auto& [name, count] : report.cases_run) {
      int bad = 0;
      for (const fgc::FuzzFailure& f : report.failures) {
        if (f.property == name) ++bad;
      }
      std::printf("%-24s %8d cases  %d failures\n", name.c_str(), count, bad);
    }
    for (const fgc::FuzzFailure& f : report.failures) {
      std::cout << fgc::failure_to_json(f).dump() << "\n";
    }
    for (const std::string& note : report.notes) {
      std::cout << "note: " << note << "\n";
    }
    std::cout << "corpus: " << merged.size() << " records in " << corpus_path
              << "\n";
  }
  return report.passed() ? 0 : 1;
}

// ---- bench ----------------------------------------------------------------

struct BenchRow {
  std::string family;
  std::size_t letters = 0;
  int reps = 1;
  double seconds = 0;
  double letters_per_second = 0;
};

BenchRow time_reduction(const std::string& family,
                        const std::vector<fgc::Letter>& raw, int reps,
                        bool expect_trivial) {
  using clock = std::chrono::steady_clock;
  auto start = clock::now();
  bool trivial = true;
  for (int r = 0; r < reps; ++r) {
    fgc::Word w = fgc::Word::reduce(4, raw);
    trivial = trivial && w.is_identity();
  }
  auto stop = clock::now();
  if (expect_trivial && !trivial) {
    throw std::runtime_error("palindrome failed to cancel");
  }
  BenchRow row;
  row.family = family;
  row.letters = raw.size();
  row.reps = reps;
  row.seconds = std::chrono::duration<double>(stop - start).count();
  double total = static_cast<double>(raw.size()) * reps;
  row.letters_per_second = total / std::max(row.seconds, 1e-12);
  return row;
}

int cmd_bench(const Options& o) {
  fgc::Rng rng = fgc::make_rng(o.seed);
  std::uniform_int_distribution<int> idx(1, 4);
  std::uniform_int_distribution<int> sgn(0, 1);

  auto raw_letters = [&](std::size_t n) {
    std::vector<fgc::Letter> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      out.push_back(fgc::Letter::gen(idx(rng), sgn(rng) ? +1 : -1));
    }
    return out;
  };

  const std::size_t sizes[] = {100000, 1000000, 10000000};
  std::vector<BenchRow> rows;

  for (std::size_t n : sizes) {
    std::vector<fgc::Letter> half = raw_letters(n / 2);
    std::vector<fgc::Letter> palindrome = half;
    for (auto it = half.rbegin(); it != half.rend(); ++it) {
      palindrome.push_back(it->inverse());
    }
    int reps = static_cast<int>(std::max<std::size_t>(1, 1000000 / n));
    rows.push_back(time_reduction("palindrome", palindrome, reps, true));
  }
  for (std::size_t n : sizes) {
    int reps = static_cast<int>(std::max<std::size_t>(1, 1000000 / n));
    rows.push_back(time_reduction("random", raw_letters(n), reps, false));
  }

  // Linear-time reduction keeps throughput flat; 3x slack covers cache
  // effects between size decades.
  bool scaling_ok = true;
  std::vector<std::string> violations;
  for (std::size_t f = 0; f < 2; ++f) {
    for (std::size_t k = 1; k < 3; ++k) {
      const BenchRow& small = rows[3 * f + k - 1];
      const BenchRow& big = rows[3 * f + k];
      if (big.letters_per_second < small.letters_per_second / 3.0) {
        scaling_ok = false;
        violations.push_back(small.family + " " +
                             std::to_string(small.letters) + " -> " +
                             std::to_string(big.letters));
      }
    }
  }

  if (json_mode(o)) {
    fgc::json arr = fgc::json::array();
    for (const BenchRow& r : rows) {
      arr.push_back({{"family", r.family},
                     {"letters", r.letters},
                     {"reps", r.reps},
                     {"seconds", r.seconds},
                     {"letters_per_second", r.letters_per_second}});
    }
    std::cout << fgc::json{{"cases", arr}, {"linear_scaling", scaling_ok}}
                     .dump()
              << "\n";
  } else {
    for (const BenchRow& r : rows) {
      std::printf("%-11s %9zu letters x%-2d  %8.2f ms  %.3g letters/s\n",
                  r.family.c_str(), r.letters, r.reps, r.seconds * 1000.0,
                  r.letters_per_second);
    }
    if (scaling_ok) {
      std::cout << "scaling: linear within 3x across decades\n";
    } else {
      for (const std::string& v : violations) {
        std::cout << "scaling violation: " << v << "\n";
      }
    }
  }
  return scaling_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic calculus for free groups, their unitriangular "
               "automorphisms, and an HNN word-problem engine"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--rank", opt.rank, "free group rank")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "root random seed");
  app.add_option("--samples", opt.samples, "sample count for probes")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-length", opt.max_length, "length bound for samples")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--only", opt.only, "substring filter for check names");

  int exit_code = 0;

  // reduce
  std::string reduce_input;
  CLI::App* reduce = app.add_subcommand("reduce", "reduce a word expression");
  reduce->fallthrough();
  reduce->add_option("input", reduce_input, "word expression or -")
      ->required();
  reduce->callback([&] {
    print_word(parse_word(read_input(reduce_input), opt.rank), opt);
  });

  // apply
  std::string apply_auto, apply_endo, apply_word;
  CLI::App* apply = app.add_subcommand(
      "apply", "apply an automorphism to a word");
  apply->fallthrough();
  CLI::Option* oa = apply->add_option("--auto", apply_auto,
                                      "automorphism as a lambda word");
  CLI::Option* oe = apply->add_option("--endo", apply_endo,
                                      "automorphism as a tau/sigma word");
  oa->excludes(oe);
  apply->add_option("--word", apply_word, "word to act on")->required();
  apply->callback([&] {
    fgc::Word w = parse_word(read_input(apply_word), opt.rank);
    if (!apply_auto.empty()) {
      fgc::UniTri phi = parse_ut(read_input(apply_auto), opt.rank);
      print_word(fgc::apply(fgc::to_endo(phi), w), opt);
    } else if (!apply_endo.empty()) {
      print_word(fgc::apply(parse_endo(read_input(apply_endo)), w), opt);
    } else {
      throw std::invalid_argument("apply needs --auto or --endo");
    }
  });

  // compose
  std::string comp_a, comp_b;
  bool comp_ut = false, comp_endo = false;
  CLI::App* comp = app.add_subcommand(
      "compose", "compose two values (left applied first)");
  comp->fallthrough();
  comp->add_option("first", comp_a, "first factor or -")->required();
  comp->add_option("second", comp_b, "second factor")->required();
  CLI::Option* cu = comp->add_flag("--ut", comp_ut, "lambda-word inputs");
  CLI::Option* ce = comp->add_flag("--endo", comp_endo,
                                   "tau/sigma word inputs");
  cu->excludes(ce);
  comp->callback([&] {
    if (comp_ut) {
      print_ut(fgc::ut_compose(parse_ut(read_input(comp_a), opt.rank),
                               parse_ut(read_input(comp_b), opt.rank)),
               opt);
    } else if (comp_endo) {
      print_endo(fgc::compose(parse_endo(read_input(comp_a)),
                              parse_endo(read_input(comp_b))),
                 opt);
    } else {
      print_word(fgc::multiply(parse_word(read_input(comp_a), opt.rank),
                               parse_word(read_input(comp_b), opt.rank)),
                 opt);
    }
  });

  // invert
  std::string inv_input;
  bool inv_ut = false;
  CLI::App* inv = app.add_subcommand("invert", "invert a word or an "
                                               "automorphism");
  inv->fallthrough();
  inv->add_option("input", inv_input, "expression or -")->required();
  inv->add_flag("--ut", inv_ut, "treat input as a lambda word");
  inv->add_flag("--word", [](std::int64_t) {},
                "treat input as a word (default)");
  inv->callback([&] {
    if (inv_ut) {
      print_ut(fgc::ut_invert(parse_ut(read_input(inv_input), opt.rank)),
               opt);
    } else {
      print_word(fgc::invert(parse_word(read_input(inv_input), opt.rank)),
                 opt);
    }
  });

  // ut-from-images
  std::string ufi_input;
  CLI::App* ufi = app.add_subcommand(
      "ut-from-images",
      "recognize a unitriangular automorphism from endomorphism JSON");
  ufi->fallthrough();
  ufi->add_option("input", ufi_input, "endomorphism JSON or -")->required();
  ufi->callback([&] {
    fgc::json j;
    try {
      j = fgc::json::parse(read_input(ufi_input));
    } catch (const fgc::json::parse_error& e) {
      throw std::invalid_argument(e.what());
    }
    fgc::EndoMap e = fgc::endo_from_json(j);
    std::optional<fgc::UniTri> phi = fgc::from_endo(e);
    if (!phi) {
      std::cout << "not unitriangular\n";
      exit_code = 3;
      return;
    }
    print_ut(*phi, opt);
  });

  // check-relations
  bool corrupt = false;
  CLI::App* rel = app.add_subcommand("check-relations",
                                     "run the full identity suite");
  rel->fallthrough();
  rel->add_flag("--corrupt-generators", corrupt,
                "negative control: corrupt the generator table")
      ->group("");
  rel->callback([&] { exit_code = cmd_check_relations(opt, corrupt); });

  // britton
  std::string brit_input;
  bool check_trivial = false;
  CLI::App* brit = app.add_subcommand("britton",
                                      "reduce an HNN word to normal form");
  brit->fallthrough();
  brit->add_option("input", brit_input, "hnn expression or -")->required();
  brit->add_flag("--check-trivial", check_trivial,
                 "print the triviality verdict");
  brit->callback([&] {
    fgc::HnnWord w =
        fgc::britton_reduce(parse_hnn(read_input(brit_input), opt.rank));
    if (check_trivial) {
      bool trivial = fgc::hnn_is_trivial(w);
      std::cout << (trivial ? "trivial" : "nontrivial") << "\n";
      exit_code = trivial ? 0 : 3;
      return;
    }
    print_hnn(w, opt);
  });

  // fp-image
  std::string fpi_input;
  CLI::App* fpi = app.add_subcommand(
      "fp-image", "image of a rank-2 HNN word in the rank-4 group");
  fpi->fallthrough();
  fpi->add_option("input", fpi_input, "hnn expression or -")->required();
  fpi->callback([&] {
    print_ut(fgc::fp_image(parse_hnn(read_input(fpi_input), 2)), opt);
  });

  // fuzz
  std::string corpus_path = "fuzz-failures.jsonl";
  CLI::App* fuzz = app.add_subcommand("fuzz", "run the property catalog");
  fuzz->fallthrough();
  fuzz->add_option("--corpus", corpus_path, "JSONL failure corpus path");
  fuzz->callback([&] { exit_code = cmd_fuzz(opt, corpus_path); });

  // bench
  CLI::App* bench = app.add_subcommand("bench",
                                       "time reduction on large inputs");
  bench->fallthrough();
  bench->callback([&] { exit_code = cmd_bench(opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : 2;
  } catch (const fgc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const fgc::RankError& e) {
    std::cerr << "rank error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
