// A tour of the library: free-group words, triangular automorphisms,
// the conjugation representation, and the HNN word-problem engine.

#include <iostream>

#include "fgc/fgc.hpp"

int main() {
  using namespace fgc;

  // Words reduce on construction; arithmetic never leaves reduced form.
  Word w = eval_word(parse("f1 f2 f2^-1 f1 f1^-1", {2, ExprKind::word}), 2);
  std::cout << "reduced: " << to_text(w) << "\n";

  Word c = eval_word(parse("[f1, f2]", {2, ExprKind::word}), 2);
  std::cout << "commutator [f1,f2]: " << to_text(c) << "\n";

  // Triangular automorphisms are tuples (u_2, ..., u_n); lambda(i,j) is
  // the Nielsen move f_i |-> f_j f_i.  Composition applies the left
  // factor first.
  UniTri l32 = lambda_gen(3, 3, 2);
  UniTri l21 = lambda_gen(3, 2, 1);
  UniTri prod = ut_compose(l32, l21);
  std::cout << "lambda(3,2) lambda(2,1) as a tuple word: " << to_text(prod)
            << "\n";
  std::cout << "it sends f3 to: "
            << to_text(apply(to_endo(prod), generator_word(3, 3))) << "\n";

  // Conjugating lambda(3,2) by lambda(2,1) picks up a lambda(3,1) factor.
  UniTri conj = evaluate_lambda_word(
      3, {{2, 1, -1}, {3, 2, +1}, {2, 1, +1}});
  std::cout << "lambda(2,1)^-1 lambda(3,2) lambda(2,1) = "
            << to_text(conj) << "\n";

  // The rank-3 group acts faithfully on a rank-2 free group through
  // conjugations and one extra Nielsen move.
  LambdaWord probe = {{3, 2, +1}, {2, 1, +1}, {3, 2, -1}, {2, 1, -1}};
  std::cout << "alpha image of a sample word is "
            << (is_identity(alpha_image(probe)) ? "trivial" : "nontrivial")
            << ", the word itself is "
            << (evaluate_lambda_word(3, probe).is_identity() ? "trivial"
                                                             : "nontrivial")
            << "\n";

  // HNN words: t conjugates the diagonal onto the right factor, and
  // Britton reduction decides the word problem.
  HnnWord pinch = eval_hnn_expr(
      parse("t (f1 f2 | f1 f2) t^-1", {2, ExprKind::hnn_word}), 2);
  std::cout << "britton: " << to_text(britton_reduce(pinch)) << "\n";

  HnnWord rel = relator(eval_word(parse("f2 f1", {2, ExprKind::word}), 2));
  std::cout << "relator is "
            << (hnn_is_trivial(rel) ? "trivial" : "nontrivial")
            << ", its rank-4 image is " << to_text(fp_image(rel)) << "\n";

  return 0;
}
