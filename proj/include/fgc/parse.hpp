#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fgc/endomorphism.hpp"
#include "fgc/hnn.hpp"
#include "fgc/unitriangular.hpp"
#include "fgc/word.hpp"

namespace fgc {

// Positioned failure; line and column are 1-based and describe the first
// offending character.
struct ParseError : std::runtime_error {
  ParseError(int line_, int col_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ", column " +
                           std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}

  int line;
  int col;
};

enum class ExprKind { word, lambda_word, endo_word, hnn_word };

struct ParseContext {
  int rank = 2;
  ExprKind kind = ExprKind::word;
};

// One grammar serves all four input kinds:
//   word := term { term }          term := atom [ "^" integer ]
//   atom := "e" | "f"index | "L(" i "," j ")" | "tau(" i ")" | "sigma"
//         | "t" | "(" word ")" | "[" word "," word "]" | "(" word "|" word ")"
// Juxtaposition multiplies left to right; [u,v] = u v u^-1 v^-1; which
// leaf atoms are legal depends on the requested kind.
struct Expr {
  enum class Tag {
    identity,
    gen,         // f_a
    lambda,      // L(a, b)
    tau,         // tau(a)
    sigma,
    stable,      // t
    pair,        // (children[0] | children[1])
    product,     // children, left to right
    power,       // children[0] ^ exponent
    commutator,  // [children[0], children[1]]
  };

  Tag tag = Tag::identity;
  int a = 0;
  int b = 0;
  long long exponent = 1;
  std::vector<Expr> children;
};

// Exponent and index magnitudes are capped so that a hostile input cannot
// request astronomically large expansions through a few characters, and
// evaluation aborts with std::length_error once a result outgrows the
// letter budget instead of exhausting memory.
inline constexpr long long kMaxExponent = 1000000;
inline constexpr int kMaxParseDepth = 256;
inline constexpr std::size_t kMaxEvalLetters = std::size_t{1} << 24;
inline constexpr std::size_t kMaxEvalSyllables = std::size_t{1} << 18;

namespace detail {

struct Token {
  enum class Kind {
    kw_e,
    gen,     // f<index>, value holds the index
    kw_L,
    kw_tau,
    kw_sigma,
    kw_t,
    lparen,
    rparen,
    lbracket,
    rbracket,
    comma,
    pipe,
    caret,
    integer,  // value holds the signed number
    end,
  };

  Kind kind;
  long long value = 0;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= text_.size()) {
      t.kind = Token::Kind::end;
      return t;
    }
    char c = text_[pos_];
    switch (c) {
      case '(': advance(); t.kind = Token::Kind::lparen; return t;
      case ')': advance(); t.kind = Token::Kind::rparen; return t;
      case '[': advance(); t.kind = Token::Kind::lbracket; return t;
      case ']': advance(); t.kind = Token::Kind::rbracket; return t;
      case ',': advance(); t.kind = Token::Kind::comma; return t;
      case '|': advance(); t.kind = Token::Kind::pipe; return t;
      case '^': advance(); t.kind = Token::Kind::caret; return t;
      default: break;
    }
    if (c == '-' || is_digit(c)) {
      t.kind = Token::Kind::integer;
      t.value = lex_integer();
      return t;
    }
    if (is_alpha(c)) {
      std::string name;
      while (pos_ < text_.size() && is_alpha(text_[pos_])) {
        name += text_[pos_];
        advance();
      }
      if (name == "e") { t.kind = Token::Kind::kw_e; return t; }
      if (name == "L") { t.kind = Token::Kind::kw_L; return t; }
      if (name == "tau") { t.kind = Token::Kind::kw_tau; return t; }
      if (name == "sigma") { t.kind = Token::Kind::kw_sigma; return t; }
      if (name == "t") { t.kind = Token::Kind::kw_t; return t; }
      if (name == "f") {
        if (pos_ >= text_.size() || !is_digit(text_[pos_])) {
          throw ParseError(t.line, t.col, "expected generator index after f");
        }
        t.kind = Token::Kind::gen;
        t.value = lex_integer();
        return t;
      }
      throw ParseError(t.line, t.col, "unknown name '" + name + "'");
    }
    throw ParseError(line_, col_,
                     "unexpected character '" + printable(c) + "'");
  }

 private:
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_alpha(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  }

  static std::string printable(char c) {
    if (c >= 0x20 && c < 0x7f) return std::string(1, c);
    char buf[8];
    std::snprintf(buf, sizeof buf, "\\x%02x", static_cast<unsigned char>(c));
    return buf;
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        advance();
      } else {
        break;
      }
    }
  }

  long long lex_integer() {
    int line = line_;
    int col = col_;
    bool negative = false;
    if (text_[pos_] == '-') {
      negative = true;
      advance();
      if (pos_ >= text_.size() || !is_digit(text_[pos_])) {
        throw ParseError(line, col, "expected digits after '-'");
      }
    }
    long long value = 0;
    while (pos_ < text_.size() && is_digit(text_[pos_])) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > kMaxExponent) {
        throw ParseError(line, col,
                         "number exceeds the limit " +
                             std::to_string(kMaxExponent));
      }
      advance();
    }
    return negative ? -value : value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  Parser(std::string_view text, const ParseContext& ctx)
      : lexer_(text), ctx_(ctx) {
    switch (ctx.kind) {
      case ExprKind::word: mode_ = Mode::word; break;
      case ExprKind::lambda_word: mode_ = Mode::lambda; break;
      case ExprKind::endo_word: mode_ = Mode::endo; break;
      case ExprKind::hnn_word: mode_ = Mode::hnn; break;
    }
    shift();
  }

  Expr run() {
    Expr e = parse_word(0);
    expect(Token::Kind::end, "end of input");
    return e;
  }

 private:
  // Inside "(...)" of an hnn word the interior could still become either
  // a grouped hnn word or the left half of a pair, so both letter sets
  // are admitted and the choice is validated once '|' or ')' arrives.
  enum class Mode { word, lambda, endo, hnn, hnn_open };

  void shift() { look_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(look_.line, look_.col, msg);
  }

  void expect(Token::Kind kind, const std::string& what) {
    if (look_.kind != kind) fail("expected " + what);
    if (kind != Token::Kind::end) shift();
  }

  const char* mode_name() const {
    switch (mode_) {
      case Mode::word: return "word";
      case Mode::lambda: return "lambda-word";
      case Mode::endo: return "endo-word";
      case Mode::hnn:
      case Mode::hnn_open: return "hnn-word";
    }
    return "?";
  }

  void require_kind(bool ok, const std::string& atom) const {
    if (!ok) {
      throw ParseError(look_.line, look_.col,
                       atom + " is not allowed in " + std::string(mode_name()) +
                           " input");
    }
  }

  int checked_index(long long v, const std::string& what) const {
    if (v < 1) fail(what + " must be at least 1");
    if (v > ctx_.rank) {
      fail(what + " " + std::to_string(v) + " exceeds rank " +
           std::to_string(ctx_.rank));
    }
    return static_cast<int>(v);
  }

  bool starts_atom() const {
    switch (look_.kind) {
      case Token::Kind::kw_e:
      case Token::Kind::gen:
      case Token::Kind::kw_L:
      case Token::Kind::kw_tau:
      case Token::Kind::kw_sigma:
      case Token::Kind::kw_t:
      case Token::Kind::lparen:
      case Token::Kind::lbracket:
        return true;
      default:
        return false;
    }
  }

  Expr parse_word(int depth) {
    if (depth > kMaxParseDepth) fail("nesting too deep");
    if (!starts_atom()) fail("expected a term");
    std::vector<Expr> factors;
    while (starts_atom()) factors.push_back(parse_term(depth));
    if (factors.size() == 1) return std::move(factors.front());
    Expr e;
    e.tag = Expr::Tag::product;
    e.children = std::move(factors);
    return e;
  }

  Expr parse_term(int depth) {
    Expr atom = parse_atom(depth);
    if (look_.kind == Token::Kind::caret) {
      shift();
      if (look_.kind != Token::Kind::integer) fail("expected an exponent");
      Expr p;
      p.tag = Expr::Tag::power;
      p.exponent = look_.value;
      p.children.push_back(std::move(atom));
      shift();
      return p;
    }
    return atom;
  }

  // No t or pair anywhere below: fit to become one half of a pair.
  static bool is_base_word(const Expr& e) {
    if (e.tag == Expr::Tag::stable || e.tag == Expr::Tag::pair) return false;
    for (const Expr& c : e.children) {
      if (!is_base_word(c)) return false;
    }
    return true;
  }

  // No bare letter outside a pair: fit to be an hnn subword.  Pair
  // interiors hold letters by construction and are not descended into.
  static bool is_hnn_word(const Expr& e) {
    if (e.tag == Expr::Tag::gen) return false;
    if (e.tag == Expr::Tag::pair) return true;
    for (const Expr& c : e.children) {
      if (!is_hnn_word(c)) return false;
    }
    return true;
  }

  Expr parse_atom(int depth) {
    switch (look_.kind) {
      case Token::Kind::kw_e: {
        shift();
        return Expr{};
      }
      case Token::Kind::gen: {
        require_kind(mode_ == Mode::word || mode_ == Mode::hnn_open,
                     "a bare generator letter");
        Expr e;
        e.tag = Expr::Tag::gen;
        e.a = checked_index(look_.value, "generator index");
        shift();
        return e;
      }
      case Token::Kind::kw_L: {
        require_kind(mode_ == Mode::lambda, "L(i,j)");
        shift();
        expect(Token::Kind::lparen, "'(' after L");
        if (look_.kind != Token::Kind::integer) fail("expected an index");
        int i = checked_index(look_.value, "index");
        shift();
        expect(Token::Kind::comma, "','");
        if (look_.kind != Token::Kind::integer) fail("expected an index");
        int j = checked_index(look_.value, "index");
        if (j >= i) fail("L(i,j) needs j < i");
        shift();
        expect(Token::Kind::rparen, "')'");
        Expr e;
        e.tag = Expr::Tag::lambda;
        e.a = i;
        e.b = j;
        return e;
      }
      case Token::Kind::kw_tau: {
        require_kind(mode_ == Mode::endo, "tau(i)");
        shift();
        expect(Token::Kind::lparen, "'(' after tau");
        if (look_.kind != Token::Kind::integer) fail("expected an index");
        if (look_.value != 1 && look_.value != 2) {
          fail("tau index must be 1 or 2");
        }
        Expr e;
        e.tag = Expr::Tag::tau;
        e.a = static_cast<int>(look_.value);
        shift();
        expect(Token::Kind::rparen, "')'");
        return e;
      }
      case Token::Kind::kw_sigma: {
        require_kind(mode_ == Mode::endo, "sigma");
        shift();
        Expr e;
        e.tag = Expr::Tag::sigma;
        return e;
      }
      case Token::Kind::kw_t: {
        require_kind(mode_ == Mode::hnn || mode_ == Mode::hnn_open,
                     "the stable letter t");
        shift();
        Expr e;
        e.tag = Expr::Tag::stable;
        return e;
      }
      case Token::Kind::lbracket: {
        shift();
        Expr e;
        e.tag = Expr::Tag::commutator;
        e.children.push_back(parse_word(depth + 1));
        expect(Token::Kind::comma, "',' between commutator arguments");
        e.children.push_back(parse_word(depth + 1));
        expect(Token::Kind::rbracket, "']'");
        return e;
      }
      case Token::Kind::lparen: {
        shift();
        if (mode_ == Mode::hnn || mode_ == Mode::hnn_open) {
          Mode outer = mode_;
          mode_ = Mode::hnn_open;
          Expr inner = parse_word(depth + 1);
          if (look_.kind == Token::Kind::pipe) {
            if (!is_base_word(inner)) {
              fail("the left half of a pair must be a word in f letters");
            }
            shift();
            mode_ = Mode::word;
            Expr right = parse_word(depth + 1);
            mode_ = outer;
            expect(Token::Kind::rparen, "')'");
            Expr e;
            e.tag = Expr::Tag::pair;
            e.children.push_back(std::move(inner));
            e.children.push_back(std::move(right));
            return e;
          }
          if (!is_hnn_word(inner)) {
            fail("bare generator letters belong inside a pair (u | v)");
          }
          mode_ = outer;
          expect(Token::Kind::rparen, "')'");
          return inner;
        }
        Expr inner = parse_word(depth + 1);
        if (look_.kind == Token::Kind::pipe) {
          require_kind(false, "a base-group pair");
        }
        expect(Token::Kind::rparen, "')'");
        return inner;
      }
      default:
        fail("expected a term");
    }
  }

  Lexer lexer_;
  ParseContext ctx_;
  Mode mode_ = Mode::word;
  Token look_;
};

}  // namespace detail

inline Expr parse(std::string_view input, const ParseContext& ctx) {
  detail::Parser p(input, ctx);
  return p.run();
}

namespace detail {

// Shared evaluation skeleton.  Inversion is threaded through as a flag so
// that no adapter ever has to invert an evaluated value; this is what
// makes endomorphism words evaluable without an automorphism-inversion
// procedure.  (uv)^-1 folds as v^-1 u^-1, [u,v]^-1 as [v,u], x^-k as
// (x^-1)^k, and leaves flip their own sign.
template <class Ops>
typename Ops::Value eval_expr(const Expr& e, const Ops& ops, bool inv) {
  using Value = typename Ops::Value;
  switch (e.tag) {
    case Expr::Tag::identity:
      return ops.identity();
    case Expr::Tag::gen:
      return ops.gen(e.a, inv ? -1 : +1);
    case Expr::Tag::lambda:
      return ops.lambda(e.a, e.b, inv ? -1 : +1);
    case Expr::Tag::tau:
      return ops.tau(e.a, inv ? -1 : +1);
    case Expr::Tag::sigma:
      return ops.sigma(inv ? -1 : +1);
    case Expr::Tag::stable:
      return ops.stable(inv ? -1 : +1);
    case Expr::Tag::pair:
      return ops.pair(e.children[0], e.children[1], inv);
    case Expr::Tag::product: {
      Value acc = ops.identity();
      if (!inv) {
        for (const Expr& c : e.children) {
          acc = ops.mul(acc, eval_expr(c, ops, false));
        }
      } else {
        for (auto it = e.children.rbegin(); it != e.children.rend(); ++it) {
          acc = ops.mul(acc, eval_expr(*it, ops, true));
        }
      }
      return acc;
    }
    case Expr::Tag::power: {
      long long k = inv ? -e.exponent : e.exponent;
      bool flip = k < 0;
      unsigned long long n =
          flip ? static_cast<unsigned long long>(-k)
               : static_cast<unsigned long long>(k);
      Value acc = ops.identity();
      if (n == 0) return acc;
      Value base = eval_expr(e.children[0], ops, flip);
      while (true) {
        if (n & 1) acc = ops.mul(acc, base);
        n >>= 1;
        if (n == 0) break;
        base = ops.mul(base, base);
      }
      return acc;
    }
    case Expr::Tag::commutator: {
      if (inv) {
        Expr swapped;
        swapped.tag = Expr::Tag::commutator;
        swapped.children = {e.children[1], e.children[0]};
        return eval_expr(swapped, ops, false);
      }
      Value a = eval_expr(e.children[0], ops, false);
      Value b = eval_expr(e.children[1], ops, false);
      Value ai = eval_expr(e.children[0], ops, true);
      Value bi = eval_expr(e.children[1], ops, true);
      return ops.mul(ops.mul(ops.mul(a, b), ai), bi);
    }
  }
  throw std::invalid_argument("broken expression tree");
}

[[noreturn]] inline void wrong_leaf(const char* what) {
  throw std::invalid_argument(std::string(what) +
                              " cannot appear in this value kind");
}

inline std::size_t total_letters(const Word& w) { return w.length(); }

inline std::size_t total_letters(const UniTri& u) {
  std::size_t n = 0;
  for (int i = 2; i <= u.rank(); ++i) n += u.entry(i).length();
  return n;
}

inline std::size_t total_letters(const EndoMap& e) {
  std::size_t n = 0;
  for (int i = 1; i <= e.rank(); ++i) n += e.image(i).length();
  return n;
}

inline std::size_t total_letters(const HnnWord& w) {
  std::size_t n =
      total_letters(w.head().left()) + total_letters(w.head().right());
  for (const Syllable& s : w.tail()) {
    n += total_letters(s.elem.left()) + total_letters(s.elem.right());
  }
  return n;
}

[[noreturn]] inline void eval_overflow() {
  throw std::length_error("expression expands beyond the evaluation budget");
}

template <typename Value>
const Value& check_budget(const Value& v) {
  if (total_letters(v) > kMaxEvalLetters) eval_overflow();
  return v;
}

struct WordOps {
  using Value = Word;
  int rank;

  Value identity() const { return Word(rank); }
  Value mul(const Value& a, const Value& b) const {
    if (a.length() + b.length() > kMaxEvalLetters) eval_overflow();
    return multiply(a, b);
  }
  Value gen(int i, int s) const {
    Word g = generator_word(rank, i);
    return s > 0 ? g : invert(g);
  }
  Value lambda(int, int, int) const { wrong_leaf("L(i,j)"); }
  Value tau(int, int) const { wrong_leaf("tau"); }
  Value sigma(int) const { wrong_leaf("sigma"); }
  Value stable(int) const { wrong_leaf("t"); }
  Value pair(const Expr&, const Expr&, bool) const { wrong_leaf("a pair"); }
};

struct LambdaOps {
  using Value = UniTri;
  int rank;

  Value identity() const { return UniTri(rank); }
  Value mul(const Value& a, const Value& b) const {
    Value r = ut_compose(a, b);
    check_budget(r);
    return r;
  }
  Value gen(int, int) const { wrong_leaf("f"); }
  Value lambda(int i, int j, int s) const {
    return lambda_gen_signed(rank, {i, j, s});
  }
  Value tau(int, int) const { wrong_leaf("tau"); }
  Value sigma(int) const { wrong_leaf("sigma"); }
  Value stable(int) const { wrong_leaf("t"); }
  Value pair(const Expr&, const Expr&, bool) const { wrong_leaf("a pair"); }
};

struct EndoOps {
  using Value = EndoMap;
  const EndoTable* table;

  Value identity() const { return identity_endo(2); }
  Value mul(const Value& a, const Value& b) const {
    Value r = compose(a, b);
    check_budget(r);
    return r;
  }
  Value gen(int, int) const { wrong_leaf("f"); }
  Value lambda(int, int, int) const { wrong_leaf("L(i,j)"); }
  Value tau(int i, int s) const {
    const NamedEndo& g = table->at(i == 1 ? "tau1" : "tau2");
    return s > 0 ? g.forward : g.inverse;
  }
  Value sigma(int s) const {
    const NamedEndo& g = table->at("sigma");
    return s > 0 ? g.forward : g.inverse;
  }
  Value stable(int) const { wrong_leaf("t"); }
  Value pair(const Expr&, const Expr&, bool) const { wrong_leaf("a pair"); }
};

struct HnnOps {
  using Value = HnnWord;
  int rank;

  Value identity() const { return HnnWord::trivial(rank); }
  Value mul(const Value& a, const Value& b) const {
    if (a.tail().size() + b.tail().size() > kMaxEvalSyllables) eval_overflow();
    if (total_letters(a) + total_letters(b) > kMaxEvalLetters) eval_overflow();
    return hnn_multiply(a, b);
  }
  Value gen(int, int) const { wrong_leaf("a bare generator letter"); }
  Value lambda(int, int, int) const { wrong_leaf("L(i,j)"); }
  Value tau(int, int) const { wrong_leaf("tau"); }
  Value sigma(int) const { wrong_leaf("sigma"); }
  Value stable(int s) const { return hnn_t(rank, s); }
  Value pair(const Expr& l, const Expr& r, bool inv) const {
    WordOps words{rank};
    PairElem p(eval_expr(l, words, false), eval_expr(r, words, false));
    return hnn_from_pair(inv ? pair_invert(p) : p);
  }
};

}  // namespace detail

inline Word eval_word(const Expr& e, int rank) {
  return detail::eval_expr(e, detail::WordOps{rank}, false);
}

inline UniTri eval_lambda_expr(const Expr& e, int rank) {
  return detail::eval_expr(e, detail::LambdaOps{rank}, false);
}

inline EndoMap eval_endo_expr(const Expr& e) {
  static const EndoTable table = aut_f2_table();
  return detail::eval_expr(e, detail::EndoOps{&table}, false);
}

inline HnnWord eval_hnn_expr(const Expr& e, int rank) {
  return detail::eval_expr(e, detail::HnnOps{rank}, false);
}

// Text renderings.  Every formatter emits exactly the grammar above, and
// re-parsing its output under the same kind evaluates to an equal value.

inline std::string to_text(const LambdaWord& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k > 0) s += ' ';
    s += "L(" + std::to_string(w[k].i) + "," + std::to_string(w[k].j) + ")";
    if (w[k].exponent < 0) s += "^-1";
  }
  return s;
}

inline std::string to_text(const UniTri& phi) {
  return to_text(to_lambda_word(phi));
}

inline std::string to_text(const EndoWord& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k > 0) s += ' ';
    const auto& [name, exponent] = w[k];
    if (name == "tau1") {
      s += "tau(1)";
    } else if (name == "tau2") {
      s += "tau(2)";
    } else if (name == "sigma") {
      s += "sigma";
    } else {
      throw std::invalid_argument("no text form for generator " + name);
    }
    if (exponent < 0) s += "^-1";
  }
  return s;
}

inline std::string to_text(const PairElem& p) {
  return "(" + to_text(p.left()) + " | " + to_text(p.right()) + ")";
}

// Trivial factors are omitted; a word with nothing left prints as "e".
inline std::string to_text(const HnnWord& w) {
  std::string s;
  auto append = [&s](const std::string& piece) {
    if (!s.empty()) s += ' ';
    s += piece;
  };
  if (!pair_is_trivial(w.head())) append(to_text(w.head()));
  for (const Syllable& syl : w.tail()) {
    append(syl.exponent > 0 ? "t" : "t^-1");
    if (!pair_is_trivial(syl.elem)) append(to_text(syl.elem));
  }
  if (s.empty()) return "e";
  return s;
}

}  // namespace fgc
