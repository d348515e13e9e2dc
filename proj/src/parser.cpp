#include "affinekit/parser.hpp"

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "affinekit/error.hpp"

namespace affinekit {
namespace {

enum class Tok {
  Ident,
  Number,
  LParen,
  RParen,
  Comma,
  Colon,
  Dot,
  Star,      // *
  Amp,       // &
  At,        // @
  PlusSign,  // +
  Minus,     // -
  Lolli,     // -o
  Arrow,     // ->
  AndOp,     // /\  (backslash)
  OrOp,      // \/  (backslash)
  Tilde,
  Bang,
  Question,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t tl = line, tc = col;
    auto emit = [&](Tok kind, std::size_t n) {
      out.push_back({kind, std::string(src.substr(i, n)), tl, tc});
      advance(n);
    };
    auto next_is = [&](char d) { return i + 1 < src.size() && src[i + 1] == d; };
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
        ++j;
      }
      emit(Tok::Ident, j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      emit(Tok::Number, j - i);
    } else if (c == '-' && next_is('o')) {
      emit(Tok::Lolli, 2);
    } else if (c == '-' && next_is('>')) {
      emit(Tok::Arrow, 2);
    } else if (c == '/' && next_is('\\')) {
      emit(Tok::AndOp, 2);
    } else if (c == '\\' && next_is('/')) {
      emit(Tok::OrOp, 2);
    } else {
      Tok kind;
      switch (c) {
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case ',': kind = Tok::Comma; break;
        case ':': kind = Tok::Colon; break;
        case '.': kind = Tok::Dot; break;
        case '*': kind = Tok::Star; break;
        case '&': kind = Tok::Amp; break;
        case '@': kind = Tok::At; break;
        case '+': kind = Tok::PlusSign; break;
        case '-': kind = Tok::Minus; break;
        case '~': kind = Tok::Tilde; break;
        case '!': kind = Tok::Bang; break;
        case '?': kind = Tok::Question; break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", tl, tc);
      }
      emit(kind, 1);
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

bool is_keyword(const std::string& s) {
  return s == "forall" || s == "exists" || s == "top" || s == "bot" || s == "true" ||
         s == "false";
}

// Shared cursor and scope handling; the two grammars differ only in their
// connective tables.
class ParserBase {
 public:
  ParserBase(std::string_view text, ParseMode mode) : toks_(lex(text)), mode_(mode) {}

 protected:

  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_word(std::string_view w) const { return at(Tok::Ident) && peek().text == w; }
  Token take() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(message + ", found " + found, t.line, t.column);
  }

  Token expect(Tok k, const char* what) {
    if (!at(k)) fail(std::string("expected ") + what);
    return take();
  }

  std::string expect_name(const char* what) {
    if (!at(Tok::Ident) || is_keyword(peek().text)) fail(std::string("expected ") + what);
    return take().text;
  }

  std::vector<std::string> parse_args() {
    std::vector<std::string> args;
    expect(Tok::LParen, "'('");
    do {
      if (at(Tok::Number)) {
        args.push_back(take().text);
      } else {
        const Token& t = peek();
        std::string v = expect_name("argument");
        if (mode_ == ParseMode::Closed && !bound(v)) {
          throw ParseError("unbound variable '" + v + "'", t.line, t.column);
        }
        args.push_back(std::move(v));
      }
    } while (at(Tok::Comma) && (take(), true));
    expect(Tok::RParen, "')' or ','");
    return args;
  }

  struct Binder {
    std::string var;
    std::string sort;
  };

  Binder parse_binder() {
    Binder b;
    b.var = expect_name("variable");
    expect(Tok::Colon, "':'");
    b.sort = expect_name("sort");
    expect(Tok::Dot, "'.'");
    return b;
  }

  bool bound(const std::string& v) const {
    for (const auto& s : scope_) {
      if (s == v) return true;
    }
    return false;
  }

  void finish() {
    if (!at(Tok::End)) fail("expected end of input");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  ParseMode mode_;
  std::vector<std::string> scope_;
};

class AffineParser : ParserBase {
 public:
  using ParserBase::ParserBase;

  AffineFormula run() {
    AffineFormula f = formula();
    finish();
    return f;
  }

 private:
  AffineFormula formula() {
    if (at_word("forall") || at_word("exists")) {
      bool universal = take().text == "forall";
      Binder b = parse_binder();
      scope_.push_back(b.var);
      AffineFormula body = formula();
      scope_.pop_back();
      return universal ? AffineFormula::forall(b.var, b.sort, body)
                       : AffineFormula::exists(b.var, b.sort, body);
    }
    return lolli();
  }

  AffineFormula lolli() {
    AffineFormula lhs = additive();
    if (at(Tok::Lolli)) {
      take();
      return AffineFormula::lollipop(lhs, lolli());
    }
    return lhs;
  }

  AffineFormula additive() {
    AffineFormula acc = multiplicative();
    while (at(Tok::At) || at(Tok::PlusSign)) {
      bool is_par = take().kind == Tok::At;
      AffineFormula rhs = multiplicative();
      acc = is_par ? AffineFormula::par(acc, rhs) : AffineFormula::plus(acc, rhs);
    }
    return acc;
  }

  AffineFormula multiplicative() {
    AffineFormula acc = unary();
    while (at(Tok::Star) || at(Tok::Amp)) {
      bool is_tensor = take().kind == Tok::Star;
      AffineFormula rhs = unary();
      acc = is_tensor ? AffineFormula::tensor(acc, rhs) : AffineFormula::with(acc, rhs);
    }
    return acc;
  }

  AffineFormula unary() {
    switch (peek().kind) {
      case Tok::Tilde:
        take();
        return AffineFormula::lin_neg(unary());
      case Tok::Bang:
        take();
        return AffineFormula::of_course(unary());
      case Tok::Question:
        take();
        return AffineFormula::why_not(unary());
      default:
        return atomexp();
    }
  }

  AffineFormula atomexp() {
    if (at(Tok::LParen)) {
      take();
      AffineFormula f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (at_word("top")) {
      take();
      return AffineFormula::top();
    }
    if (at_word("bot")) {
      take();
      return AffineFormula::bot();
    }
    if (at_word("forall") || at_word("exists")) {
      fail("quantifier must be parenthesized here");
    }
    std::string name = expect_name("formula");
    std::vector<std::string> args;
    if (at(Tok::LParen)) args = parse_args();
    return AffineFormula::atom(std::move(name), std::move(args));
  }
};

class IntParser : ParserBase {
 public:
  using ParserBase::ParserBase;

  IntFormula run() {
    IntFormula f = formula();
    finish();
    return f;
  }

 private:
  IntFormula formula() {
    if (at_word("forall") || at_word("exists")) {
      bool universal = take().text == "forall";
      Binder b = parse_binder();
      scope_.push_back(b.var);
      IntFormula body = formula();
      scope_.pop_back();
      return universal ? IntFormula::forall(b.var, b.sort, body)
                       : IntFormula::exists(b.var, b.sort, body);
    }
    return arrow();
  }

  IntFormula arrow() {
    IntFormula lhs = disjunction();
    if (at(Tok::Arrow)) {
      take();
      return IntFormula::implies(lhs, arrow());
    }
    return lhs;
  }

  IntFormula disjunction() {
    IntFormula acc = conjunction();
    while (at(Tok::OrOp)) {
      take();
      acc = IntFormula::disj(acc, conjunction());
    }
    return acc;
  }

  IntFormula conjunction() {
    IntFormula acc = unary();
    while (at(Tok::AndOp)) {
      take();
      acc = IntFormula::conj(acc, unary());
    }
    return acc;
  }

  IntFormula unary() {
    if (at(Tok::Tilde)) {
      take();
      return IntFormula::negation(unary());
    }
    return atomexp();
  }

  IntFormula atomexp() {
    if (at(Tok::LParen)) {
      take();
      IntFormula f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (at_word("true")) {
      take();
      return IntFormula::truth();
    }
    if (at_word("false")) {
      take();
      return IntFormula::falsity();
    }
    if (at_word("forall") || at_word("exists")) {
      fail("quantifier must be parenthesized here");
    }
    std::string name = expect_name("formula");
    Polarity pol = Polarity::Plain;
    if (at(Tok::PlusSign)) {
      take();
      pol = Polarity::Pos;
    } else if (at(Tok::Minus)) {
      take();
      pol = Polarity::Neg;
    }
    std::vector<std::string> args;
    if (at(Tok::LParen)) args = parse_args();
    return IntFormula::atom(std::move(name), pol, std::move(args));
  }
};

}  // namespace

AffineFormula parse_affine(std::string_view text, ParseMode mode) {
  return AffineParser(text, mode).run();
}

IntFormula parse_int(std::string_view text, ParseMode mode) {
  return IntParser(text, mode).run();
}

}  // namespace affinekit
