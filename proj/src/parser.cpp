#include "forno/parser.hpp"

#include <cctype>
#include <limits>
#include <utility>
#include <vector>

namespace forno {

namespace {

enum class TokKind {
  Keyword,     // SKIP PUSH POP IF NORMAL FOR ROF
  Identifier,  // register name
  Number,
  Semicolon,
  Comma,
  Equals,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  End,
};

struct Token {
  TokKind kind;
  std::string_view text;
  Nat value = 0;
  SourceSpan span;
};

bool is_keyword(std::string_view word) {
  return word == "SKIP" || word == "PUSH" || word == "POP" || word == "IF" ||
         word == "NORMAL" || word == "FOR" || word == "ROF";
}

class Lexer {
 public:
  explicit Lexer(std::string_view source) : src_(source) {}

  Token next() {
    skip_trivia();
    std::size_t start = pos_;
    if (pos_ >= src_.size()) {
      return {TokKind::End, "", 0, {start, start}};
    }
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) != 0) {
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) != 0 ||
                                    src_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view word = src_.substr(start, pos_ - start);
      return {is_keyword(word) ? TokKind::Keyword : TokKind::Identifier, word, 0, {start, pos_}};
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      Nat value = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])) != 0) {
        Nat digit = static_cast<Nat>(src_[pos_] - '0');
        if (value > (std::numeric_limits<Nat>::max() - digit) / 10) {
          throw ParseError({start, pos_ + 1}, "number too large");
        }
        value = value * 10 + digit;
        ++pos_;
      }
      return {TokKind::Number, src_.substr(start, pos_ - start), value, {start, pos_}};
    }
    ++pos_;
    SourceSpan span{start, pos_};
    switch (c) {
      case ';':
        return {TokKind::Semicolon, ";", 0, span};
      case ',':
        return {TokKind::Comma, ",", 0, span};
      case '=':
        return {TokKind::Equals, "=", 0, span};
      case '[':
        return {TokKind::LBracket, "[", 0, span};
      case ']':
        return {TokKind::RBracket, "]", 0, span};
      case '{':
        return {TokKind::LBrace, "{", 0, span};
      case '}':
        return {TokKind::RBrace, "}", 0, span};
      default:
        throw ParseError(span, std::string("unexpected character '") + c + "'");
    }
  }

 private:
  void skip_trivia() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) != 0) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view source) : lexer_(source) { advance(); }

  Term parse_program() {
    Term t = parse_sequence();
    expect(TokKind::End, "expected end of input");
    return t;
  }

 private:
  void advance() { current_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(current_.span, message);
  }

  void expect(TokKind kind, const std::string& message) {
    if (current_.kind != kind) {
      fail(message);
    }
    advance();
  }

  bool at_keyword(std::string_view word) const {
    return current_.kind == TokKind::Keyword && current_.text == word;
  }

  // term := simple (';' term)?   -- folded right-associatively
  Term parse_sequence() {
    std::vector<Term> parts;
    parts.push_back(parse_simple());
    while (current_.kind == TokKind::Semicolon) {
      advance();
      parts.push_back(parse_simple());
    }
    Term t = std::move(parts.back());
    parts.pop_back();
    while (!parts.empty()) {
      SourceSpan span{parts.back().span().begin, t.span().end};
      t = Term::seq(std::move(parts.back()), std::move(t), span);
      parts.pop_back();
    }
    return t;
  }

  Term parse_simple() {
    if (current_.kind != TokKind::Keyword) {
      fail("expected a term");
    }
    std::size_t start = current_.span.begin;
    if (at_keyword("SKIP")) {
      SourceSpan span = current_.span;
      advance();
      return Term::skip(span);
    }
    if (at_keyword("PUSH") || at_keyword("POP")) {
      bool is_push = current_.text == "PUSH";
      advance();
      expect(TokKind::LBracket, "expected '['");
      if (current_.kind != TokKind::Number) {
        fail("expected a natural number");
      }
      Nat value = current_.value;
      advance();
      expect(TokKind::RBracket, "expected ']'");
      Register target = parse_register();
      SourceSpan span{start, last_end_};
      return is_push ? Term::push(value, std::move(target), span)
                     : Term::pop(value, std::move(target), span);
    }
    if (at_keyword("IF")) {
      advance();
      Register guard = parse_register();
      expect(TokKind::Equals, "expected '='");
      if (current_.kind != TokKind::Number) {
        fail("expected a natural number");
      }
      Nat value = current_.value;
      advance();
      Term body = parse_block();
      SourceSpan span{start, last_end_};
      return Term::if_eq(std::move(guard), value, std::move(body), span);
    }
    if (at_keyword("NORMAL")) {
      advance();
      std::vector<Register> normals;
      normals.push_back(parse_register());
      while (current_.kind == TokKind::Comma) {
        advance();
        normals.push_back(parse_register());
      }
      Term body = parse_block();
      SourceSpan span{start, last_end_};
      return Term::normal(std::move(normals), std::move(body), span);
    }
    if (at_keyword("FOR") || at_keyword("ROF")) {
      bool forward = current_.text == "FOR";
      advance();
      Register guard = parse_register();
      std::vector<Term> bodies;
      bodies.push_back(parse_block());
      while (current_.kind == TokKind::LBrace) {
        bodies.push_back(parse_block());
      }
      SourceSpan span{start, last_end_};
      return forward ? Term::for_loop(std::move(guard), std::move(bodies), span)
                     : Term::rof_loop(std::move(guard), std::move(bodies), span);
    }
    fail("expected a term");
  }

  Term parse_block() {
    expect(TokKind::LBrace, "expected '{'");
    Term body = parse_sequence();
    if (current_.kind != TokKind::RBrace) {
      fail("expected '}'");
    }
    last_end_ = current_.span.end;
    advance();
    return body;
  }

  Register parse_register() {
    if (current_.kind != TokKind::Identifier) {
      fail("expected a register name");
    }
    Register r{std::string(current_.text)};
    last_end_ = current_.span.end;
    advance();
    return r;
  }

  Lexer lexer_;
  Token current_;
  std::size_t last_end_ = 0;
};

}  // namespace

Term parse(std::string_view source) { return Parser(source).parse_program(); }

}  // namespace forno
