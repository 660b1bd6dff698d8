#include "salab/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "salab/errors.hpp"

namespace salab {

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, lbracket, rbracket, comma, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char ch = line[i];
    if (ch == '#') break;
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    const std::size_t col = i + 1;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Tok::number, std::string(line.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) ++j;
      out.push_back({Tok::ident, std::string(line.substr(i, j - i)), col});
      i = j;
      continue;
    }
    Tok kind;
    switch (ch) {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '/': kind = Tok::slash; break;
      case '^': kind = Tok::caret; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case '[': kind = Tok::lbracket; break;
      case ']': kind = Tok::rbracket; break;
      case ',': kind = Tok::comma; break;
      default:
        throw ParseError(line_no, col, std::string("unexpected character '") + ch + "'");
    }
    out.push_back({kind, std::string(1, ch), col});
    ++i;
  }
  out.push_back({Tok::end, "", line.size() + 1});
  return out;
}

class ExpressionParser {
 public:
  ExpressionParser(std::vector<Token> tokens, const Ring& ring, std::size_t line)
      : toks_(std::move(tokens)), ring_(ring), line_(line) {}

  Polynomial parse() {
    if (peek().kind == Tok::end) fail(peek(), "empty expression");
    Polynomial p = expr();
    if (peek().kind != Tok::end) {
      const Tok k = peek().kind;
      if (k == Tok::number || k == Tok::ident || k == Tok::lparen) {
        fail(peek(), "implicit multiplication is not allowed; use '*'");
      }
      fail(peek(), "unexpected '" + peek().text + "'");
    }
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(line_, t.column, msg);
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool minus = take().kind == Tok::minus;
      Polynomial rhs = term();
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (peek().kind == Tok::star) {
      take();
      acc = acc * unary();
    }
    if (peek().kind == Tok::slash) fail(peek(), "division is only allowed inside a rational literal a/b");
    return acc;
  }

  Polynomial unary() {
    if (peek().kind == Tok::minus) {
      take();
      return -unary();
    }
    if (peek().kind == Tok::plus) {
      take();
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (peek().kind == Tok::caret) {
      take();
      const Token& e = peek();
      if (e.kind != Tok::number) fail(e, "expected a non-negative integer exponent");
      take();
      if (e.text.size() > 6) fail(e, "exponent too large");
      base = pow(base, static_cast<unsigned>(std::stoul(e.text)));
      if (peek().kind == Tok::caret) fail(peek(), "chained exponents need parentheses");
    }
    return base;
  }

  Polynomial atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::number: {
        take();
        mpq_class value(mpz_class(t.text));
        if (peek().kind == Tok::slash) {
          take();
          const Token& d = peek();
          if (d.kind != Tok::number) fail(d, "bad rational literal: expected an integer denominator");
          take();
          const mpz_class den(d.text);
          if (den == 0) fail(d, "bad rational literal: zero denominator");
          value = mpq_class(mpz_class(t.text), den);
          value.canonicalize();
        }
        try {
          return Polynomial::constant(ring_, ring_->field().normalize(value));
        } catch (const DomainError& e) {
          fail(t, std::string("bad literal: ") + e.what());
        }
      }
      case Tok::ident: {
        take();
        const auto& names = ring_->var_names();
        for (std::size_t i = 0; i < names.size(); ++i) {
          if (names[i] == t.text) return Polynomial::variable(ring_, i);
        }
        fail(t, "unknown variable '" + t.text + "'");
      }
      case Tok::lparen: {
        take();
        Polynomial inner = expr();
        if (peek().kind != Tok::rparen) fail(peek(), "expected ')'");
        take();
        return inner;
      }
      case Tok::end:
        fail(t, "unexpected end of expression");
      default:
        fail(t, "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Ring& ring_;
  std::size_t line_;
};

Ring parse_header(const std::vector<Token>& toks, std::size_t line_no) {
  std::size_t i = 0;
  auto expect = [&](Tok kind, const char* what) -> const Token& {
    if (toks[i].kind != kind) throw ParseError(line_no, toks[i].column, std::string("expected ") + what);
    return toks[i++];
  };
  const Token& kw = expect(Tok::ident, "'ring'");
  if (kw.text != "ring") throw ParseError(line_no, kw.column, "expected 'ring' header");
  const Token& fieldTok = expect(Tok::ident, "a field (QQ or F<p>)");
  FieldSpec field;
  try {
    field = FieldSpec::parse(fieldTok.text);
  } catch (const DomainError& e) {
    throw ParseError(line_no, fieldTok.column, e.what());
  }
  expect(Tok::lbracket, "'['");
  std::vector<std::string> names;
  while (true) {
    const Token& name = expect(Tok::ident, "a variable name");
    for (const auto& prior : names) {
      if (prior == name.text) throw ParseError(line_no, name.column, "duplicate variable '" + name.text + "'");
    }
    names.push_back(name.text);
    if (toks[i].kind == Tok::comma) {
      ++i;
      continue;
    }
    break;
  }
  expect(Tok::rbracket, "']'");
  if (toks[i].kind != Tok::end) throw ParseError(line_no, toks[i].column, "trailing input after ring header");
  return RingContext::make(field, std::move(names));
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring, std::size_t line) {
  return ExpressionParser(tokenize(text, line), ring, line).parse();
}

Ideal parse_ideal_file(std::string_view text) {
  std::optional<Ring> ring;
  std::vector<Polynomial> gens;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    auto toks = tokenize(line, line_no);
    if (toks.front().kind != Tok::end) {
      if (!ring) {
        ring = parse_header(toks, line_no);
      } else {
        gens.push_back(ExpressionParser(std::move(toks), *ring, line_no).parse());
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  if (!ring) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'ring' header");
  if (gens.empty()) throw ParseError(line_no, 1, "empty body: no generators");
  return Ideal(*ring, std::move(gens));
}

std::string ring_header(const RingContext& ring) {
  std::string out = "ring " + ring.field().name() + "[";
  for (std::size_t i = 0; i < ring.num_vars(); ++i) {
    if (i > 0) out += ",";
    out += ring.var_names()[i];
  }
  return out + "]";
}

std::string serialize_ideal(const Ideal& ideal) {
  std::string out = ring_header(*ideal.ring()) + "\n";
  for (const auto& g : ideal.generators()) out += to_string(g) + "\n";
  return out;
}

}  // namespace salab
